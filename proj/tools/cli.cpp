#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "fls/catalog.hpp"
#include "fls/coloring.hpp"
#include "fls/enumerate.hpp"
#include "fls/extend.hpp"
#include "fls/fls_io.hpp"
#include "fls/iso.hpp"

namespace fls::cli {

namespace {

namespace fs = std::filesystem;

/// Input problem detected after parsing; reported on stderr with exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rows of cells rendered either as aligned text or as tab-separated values.
class Table {
 public:
  explicit Table(std::vector<std::string> header = {}) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os, bool tsv) const {
    std::vector<std::vector<std::string>> all;
    if (!header_.empty()) all.push_back(header_);
    all.insert(all.end(), rows_.begin(), rows_.end());
    std::vector<std::size_t> width;
    for (const auto& r : all) {
      if (width.size() < r.size()) width.resize(r.size(), 0);
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], display_width(r[c]));
    }
    for (const auto& r : all) {
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (c > 0) line += tsv ? "\t" : "  ";
        line += r[c];
        if (!tsv && c + 1 < r.size()) line += std::string(width[c] - display_width(r[c]), ' ');
      }
      if (!tsv) line.erase(line.find_last_not_of(' ') + 1);
      os << line << '\n';
    }
  }

 private:
  // Counts UTF-8 code points so labels such as "∞" align.
  static std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char ch) { return (static_cast<unsigned char>(ch) & 0xC0) != 0x80; }));
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct Input {
  std::string title;
  FiniteLinearSpace space;
  std::optional<Colouring> colouring;
};

Input load(const std::string& name, const std::string& file) {
  if (name.empty() == file.empty()) throw UsageError("give exactly one of --name or an input file");
  if (!name.empty()) {
    auto e = named(name);
    return {e.name, e.geometry.space(), e.geometry.colouring()};
  }
  auto doc = read_fls(file);
  return {file, std::move(doc.space), doc.colouring};
}

MRGeometry require_mr(const Input& in) {
  if (!in.colouring) throw UsageError(in.title + ": no colouring given");
  try {
    return MRGeometry(in.space, *in.colouring);
  } catch (const NotProperError& e) {
    throw UsageError(in.title + ": " + e.what());
  }
}

std::string catalog_match(const MRGeometry& mr, const std::vector<CatalogEntry>& catalog) {
  for (const auto& e : catalog) {
    if (e.geometry.num_points() == mr.num_points() && mr_isomorphic(e.geometry, mr)) return e.name;
  }
  return "-";
}

std::string size_histogram(const std::vector<PointSet>& sets) {
  std::map<int, std::size_t> by_size;
  for (PointSet s : sets) ++by_size[s.size()];
  std::string out;
  for (auto [size, n] : by_size) {
    if (!out.empty()) out += ' ';
    out += std::to_string(size) + ":" + std::to_string(n);
  }
  return out.empty() ? "-" : out;
}

void add_format(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "tsv"}));
}

// --- subcommands -----------------------------------------------------------

int cmd_catalog(bool tsv, std::ostream& out) {
  Table t({"name", "points", "green", "red", "minimal"});
  for (const auto& e : full_catalog()) {
    const auto& g = e.geometry;
    t.add({e.name, std::to_string(g.num_points()), std::to_string(g.green_count()), std::to_string(g.red_count()),
           yes_no(is_minimal(g))});
  }
  t.print(out, tsv);
  return kAffirmative;
}

int cmd_show(const Input& in, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << format_fls(in.space, in.colouring);
  } else {
    write_fls(out_path, in.space, in.colouring);
    out << "wrote " << out_path << '\n';
  }
  return kAffirmative;
}

int cmd_verify(const Input& in, bool tsv, std::ostream& out) {
  if (!in.colouring) throw UsageError(in.title + ": no colouring given");
  const Colouring& c = *in.colouring;
  Table t({"check", "value", "status"});
  t.add({"geometry", in.title, ""});
  t.add({"points", std::to_string(in.space.num_points()), ""});
  t.add({"lines", std::to_string(in.space.num_lines()), ""});
  t.add({"green", std::to_string(c.green_count()), ""});
  t.add({"red", std::to_string(c.red_count()), ""});
  const bool proper = is_proper(in.space, c);
  t.add({"proper", yes_no(proper), proper ? "ok" : "FAIL"});
  bool verdict = proper;
  if (proper) {
    const MRGeometry mr(in.space, c);
    t.add({"minimal", yes_no(is_minimal(mr)), ""});
    const auto w = weight_sum_identity(mr);
    const auto cell = [](const Rational& sum, int n, std::int64_t expected) {
      return sum.str() + " = C(" + std::to_string(n) + ",2) = " + std::to_string(expected);
    };
    const bool g_ok = w.green_sum == Rational(w.expected_green);
    const bool r_ok = w.red_sum == Rational(w.expected_red);
    t.add({"green-weight-sum", g_ok ? cell(w.green_sum, mr.red_count(), w.expected_green)
                                    : w.green_sum.str() + " != " + std::to_string(w.expected_green),
           g_ok ? "ok" : "FAIL"});
    t.add({"red-weight-sum", r_ok ? cell(w.red_sum, mr.green_count(), w.expected_red)
                                  : w.red_sum.str() + " != " + std::to_string(w.expected_red),
           r_ok ? "ok" : "FAIL"});
    verdict = verdict && g_ok && r_ok;
    const auto lemmas = lemma_checks(mr);
    for (const auto& ch : lemmas.checks) {
      t.add({ch.name, ch.detail.empty() ? "-" : ch.detail, !ch.applicable ? "n/a" : ch.pass ? "ok" : "FAIL"});
    }
    verdict = verdict && lemmas.all_pass();
  }
  t.add({"verdict", verdict ? "pass" : "fail", ""});
  t.print(out, tsv);
  return verdict ? kAffirmative : kNegative;
}

int cmd_blocking(const Input& in, std::optional<std::size_t> limit, bool orbits, bool list, bool tsv,
                 std::ostream& out) {
  const auto sets = blocking_sets(in.space, limit);
  Table t({"item", "value"});
  t.add({"space", in.title});
  t.add({"points", std::to_string(in.space.num_points())});
  t.add({"blocking-sets", std::to_string(sets.size()) + (limit && sets.size() >= *limit ? " (limit reached)" : "")});
  t.add({"sizes", size_histogram(sets)});
  std::vector<PointSet> reps;
  if (orbits) {
    const auto o = essentially_different_blocking_sets(in.space);
    t.add({"orbits", std::to_string(o.count())});
    reps = o.representatives;
  }
  t.print(out, tsv);
  if (orbits) {
    Table r({"orbit", "size", "representative"});
    for (std::size_t k = 0; k < reps.size(); ++k) {
      r.add({std::to_string(k + 1), std::to_string(reps[k].size()), format_points(in.space, reps[k])});
    }
    out << '\n';
    r.print(out, tsv);
  }
  if (list) {
    Table l({"set", "size", "points"});
    for (std::size_t k = 0; k < sets.size(); ++k) {
      l.add({std::to_string(k + 1), std::to_string(sets[k].size()), format_points(in.space, sets[k])});
    }
    out << '\n';
    l.print(out, tsv);
  }
  return sets.empty() ? kNegative : kAffirmative;
}

std::string describe_map(const FiniteLinearSpace& a, const FiniteLinearSpace& b, const Isomorphism& f) {
  std::string s;
  for (Point p = 0; p < a.num_points(); ++p) {
    if (p > 0) s += ' ';
    s += a.label(p) + "->" + b.label(f(p));
  }
  return s;
}

int cmd_iso(const Input& a, const Input& b, bool mr, bool all, std::ostream& out) {
  const auto mode = all ? SearchMode::all : SearchMode::first;
  std::vector<Isomorphism> maps;
  std::optional<MRGeometry> ma, mb;
  if (mr) {
    ma = require_mr(a);
    mb = require_mr(b);
    maps = find_isomorphisms(*ma, *mb, mode);
  } else {
    maps = find_isomorphisms(a.space, b.space, mode);
  }
  out << "isomorphic " << yes_no(!maps.empty()) << '\n';
  if (all) out << "maps " << maps.size() << '\n';
  for (const auto& f : maps) {
    std::string line = describe_map(a.space, b.space, f);
    if (mr) {
      const bool swapped = ma->colour(0) != mb->colour(f(0));
      line += swapped ? "  colours swapped" : "  colours kept";
    }
    out << line << '\n';
  }
  return maps.empty() ? kNegative : kAffirmative;
}

int cmd_extend(const Input& in, const std::string& out_dir, std::ostream& out) {
  const MRGeometry mr = require_mr(in);
  const auto set = one_point_extensions(mr);
  const auto catalog = full_catalog();
  const std::string stem = fs::path(in.title).stem().string();
  Table summary({"item", "value"});
  summary.add({"geometry", in.title});
  summary.add({"eppcs", std::to_string(set.eppcs.size())});
  summary.add({"extensions", std::to_string(set.extensions.size())});
  summary.add({"classes", std::to_string(set.class_count())});
  summary.print(out, false);
  if (set.class_count() == 0) return kNegative;
  if (!out_dir.empty()) fs::create_directories(out_dir);
  Table t({"class", "eppc", "new-point", "match", "file"});
  for (std::size_t k = 0; k < set.class_count(); ++k) {
    const auto& ext = set.extensions[set.class_representatives[k]];
    const fs::path file = fs::path(out_dir.empty() ? "." : out_dir) / (stem + "-ext-" + std::to_string(k + 1) + ".fls");
    write_fls(file.string(), ext.geometry);
    t.add({std::to_string(k + 1), std::to_string(ext.eppc_index + 1), to_string(ext.new_colour),
           catalog_match(ext.geometry, catalog), file.string()});
  }
  out << '\n';
  t.print(out, false);
  return kAffirmative;
}

int cmd_enumerate(int v, const std::string& filter_text, const std::string& out_dir, bool tsv,
                  std::ostream& out) {
  std::optional<LineSizeProfile> filter;
  if (!filter_text.empty()) {
    try {
      filter = parse_line_size_profile(filter_text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--filter: ") + e.what());
    }
  }
  const auto census = all_spaces(v);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < census.count(); ++i) {
    if (!filter || line_size_profile(census.representatives[i]) == *filter) kept.push_back(i);
  }
  Table summary({"item", "value"});
  summary.add({"points", std::to_string(v)});
  summary.add({"spaces", std::to_string(census.count())});
  if (filter) {
    summary.add({"filter", format_line_size_profile(*filter)});
    summary.add({"matching", std::to_string(kept.size())});
  }
  Table t({"index", "lines", "profile", "automorphisms", "blocking-sets"});
  for (std::size_t i : kept) {
    const auto& s = census.representatives[i];
    t.add({std::to_string(i + 1), std::to_string(s.num_lines()), format_line_size_profile(line_size_profile(s)),
           std::to_string(automorphisms(s).size()), std::to_string(blocking_sets(s).size())});
  }
  std::ostringstream report;
  summary.print(report, tsv);
  report << '\n';
  t.print(report, tsv);
  out << report.str();
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (std::size_t i : kept) {
      const auto name = "v" + std::to_string(v) + "-" + std::to_string(i + 1) + ".fls";
      write_fls((fs::path(out_dir) / name).string(), census.representatives[i]);
    }
    std::ofstream f(fs::path(out_dir) / "census.txt", std::ios::binary);
    if (!f) throw std::runtime_error("cannot write census.txt in " + out_dir);
    f << report.str();
  }
  return kept.empty() ? kNegative : kAffirmative;
}

int cmd_exist(int q, int v, const std::string& out_path, std::ostream& out) {
  const MRGeometry mr = quadrilateral_mr(q, v);
  if (out_path.empty()) {
    out << format_fls(mr);
    return kAffirmative;
  }
  write_fls(out_path, mr);
  Table t({"item", "value"});
  t.add({"plane", "PG(2," + std::to_string(q) + ")"});
  t.add({"points", std::to_string(mr.num_points())});
  t.add({"green", std::to_string(mr.green_count())});
  t.add({"red", std::to_string(mr.red_count())});
  t.add({"proper", yes_no(is_proper(mr.space(), mr.colouring()))});
  t.add({"file", out_path});
  t.print(out, false);
  return kAffirmative;
}

int cmd_embed_check(bool tsv, std::ostream& out) {
  const auto rep = verify_gf4_embedding();
  Table t({"check", "status", "detail"});
  for (const auto& c : rep.checks) t.add({c.name, c.pass ? "ok" : "FAIL", c.detail.empty() ? "-" : c.detail});
  t.print(out, tsv);
  const auto space = pg24_z7z3();
  Table coords({"point", "coordinates"});
  for (Point p = 0; p < static_cast<Point>(rep.coordinates.size()); ++p) {
    coords.add({space.label(p), rep.coordinates[p].str()});
  }
  out << '\n';
  coords.print(out, tsv);
  out << "\nverdict " << (rep.all_pass() ? "pass" : "fail") << '\n';
  return rep.all_pass() ? kAffirmative : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite linear spaces and properly 2-coloured geometries", "flsgeo"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string name, file, file_b, out_path, out_dir, filter;
  std::size_t limit = 0;
  int pg = 0, q = 0, v = 0;
  bool orbits = false, list = false, mr = false, all = false;

  auto* catalog = app.add_subcommand("catalog", "list the named geometries");
  add_format(catalog, format);

  auto* show = app.add_subcommand("show", "print or export a geometry as .fls");
  show->add_option("--name", name, "catalog name");
  show->add_option("file", file, "input .fls file");
  show->add_option("--out", out_path, "write to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "check properness, weights and structural conditions");
  verify->add_option("--name", name, "catalog name");
  verify->add_option("file", file, "input .fls file");
  add_format(verify, format);

  auto* blocking = app.add_subcommand("blocking", "search for blocking sets");
  blocking->add_option("--name", name, "catalog name (its underlying space)");
  blocking->add_option("--pg", pg, "projective plane PG(2,q)")->check(CLI::IsMember({2, 3, 4, 5}));
  blocking->add_option("file", file, "input .fls file");
  blocking->add_option("--limit", limit, "stop after this many sets")->check(CLI::PositiveNumber);
  blocking->add_flag("--orbits", orbits, "also count orbits under automorphisms and complement");
  blocking->add_flag("--list", list, "print every set found");
  add_format(blocking, format);

  auto* iso = app.add_subcommand("iso", "test two geometries for isomorphism");
  iso->add_option("a", file, "first .fls file")->required();
  iso->add_option("b", file_b, "second .fls file")->required();
  iso->add_flag("--mr", mr, "respect the colouring (a global colour swap is allowed)");
  iso->add_flag("--all", all, "list every isomorphism");

  auto* extend = app.add_subcommand("extend", "one-point extensions up to isomorphism");
  extend->add_option("--name", name, "catalog name");
  extend->add_option("file", file, "input .fls file");
  extend->add_option("--out", out_dir, "directory for the extension files (default: current)");

  auto* enumerate = app.add_subcommand("enumerate", "all linear spaces on a given number of points");
  enumerate->add_option("--points", v, "number of points")->required()->check(CLI::Range(3, 9));
  enumerate->add_option("--filter", filter, "keep only this line-size profile, e.g. 3^6,2^3");
  enumerate->add_option("--out", out_dir, "directory for .fls files and census.txt");
  add_format(enumerate, format);

  auto* exist = app.add_subcommand("exist", "build a geometry inside PG(2,q)");
  exist->add_option("--q", q, "plane order")->required()->check(CLI::IsMember({3, 4, 5}));
  exist->add_option("--v", v, "number of points")->required();
  exist->add_option("--out", out_path, "write to this file instead of stdout");

  auto* embed = app.add_subcommand("embed-check", "verify the GF(4) coordinates of the Z7 x Z3 plane");
  add_format(embed, format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const bool tsv = format == "tsv";
  try {
    if (catalog->parsed()) return cmd_catalog(tsv, out);
    if (show->parsed()) return cmd_show(load(name, file), out_path, out);
    if (verify->parsed()) return cmd_verify(load(name, file), tsv, out);
    if (blocking->parsed()) {
      const int given = !name.empty() + !file.empty() + (pg != 0);
      if (given != 1) throw UsageError("give exactly one of --name, --pg or an input file");
      const auto limit_opt = limit > 0 ? std::optional<std::size_t>(limit) : std::nullopt;
      if (pg != 0) return cmd_blocking({"PG(2," + std::to_string(pg) + ")", fls::pg2(pg), std::nullopt}, limit_opt,
                                       orbits, list, tsv, out);
      return cmd_blocking(load(name, file), limit_opt, orbits, list, tsv, out);
    }
    if (iso->parsed()) return cmd_iso(load("", file), load("", file_b), mr, all, out);
    if (extend->parsed()) return cmd_extend(load(name, file), out_dir, out);
    if (enumerate->parsed()) return cmd_enumerate(v, filter, out_dir, tsv, out);
    if (exist->parsed()) return cmd_exist(q, v, out_path, out);
    if (embed->parsed()) return cmd_embed_check(tsv, out);
  } catch (const std::exception& e) {
    // Bad files, unknown names and unsupported parameters all land here.
    err << "flsgeo: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace fls::cli
