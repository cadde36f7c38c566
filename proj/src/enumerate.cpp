#include "fls/enumerate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "fls/coloring.hpp"
#include "fls/extend.hpp"
#include "fls/iso.hpp"

namespace fls {

namespace {

/// Keeps one representative per isomorphism class, bucketed by invariant hash.
class ClassSet {
 public:
  bool add(FiniteLinearSpace s, std::uint64_t hash) {
    auto& bucket = buckets_[hash];
    for (std::size_t i : bucket) {
      if (isomorphic(reps_[i], s)) return false;
    }
    bucket.push_back(reps_.size());
    reps_.push_back(std::move(s));
    return true;
  }
  bool add(FiniteLinearSpace s) {
    const auto h = invariant_hash(s);
    return add(std::move(s), h);
  }
  std::vector<FiniteLinearSpace> take() { return std::move(reps_); }

 private:
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
  std::vector<FiniteLinearSpace> reps_;
};

SpaceCensus extend_census(const SpaceCensus& prev) {
  struct Candidate {
    FiniteLinearSpace space;
    std::uint64_t hash;
  };
  // Per parent, the candidate extensions in ppc order; merged in parent order.
  std::vector<std::vector<Candidate>> per_parent(prev.count());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(prev.count()); ++i) {
    const auto& parent = prev.representatives[i];
    for (const auto& ppc : partial_parallel_classes(parent)) {
      auto s = extend_space(parent, ppc, std::to_string(parent.num_points()));
      const auto h = invariant_hash(s);
      per_parent[i].push_back({std::move(s), h});
    }
  }
  ClassSet classes;
  for (auto& cands : per_parent) {
    for (auto& c : cands) classes.add(std::move(c.space), c.hash);
  }
  return SpaceCensus{prev.v + 1, classes.take()};
}

SpaceCensus triangle_census() {
  return SpaceCensus{3, {FiniteLinearSpace::build(3, std::vector<PointSet>{})}};
}

}  // namespace

std::vector<SpaceCensus> all_spaces_up_to(int v_max) {
  if (v_max < 3 || v_max > 9) throw std::out_of_range("census supports 3 <= v <= 9");
  std::vector<SpaceCensus> out{triangle_census()};
  while (out.back().v < v_max) out.push_back(extend_census(out.back()));
  return out;
}

SpaceCensus all_spaces(int v) { return all_spaces_up_to(v).back(); }

namespace {

class PairPartitions {
 public:
  explicit PairPartitions(int v) : v_(v), open_(v) {
    for (Point p = 0; p < v; ++p) open_[p] = PointSet::first(v) - PointSet{p};
  }

  template <class F>
  void run(F&& emit) {
    recurse(emit);
  }

 private:
  template <class F>
  void recurse(F& emit) {
    Point i = 0;
    while (i < v_ && open_[i].empty()) ++i;
    if (i == v_) {
      emit(lines_);
      return;
    }
    const Point j = open_[i].min();
    // Further points must be joinable to both i and j, and beyond j.
    const PointSet candidates = (open_[i] & open_[j]) - PointSet::first(j + 1);
    grow(emit, PointSet{i, j}, candidates);
  }

  template <class F>
  void grow(F& emit, PointSet line, PointSet candidates) {
    // Close the current line here, then try adding each larger candidate.
    place(line);
    lines_.push_back(line);
    recurse(emit);
    lines_.pop_back();
    unplace(line);
    candidates.for_each([&](Point k) {
      if (k < highest(line)) return;
      PointSet next = candidates - PointSet::first(k + 1);
      next = next & open_[k];
      grow(emit, line | PointSet{k}, next);
    });
  }

  static Point highest(PointSet s) { return 63 - std::countl_zero(s.bits()); }

  void place(PointSet line) {
    line.for_each([&](Point p) { open_[p] = open_[p] - line; });
  }
  void unplace(PointSet line) {
    line.for_each([&](Point p) { open_[p] = open_[p] | (line - PointSet{p}); });
  }

  int v_;
  std::vector<PointSet> open_;  // per point: points it is not yet joined to
  std::vector<PointSet> lines_;
};

}  // namespace

NaiveCensus naive_spaces(int v) {
  if (v < 3 || v > 8) throw std::out_of_range("naive generator supports 3 <= v <= 8");
  NaiveCensus out;
  out.v = v;
  ClassSet classes;
  const PointSet all = PointSet::first(v);
  PairPartitions(v).run([&](const std::vector<PointSet>& lines) {
    if (lines.size() == 1 && lines.front() == all) return;
    ++out.labelled;
    classes.add(FiniteLinearSpace::build(v, lines));
  });
  out.representatives = classes.take();
  return out;
}

std::uint64_t labelled_count(const SpaceCensus& census) {
  std::uint64_t factorial = 1;
  for (int k = 2; k <= census.v; ++k) factorial *= static_cast<std::uint64_t>(k);
  std::uint64_t total = 0;
  for (const auto& s : census.representatives) total += factorial / automorphisms(s).size();
  return total;
}

bool BlockingSliceReport::all_clear() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.with_blocking_set == 0; });
}

std::string BlockingSliceReport::summary() const {
  std::ostringstream os;
  os << "v\tspaces\twith_blocking_set\n";
  for (const auto& r : rows) os << r.v << '\t' << r.spaces << '\t' << r.with_blocking_set << '\n';
  os << "scope: v <= " << (rows.empty() ? 0 : rows.back().v)
     << " only; spaces on 10 or 11 points are not enumerated\n";
  return os.str();
}

BlockingSliceReport no_blocking_set_below(int v_max) {
  BlockingSliceReport rep;
  for (const auto& census : all_spaces_up_to(v_max)) {
    BlockingSliceRow row{census.v, census.count(), 0};
    for (const auto& s : census.representatives) {
      if (!blocking_sets(s, 1).empty()) ++row.with_blocking_set;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

LineSizeProfile line_size_profile(const FiniteLinearSpace& s) {
  LineSizeProfile p;
  for (PointSet l : s.lines()) ++p[l.size()];
  return p;
}

LineSizeProfile parse_line_size_profile(const std::string& text) {
  LineSizeProfile p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto caret = item.find('^');
    if (caret == std::string::npos) throw std::invalid_argument("expected size^count in '" + item + "'");
    try {
      std::size_t used = 0;
      const int size = std::stoi(item.substr(0, caret), &used);
      if (used != caret) throw std::invalid_argument(item);
      const std::string rest = item.substr(caret + 1);
      const int count = std::stoi(rest, &used);
      if (used != rest.size() || size < 2 || count < 0) throw std::invalid_argument(item);
      p[size] += count;
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad line profile item '" + item + "'");
    }
  }
  if (p.empty()) throw std::invalid_argument("empty line profile");
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
  return p;
}

std::string format_line_size_profile(const LineSizeProfile& p) {
  std::string out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (!out.empty()) out += ',';
    out += std::to_string(it->first) + "^" + std::to_string(it->second);
  }
  return out;
}

namespace {

inline bool all_bichromatic(const std::vector<std::uint64_t>& lines, std::uint64_t green) {
  for (std::uint64_t l : lines) {
    if ((l & green) == 0 || (l & ~green) == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> line_words(const FiniteLinearSpace& s) {
  std::vector<std::uint64_t> out;
  for (PointSet l : s.lines()) out.push_back(l.bits());
  return out;
}

void check_scan_size(const FiniteLinearSpace& s) {
  if (s.num_points() > 24) throw std::out_of_range("colouring scan supports at most 24 points");
}

}  // namespace

std::vector<PointSet> proper_colourings_serial(const FiniteLinearSpace& s) {
  check_scan_size(s);
  const auto lines = line_words(s);
  const std::uint64_t n = std::uint64_t{1} << s.num_points();
  std::vector<PointSet> out;
  for (std::uint64_t g = 0; g < n; ++g) {
    if (all_bichromatic(lines, g)) out.emplace_back(g);
  }
  return out;
}

std::vector<PointSet> proper_colourings_parallel(const FiniteLinearSpace& s) {
  check_scan_size(s);
  const auto lines = line_words(s);
  const std::uint64_t n = std::uint64_t{1} << s.num_points();
  constexpr std::uint64_t kChunk = 1 << 14;
  const long chunks = static_cast<long>((n + kChunk - 1) / kChunk);
  std::vector<std::vector<PointSet>> partial(chunks);
#pragma omp parallel for schedule(static)
  for (long c = 0; c < chunks; ++c) {
    const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t hi = std::min(n, lo + kChunk);
    for (std::uint64_t g = lo; g < hi; ++g) {
      if (all_bichromatic(lines, g)) partial[c].emplace_back(g);
    }
  }
  std::vector<PointSet> out;
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  return out;
}

ColouringCensus colouring_census(const FiniteLinearSpace& s) {
  ColouringCensus out;
  const auto greens = proper_colourings_parallel(s);
  out.raw = greens.size();
  if (greens.empty()) return out;
  const auto group = automorphisms(s);
  const PointSet all = s.points();
  std::unordered_set<std::uint64_t> seen;
  for (PointSet g : greens) {
    if (seen.count(g.bits())) continue;
    for (const auto& a : group) {
      const PointSet img = a.apply(g);
      seen.insert(img.bits());
      seen.insert((all - img).bits());
    }
    out.class_representatives.push_back(orbit_minimum(g, group, all, true));
  }
  std::sort(out.class_representatives.begin(), out.class_representatives.end(), LexLess{});
  return out;
}

}  // namespace fls
