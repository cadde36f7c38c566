#include "fls/fls_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace fls {

namespace {

std::vector<Point> read_indices(std::istringstream& in, int line_no, int v) {
  std::vector<Point> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int p = -1;
    try {
      p = std::stoi(tok, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != tok.size()) throw FlsFormatError(line_no, "bad point index '" + tok + "'");
    if (p < 0 || p >= v) throw FlsFormatError(line_no, "point index " + tok + " out of range");
    out.push_back(p);
  }
  return out;
}

}  // namespace

FlsDocument parse_fls(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int v = -1;
  std::vector<std::vector<Point>> lines;
  std::vector<std::string> labels;
  PointSet green, red;
  bool coloured = false;

  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream row(raw);
    std::string key;
    if (!(row >> key)) continue;
    if (key == "points") {
      if (v >= 0) throw FlsFormatError(line_no, "duplicate 'points'");
      if (!(row >> v) || v < 3 || v > kMaxPoints) throw FlsFormatError(line_no, "bad point count");
      std::string extra;
      if (row >> extra) throw FlsFormatError(line_no, "trailing text after point count");
      labels.resize(v);
      for (int p = 0; p < v; ++p) labels[p] = std::to_string(p);
      continue;
    }
    if (v < 0) throw FlsFormatError(line_no, "'points' must come first");
    if (key == "label") {
      int p = -1;
      std::string name, extra;
      if (!(row >> p >> name) || (row >> extra)) throw FlsFormatError(line_no, "expected: label <index> <name>");
      if (p < 0 || p >= v) throw FlsFormatError(line_no, "label index out of range");
      labels[p] = name;
    } else if (key == "green" || key == "red") {
      coloured = true;
      for (Point p : read_indices(row, line_no, v)) {
        if (green.contains(p) || red.contains(p)) throw FlsFormatError(line_no, "point coloured twice");
        (key == "green" ? green : red).insert(p);
      }
    } else if (key == "line") {
      auto pts = read_indices(row, line_no, v);
      if (pts.size() < 2) throw FlsFormatError(line_no, "a line needs at least two points");
      lines.push_back(std::move(pts));
    } else {
      throw FlsFormatError(line_no, "unknown keyword '" + key + "'");
    }
  }
  if (v < 0) throw FlsFormatError(line_no, "missing 'points'");
  if (coloured && (green | red) != PointSet::first(v)) {
    throw FlsFormatError(line_no, "colouring does not cover every point");
  }
  try {
    FlsDocument doc{FiniteLinearSpace::build(v, lines, labels), std::nullopt};
    if (coloured) doc.colouring = Colouring(v, green);
    return doc;
  } catch (const SpaceError& e) {
    throw FlsFormatError(line_no, e.what());
  }
}

FlsDocument read_fls(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_fls(ss.str());
}

std::string format_fls(const FiniteLinearSpace& s, const std::optional<Colouring>& colouring) {
  std::ostringstream os;
  os << "points " << s.num_points() << '\n';
  if (!s.has_default_labels()) {
    for (Point p = 0; p < s.num_points(); ++p) os << "label " << p << ' ' << s.label(p) << '\n';
  }
  auto row = [&](const char* key, PointSet pts) {
    os << key;
    pts.for_each([&](Point p) { os << ' ' << p; });
    os << '\n';
  };
  if (colouring) {
    row("green", colouring->green());
    row("red", colouring->red());
  }
  for (PointSet l : s.long_lines()) row("line", l);
  return os.str();
}

void write_fls(const std::string& path, const FiniteLinearSpace& s, const std::optional<Colouring>& colouring) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << format_fls(s, colouring);
}

}  // namespace fls
