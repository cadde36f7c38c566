#include "fls/incidence.hpp"

#include <algorithm>

namespace fls {

namespace {

bool line_order(PointSet a, PointSet b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return lex_less(a, b);
}

}  // namespace

FiniteLinearSpace FiniteLinearSpace::build(int v, const std::vector<std::vector<Point>>& given_lines,
                                           std::vector<std::string> labels) {
  std::vector<PointSet> sets;
  sets.reserve(given_lines.size());
  for (const auto& pts : given_lines) {
    PointSet s;
    for (Point p : pts) {
      if (p < 0 || p >= v || p >= kMaxPoints) {
        throw SpaceError(SpaceError::Kind::bad_line,
                         "point index " + std::to_string(p) + " out of range");
      }
      if (s.contains(p)) {
        throw SpaceError(SpaceError::Kind::bad_line, "repeated point " + std::to_string(p));
      }
      s.insert(p);
    }
    sets.push_back(s);
  }
  return build(v, sets, std::move(labels));
}

FiniteLinearSpace FiniteLinearSpace::build(int v, const std::vector<PointSet>& given_lines,
                                           std::vector<std::string> labels) {
  if (v > kMaxPoints) {
    throw SpaceError(SpaceError::Kind::too_many_points,
                     "at most " + std::to_string(kMaxPoints) + " points supported");
  }
  if (v < 0) throw SpaceError(SpaceError::Kind::bad_line, "negative point count");

  FiniteLinearSpace s;
  s.v_ = v;
  const PointSet all = PointSet::first(v);
  std::vector<PointSet> lines;
  std::vector<char> covered(static_cast<std::size_t>(v) * v, 0);
  for (PointSet l : given_lines) {
    if (l.size() < 2) throw SpaceError(SpaceError::Kind::bad_line, "line with fewer than 2 points");
    if (!l.subset_of(all)) throw SpaceError(SpaceError::Kind::bad_line, "point index out of range");
    const auto pts = l.to_vector();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        char& c = covered[pts[i] * v + pts[j]];
        if (c) {
          throw SpaceError(SpaceError::Kind::pair_double_covered,
                           "pair {" + std::to_string(pts[i]) + "," + std::to_string(pts[j]) +
                               "} lies on two lines");
        }
        c = 1;
      }
    }
    lines.push_back(l);
  }
  for (Point p = 0; p < v; ++p) {
    for (Point q = p + 1; q < v; ++q) {
      if (!covered[p * v + q]) lines.push_back(PointSet{p, q});
    }
  }
  if (v < 3 || std::any_of(lines.begin(), lines.end(), [&](PointSet l) { return l == all; })) {
    throw SpaceError(SpaceError::Kind::all_collinear, "all points are collinear");
  }
  std::sort(lines.begin(), lines.end(), line_order);
  s.lines_ = std::move(lines);

  s.pair_index_.assign(static_cast<std::size_t>(v) * v, -1);
  s.lines_at_.assign(v, {});
  for (LineId id = 0; id < s.num_lines(); ++id) {
    const auto pts = s.lines_[id].to_vector();
    for (Point p : pts) {
      s.lines_at_[p].push_back(id);
      for (Point q : pts) {
        if (p != q) s.pair_index_[p * v + q] = id;
      }
    }
  }

  if (labels.empty()) {
    for (Point p = 0; p < v; ++p) labels.push_back(std::to_string(p));
  } else if (static_cast<int>(labels.size()) != v) {
    throw SpaceError(SpaceError::Kind::bad_line, "label table size does not match point count");
  }
  s.labels_ = std::move(labels);
  return s;
}

LineId FiniteLinearSpace::line_id(Point p, Point q) const {
  if (p < 0 || q < 0 || p >= v_ || q >= v_) {
    throw SpaceError(SpaceError::Kind::bad_line, "point index out of range");
  }
  if (p == q) throw SpaceError(SpaceError::Kind::same_point, "line through a single point");
  return pair_index_[p * v_ + q];
}

GridProfile FiniteLinearSpace::grid_profile(Point p, Point q) const {
  const PointSet pq = line_through(p, q);
  return GridProfile{p, q, (degree(p) - 1) * (degree(q) - 1), v_ - pq.size()};
}

bool FiniteLinearSpace::is_proper() const {
  return std::all_of(lines_.begin(), lines_.end(), [](PointSet l) { return l.size() >= 3; });
}

FiniteLinearSpace FiniteLinearSpace::induced(PointSet subset) const {
  subset = subset & points();
  const auto keep = subset.to_vector();
  std::vector<Point> renumber(v_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) renumber[keep[i]] = static_cast<Point>(i);

  std::vector<PointSet> lines;
  for (PointSet l : lines_) {
    const PointSet r = l & subset;
    if (r.size() < 2) continue;
    PointSet mapped;
    r.for_each([&](Point p) { mapped.insert(renumber[p]); });
    lines.push_back(mapped);
  }
  std::vector<std::string> labels;
  for (Point p : keep) labels.push_back(labels_[p]);
  return build(static_cast<int>(keep.size()), lines, std::move(labels));
}

Point FiniteLinearSpace::find_label(const std::string& name) const {
  for (Point p = 0; p < v_; ++p) {
    if (labels_[p] == name) return p;
  }
  return -1;
}

bool FiniteLinearSpace::has_default_labels() const {
  for (Point p = 0; p < v_; ++p) {
    if (labels_[p] != std::to_string(p)) return false;
  }
  return true;
}

std::vector<PointSet> FiniteLinearSpace::long_lines() const {
  std::vector<PointSet> out;
  for (PointSet l : lines_) {
    if (l.size() >= 3) out.push_back(l);
  }
  return out;
}

std::string format_points(const FiniteLinearSpace& s, PointSet points) {
  std::string out = "{";
  bool first = true;
  points.for_each([&](Point p) {
    if (!first) out += ',';
    out += s.label(p);
    first = false;
  });
  return out + "}";
}

}  // namespace fls
