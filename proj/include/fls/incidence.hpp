#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fls/point_set.hpp"

namespace fls {

class SpaceError : public std::runtime_error {
 public:
  enum class Kind { bad_line, pair_double_covered, all_collinear, same_point, too_many_points };

  SpaceError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

using LineId = int;

/// Points P, Q with the (P,Q)-grid bound: at most (deg P - 1)(deg Q - 1) points lie off PQ.
struct GridProfile {
  Point p = 0;
  Point q = 0;
  int capacity = 0;
  int off_line_count = 0;
};

/// A finite linear space: v points and a set of lines such that every pair of
/// distinct points is on exactly one line, every line has at least two points,
/// and the points are not all collinear. Lines are stored explicitly, 2-lines
/// included, and sorted by (size descending, lexicographic point list).
/// Immutable after construction.
class FiniteLinearSpace {
 public:
  /// Builds the space from a partial list of lines; uncovered pairs become 2-lines.
  /// Labels default to the point indices.
  static FiniteLinearSpace build(int v, const std::vector<PointSet>& given_lines,
                                 std::vector<std::string> labels = {});
  static FiniteLinearSpace build(int v, const std::vector<std::vector<Point>>& given_lines,
                                 std::vector<std::string> labels = {});

  int num_points() const { return v_; }
  int num_lines() const { return static_cast<int>(lines_.size()); }
  PointSet points() const { return PointSet::first(v_); }

  const std::vector<PointSet>& lines() const { return lines_; }
  PointSet line(LineId id) const { return lines_[id]; }

  /// Id of the unique line through p and q. Throws SpaceError(same_point) if p == q.
  LineId line_id(Point p, Point q) const;
  PointSet line_through(Point p, Point q) const { return lines_[line_id(p, q)]; }
  /// Unchecked variant for inner loops: requires p != q, both in range.
  LineId line_id_unchecked(Point p, Point q) const { return pair_index_[p * v_ + q]; }

  const std::vector<LineId>& lines_through(Point p) const { return lines_at_[p]; }
  int degree(Point p) const { return static_cast<int>(lines_at_[p].size()); }

  GridProfile grid_profile(Point p, Point q) const;

  /// True iff no 2-lines exist.
  bool is_proper() const;

  /// The space induced on a subset (|subset| >= 3). Points are renumbered in
  /// increasing order of their original index; labels carry over.
  FiniteLinearSpace induced(PointSet subset) const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Point p) const { return labels_[p]; }
  /// Index of the point with the given label, or -1.
  Point find_label(const std::string& name) const;
  bool has_default_labels() const;

  /// Lines with at least three points (the ones a .fls file lists).
  std::vector<PointSet> long_lines() const;

  bool operator==(const FiniteLinearSpace& o) const { return v_ == o.v_ && lines_ == o.lines_; }

 private:
  FiniteLinearSpace() = default;

  int v_ = 0;
  std::vector<PointSet> lines_;
  std::vector<LineId> pair_index_;  // v*v, -1 on the diagonal
  std::vector<std::vector<LineId>> lines_at_;
  std::vector<std::string> labels_;
};

/// Free-function forms of the common queries.
inline FiniteLinearSpace build_space(int v, const std::vector<std::vector<Point>>& lines) {
  return FiniteLinearSpace::build(v, lines);
}
inline int degree(const FiniteLinearSpace& s, Point p) { return s.degree(p); }
inline FiniteLinearSpace induced_subspace(const FiniteLinearSpace& s, PointSet subset) {
  return s.induced(subset);
}

/// Label-formatted point list, e.g. "{0_0,1_0,3_0}".
std::string format_points(const FiniteLinearSpace& s, PointSet points);

}  // namespace fls
