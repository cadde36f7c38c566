#pragma once

// Independent oracles and small generators shared by the test binaries. The
// oracles avoid the library's search code: they work from the raw line list.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "fls/coloring.hpp"
#include "fls/incidence.hpp"
#include "fls/iso.hpp"

namespace fls::oracle {

/// Subsets of the point set meeting every line without containing one, by scanning all 2^v subsets.
inline std::vector<PointSet> brute_blocking_sets(const FiniteLinearSpace& s) {
  const std::uint64_t n = std::uint64_t{1} << s.num_points();
  std::vector<PointSet> out;
  for (std::uint64_t m = 0; m < n; ++m) {
    const PointSet b(m);
    bool ok = true;
    for (PointSet l : s.lines()) {
      if (!l.intersects(b) || l.subset_of(b)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(b);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

/// Line-preserving bijections a -> b by plain backtracking in point order: a
/// partial map is rejected as soon as some line of a with two mapped points is
/// not sent into one line of b. `allowed(p, q)` filters single images.
inline std::vector<std::vector<Point>> naive_isomorphisms(
    const FiniteLinearSpace& a, const FiniteLinearSpace& b,
    const std::function<bool(Point, Point)>& allowed = [](Point, Point) { return true; }) {
  std::vector<std::vector<Point>> out;
  if (a.num_points() != b.num_points() || a.num_lines() != b.num_lines()) return out;
  const int v = a.num_points();
  std::vector<Point> img(v, -1);
  std::vector<bool> used(v, false);
  auto consistent = [&](Point p) {
    for (Point q = 0; q < p; ++q) {
      const PointSet la = a.line_through(p, q);
      const PointSet lb = b.line_through(img[p], img[q]);
      if (la.size() != lb.size()) return false;
      for (Point r = 0; r < p; ++r) {
        if (r != q && la.contains(r) && !lb.contains(img[r])) return false;
      }
    }
    return true;
  };
  std::function<void(Point)> rec = [&](Point p) {
    if (p == v) {
      out.push_back(img);
      return;
    }
    for (Point t = 0; t < v; ++t) {
      if (used[t] || !allowed(p, t)) continue;
      img[p] = t;
      used[t] = true;
      if (consistent(p)) rec(p + 1);
      used[t] = false;
    }
    img[p] = -1;
  };
  rec(0);
  return out;
}

/// Weight sum of one colour class, evaluated with plain integer fractions.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  void add(std::int64_t n, std::int64_t d) {
    num = num * d + n * den;
    den *= d;
    const std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
};

inline Fraction colour_weight_sum(const FiniteLinearSpace& s, PointSet cls) {
  Fraction f;
  for (PointSet l : s.lines()) {
    const std::int64_t in = (l & cls).size();
    const std::int64_t out = l.size() - in;
    // Each point of the class on l contributes C(out,2)/in, so the line gives C(out,2).
    if (in > 0) f.add(in * (out * (out - 1) / 2), in);
  }
  return f;
}

/// True iff some single-point deletion leaves a non-collinear, properly coloured space.
inline bool deletable_point_exists(const FiniteLinearSpace& s, PointSet green) {
  const PointSet all = s.points();
  for (Point p = 0; p < s.num_points(); ++p) {
    const PointSet rest = all - PointSet{p};
    bool collinear = false, proper = true;
    for (PointSet l : s.lines()) {
      const PointSet m = l & rest;
      if (m == rest) collinear = true;
      if (m.size() >= 2 && (m.subset_of(green) || !m.intersects(green))) proper = false;
    }
    if (!collinear && proper) return true;
  }
  return false;
}

/// Relabels a space by a permutation: point p becomes perm[p].
inline FiniteLinearSpace relabel(const FiniteLinearSpace& s, const std::vector<Point>& perm) {
  std::vector<PointSet> lines;
  for (PointSet l : s.lines()) {
    PointSet m;
    l.for_each([&](Point p) { m.insert(perm[p]); });
    lines.push_back(m);
  }
  return FiniteLinearSpace::build(s.num_points(), lines);
}

inline PointSet relabel(PointSet set, const std::vector<Point>& perm) {
  PointSet out;
  set.for_each([&](Point p) { out.insert(perm[p]); });
  return out;
}

inline std::vector<Point> random_permutation(int v, std::mt19937_64& rng) {
  std::vector<Point> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Random linear space on v points: shuffle the pairs, then greedily grow lines
/// from uncovered pairs, adding points joined to nothing on the line yet.
inline FiniteLinearSpace random_space(int v, std::mt19937_64& rng) {
  for (;;) {
    std::vector<PointSet> joined(v);  // points already on a common line with p
    std::vector<PointSet> lines;
    std::vector<std::pair<Point, Point>> pairs;
    for (Point p = 0; p < v; ++p) {
      for (Point q = p + 1; q < v; ++q) pairs.emplace_back(p, q);
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    for (auto [p, q] : pairs) {
      if (joined[p].contains(q)) continue;
      PointSet line{p, q};
      std::vector<Point> order(v);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      for (Point r : order) {
        if (line.contains(r) || joined[r].intersects(line)) continue;
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) line.insert(r);
      }
      line.for_each([&](Point x) { joined[x] = joined[x] | (line - PointSet{x}); });
      lines.push_back(line);
    }
    if (lines.size() > 1) return FiniteLinearSpace::build(v, lines);
  }
}

}  // namespace fls::oracle
