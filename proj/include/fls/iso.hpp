#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fls/coloring.hpp"
#include "fls/incidence.hpp"

namespace fls {

/// A point bijection between two spaces, stored as the image array.
struct Isomorphism {
  std::vector<Point> image;

  Point operator()(Point p) const { return image[p]; }
  PointSet apply(PointSet s) const {
    PointSet out;
    s.for_each([&](Point p) { out.insert(image[p]); });
    return out;
  }
  /// (this ∘ first): apply `first`, then this.
  Isomorphism after(const Isomorphism& first) const;
  Isomorphism inverse() const;
  bool is_identity() const;
  bool is_even() const;

  auto operator<=>(const Isomorphism&) const = default;
};

enum class SearchMode { first, all };

/// How colours constrain an isomorphism between coloured geometries.
/// preserve_or_swap keeps the colour partition: either every colour is kept or
/// both are exchanged.
enum class ColourRule { ignore, preserve, preserve_or_swap };

/// True iff the map sends every line of a onto a line of b.
bool is_isomorphism(const FiniteLinearSpace& a, const FiniteLinearSpace& b, const Isomorphism& f);

/// Isomorphisms a -> b by backtracking over point images, pruned by per-point
/// invariants and kept consistent with a partial line map. Results are sorted
/// by image array; mode=first returns at most one.
std::vector<Isomorphism> find_isomorphisms(const FiniteLinearSpace& a, const FiniteLinearSpace& b,
                                           SearchMode mode = SearchMode::first);
std::vector<Isomorphism> find_isomorphisms(const MRGeometry& a, const MRGeometry& b,
                                           SearchMode mode = SearchMode::first,
                                           ColourRule rule = ColourRule::preserve_or_swap);

bool isomorphic(const FiniteLinearSpace& a, const FiniteLinearSpace& b);
bool mr_isomorphic(const MRGeometry& a, const MRGeometry& b);

/// Full automorphism group, identity first.
std::vector<Isomorphism> automorphisms(const FiniteLinearSpace& s);
std::vector<Isomorphism> automorphisms(const MRGeometry& mr, ColourRule rule = ColourRule::preserve);

/// Hash of the multiset of point invariants; equal for isomorphic spaces.
std::uint64_t invariant_hash(const FiniteLinearSpace& s);

struct BlockingSetOrbits {
  std::size_t total = 0;                   // raw blocking sets
  std::vector<PointSet> representatives;   // lexicographically least per orbit, sorted
  std::size_t count() const { return representatives.size(); }
};

/// Lexicographically least image of `set` under the group and, if requested,
/// complementation within `universe`.
PointSet orbit_minimum(PointSet set, const std::vector<Isomorphism>& group, PointSet universe,
                       bool with_complement);

/// Orbits of blocking sets under automorphisms of the space and complementation.
BlockingSetOrbits essentially_different_blocking_sets(const FiniteLinearSpace& s);

}  // namespace fls
