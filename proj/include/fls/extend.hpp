#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fls/catalog.hpp"
#include "fls/coloring.hpp"
#include "fls/incidence.hpp"

namespace fls {

/// A partition of the points into blocks, each a line of the space or a singleton.
struct PartialParallelClass {
  std::vector<PointSet> blocks;  // in order of their smallest point

  PointSet singletons() const;
  bool operator==(const PartialParallelClass&) const = default;
};

/// A ppc of a coloured geometry whose singletons all share one colour. The new
/// point must then take the other colour; without singletons it is free.
struct ExtendablePPC {
  PartialParallelClass ppc;
  std::optional<Colour> forced;
};

/// All ppcs by exact cover: the smallest uncovered point is covered by each line
/// through it that avoids covered points (2-lines included), or by a singleton.
std::vector<PartialParallelClass> partial_parallel_classes(const FiniteLinearSpace& s);

std::vector<ExtendablePPC> extendable_ppcs(const MRGeometry& mr);

/// The space on v+1 points got by adding point v to every block of the ppc.
FiniteLinearSpace extend_space(const FiniteLinearSpace& s, const PartialParallelClass& ppc,
                               const std::string& new_label = "∞");

/// Recovers {l \ {p} : p in l} for the point p of s.
PartialParallelClass ppc_at(const FiniteLinearSpace& s, Point p);

/// Number of eppcs up to colour-partition-preserving automorphisms.
std::size_t eppc_orbit_count(const MRGeometry& mr);

struct Extension {
  MRGeometry geometry;
  std::size_t eppc_index = 0;
  Colour new_colour = Colour::green;
};

struct ExtensionSet {
  std::vector<ExtendablePPC> eppcs;
  std::vector<Extension> extensions;
  /// Indices into `extensions`, one per MR-isomorphism class, in first-seen order.
  std::vector<std::size_t> class_representatives;

  std::size_t class_count() const { return class_representatives.size(); }
  const MRGeometry& representative(std::size_t k) const {
    return extensions[class_representatives[k]].geometry;
  }
};

/// Every one-point extension (two per singleton-free eppc, one otherwise), with
/// the new point appended as index v and labelled "∞", and its classes up to
/// MR-isomorphism.
ExtensionSet one_point_extensions(const MRGeometry& mr);

struct ExtensionEdge {
  std::string from;
  std::string to;
  auto operator<=>(const ExtensionEdge&) const = default;
};

/// Edges smaller -> larger whenever the larger entry is MR-isomorphic to a
/// one-point extension of the smaller. Sorted by catalog order.
std::vector<ExtensionEdge> extension_graph(const std::vector<CatalogEntry>& entries);

}  // namespace fls
