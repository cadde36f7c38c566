#include "fls/extend.hpp"

#include <algorithm>
#include <set>

#include "fls/iso.hpp"

namespace fls {

PointSet PartialParallelClass::singletons() const {
  PointSet out;
  for (PointSet b : blocks) {
    if (b.size() == 1) out = out | b;
  }
  return out;
}

namespace {

void cover(const FiniteLinearSpace& s, PointSet covered, std::vector<PointSet>& blocks,
           std::vector<PartialParallelClass>& out) {
  const PointSet open = s.points() - covered;
  if (open.empty()) {
    out.push_back(PartialParallelClass{blocks});
    return;
  }
  const Point p = open.min();
  for (LineId id : s.lines_through(p)) {
    const PointSet l = s.line(id);
    if (l.intersects(covered)) continue;
    blocks.push_back(l);
    cover(s, covered | l, blocks, out);
    blocks.pop_back();
  }
  blocks.push_back(PointSet{p});
  cover(s, covered | PointSet{p}, blocks, out);
  blocks.pop_back();
}

}  // namespace

std::vector<PartialParallelClass> partial_parallel_classes(const FiniteLinearSpace& s) {
  std::vector<PartialParallelClass> out;
  std::vector<PointSet> blocks;
  cover(s, PointSet{}, blocks, out);
  return out;
}

std::vector<ExtendablePPC> extendable_ppcs(const MRGeometry& mr) {
  std::vector<ExtendablePPC> out;
  const PointSet green = mr.colouring().green();
  for (auto& ppc : partial_parallel_classes(mr.space())) {
    const PointSet single = ppc.singletons();
    if (single.empty()) {
      out.push_back({std::move(ppc), std::nullopt});
    } else if (single.subset_of(green)) {
      out.push_back({std::move(ppc), Colour::red});
    } else if (!single.intersects(green)) {
      out.push_back({std::move(ppc), Colour::green});
    }
  }
  return out;
}

FiniteLinearSpace extend_space(const FiniteLinearSpace& s, const PartialParallelClass& ppc,
                               const std::string& new_label) {
  const Point inf = s.num_points();
  std::vector<PointSet> lines;
  for (PointSet l : s.lines()) {
    if (std::find(ppc.blocks.begin(), ppc.blocks.end(), l) == ppc.blocks.end()) lines.push_back(l);
  }
  for (PointSet b : ppc.blocks) lines.push_back(b | PointSet{inf});
  auto labels = s.labels();
  labels.push_back(new_label);
  return FiniteLinearSpace::build(inf + 1, lines, std::move(labels));
}

PartialParallelClass ppc_at(const FiniteLinearSpace& s, Point p) {
  PartialParallelClass out;
  for (LineId id : s.lines_through(p)) out.blocks.push_back(s.line(id) - PointSet{p});
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](PointSet a, PointSet b) { return a.min() < b.min(); });
  return out;
}

std::size_t eppc_orbit_count(const MRGeometry& mr) {
  const auto eppcs = extendable_ppcs(mr);
  const auto group = automorphisms(mr, ColourRule::preserve_or_swap);
  auto key = [](std::vector<PointSet> blocks) {
    std::vector<std::uint64_t> out;
    for (PointSet b : blocks) out.push_back(b.bits());
    std::sort(out.begin(), out.end());
    return out;
  };
  std::set<std::vector<std::uint64_t>> seen;
  std::size_t orbits = 0;
  for (const auto& e : eppcs) {
    if (seen.count(key(e.ppc.blocks))) continue;
    ++orbits;
    for (const auto& g : group) {
      std::vector<PointSet> img;
      for (PointSet b : e.ppc.blocks) img.push_back(g.apply(b));
      seen.insert(key(img));
    }
  }
  return orbits;
}

ExtensionSet one_point_extensions(const MRGeometry& mr) {
  ExtensionSet out;
  out.eppcs = extendable_ppcs(mr);
  for (std::size_t k = 0; k < out.eppcs.size(); ++k) {
    const auto& e = out.eppcs[k];
    const auto space = extend_space(mr.space(), e.ppc);
    std::vector<Colour> colours;
    if (e.forced) {
      colours = {*e.forced};
    } else {
      colours = {Colour::green, Colour::red};
    }
    for (Colour c : colours) {
      out.extensions.push_back(Extension{MRGeometry(space, mr.colouring().with_point(c)), k, c});
    }
  }
  for (std::size_t i = 0; i < out.extensions.size(); ++i) {
    const auto& g = out.extensions[i].geometry;
    const bool seen = std::any_of(out.class_representatives.begin(), out.class_representatives.end(),
                                  [&](std::size_t r) { return mr_isomorphic(out.extensions[r].geometry, g); });
    if (!seen) out.class_representatives.push_back(i);
  }
  return out;
}

std::vector<ExtensionEdge> extension_graph(const std::vector<CatalogEntry>& entries) {
  std::vector<ExtensionEdge> edges;
  for (const auto& small : entries) {
    const int v = small.geometry.num_points();
    bool any_larger = false;
    for (const auto& big : entries) any_larger = any_larger || big.geometry.num_points() == v + 1;
    if (!any_larger) continue;
    const auto ext = one_point_extensions(small.geometry);
    for (const auto& big : entries) {
      if (big.geometry.num_points() != v + 1) continue;
      for (std::size_t k = 0; k < ext.class_count(); ++k) {
        if (mr_isomorphic(ext.representative(k), big.geometry)) {
          edges.push_back({small.name, big.name});
          break;
        }
      }
    }
  }
  return edges;
}

}  // namespace fls
