#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "fls/catalog.hpp"
#include "fls/extend.hpp"
#include "fls/iso.hpp"
#include "support.hpp"

using namespace fls;

namespace {

/// Number of sets of pairwise disjoint lines, each giving one ppc.
std::size_t disjoint_line_families(const FiniteLinearSpace& s) {
  const auto& lines = s.lines();
  std::size_t n = 0;
  std::function<void(std::size_t, PointSet)> rec = [&](std::size_t i, PointSet used) {
    if (i == lines.size()) {
      ++n;
      return;
    }
    rec(i + 1, used);
    if (!lines[i].intersects(used)) rec(i + 1, used | lines[i]);
  };
  rec(0, PointSet{});
  return n;
}

PointSet pts(const FiniteLinearSpace& s, std::initializer_list<const char*> names) {
  PointSet out;
  for (const char* n : names) out.insert(s.find_label(n));
  return out;
}

bool contains_ppc(const std::vector<PartialParallelClass>& all, std::vector<PointSet> blocks) {
  std::sort(blocks.begin(), blocks.end(), [](PointSet a, PointSet b) { return a.min() < b.min(); });
  return std::find(all.begin(), all.end(), PartialParallelClass{blocks}) != all.end();
}

}  // namespace

TEST(Ppc, TriangleHasFour) {
  const auto tri = FiniteLinearSpace::build(3, std::vector<PointSet>{});
  const auto all = partial_parallel_classes(tri);
  EXPECT_EQ(all.size(), 4u);
  EXPECT_TRUE(contains_ppc(all, {PointSet{0, 1}, PointSet{2}}));
  EXPECT_TRUE(contains_ppc(all, {PointSet{0, 2}, PointSet{1}}));
  EXPECT_TRUE(contains_ppc(all, {PointSet{1, 2}, PointSet{0}}));
  EXPECT_TRUE(contains_ppc(all, {PointSet{0}, PointSet{1}, PointSet{2}}));
}

TEST(Ppc, CountsMatchDisjointLineFamilies) {
  for (const auto& e : full_catalog()) {
    const auto& s = e.geometry.space();
    const auto all = partial_parallel_classes(s);
    EXPECT_EQ(all.size(), disjoint_line_families(s)) << e.name;
    for (const auto& ppc : all) {
      PointSet seen;
      for (PointSet b : ppc.blocks) {
        EXPECT_FALSE(b.intersects(seen));
        seen = seen | b;
        EXPECT_TRUE(b.size() == 1 || std::find(s.lines().begin(), s.lines().end(), b) != s.lines().end());
      }
      EXPECT_EQ(seen, s.points());
    }
  }
  EXPECT_EQ(partial_parallel_classes(named("MR12").geometry.space()).size(), 25u);
  EXPECT_EQ(partial_parallel_classes(named("MR13").geometry.space()).size(), 14u);
  EXPECT_EQ(partial_parallel_classes(named("MR14_1").geometry.space()).size(), 296u);
  EXPECT_EQ(partial_parallel_classes(named("MR14_2").geometry.space()).size(), 156u);
}

TEST(Eppc, FourteenOneCases) {
  const auto mr = named("MR14_1").geometry;
  const auto& s = mr.space();
  const auto all = partial_parallel_classes(s);
  // A 4-line and the lines parallel to it.
  EXPECT_TRUE(contains_ppc(all, {pts(s, {"0_0", "1_0", "3_0", "6_1"}), pts(s, {"0_1", "1_1", "3_1", "6_0"}),
                                 pts(s, {"5_0", "5_1"}), pts(s, {"2_0", "2_1"}), pts(s, {"4_0", "4_1"})}));
  // The seven 2-lines.
  std::vector<PointSet> twos;
  for (PointSet l : s.lines()) {
    if (l.size() == 2) twos.push_back(l);
  }
  ASSERT_EQ(twos.size(), 7u);
  EXPECT_TRUE(contains_ppc(all, twos));
  const auto eppcs = extendable_ppcs(mr);
  EXPECT_EQ(eppcs.size(), 8u);
  for (const auto& e : eppcs) {
    EXPECT_TRUE(e.ppc.singletons().empty());
    EXPECT_FALSE(e.forced.has_value());
  }
  EXPECT_EQ(eppc_orbit_count(mr), 2u);
}

TEST(Eppc, CountsAndDefinition) {
  const std::map<std::string, std::pair<std::size_t, std::size_t>> want{
      {"MR12", {1, 1}}, {"MR13", {0, 0}}, {"MR14_1", {8, 2}}, {"MR14_2", {7, 3}}};
  for (const auto& e : full_catalog()) {
    const auto& mr = e.geometry;
    std::size_t by_definition = 0;
    for (const auto& ppc : partial_parallel_classes(mr.space())) {
      const PointSet single = ppc.singletons();
      by_definition += single.subset_of(mr.colouring().green()) || single.subset_of(mr.colouring().red());
    }
    const auto eppcs = extendable_ppcs(mr);
    EXPECT_EQ(eppcs.size(), by_definition) << e.name;
    for (const auto& x : eppcs) {
      if (x.ppc.singletons().empty()) {
        EXPECT_FALSE(x.forced.has_value());
      } else {
        ASSERT_TRUE(x.forced.has_value());
        EXPECT_EQ(*x.forced, opposite(mr.colour(x.ppc.singletons().min())));
      }
    }
    if (auto it = want.find(e.name); it != want.end()) {
      EXPECT_EQ(eppcs.size(), it->second.first) << e.name;
      EXPECT_EQ(eppc_orbit_count(mr), it->second.second) << e.name;
    }
  }
}

TEST(Extension, ClassesPerGeometry) {
  struct Want {
    std::size_t extensions;
    std::vector<std::string> classes;
  };
  const std::map<std::string, Want> want{{"MR12", {2, {"MR13"}}},
                                         {"MR13", {0, {}}},
                                         {"MR14_1", {16, {"MR15_1", "MR15_2"}}},
                                         {"MR14_2", {10, {"MR15_1", "MR15_3r", "MR15_3g", "MR15_4"}}}};
  const auto cat = full_catalog();
  for (const auto& [name, w] : want) {
    const auto set = one_point_extensions(named(name).geometry);
    EXPECT_EQ(set.extensions.size(), w.extensions) << name;
    std::vector<std::string> got;
    for (std::size_t k = 0; k < set.class_count(); ++k) {
      for (const auto& e : cat) {
        if (e.geometry.num_points() == set.representative(k).num_points() &&
            mr_isomorphic(e.geometry, set.representative(k))) {
          got.push_back(e.name);
        }
      }
    }
    auto sorted_want = w.classes;
    std::sort(got.begin(), got.end());
    std::sort(sorted_want.begin(), sorted_want.end());
    EXPECT_EQ(got, sorted_want) << name;
  }
}

TEST(Extension, RoundTripRecoversEppc) {
  for (const char* name : {"MR12", "MR14_1", "MR14_2", "MR15_1", "MR15_5"}) {
    const auto mr = named(name).geometry;
    const auto set = one_point_extensions(mr);
    for (const auto& ext : set.extensions) {
      const auto& g = ext.geometry;
      const Point inf = mr.num_points();
      ASSERT_EQ(g.num_points(), inf + 1);
      EXPECT_EQ(g.space().label(inf), "∞");
      EXPECT_EQ(g.colour(inf), ext.new_colour);
      EXPECT_TRUE(is_proper(g.space(), g.colouring()));
      EXPECT_EQ(g.space().induced(PointSet::first(inf)), mr.space());
      EXPECT_EQ(ppc_at(g.space(), inf), set.eppcs[ext.eppc_index].ppc) << name;
    }
  }
}

TEST(Extension, NoneExactlyWhenEveryPpcHasMixedSingletons) {
  for (const auto& e : full_catalog()) {
    const auto& mr = e.geometry;
    bool all_mixed = true;
    for (const auto& ppc : partial_parallel_classes(mr.space())) {
      const PointSet single = ppc.singletons();
      all_mixed = all_mixed && single.intersects(mr.colouring().green()) && single.intersects(mr.colouring().red());
    }
    EXPECT_EQ(one_point_extensions(mr).extensions.empty(), all_mixed) << e.name;
  }
}

TEST(ExtensionGraph, MatchesKnownEdges) {
  const std::vector<ExtensionEdge> want{{"MR12", "MR13"},    {"MR14_1", "MR15_1"},  {"MR14_1", "MR15_2"},
                                        {"MR14_2", "MR15_1"}, {"MR14_2", "MR15_3r"}, {"MR14_2", "MR15_3g"},
                                        {"MR14_2", "MR15_4"}};
  const auto edges = extension_graph(full_catalog());
  EXPECT_EQ(edges, want);
  for (const auto& e : edges) EXPECT_NE(e.to, "MR15_5");
}

TEST(ExtensionProperty, ExtendingCensusSpacesKeepsAxioms) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = oracle::random_space(4 + static_cast<int>(rng() % 8), rng);
    for (const auto& ppc : partial_parallel_classes(s)) {
      const auto t = extend_space(s, ppc);
      EXPECT_EQ(t.induced(s.points()), s);
      EXPECT_EQ(ppc_at(t, s.num_points()), ppc);
    }
  }
}
