#include <gtest/gtest.h>

#include <random>

#include "fls/catalog.hpp"
#include "fls/enumerate.hpp"
#include "fls/fls_io.hpp"
#include "fls/incidence.hpp"
#include "fls/iso.hpp"
#include "support.hpp"

using namespace fls;

namespace {

PointSet labelled(const FiniteLinearSpace& s, std::initializer_list<const char*> names) {
  PointSet out;
  for (const char* n : names) {
    const Point p = s.find_label(n);
    EXPECT_GE(p, 0) << n;
    out.insert(p);
  }
  return out;
}

void expect_axioms(const FiniteLinearSpace& s) {
  const int v = s.num_points();
  std::int64_t pair_total = 0;
  for (PointSet l : s.lines()) {
    ASSERT_GE(l.size(), 2);
    EXPECT_NE(l, s.points());
    pair_total += choose2(l.size());
  }
  EXPECT_EQ(pair_total, choose2(v));
  for (Point p = 0; p < v; ++p) {
    for (Point q = p + 1; q < v; ++q) {
      int through = 0;
      for (PointSet l : s.lines()) through += l.contains(p) && l.contains(q);
      EXPECT_EQ(through, 1);
      EXPECT_TRUE(s.line_through(p, q).contains(p) && s.line_through(p, q).contains(q));
    }
  }
}

}  // namespace

TEST(Incidence, CollinearInputRejected) {
  try {
    build_space(3, {{0, 1, 2}});
    FAIL();
  } catch (const SpaceError& e) {
    EXPECT_EQ(e.kind(), SpaceError::Kind::all_collinear);
  }
}

TEST(Incidence, BadInputs) {
  auto kind_of = [](auto fn) {
    try {
      fn();
    } catch (const SpaceError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error";
    return SpaceError::Kind::bad_line;
  };
  EXPECT_EQ(kind_of([] { build_space(5, {{0, 1, 2}, {0, 1, 3}}); }), SpaceError::Kind::pair_double_covered);
  EXPECT_EQ(kind_of([] { build_space(5, {{0}}); }), SpaceError::Kind::bad_line);
  EXPECT_EQ(kind_of([] { build_space(5, {{0, 7}}); }), SpaceError::Kind::bad_line);
  EXPECT_EQ(kind_of([] { build_space(65, {}); }), SpaceError::Kind::too_many_points);
  const auto s = build_space(4, {{0, 1, 2}});
  EXPECT_EQ(kind_of([&] { s.line_id(2, 2); }), SpaceError::Kind::same_point);
}

TEST(Incidence, CompletionWithTwoLines) {
  const auto s = build_space(4, {{0, 1, 2}});
  ASSERT_EQ(s.num_lines(), 4);
  EXPECT_EQ(s.line(0), (PointSet{0, 1, 2}));
  EXPECT_EQ(s.line(1), (PointSet{0, 3}));
  EXPECT_EQ(s.line(2), (PointSet{1, 3}));
  EXPECT_EQ(s.line(3), (PointSet{2, 3}));
  EXPECT_EQ(s.line_through(0, 3), (PointSet{0, 3}));
  EXPECT_EQ(degree(s, 3), 3);
  EXPECT_FALSE(s.is_proper());
}

TEST(Incidence, ProjectivePlanes) {
  for (int q : {2, 3, 4, 5}) {
    const auto s = pg2(q);
    EXPECT_EQ(s.num_points(), q * q + q + 1);
    EXPECT_EQ(s.num_lines(), q * q + q + 1);
    for (PointSet l : s.lines()) EXPECT_EQ(l.size(), q + 1);
    for (Point p = 0; p < s.num_points(); ++p) EXPECT_EQ(s.degree(p), q + 1);
    EXPECT_TRUE(s.is_proper());
    expect_axioms(s);
  }
  EXPECT_THROW(pg2(6), CatalogError);
}

TEST(Incidence, ThirteenFourPointLinesNeedNoCompletion) {
  const auto plane = pg2(3);
  std::vector<std::vector<Point>> given;
  for (PointSet l : plane.lines()) given.push_back(l.to_vector());
  const auto s = build_space(13, given);
  EXPECT_EQ(s.num_lines(), 13);
  EXPECT_TRUE(s.is_proper());
}

TEST(Incidence, ZSevenZThreeModel) {
  const auto s = pg24_z7z3();
  EXPECT_EQ(s.num_points(), 21);
  EXPECT_EQ(s.label(7 * 1 + 6), "6_1");
  const Point p00 = s.find_label("0_0"), p10 = s.find_label("1_0");
  EXPECT_EQ(s.line_through(p00, p10), labelled(s, {"0_0", "1_0", "3_0", "6_1", "6_2"}));
  for (Point p = 0; p < 21; ++p) EXPECT_EQ(s.degree(p), 5);
  expect_axioms(s);
}

TEST(Incidence, InducedSubspaces) {
  const auto s = pg24_z7z3();
  const auto baer0 = s.induced(PointSet::first(7));
  EXPECT_EQ(baer0.num_lines(), 7);
  for (PointSet l : baer0.lines()) EXPECT_EQ(l.size(), 3);
  EXPECT_TRUE(isomorphic(baer0, pg2(2)));
  EXPECT_EQ(baer0.label(3), "3_0");

  const auto two_baer = s.induced(PointSet::first(14));
  EXPECT_TRUE(isomorphic(two_baer, named("MR14_1").geometry.space()));
  EXPECT_FALSE(two_baer.is_proper());
  for (PointSet l : two_baer.lines()) EXPECT_TRUE(l.size() == 2 || l.size() == 4);

  const auto punctured = pg2(3).induced(PointSet::first(13) - PointSet{0});
  EXPECT_EQ(punctured.num_points(), 12);
  EXPECT_EQ(line_size_profile(punctured), (LineSizeProfile{{3, 4}, {4, 9}}));
}

TEST(Incidence, ProperFlags) {
  EXPECT_TRUE(pg2(3).is_proper());
  EXPECT_FALSE(named("MR14_1").geometry.space().is_proper());
  const auto mr15_2 = named("MR15_2").geometry.space();
  EXPECT_TRUE(mr15_2.is_proper());
  for (PointSet l : mr15_2.lines()) EXPECT_GE(l.size(), 3);
}

TEST(Incidence, LineThroughInRelabelledForm) {
  const auto mr = mr14_2_relabelled();
  const auto& s = mr.space();
  EXPECT_EQ(s.line_through(s.find_label("G"), s.find_label("R")), labelled(s, {"G", "R_1", "R_2", "R_3", "R"}));
}

TEST(Incidence, GridProfiles) {
  for (int q : {3, 4}) {
    const auto s = pg2(q);
    for (Point p = 0; p < s.num_points(); ++p) {
      for (Point r = p + 1; r < s.num_points(); ++r) {
        const auto g = s.grid_profile(p, r);
        EXPECT_EQ(g.capacity, q * q);
        EXPECT_EQ(g.off_line_count, q * q);
      }
    }
  }
  // A degree-4 and a degree-5 point of the 14-point space.
  const auto s = named("MR14_2").geometry.space();
  bool found = false;
  for (Point p = 0; p < s.num_points() && !found; ++p) {
    for (Point r = 0; r < s.num_points() && !found; ++r) {
      if (s.degree(p) != 4 || s.degree(r) != 5) continue;
      const auto g = s.grid_profile(p, r);
      EXPECT_EQ(g.capacity, 12);
      EXPECT_EQ(g.off_line_count, 14 - s.line_through(p, r).size());
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(IncidenceProperty, RandomSpacesSatisfyAxiomsAndGridBound) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int v = 4 + static_cast<int>(rng() % 20);
    const auto s = oracle::random_space(v, rng);
    expect_axioms(s);
    for (Point p = 0; p < v; ++p) {
      for (Point r = p + 1; r < v; ++r) {
        const auto g = s.grid_profile(p, r);
        EXPECT_EQ(g.capacity, (s.degree(p) - 1) * (s.degree(r) - 1));
        EXPECT_EQ(g.off_line_count, v - s.line_through(p, r).size());
        EXPECT_LE(g.off_line_count, g.capacity);
      }
    }
  }
}

TEST(IncidenceProperty, LongLinesDetermineTheSpace) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = oracle::random_space(4 + static_cast<int>(rng() % 20), rng);
    EXPECT_EQ(FiniteLinearSpace::build(s.num_points(), s.long_lines()), s);
    const auto doc = parse_fls(format_fls(s));
    EXPECT_EQ(doc.space, s);
    EXPECT_FALSE(doc.colouring.has_value());
  }
}

TEST(IncidenceProperty, RelabellingPreservesStructure) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int v = 5 + static_cast<int>(rng() % 12);
    const auto s = oracle::random_space(v, rng);
    const auto perm = oracle::random_permutation(v, rng);
    const auto t = oracle::relabel(s, perm);
    EXPECT_EQ(line_size_profile(s), line_size_profile(t));
    for (Point p = 0; p < v; ++p) EXPECT_EQ(s.degree(p), t.degree(perm[p]));
    EXPECT_EQ(invariant_hash(s), invariant_hash(t));
    EXPECT_TRUE(isomorphic(s, t));
  }
}

TEST(FlsFormat, ParsesLabelsColoursAndComments) {
  const auto doc = parse_fls(
      "# a small example\n"
      "points 5\n"
      "label 4 X\n"
      "green 0 1\n"
      "red 2 3 4   # trailing comment\n"
      "line 0 2 4\n"
      "line 1 2 3\n");
  EXPECT_EQ(doc.space.num_points(), 5);
  EXPECT_EQ(doc.space.label(4), "X");
  ASSERT_TRUE(doc.colouring.has_value());
  EXPECT_EQ(doc.colouring->green(), (PointSet{0, 1}));
  EXPECT_EQ(doc.space.num_lines(), 2 + 4);
  EXPECT_EQ(parse_fls(format_fls(doc.space, doc.colouring)).space, doc.space);
  EXPECT_EQ(format_fls(parse_fls(format_fls(doc.space, doc.colouring)).space, doc.colouring),
            format_fls(doc.space, doc.colouring));
}

TEST(FlsFormat, Errors) {
  auto line_of = [](const std::string& text) {
    try {
      parse_fls(text);
    } catch (const FlsFormatError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("line 0 1 2\n"), 1);
  EXPECT_EQ(line_of("points 4\nline 0 1 9\n"), 2);
  EXPECT_EQ(line_of("points 4\nline 0 x\n"), 2);
  EXPECT_EQ(line_of("points 4\nblob 1\n"), 2);
  EXPECT_EQ(line_of("points 4\ngreen 0 1\nred 1 2 3\n"), 3);
  EXPECT_GT(line_of("points 4\ngreen 0 1\nred 2\n"), 0);
  EXPECT_GT(line_of("points 3\nline 0 1 2\n"), 0);
  EXPECT_GT(line_of("points 5\nline 0 1 2\nline 0 1 3\n"), 0);
  EXPECT_EQ(line_of(""), 0);
}
