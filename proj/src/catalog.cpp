#include "fls/catalog.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>

#include "fls/iso.hpp"

namespace fls {

namespace {

template <class F>
FiniteLinearSpace plane_over() {
  const auto pts = projective_points<F>();
  std::vector<PointSet> lines;
  // Lines are indexed by the same normalized triples (duality).
  for (const auto& dual : pts) {
    PointSet l;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (dot(dual, pts[i]).is_zero()) l.insert(static_cast<Point>(i));
    }
    lines.push_back(l);
  }
  std::vector<std::string> labels;
  for (const auto& p : pts) labels.push_back(p.str());
  return FiniteLinearSpace::build(static_cast<int>(pts.size()), lines, std::move(labels));
}

Point require_label(const FiniteLinearSpace& s, const std::string& name) {
  const Point p = s.find_label(name);
  if (p < 0) throw std::logic_error("missing point label " + name);
  return p;
}

PointSet label_set(const FiniteLinearSpace& s, const std::vector<std::string>& names) {
  PointSet out;
  for (const auto& n : names) out.insert(require_label(s, n));
  return out;
}

std::vector<std::string> baer(int j) {
  std::vector<std::string> out;
  for (int i = 0; i < 7; ++i) out.push_back(z7z3_label(i, j));
  return out;
}

MRGeometry pg24_subgeometry(std::vector<std::string> points, const std::vector<std::string>& green) {
  const auto plane = pg24_z7z3();
  const auto space = plane.induced(label_set(plane, points));
  return MRGeometry(space, Colouring(space.num_points(), label_set(space, green)));
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const std::vector<std::string> kMr14_2Red = {"2_1", "4_1", "5_1", "6_1", "0_2", "1_2", "3_2"};

MRGeometry make_mr13() {
  const auto s = pg2(3);
  const Point a = require_label(s, "[1,0,0]");
  const Point b = require_label(s, "[0,1,0]");
  const Point c = require_label(s, "[0,0,1]");
  const Point d = require_label(s, "[1,1,1]");
  PointSet green{a, b, c, d};
  for (auto [p, q, r, t] : std::array<std::array<Point, 4>, 3>{{{a, b, c, d}, {a, c, b, d}, {a, d, b, c}}}) {
    green = green | (s.line_through(p, q) & s.line_through(r, t));
  }
  return MRGeometry(s, Colouring(s.num_points(), green));
}

MRGeometry make_mr12() {
  const MRGeometry mr13 = make_mr13();
  const auto& s = mr13.space();
  const PointSet quad = label_set(s, {"[1,0,0]", "[0,1,0]", "[0,0,1]", "[1,1,1]"});
  const Point diagonal = (mr13.colouring().green() - quad).min();
  const PointSet keep = s.points() - PointSet{diagonal};
  return MRGeometry(s.induced(keep), mr13.colouring().restricted(keep));
}

MRGeometry make_mr15_2() {
  const MRGeometry base = pg24_subgeometry(concat(baer(0), baer(1)), baer(0));
  const auto& s = base.space();
  const Point inf = s.num_points();
  std::vector<PointSet> lines;
  for (PointSet l : s.lines()) {
    if (l.size() == 2) l.insert(inf);
    lines.push_back(l);
  }
  auto labels = s.labels();
  labels.push_back("∞");
  auto space = FiniteLinearSpace::build(inf + 1, lines, std::move(labels));
  return MRGeometry(space, base.colouring().with_point(Colour::green));
}

}  // namespace

FiniteLinearSpace pg2(int q) {
  switch (q) {
    case 2: return plane_over<PrimeField<2>>();
    case 3: return plane_over<PrimeField<3>>();
    case 4: return plane_over<GF4>();
    case 5: return plane_over<PrimeField<5>>();
    default:
      throw CatalogError(CatalogError::Kind::unsupported_order,
                         "PG(2," + std::to_string(q) + ") is not supported");
  }
}

std::string z7z3_label(int i, int j) { return std::to_string(i) + "_" + std::to_string(j); }

FiniteLinearSpace pg24_z7z3() {
  static constexpr std::array<int, 7> f = {6, 3, 0, 5, 1, 2, 4};
  auto idx = [](int i, int j) { return 7 * (j % 3) + (i % 7); };
  std::vector<PointSet> lines;
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 7; ++i) {
      lines.push_back(PointSet{idx(i, j), idx(i + 1, j), idx(i + 3, j), idx(f[i], j + 1), idx(f[i], j + 2)});
    }
  }
  std::vector<std::string> labels;
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 7; ++i) labels.push_back(z7z3_label(i, j));
  }
  return FiniteLinearSpace::build(21, lines, std::move(labels));
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"MR12",   "MR13",   "MR14_1",  "MR14_2",  "MR15_1",
                                                 "MR15_2", "MR15_3r", "MR15_3g", "MR15_4", "MR15_5"};
  return names;
}

CatalogEntry named(const std::string& name) {
  if (name == "MR13") {
    return {name, make_mr13(), "PG(2,3); green = complete quadrangle and its three diagonal points"};
  }
  if (name == "MR12") {
    return {name, make_mr12(), "MR13 with its first diagonal point removed"};
  }
  if (name == "MR14_1") {
    return {name, pg24_subgeometry(concat(baer(0), baer(1)), baer(0)),
            "PG(2,4) on Baer subplanes {i_0} (green) and {i_1} (red)"};
  }
  if (name == "MR14_2") {
    return {name, pg24_subgeometry(concat(baer(0), kMr14_2Red), baer(0)),
            "PG(2,4) on {i_0} (green) and 2_1 4_1 5_1 6_1 0_2 1_2 3_2 (red)"};
  }
  if (name == "MR15_1") {
    return {name, pg24_subgeometry(concat(concat(baer(0), baer(1)), {"6_2"}), concat(baer(0), {"6_2"})),
            "MR14_1 plus 6_2, coloured green"};
  }
  if (name == "MR15_2") {
    return {name, make_mr15_2(), "MR14_1 plus a green point on its seven 2-lines"};
  }
  if (name == "MR15_3r") {
    return {name, pg24_subgeometry(concat(concat(baer(0), kMr14_2Red), {"4_2"}), baer(0)),
            "MR14_2 plus 4_2, coloured red"};
  }
  if (name == "MR15_3g") {
    return {name, pg24_subgeometry(concat(concat(baer(0), kMr14_2Red), {"4_2"}), concat(baer(0), {"4_2"})),
            "MR14_2 plus 4_2, coloured green"};
  }
  if (name == "MR15_4") {
    return {name, pg24_subgeometry(concat(concat(baer(0), kMr14_2Red), {"3_1"}), baer(0)),
            "MR14_2 plus 3_1, coloured red"};
  }
  if (name == "MR15_5") {
    const auto plane = pg24_z7z3();
    const PointSet removed = label_set(plane, {"0_1", "1_1", "3_1", "6_2", "0_2", "3_2"});
    std::vector<std::string> keep;
    (plane.points() - removed).for_each([&](Point p) { keep.push_back(plane.label(p)); });
    return {name,
            pg24_subgeometry(keep, {"0_0", "1_0", "3_0", "4_0", "5_1", "1_2", "5_2"}),
            "PG(2,4) minus 0_1 1_1 3_1 6_2 (on 6_0 6_2) and 0_2 3_2 (on 6_0 6_1)"};
  }
  throw CatalogError(CatalogError::Kind::unknown_name, "unknown catalog entry '" + name + "'");
}

std::vector<CatalogEntry> full_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& n : catalog_names()) out.push_back(named(n));
  return out;
}

MRGeometry mr14_2_relabelled() {
  // Index order: G R G_1 G_2 G_3 S_1 S_2 S_3 H_1 H_2 H_3 R_1 R_2 R_3.
  const std::vector<std::string> labels = {"G",   "R",   "G_1", "G_2", "G_3", "S_1", "S_2",
                                           "S_3", "H_1", "H_2", "H_3", "R_1", "R_2", "R_3"};
  constexpr Point G = 0, R = 1;
  auto g = [](int i) { return 2 + (i + 2) % 3; };  // i taken mod 3 in 1..3
  auto s = [](int i) { return 5 + (i + 2) % 3; };
  auto h = [](int i) { return 8 + (i + 2) % 3; };
  auto r = [](int i) { return 11 + (i + 2) % 3; };
  std::vector<PointSet> lines = {PointSet{G, r(1), r(2), r(3), R}, PointSet{R, h(1), h(2), h(3)}};
  for (int i = 1; i <= 3; ++i) {
    lines.push_back(PointSet{G, g(i), h(i), s(i)});
    lines.push_back(PointSet{g(i), g(i + 1), h(i - 1), r(i + 1)});
    lines.push_back(PointSet{h(i - 1), r(i - 1), s(i), s(i + 1)});
    lines.push_back(PointSet{R, s(i), g(i - 1)});
    lines.push_back(PointSet{g(i + 1), s(i), r(i)});
    lines.push_back(PointSet{h(i), r(i + 1)});
  }
  auto space = FiniteLinearSpace::build(14, lines, labels);
  const PointSet green{G, g(1), g(2), g(3), h(1), h(2), h(3)};
  return MRGeometry(space, Colouring(14, green));
}

MRGeometry mr15_1_via_mr14_2() {
  return pg24_subgeometry(concat(concat(baer(0), kMr14_2Red), {"6_2"}), baer(0));
}

MRGeometry mr15_1_red_variant() {
  return pg24_subgeometry(concat(concat(baer(0), baer(1)), {"6_2"}), baer(0));
}

MRGeometry quadrilateral_mr(int q, int v) {
  if (q < 2 || q > 5) {
    throw CatalogError(CatalogError::Kind::unsupported_order,
                       "quadrilateral construction needs q in {2,3,4,5}");
  }
  const auto plane = pg2(q);
  const auto& L = plane.lines();
  const int n = plane.num_lines();
  auto concurrent = [&](int i, int j, int k) { return !(L[i] & L[j] & L[k]).empty(); };

  std::array<int, 4> quad{-1, -1, -1, -1};
  for (int i = 0; i < n && quad[0] < 0; ++i) {
    for (int j = i + 1; j < n && quad[0] < 0; ++j) {
      for (int k = j + 1; k < n && quad[0] < 0; ++k) {
        if (concurrent(i, j, k)) continue;
        for (int l = k + 1; l < n; ++l) {
          if (!concurrent(i, j, l) && !concurrent(i, k, l) && !concurrent(j, k, l)) {
            quad = {i, j, k, l};
            break;
          }
        }
      }
    }
  }
  const PointSet l1 = L[quad[0]], l2 = L[quad[1]], l3 = L[quad[2]], l4 = L[quad[3]];
  auto meet = [](PointSet x, PointSet y) { return (x & y).min(); };
  const Point p13 = meet(l1, l3), p14 = meet(l1, l4), p23 = meet(l2, l3), p24 = meet(l2, l4);

  const PointSet sides = l1 | l2 | l3 | l4;
  PointSet green = (l1 | l2) - PointSet{p14, p23};
  const PointSet d1 = plane.line_through(p14, p23) - sides;
  const PointSet d2 = plane.line_through(p13, p24) - sides;
  if (d1.empty()) throw CatalogError(CatalogError::Kind::no_distinct_ab, "no point A available");
  const Point a = d1.min();
  const PointSet b_choices = d2 - PointSet{a};
  if (b_choices.empty()) {
    throw CatalogError(CatalogError::Kind::no_distinct_ab, "points A and B cannot be distinct");
  }
  const Point b = b_choices.min();
  green.insert(a);
  PointSet chosen = sides | PointSet{a, b};

  const int core = chosen.size();
  if (v < core || v > plane.num_points()) {
    throw CatalogError(CatalogError::Kind::out_of_range,
                       "v=" + std::to_string(v) + " outside [" + std::to_string(core) + "," +
                           std::to_string(plane.num_points()) + "]");
  }
  bool next_green = true;
  for (Point p = 0; p < plane.num_points() && chosen.size() < v; ++p) {
    if (chosen.contains(p)) continue;
    chosen.insert(p);
    if (next_green) green.insert(p);
    next_green = !next_green;
  }
  const Colouring full(plane.num_points(), green);
  return MRGeometry(plane.induced(chosen), full.restricted(chosen));
}

bool EmbeddingReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

EmbeddingReport verify_gf4_embedding() {
  using P4 = ProjPoint<GF4>;
  const GF4 O = GF4::zero(), I = GF4::one(), A = GF4::a(), B = GF4::a_plus_one();
  const auto plane = pg24_z7z3();
  const int n = plane.num_points();
  auto pt = [&](const char* name) { return require_label(plane, name); };

  EmbeddingReport rep;
  auto add = [&](std::string name, bool pass, std::string detail) {
    rep.checks.push_back(Check{std::move(name), pass, true, std::move(detail)});
  };

  add("a-is-root-of-x2+x+1", (A * A + A + I).is_zero(), "a^2+a+1 = " + (A * A + A + I).str());

  std::vector<std::optional<P4>> coord(n);
  const std::vector<std::pair<const char*, P4>> given = {
      {"0_0", P4{{O, O, I}}}, {"1_0", P4{{I, O, I}}}, {"5_0", P4{{O, I, I}}}, {"3_0", P4{{I, O, O}}},
      {"4_0", P4{{O, I, O}}}, {"2_0", P4{{I, I, I}}}, {"6_0", P4{{I, I, O}}}, {"2_1", P4{{A, B, I}}},
      {"6_1", P4{{A, O, I}}}, {"4_1", P4{{B, B, I}}}};
  for (const auto& [name, c] : given) coord[pt(name)] = c;
  auto c = [&](const char* name) { return *coord[pt(name)]; };

  // The two collinearities that pin down 2_0 once the frame is fixed.
  {
    const bool combinatorial = plane.line_through(pt("1_0"), pt("2_0")).contains(pt("4_0")) &&
                               plane.line_through(pt("2_0"), pt("3_0")).contains(pt("5_0"));
    const P4 forced = join(join(c("1_0"), c("4_0")), join(c("3_0"), c("5_0")));
    add("2_0-forced-by-1_0-2_0-4_0-and-2_0-3_0-5_0", combinatorial && forced.same_point(c("2_0")),
        "meet = " + forced.normalized().str());
  }

  // 6_0 on 0_0 2_0 and on 1_0 5_0, both at infinity: [1,1,0] and [1,-1,0] coincide only in characteristic 2.
  {
    const P4 infinity = join(c("3_0"), c("4_0"));
    const P4 via02 = join(join(c("0_0"), c("2_0")), infinity);
    const P4 via15 = join(join(c("1_0"), c("5_0")), infinity);
    using P3 = ProjPoint<PrimeField<3>>;
    using F3 = PrimeField<3>;
    const F3 o(0), i(1);
    const P3 inf3 = join(P3{{i, o, o}}, P3{{o, i, o}});
    const P3 t02 = join(join(P3{{o, o, i}}, P3{{i, i, i}}), inf3);
    const P3 t15 = join(join(P3{{i, o, i}}, P3{{o, i, i}}), inf3);
    add("characteristic-2-forced", via02.same_point(via15) && !t02.same_point(t15),
        "GF(4): " + via02.normalized().str() + " = " + via15.normalized().str() + "; GF(3): " +
            t02.normalized().str() + " != " + t15.normalized().str());
  }

  // Every line of the model must be collinear on the prescribed points.
  {
    bool ok = true;
    std::string detail = "all lines consistent";
    for (PointSet l : plane.lines()) {
      std::vector<P4> known;
      l.for_each([&](Point p) {
        if (coord[p]) known.push_back(*coord[p]);
      });
      for (std::size_t k = 2; k < known.size(); ++k) {
        if (!collinear(known[0], known[1], known[k])) {
          ok = false;
          detail = "line " + format_points(plane, l) + " not collinear";
        }
      }
    }
    add("prescribed-coordinates-respect-collinearity", ok, detail);
  }

  // Extend to all 21 points by intersecting coordinate lines through known points.
  bool progress = true;
  while (progress) {
    progress = false;
    for (Point p = 0; p < n; ++p) {
      if (coord[p]) continue;
      std::vector<P4> through;
      for (LineId id : plane.lines_through(p)) {
        std::vector<P4> known;
        plane.line(id).for_each([&](Point x) {
          if (coord[x]) known.push_back(*coord[x]);
        });
        if (known.size() >= 2) through.push_back(join(known[0], known[1]));
      }
      if (through.size() >= 2) {
        coord[p] = join(through[0], through[1]).normalized();
        progress = true;
      }
    }
  }
  const bool complete = std::all_of(coord.begin(), coord.end(), [](const auto& x) { return x.has_value(); });
  add("all-21-points-determined", complete, complete ? "ok" : "some points undetermined");
  if (!complete) return rep;
  for (const auto& x : coord) rep.coordinates.push_back(x->normalized());

  {
    std::set<std::string> distinct;
    for (const auto& x : rep.coordinates) distinct.insert(x.str());
    add("coordinates-bijective", distinct.size() == 21u, std::to_string(distinct.size()) + " distinct points");
  }
  {
    bool ok = true;
    for (PointSet l : plane.lines()) {
      const auto pts = l.to_vector();
      for (std::size_t k = 2; k < pts.size(); ++k) {
        ok = ok && collinear(rep.coordinates[pts[0]], rep.coordinates[pts[1]], rep.coordinates[pts[k]]);
      }
    }
    add("every-line-collinear-in-coordinates", ok, ok ? "21 lines" : "a line is not collinear");
  }
  const auto target = pg2(4);
  {
    Isomorphism f;
    for (const auto& x : rep.coordinates) f.image.push_back(target.find_label(x.str()));
    const bool ok = std::none_of(f.image.begin(), f.image.end(), [](Point p) { return p < 0; }) &&
                    is_isomorphism(plane, target, f);
    add("coordinate-map-is-collineation-onto-pg2(4)", ok, ok ? "ok" : "failed");
  }
  add("pg24-model-isomorphic-to-pg2(4)", isomorphic(plane, target), "backtracking search");

  {
    const P4 l2 = join(c("2_0"), c("2_1"));
    const P4 l4 = join(c("4_0"), c("4_1"));
    const P4 l6 = join(c("6_0"), c("6_1"));
    const P4 m24 = join(l2, l4).normalized();
    const P4 m26 = join(l2, l6).normalized();
    const P4 m46 = join(l4, l6).normalized();
    const bool distinct = !(m24 == m26) && !(m24 == m46) && !(m26 == m46);
    add("lines-2_0-2_1-4_0-4_1-6_0-6_1-not-concurrent", distinct,
        "pairwise meets " + m24.str() + " " + m26.str() + " " + m46.str());
  }
  return rep;
}

}  // namespace fls
