#include "fls/coloring.hpp"

#include <algorithm>
#include <sstream>

namespace fls {

Colouring Colouring::restricted(PointSet subset) const {
  PointSet g;
  int i = 0;
  subset.for_each([&](Point p) {
    if (green_.contains(p)) g.insert(i);
    ++i;
  });
  return Colouring(i, g);
}

Colouring Colouring::with_point(Colour c) const {
  PointSet g = green_;
  if (c == Colour::green) g.insert(v_);
  return Colouring(v_ + 1, g);
}

bool is_proper(const FiniteLinearSpace& space, const Colouring& colouring) {
  const PointSet green = colouring.green();
  const PointSet red = colouring.red();
  return std::all_of(space.lines().begin(), space.lines().end(),
                     [&](PointSet l) { return l.intersects(green) && l.intersects(red); });
}

MRGeometry::MRGeometry(FiniteLinearSpace space, Colouring colouring)
    : space_(std::move(space)), colouring_(colouring) {
  if (colouring_.num_points() != space_.num_points()) {
    throw NotProperError("colouring size does not match the space");
  }
  if (!is_proper(space_, colouring_)) throw NotProperError("colouring has a monochromatic line");
}

std::pair<int, int> MRGeometry::profile(LineId id) const {
  const PointSet l = space_.line(id);
  return {(l & colouring_.green()).size(), (l & colouring_.red()).size()};
}

std::string NType::str() const {
  std::ostringstream os;
  os << '[';
  for (const auto& l : profiles) os << '(' << l.green << ',' << l.red << ')';
  os << ']';
  return os.str();
}

NType ntype(const MRGeometry& mr, Point p) {
  NType t;
  for (LineId id : mr.space().lines_through(p)) {
    const auto [g, r] = mr.profile(id);
    t.profiles.push_back({g, r});
  }
  std::sort(t.profiles.begin(), t.profiles.end());
  return t;
}

Rational weight(const MRGeometry& mr, Point p) {
  const bool green = mr.colour(p) == Colour::green;
  Rational w;
  for (LineId id : mr.space().lines_through(p)) {
    const auto [g, r] = mr.profile(id);
    w += green ? Rational(choose2(r), g) : Rational(choose2(g), r);
  }
  return w;
}

WeightSumReport weight_sum_identity(const MRGeometry& mr) {
  WeightSumReport rep;
  for (Point p = 0; p < mr.num_points(); ++p) {
    (mr.colour(p) == Colour::green ? rep.green_sum : rep.red_sum) += weight(mr, p);
  }
  rep.expected_green = choose2(mr.red_count());
  rep.expected_red = choose2(mr.green_count());
  rep.ok = rep.green_sum == Rational(rep.expected_green) && rep.red_sum == Rational(rep.expected_red);
  return rep;
}

bool is_minimal(const MRGeometry& mr) {
  const auto& s = mr.space();
  const PointSet all = s.points();
  const PointSet green = mr.colouring().green();
  const PointSet red = mr.colouring().red();
  for (Point p = 0; p < s.num_points(); ++p) {
    const PointSet rest = all - PointSet{p};
    const bool collinear = std::any_of(s.lines().begin(), s.lines().end(),
                                       [&](PointSet l) { return rest.subset_of(l); });
    if (collinear) continue;
    bool proper = true;
    for (PointSet l : s.lines()) {
      const PointSet r = l - PointSet{p};
      if (r.size() < 2) continue;
      if (!r.intersects(green) || !r.intersects(red)) {
        proper = false;
        break;
      }
    }
    if (proper) return false;
  }
  return true;
}

bool LemmaReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* LemmaReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

void fail(Check& c, const std::string& why) {
  if (c.pass) c.detail = why;
  c.pass = false;
}

// Neighbourhood inequality for points of colour `c`. On every line through such a
// point P with x points of colour c and y of the other, t lines through P other
// than that line carry >= 2 points of colour c; require t >= 2 and
// t*y <= (t-1)*(n_c - x).
void neighbourhood(const MRGeometry& mr, Colour c, Check& check) {
  const auto& s = mr.space();
  const int total = mr.count(c);
  for (Point p = 0; p < s.num_points(); ++p) {
    if (mr.colour(p) != c) continue;
    for (LineId l : s.lines_through(p)) {
      const auto [lg, lr] = mr.profile(l);
      const int x = c == Colour::green ? lg : lr;
      const int y = c == Colour::green ? lr : lg;
      int t = 0;
      for (LineId m : s.lines_through(p)) {
        if (m == l) continue;
        const auto [mg, mrd] = mr.profile(m);
        if ((c == Colour::green ? mg : mrd) >= 2) ++t;
      }
      if (t < 2 || t * y > (t - 1) * (total - x)) {
        fail(check, std::string(to_string(c)) + " point " + s.label(p) + " on " +
                        format_points(s, s.line(l)) + ": t=" + std::to_string(t) +
                        " y=" + std::to_string(y) + " x=" + std::to_string(x));
      }
    }
  }
}

}  // namespace

LemmaReport lemma_checks(const MRGeometry& mr) {
  const auto& s = mr.space();
  const int v = s.num_points();
  const int g = mr.green_count();
  const int r = mr.red_count();
  const PointSet green = mr.colouring().green();
  const PointSet red = mr.colouring().red();
  LemmaReport rep;

  Check deg{"degree-at-least-4", true, true, ""};
  for (Point p = 0; p < v; ++p) {
    if (s.degree(p) < 4) fail(deg, "point " + s.label(p) + " has degree " + std::to_string(s.degree(p)));
  }
  rep.checks.push_back(deg);

  Check six{"six-of-each-colour", true, true, ""};
  if (g < 6 || r < 6) fail(six, "g=" + std::to_string(g) + " r=" + std::to_string(r));
  rep.checks.push_back(six);

  Check off{"three-of-each-colour-off-every-line", true, true, ""};
  for (PointSet l : s.lines()) {
    if ((green - l).size() < 3 || (red - l).size() < 3) fail(off, "line " + format_points(s, l));
  }
  rep.checks.push_back(off);

  Check nb{"neighbourhood-inequality", true, true, ""};
  neighbourhood(mr, Colour::green, nb);
  neighbourhood(mr, Colour::red, nb);
  rep.checks.push_back(nb);

  Check grid{"grid-bound", true, true, ""};
  for (Point p = 0; p < v; ++p) {
    for (Point q = p + 1; q < v; ++q) {
      const GridProfile gp = s.grid_profile(p, q);
      if (gp.off_line_count > gp.capacity) {
        fail(grid, "pair " + s.label(p) + "," + s.label(q));
      }
    }
  }
  rep.checks.push_back(grid);

  Check minimal{"minimal-structure", true, true, ""};
  if (!is_minimal(mr)) {
    minimal.applicable = false;
    minimal.detail = "not minimal";
  } else {
    for (Point p = 0; p < v; ++p) {
      const Colour c = mr.colour(p);
      const int other = c == Colour::green ? r : g;
      const PointSet same = c == Colour::green ? green : red;
      bool lonely_line = false;  // a line whose only point of colour c is p, with >= 2 others
      for (LineId id : s.lines_through(p)) {
        const PointSet l = s.line(id);
        if ((l & same).size() == 1 && (l - same).size() >= 2) lonely_line = true;
      }
      if (!lonely_line) fail(minimal, s.label(p) + " lies on no [1,b]-line with b>=2");
      if (s.degree(p) > other - 1) fail(minimal, s.label(p) + " has degree above the opposite class size minus one");
    }
    const int cap = std::min(g, r) - 1;
    for (PointSet l : s.lines()) {
      if (l.size() > cap) fail(minimal, "line " + format_points(s, l) + " too long");
    }
  }
  rep.checks.push_back(minimal);

  Check sixbound{"six-class-bounds-v-by-13", true, true, ""};
  if ((g == 6 || r == 6) && v > 13) fail(sixbound, "a colour class has 6 points but v=" + std::to_string(v));
  rep.checks.push_back(sixbound);

  return rep;
}

// ---------------------------------------------------------------------------
// Blocking-set search: assign points in/out of B, propagating lines with one
// undecided point whose decided points all agree.

namespace {

struct SearchState {
  PointSet decided;
  PointSet in;
};

// Returns false on a contradiction (a fully decided monochromatic line).
bool propagate(const std::vector<PointSet>& lines, SearchState& st) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (PointSet l : lines) {
      const PointSet open = l - st.decided;
      const PointSet in = l & st.in;
      const PointSet out = (l & st.decided) - st.in;
      if (open.empty()) {
        if (in.empty() || out.empty()) return false;
      } else if (open.size() == 1) {
        const Point p = open.min();
        if (in.empty()) {
          st.decided.insert(p);
          st.in.insert(p);
          changed = true;
        } else if (out.empty()) {
          st.decided.insert(p);
          changed = true;
        }
      }
    }
  }
  return true;
}

class BlockingSearch {
 public:
  BlockingSearch(const FiniteLinearSpace& s, std::optional<std::size_t> limit)
      : lines_(s.lines()), all_(s.points()), limit_(limit) {}

  void run(SearchState st) {
    if (done()) return;
    if (!propagate(lines_, st)) return;
    const PointSet open = all_ - st.decided;
    if (open.empty()) {
      found_.push_back(st.in);
      return;
    }
    const Point p = open.min();
    SearchState a = st;
    a.decided.insert(p);
    a.in.insert(p);
    run(a);
    SearchState b = st;
    b.decided.insert(p);
    run(b);
  }

  std::vector<PointSet> take() { return std::move(found_); }

 private:
  bool done() const { return limit_ && found_.size() >= *limit_; }

  const std::vector<PointSet>& lines_;
  PointSet all_;
  std::optional<std::size_t> limit_;
  std::vector<PointSet> found_;
};

void sort_sets(std::vector<PointSet>& v) { std::sort(v.begin(), v.end(), LexLess{}); }

}  // namespace

std::vector<PointSet> blocking_sets_serial(const FiniteLinearSpace& space) {
  BlockingSearch search(space, std::nullopt);
  search.run({});
  auto out = search.take();
  sort_sets(out);
  return out;
}

std::vector<PointSet> blocking_sets_parallel(const FiniteLinearSpace& space, int split_depth) {
  const int depth = std::clamp(split_depth, 0, std::min(space.num_points(), 20));
  const long tasks = 1L << depth;
  std::vector<std::vector<PointSet>> partial(tasks);
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < tasks; ++t) {
    SearchState st;
    st.decided = PointSet::first(depth);
    st.in = PointSet(static_cast<std::uint64_t>(t));
    BlockingSearch search(space, std::nullopt);
    search.run(st);
    partial[t] = search.take();
  }
  std::vector<PointSet> out;
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  sort_sets(out);
  return out;
}

std::vector<PointSet> blocking_sets(const FiniteLinearSpace& space, std::optional<std::size_t> limit) {
  if (limit) {
    BlockingSearch search(space, limit);
    search.run({});
    auto out = search.take();
    sort_sets(out);
    return out;
  }
  return blocking_sets_parallel(space);
}

}  // namespace fls
