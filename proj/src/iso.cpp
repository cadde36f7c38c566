#include "fls/iso.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace fls {

Isomorphism Isomorphism::after(const Isomorphism& first) const {
  Isomorphism out;
  out.image.resize(first.image.size());
  for (std::size_t p = 0; p < first.image.size(); ++p) out.image[p] = image[first.image[p]];
  return out;
}

Isomorphism Isomorphism::inverse() const {
  Isomorphism out;
  out.image.resize(image.size());
  for (std::size_t p = 0; p < image.size(); ++p) out.image[image[p]] = static_cast<Point>(p);
  return out;
}

bool Isomorphism::is_identity() const {
  for (std::size_t p = 0; p < image.size(); ++p) {
    if (image[p] != static_cast<Point>(p)) return false;
  }
  return true;
}

bool Isomorphism::is_even() const {
  std::vector<char> seen(image.size(), 0);
  std::size_t transpositions = 0;
  for (std::size_t p = 0; p < image.size(); ++p) {
    if (seen[p]) continue;
    std::size_t len = 0;
    for (std::size_t q = p; !seen[q]; q = image[q]) {
      seen[q] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

bool is_isomorphism(const FiniteLinearSpace& a, const FiniteLinearSpace& b, const Isomorphism& f) {
  if (a.num_points() != b.num_points() || a.num_lines() != b.num_lines()) return false;
  if (static_cast<int>(f.image.size()) != a.num_points()) return false;
  if (f.apply(a.points()) != b.points()) return false;
  std::unordered_set<std::uint64_t> lines_b;
  for (PointSet l : b.lines()) lines_b.insert(l.bits());
  return std::all_of(a.lines().begin(), a.lines().end(),
                     [&](PointSet l) { return lines_b.count(f.apply(l).bits()) != 0; });
}

namespace {

using Key = std::vector<int>;

// Colour (2 = uncoloured), degree, sorted line sizes, sorted line colour profiles.
Key point_key(const FiniteLinearSpace& s, const PointSet* green, Point p) {
  Key k;
  k.push_back(green ? (green->contains(p) ? 0 : 1) : 2);
  k.push_back(s.degree(p));
  std::vector<int> sizes;
  std::vector<int> profiles;
  for (LineId id : s.lines_through(p)) {
    const PointSet l = s.line(id);
    sizes.push_back(l.size());
    if (green) profiles.push_back((l & *green).size() * 64 + (l - *green).size());
  }
  std::sort(sizes.begin(), sizes.end());
  std::sort(profiles.begin(), profiles.end());
  k.insert(k.end(), sizes.begin(), sizes.end());
  k.push_back(-1);
  k.insert(k.end(), profiles.begin(), profiles.end());
  return k;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteLinearSpace& a, const FiniteLinearSpace& b, std::optional<PointSet> green_a,
            std::optional<PointSet> green_b, bool all)
      : a_(a), b_(b), all_(all) {
    v_ = a.num_points();
    if (v_ != b.num_points() || a.num_lines() != b.num_lines()) {
      feasible_ = false;
      return;
    }
    std::map<Key, int> classes;
    class_a_.resize(v_);
    class_b_.resize(v_);
    auto class_of = [&](const Key& k) {
      auto it = classes.find(k);
      if (it == classes.end()) it = classes.emplace(k, static_cast<int>(classes.size())).first;
      return it->second;
    };
    for (Point p = 0; p < v_; ++p) {
      class_a_[p] = class_of(point_key(a, green_a ? &*green_a : nullptr, p));
    }
    for (Point p = 0; p < v_; ++p) {
      class_b_[p] = class_of(point_key(b, green_b ? &*green_b : nullptr, p));
    }
    std::vector<int> ca = class_a_, cb = class_b_;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) {
      feasible_ = false;
      return;
    }
    class_size_.assign(classes.size(), 0);
    for (int c : class_a_) ++class_size_[c];
    build_order();
    image_.assign(v_, -1);
    line_a_to_b_.assign(a.num_lines(), -1);
    line_b_to_a_.assign(b.num_lines(), -1);
  }

  std::vector<Isomorphism> run() {
    if (feasible_) extend(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // Next point: the one on the most lines already spanned by two assigned points,
  // then the smallest invariant class, then the lowest index.
  void build_order() {
    std::vector<char> placed(v_, 0);
    PointSet assigned;
    for (int step = 0; step < v_; ++step) {
      Point best = -1;
      std::tuple<int, int, int> best_score{};
      for (Point p = 0; p < v_; ++p) {
        if (placed[p]) continue;
        int spanned = 0;
        for (LineId id : a_.lines_through(p)) {
          if ((a_.line(id) & assigned).size() >= 2) ++spanned;
        }
        const int touching = [&] {
          int t = 0;
          for (LineId id : a_.lines_through(p)) t += (a_.line(id) & assigned).size();
          return t;
        }();
        std::tuple<int, int, int> score{spanned, touching, -class_size_[class_a_[p]]};
        if (best < 0 || score > best_score) {
          best = p;
          best_score = score;
        }
      }
      placed[best] = 1;
      assigned.insert(best);
      order_.push_back(best);
    }
  }

  bool assign(int depth, Point x, Point y, std::vector<LineId>& undo) {
    for (int i = 0; i < depth; ++i) {
      const Point u = order_[i];
      const LineId la = a_.line_id_unchecked(x, u);
      const LineId lb = b_.line_id_unchecked(y, image_[u]);
      if (line_a_to_b_[la] == lb) continue;
      if (line_a_to_b_[la] != -1 || line_b_to_a_[lb] != -1) return false;
      if (a_.line(la).size() != b_.line(lb).size()) return false;
      line_a_to_b_[la] = lb;
      line_b_to_a_[lb] = la;
      undo.push_back(la);
    }
    return true;
  }

  void extend(int depth) {
    if (depth == v_) {
      found_.push_back(Isomorphism{image_});
      return;
    }
    const Point x = order_[depth];
    for (Point y = 0; y < v_; ++y) {
      if (!all_ && !found_.empty()) return;
      if (used_b_.contains(y) || class_b_[y] != class_a_[x]) continue;
      std::vector<LineId> undo;
      if (assign(depth, x, y, undo)) {
        image_[x] = y;
        used_b_.insert(y);
        extend(depth + 1);
        used_b_.erase(y);
        image_[x] = -1;
      }
      for (LineId la : undo) {
        line_b_to_a_[line_a_to_b_[la]] = -1;
        line_a_to_b_[la] = -1;
      }
    }
  }

  const FiniteLinearSpace& a_;
  const FiniteLinearSpace& b_;
  bool all_;
  bool feasible_ = true;
  int v_ = 0;
  std::vector<int> class_a_, class_b_, class_size_;
  std::vector<Point> order_;
  std::vector<Point> image_;
  PointSet used_b_;
  std::vector<LineId> line_a_to_b_, line_b_to_a_;
  std::vector<Isomorphism> found_;
};

}  // namespace

std::vector<Isomorphism> find_isomorphisms(const FiniteLinearSpace& a, const FiniteLinearSpace& b,
                                           SearchMode mode) {
  return IsoSearch(a, b, std::nullopt, std::nullopt, mode == SearchMode::all).run();
}

std::vector<Isomorphism> find_isomorphisms(const MRGeometry& a, const MRGeometry& b, SearchMode mode,
                                           ColourRule rule) {
  const bool all = mode == SearchMode::all;
  if (rule == ColourRule::ignore) return find_isomorphisms(a.space(), b.space(), mode);
  auto out = IsoSearch(a.space(), b.space(), a.colouring().green(), b.colouring().green(), all).run();
  if (rule == ColourRule::preserve || (!all && !out.empty())) return out;
  auto swapped = IsoSearch(a.space(), b.space(), a.colouring().green(), b.colouring().red(), all).run();
  out.insert(out.end(), swapped.begin(), swapped.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool isomorphic(const FiniteLinearSpace& a, const FiniteLinearSpace& b) {
  return !find_isomorphisms(a, b).empty();
}

bool mr_isomorphic(const MRGeometry& a, const MRGeometry& b) {
  return !find_isomorphisms(a, b).empty();
}

std::vector<Isomorphism> automorphisms(const FiniteLinearSpace& s) {
  return find_isomorphisms(s, s, SearchMode::all);
}

std::vector<Isomorphism> automorphisms(const MRGeometry& mr, ColourRule rule) {
  return find_isomorphisms(mr, mr, SearchMode::all, rule);
}

std::uint64_t invariant_hash(const FiniteLinearSpace& s) {
  std::vector<Key> keys;
  for (Point p = 0; p < s.num_points(); ++p) keys.push_back(point_key(s, nullptr, p));
  std::sort(keys.begin(), keys.end());
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(static_cast<std::uint64_t>(s.num_points()));
  for (const Key& k : keys) {
    for (int x : k) mix(static_cast<std::uint64_t>(x + 1000));
    mix(7);
  }
  return h;
}

PointSet orbit_minimum(PointSet set, const std::vector<Isomorphism>& group, PointSet universe,
                       bool with_complement) {
  PointSet best = set;
  for (const auto& g : group) {
    const PointSet img = g.apply(set);
    if (lex_less(img, best)) best = img;
    if (with_complement) {
      const PointSet comp = universe - img;
      if (lex_less(comp, best)) best = comp;
    }
  }
  return best;
}

BlockingSetOrbits essentially_different_blocking_sets(const FiniteLinearSpace& s) {
  BlockingSetOrbits out;
  const auto sets = blocking_sets(s);
  out.total = sets.size();
  if (sets.empty()) return out;
  const auto group = automorphisms(s);
  const PointSet all = s.points();
  std::unordered_set<std::uint64_t> seen;
  for (PointSet b : sets) {
    if (seen.count(b.bits())) continue;
    PointSet best = b;
    for (const auto& g : group) {
      const PointSet img = g.apply(b);
      const PointSet comp = all - img;
      seen.insert(img.bits());
      seen.insert(comp.bits());
      if (lex_less(img, best)) best = img;
      if (lex_less(comp, best)) best = comp;
    }
    out.representatives.push_back(best);
  }
  std::sort(out.representatives.begin(), out.representatives.end(), LexLess{});
  return out;
}

}  // namespace fls
