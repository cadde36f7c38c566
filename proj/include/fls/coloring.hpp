#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fls/incidence.hpp"
#include "fls/rational.hpp"

namespace fls {

enum class Colour : std::uint8_t { green, red };

inline Colour opposite(Colour c) { return c == Colour::green ? Colour::red : Colour::green; }
inline const char* to_string(Colour c) { return c == Colour::green ? "green" : "red"; }

/// Total red/green assignment on points 0..v-1, stored as the green class.
class Colouring {
 public:
  Colouring() = default;
  Colouring(int v, PointSet green) : v_(v), green_(green & PointSet::first(v)) {}

  int num_points() const { return v_; }
  PointSet green() const { return green_; }
  PointSet red() const { return PointSet::first(v_) - green_; }
  PointSet of(Colour c) const { return c == Colour::green ? green() : red(); }
  Colour at(Point p) const { return green_.contains(p) ? Colour::green : Colour::red; }
  int green_count() const { return green_.size(); }
  int red_count() const { return v_ - green_.size(); }

  /// The colouring with green and red exchanged.
  Colouring swapped() const { return Colouring(v_, red()); }
  /// Restriction to a subset, renumbered as FiniteLinearSpace::induced does.
  Colouring restricted(PointSet subset) const;
  /// Colouring of v+1 points: this one plus point v coloured c.
  Colouring with_point(Colour c) const;

  bool operator==(const Colouring&) const = default;

 private:
  int v_ = 0;
  PointSet green_;
};

/// True iff no line of the space is monochromatic.
bool is_proper(const FiniteLinearSpace& space, const Colouring& colouring);

class NotProperError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A properly 2-coloured finite linear space.
class MRGeometry {
 public:
  /// Throws NotProperError if some line is monochromatic.
  MRGeometry(FiniteLinearSpace space, Colouring colouring);

  const FiniteLinearSpace& space() const { return space_; }
  const Colouring& colouring() const { return colouring_; }
  int num_points() const { return space_.num_points(); }
  int green_count() const { return colouring_.green_count(); }
  int red_count() const { return colouring_.red_count(); }
  Colour colour(Point p) const { return colouring_.at(p); }
  int count(Colour c) const { return c == Colour::green ? green_count() : red_count(); }

  /// (green, red) counts on a line.
  std::pair<int, int> profile(LineId id) const;

 private:
  FiniteLinearSpace space_;
  Colouring colouring_;
};

/// Numbers of green and red points on one line.
struct LineProfile {
  int green = 0;
  int red = 0;
  auto operator<=>(const LineProfile&) const = default;
};

/// Neighbourhood type of a point: one profile per line through it, sorted.
struct NType {
  std::vector<LineProfile> profiles;
  bool operator==(const NType&) const = default;
  std::string str() const;
};

NType ntype(const MRGeometry& mr, Point p);

/// Green P: sum over lines through P of C(r,2)/g. Red P: sum of C(g,2)/r.
Rational weight(const MRGeometry& mr, Point p);

struct WeightSumReport {
  Rational green_sum;
  Rational red_sum;
  std::int64_t expected_green = 0;  // C(r(S), 2)
  std::int64_t expected_red = 0;    // C(g(S), 2)
  bool ok = false;
};

WeightSumReport weight_sum_identity(const MRGeometry& mr);

/// True iff no single-point deletion leaves a non-collinear, properly coloured space.
bool is_minimal(const MRGeometry& mr);

struct Check {
  std::string name;
  bool pass = true;
  bool applicable = true;
  std::string detail;
};

struct LemmaReport {
  std::vector<Check> checks;
  bool all_pass() const;
  const Check* find(const std::string& name) const;
};

/// Evaluates the structural necessary conditions every MR geometry satisfies:
/// degree >= 4, six points of each colour and three of each off every line,
/// the neighbourhood inequality, the grid bound, the minimal-case restrictions
/// (when minimal), and the six-points-bounds-v-by-13 rule.
LemmaReport lemma_checks(const MRGeometry& mr);

/// All blocking sets of the space, in lexicographic order. A blocking set and
/// its complement are both reported. With a limit, the search stops after that
/// many sets (in search order) and the result is then sorted.
std::vector<PointSet> blocking_sets(const FiniteLinearSpace& space,
                                    std::optional<std::size_t> limit = std::nullopt);

/// Single-threaded reference search, same output as blocking_sets without a limit.
std::vector<PointSet> blocking_sets_serial(const FiniteLinearSpace& space);

/// Branch-parallel search (OpenMP) over a fixed prefix of the decision tree.
std::vector<PointSet> blocking_sets_parallel(const FiniteLinearSpace& space, int split_depth = 8);

}  // namespace fls
