#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace fls {

using Point = int;

/// Largest number of points a space may have. Points are bits of a 64-bit word.
inline constexpr int kMaxPoints = 64;

/// A set of points stored as a bitmap.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}
  PointSet(std::initializer_list<Point> points) {
    for (Point p : points) insert(p);
  }
  static PointSet from(const std::vector<Point>& points) {
    PointSet s;
    for (Point p : points) s.insert(p);
    return s;
  }
  /// The set {0, 1, ..., v-1}.
  static constexpr PointSet first(int v) {
    return PointSet(v >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Point p) const { return (bits_ >> p) & 1U; }
  constexpr void insert(Point p) { bits_ |= std::uint64_t{1} << p; }
  constexpr void erase(Point p) { bits_ &= ~(std::uint64_t{1} << p); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr Point min() const { return std::countr_zero(bits_); }

  constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
  constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
  constexpr PointSet operator^(PointSet o) const { return PointSet(bits_ ^ o.bits_); }
  /// Set difference.
  constexpr PointSet operator-(PointSet o) const { return PointSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const PointSet&) const = default;

  constexpr bool intersects(PointSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<Point> to_vector() const {
    std::vector<Point> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Point>(std::countr_zero(b)));
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted point lists of two sets.
constexpr bool lex_less(PointSet a, PointSet b) {
  if (a == b) return false;
  const Point d = (a ^ b).min();
  const bool in_a = a.contains(d);
  const PointSet other = in_a ? b : a;
  const bool other_continues = (other.bits() >> d) >> 1 != 0;
  // The set holding the first difference wins unless the other set is a prefix of it.
  return in_a == other_continues;
}

struct LexLess {
  constexpr bool operator()(PointSet a, PointSet b) const { return lex_less(a, b); }
};

}  // namespace fls
