#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fls {

/// GF(4) = {0, 1, a, a+1} with a^2 + a + 1 = 0. Elements are 2-bit codes
/// (bit 1 = coefficient of a); addition is XOR.
class GF4 {
 public:
  static constexpr int order = 4;

  constexpr GF4() = default;
  constexpr explicit GF4(std::uint8_t code) : code_(code & 3U) {}
  static constexpr GF4 zero() { return GF4(0); }
  static constexpr GF4 one() { return GF4(1); }
  static constexpr GF4 a() { return GF4(2); }
  static constexpr GF4 a_plus_one() { return GF4(3); }

  constexpr std::uint8_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  constexpr GF4 operator+(GF4 o) const { return GF4(code_ ^ o.code_); }
  constexpr GF4 operator-(GF4 o) const { return *this + o; }
  constexpr GF4 operator-() const { return *this; }
  constexpr GF4 operator*(GF4 o) const { return GF4(kMul[code_][o.code_]); }
  constexpr GF4 inverse() const {
    if (code_ == 0) throw std::domain_error("inverse of zero");
    return GF4(kInv[code_]);
  }
  constexpr bool operator==(const GF4&) const = default;

  std::string str() const {
    static constexpr const char* kNames[] = {"0", "1", "a", "b"};
    return kNames[code_];
  }

  static constexpr std::array<GF4, 4> elements() { return {GF4(0), GF4(1), GF4(2), GF4(3)}; }

 private:
  static constexpr std::uint8_t kMul[4][4] = {
      {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  static constexpr std::uint8_t kInv[4] = {0, 1, 3, 2};
  std::uint8_t code_ = 0;
};

/// Integers modulo a prime P.
template <int P>
class PrimeField {
 public:
  static constexpr int order = P;

  constexpr PrimeField() = default;
  constexpr explicit PrimeField(int x) : x_(static_cast<std::uint8_t>(((x % P) + P) % P)) {}
  static constexpr PrimeField zero() { return PrimeField(0); }
  static constexpr PrimeField one() { return PrimeField(1); }

  constexpr int value() const { return x_; }
  constexpr bool is_zero() const { return x_ == 0; }
  constexpr PrimeField operator+(PrimeField o) const { return PrimeField(x_ + o.x_); }
  constexpr PrimeField operator-(PrimeField o) const { return PrimeField(x_ - o.x_); }
  constexpr PrimeField operator-() const { return PrimeField(-x_); }
  constexpr PrimeField operator*(PrimeField o) const { return PrimeField(x_ * o.x_); }
  constexpr PrimeField inverse() const {
    if (x_ == 0) throw std::domain_error("inverse of zero");
    for (int y = 1; y < P; ++y) {
      if ((x_ * y) % P == 1) return PrimeField(y);
    }
    return PrimeField(0);
  }
  constexpr bool operator==(const PrimeField&) const = default;

  std::string str() const { return std::to_string(x_); }

  static std::vector<PrimeField> elements() {
    std::vector<PrimeField> out;
    for (int i = 0; i < P; ++i) out.emplace_back(i);
    return out;
  }

 private:
  std::uint8_t x_ = 0;
};

/// Homogeneous coordinates in the projective plane over field F.
template <class F>
struct ProjPoint {
  std::array<F, 3> c{};

  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

  /// Scales so the last nonzero coordinate is 1.
  ProjPoint normalized() const {
    for (int i = 2; i >= 0; --i) {
      if (!c[i].is_zero()) {
        const F s = c[i].inverse();
        return ProjPoint{{c[0] * s, c[1] * s, c[2] * s}};
      }
    }
    throw std::domain_error("zero vector is not a projective point");
  }

  bool same_point(const ProjPoint& o) const { return normalized() == o.normalized(); }
  bool operator==(const ProjPoint&) const = default;

  std::string str() const {
    return "[" + c[0].str() + "," + c[1].str() + "," + c[2].str() + "]";
  }
};

/// Cross product: the line through two points, or the meet of two lines.
template <class F>
ProjPoint<F> join(const ProjPoint<F>& u, const ProjPoint<F>& v) {
  return ProjPoint<F>{{u.c[1] * v.c[2] - u.c[2] * v.c[1], u.c[2] * v.c[0] - u.c[0] * v.c[2],
                       u.c[0] * v.c[1] - u.c[1] * v.c[0]}};
}

template <class F>
F dot(const ProjPoint<F>& u, const ProjPoint<F>& v) {
  return u.c[0] * v.c[0] + u.c[1] * v.c[1] + u.c[2] * v.c[2];
}

template <class F>
bool collinear(const ProjPoint<F>& a, const ProjPoint<F>& b, const ProjPoint<F>& c) {
  return dot(join(a, b), c).is_zero();
}

/// All normalized points of the projective plane over F, in a fixed order.
template <class F>
std::vector<ProjPoint<F>> projective_points() {
  std::vector<ProjPoint<F>> out;
  const auto elems = F::elements();
  // [x,y,1], then [x,1,0], then [1,0,0].
  for (const F& y : elems) {
    for (const F& x : elems) out.push_back({{x, y, F::one()}});
  }
  for (const F& x : elems) out.push_back({{x, F::one(), F::zero()}});
  out.push_back({{F::one(), F::zero(), F::zero()}});
  return out;
}

}  // namespace fls
