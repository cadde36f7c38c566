#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fls {

/// Exact fraction with a positive denominator, always in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  constexpr Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw std::domain_error("zero denominator");
    normalize();
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  constexpr Rational operator+(const Rational& o) const {
    const std::int64_t g = std::gcd(den_, o.den_);
    return Rational(num_ * (o.den_ / g) + o.num_ * (den_ / g), den_ / g * o.den_);
  }
  constexpr Rational operator-(const Rational& o) const { return *this + Rational(-o.num_, o.den_); }
  constexpr Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  constexpr Rational& operator+=(const Rational& o) { return *this = *this + o; }

  constexpr bool operator==(const Rational&) const = default;
  constexpr bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
  constexpr bool operator<=(const Rational& o) const { return !(o < *this); }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  constexpr void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

constexpr std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace fls
