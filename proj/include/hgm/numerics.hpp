#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <string>

#include "hgm/error.hpp"

namespace hgm {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Exact rational number of turns.
class RationalAngle {
 public:
  RationalAngle() = default;
  RationalAngle(std::int64_t num, std::int64_t den = 1);

  // Accepts "p/q", "p" or "-p/q".
  static RationalAngle parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  // Representative in [0, 1).
  RationalAngle mod1() const;
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  RationalAngle operator-() const { return {-num_, den_}; }
  friend RationalAngle operator+(const RationalAngle& a, const RationalAngle& b);
  friend RationalAngle operator-(const RationalAngle& a, const RationalAngle& b) { return a + (-b); }
  friend RationalAngle operator*(const RationalAngle& a, std::int64_t k);
  friend RationalAngle operator/(const RationalAngle& a, std::int64_t k);
  friend bool operator==(const RationalAngle& a, const RationalAngle& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const RationalAngle& a, const RationalAngle& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct Tolerance {
  double eps = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double e);
};

// e^{2 pi i angle}
Complex unit_phase(const RationalAngle& angle);

bool approx_eq(Complex x, Complex y, const Tolerance& tol = {});

// Argument of z in turns, in [0, 1).
double turns(Complex z);

struct SnapResult {
  RationalAngle value;
  double error = 0.0;
};

// Closest rational with denominator <= max_den (continued fractions).
SnapResult snap_to_rational(double x, std::int64_t max_den, const Tolerance& tol = {});

}  // namespace hgm
