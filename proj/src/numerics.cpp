#include "hgm/numerics.hpp"

#include <cmath>
#include <numeric>

namespace hgm {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::AmbiguousSnap: return "AmbiguousSnap";
    case ErrorCode::NoRationalMatch: return "NoRationalMatch";
    case ErrorCode::NonUnitEigenvalue: return "NonUnitEigenvalue";
    case ErrorCode::SharedEigenvalue: return "SharedEigenvalue";
    case ErrorCode::RepeatedEigenvalue: return "RepeatedEigenvalue";
    case ErrorCode::ExcludedFamily: return "ExcludedFamily";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::UnsupportedP: return "UnsupportedP";
  }
  return "Unknown";
}

RationalAngle::RationalAngle(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RationalAngle RationalAngle::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {n, 1};
    }
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    std::int64_t n = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    std::int64_t d = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return {n, d};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  }
}

RationalAngle RationalAngle::mod1() const {
  std::int64_t r = num_ % den_;
  if (r < 0) r += den_;
  return {r, den_};
}

std::string RationalAngle::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

RationalAngle operator+(const RationalAngle& a, const RationalAngle& b) {
  std::int64_t g = std::gcd(a.den_, b.den_);
  std::int64_t l = a.den_ / g * b.den_;
  return {a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l};
}

RationalAngle operator*(const RationalAngle& a, std::int64_t k) { return {a.num_ * k, a.den_}; }

RationalAngle operator/(const RationalAngle& a, std::int64_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  return {a.num_, a.den_ * k};
}

std::strong_ordering operator<=>(const RationalAngle& a, const RationalAngle& b) {
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Tolerance::Tolerance(double e) : eps(e) {
  if (!(e > 0.0 && e < 1e-3)) throw Error(ErrorCode::InvalidArgument, "tolerance must lie in (0, 1e-3)");
}

Complex unit_phase(const RationalAngle& angle) {
  RationalAngle r = angle.mod1();
  // Fold into [-1/2, 1/2] so the half and quarter turns come out exact.
  std::int64_t n = r.num();
  if (2 * n > r.den()) n -= r.den();
  double t = 2.0 * kPi * static_cast<double>(n) / static_cast<double>(r.den());
  if (4 * n == r.den()) return {0.0, 1.0};
  if (4 * n == -r.den()) return {0.0, -1.0};
  if (2 * n == r.den()) return {-1.0, 0.0};
  return {std::cos(t), std::sin(t)};
}

bool approx_eq(Complex x, Complex y, const Tolerance& tol) { return std::abs(x - y) <= tol.eps; }

double turns(Complex z) {
  double t = std::arg(z) / (2.0 * kPi);
  if (t < 0.0) t += 1.0;
  if (t >= 1.0) t -= 1.0;
  return t;
}

SnapResult snap_to_rational(double x, std::int64_t max_den, const Tolerance& tol) {
  if (max_den < 1) throw Error(ErrorCode::InvalidArgument, "max_denominator must be >= 1");
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite value");

  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double y = x;
  bool exact = false;
  while (true) {
    double a = std::floor(y);
    if (std::abs(a) > 1e15) break;
    auto ai = static_cast<std::int64_t>(a);
    std::int64_t q2 = q0 + ai * q1;
    if (q2 > max_den) break;
    std::int64_t p2 = p0 + ai * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = y - a;
    if (frac < 1e-13) {
      exact = true;
      break;
    }
    y = 1.0 / frac;
  }

  RationalAngle best(p1, q1);
  double best_err = std::abs(x - best.value());
  if (exact) return {best, best_err};

  std::int64_t k = (max_den - q0) / q1;
  RationalAngle other(p0 + k * p1, q0 + k * q1);
  double other_err = std::abs(x - other.value());
  if (other_err < best_err) {
    std::swap(best, other);
    std::swap(best_err, other_err);
  }
  if (!(other == best) && other_err <= tol.eps)
    throw Error(ErrorCode::AmbiguousSnap, "two rationals within tolerance of " + std::to_string(x));
  return {best, best_err};
}

}  // namespace hgm
