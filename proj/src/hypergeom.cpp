#include "hgm/hypergeom.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>

namespace hgm {

namespace {

const Complex kI(0.0, 1.0);

Angles sorted_mod1(Angles x) {
  for (auto& v : x) v = v.mod1();
  std::sort(x.begin(), x.end());
  return x;
}

Roots phases(const Angles& x) { return {unit_phase(x[0]), unit_phase(x[1]), unit_phase(x[2])}; }

RationalAngle angle_sum(const Angles& x) { return x[0] + x[1] + x[2]; }

void require_distinct(const Roots& a, const Tolerance& tol) {
  for (int j = 0; j < 3; ++j)
    for (int k = j + 1; k < 3; ++k)
      if (std::abs(a[j] - a[k]) <= tol.eps) throw Error(ErrorCode::RepeatedEigenvalue, "a_j not pairwise distinct");
}

HermitianData assemble(const Roots& a, const Roots& b, double psi, const Tolerance& tol) {
  HermitianData h;
  h.c = c_coefficients(a, b, tol);
  h.psi = psi;
  const Roots d = d_from_c(h.c, std::polar(1.0, psi));
  for (int j = 0; j < 3; ++j) {
    h.d[j] = d[j].real();
    h.max_imag = std::max(h.max_imag, std::abs(d[j].imag()));
  }
  h.D = CMat3::diag(h.d[0], h.d[1], h.d[2]);
  return h;
}

}  // namespace

HgParameters HgParameters::make(const Angles& alpha, const Angles& beta) {
  return {sorted_mod1(alpha), sorted_mod1(beta)};
}

Roots HgParameters::a() const { return phases(alpha); }
Roots HgParameters::b() const { return phases(beta); }

bool HgParameters::shares_eigenvalue() const {
  for (const auto& x : alpha)
    for (const auto& y : beta)
      if (x.mod1() == y.mod1()) return true;
  return false;
}

bool HgParameters::alpha_distinct() const {
  return !(alpha[0].mod1() == alpha[1].mod1() || alpha[1].mod1() == alpha[2].mod1() ||
           alpha[0].mod1() == alpha[2].mod1());
}

std::string HgParameters::str() const {
  return "(" + alpha[0].str() + ", " + alpha[1].str() + ", " + alpha[2].str() + "; " + beta[0].str() + ", " +
         beta[1].str() + ", " + beta[2].str() + ")";
}

Roots poly_from_roots(const Roots& r) {
  return {-(r[0] + r[1] + r[2]), r[0] * r[1] + r[1] * r[2] + r[2] * r[0], -(r[0] * r[1] * r[2])};
}

CMat3 companion(const Roots& coeff) {
  return {-coeff[0], -coeff[1], -coeff[2], 1.0, 0.0, 0.0, 0.0, 1.0, 0.0};
}

CompanionPair companion_pair(const HgParameters& params, const Tolerance&) {
  if (params.shares_eigenvalue())
    throw Error(ErrorCode::SharedEigenvalue, "a_j = b_k for " + params.str());
  CompanionPair out;
  out.coeff_a = poly_from_roots(params.a());
  out.coeff_b = poly_from_roots(params.b());
  out.A = companion(out.coeff_a);
  out.B = companion(out.coeff_b);
  return out;
}

Roots c_from_char_poly(const Roots& a, const Roots& chi_b, const Tolerance& tol) {
  require_distinct(a, tol);
  Roots c;
  for (int j = 0; j < 3; ++j) {
    const Complex t = a[j];
    const Complex chi = ((t + chi_b[0]) * t + chi_b[1]) * t + chi_b[2];
    Complex den = t;
    for (int k = 0; k < 3; ++k)
      if (k != j) den *= a[k] - t;
    c[j] = -chi / den;
  }
  return c;
}

Roots c_coefficients(const Roots& a, const Roots& b, const Tolerance& tol) {
  return c_from_char_poly(a, poly_from_roots(b), tol);
}

Roots c_coefficients(const HgParameters& params, const Tolerance& tol) {
  return c_coefficients(params.a(), params.b(), tol);
}

Roots d_from_c(const Roots& c, Complex half_phase) {
  Roots d;
  for (int j = 0; j < 3; ++j) d[j] = -kI * std::conj(half_phase) * c[j];
  return d;
}

Roots form_d(const Roots& a, const Roots& b, Complex half_phase, const Tolerance& tol) {
  return d_from_c(c_coefficients(a, b, tol), half_phase);
}

HermitianData hermitian_form(const Roots& a, const Roots& b, const Tolerance& tol) {
  const Complex ratio = (b[0] * b[1] * b[2]) / (a[0] * a[1] * a[2]);
  return assemble(a, b, kPi * turns(ratio), tol);
}

HermitianData hermitian_form(const HgParameters& params, const Tolerance& tol) {
  const RationalAngle s = (angle_sum(params.beta) - angle_sum(params.alpha)).mod1();
  return assemble(params.a(), params.b(), kPi * s.value(), tol);
}

std::array<double, 3> sine_product_d(const HgParameters& params) {
  std::array<double, 3> d{};
  for (int j = 0; j < 3; ++j) {
    double num = 2.0, den = 1.0;
    for (int k = 0; k < 3; ++k) {
      num *= std::sin(kPi * (params.beta[k] - params.alpha[j]).value());
      if (k != j) den *= std::sin(kPi * (params.alpha[k] - params.alpha[j]).value());
    }
    d[j] = num / den;
  }
  return d;
}

int sine_product_sign(const HgParameters& params) {
  const RationalAngle s = angle_sum(params.beta) - angle_sum(params.alpha);
  const RationalAngle whole = s - s.mod1();
  return whole.num() % 2 == 0 ? 1 : -1;
}

CMat3 diagonalizer_U(const Roots& a, const Tolerance& tol) {
  require_distinct(a, tol);
  CMat3 u;
  for (int j = 0; j < 3; ++j) {
    Complex den = 1.0;
    for (int k = 0; k < 3; ++k)
      if (k != j) den *= a[j] - a[k];
    u(0, j) = a[j] * a[j] / den;
    u(1, j) = a[j] / den;
    u(2, j) = 1.0 / den;
  }
  return u;
}

CMat3 diagonalizer_U_inverse(const Roots& a) {
  CMat3 v;
  for (int j = 0; j < 3; ++j) {
    const Complex x = a[(j + 1) % 3], y = a[(j + 2) % 3];
    v(j, 0) = 1.0;
    v(j, 1) = -x - y;
    v(j, 2) = x * y;
  }
  return v;
}

CMat3 conjugated_B(const Roots& a, const Roots& c) {
  CMat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = a[j] * c[j] + (i == j ? a[j] : Complex(0.0));
  return m;
}

FormUniqueness diagonal_invariant_forms(const std::vector<CMat3>& generators) {
  Eigen::MatrixXd sys(18 * static_cast<int>(generators.size()), 3);
  int row = 0;
  for (const CMat3& m : generators) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
          Complex coeff = std::conj(m(k, i)) * m(k, j);
          if (i == j && j == k) coeff -= 1.0;
          sys(row, k) = coeff.real();
          sys(row + 1, k) = coeff.imag();
        }
        row += 2;
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys, Eigen::ComputeFullV);
  FormUniqueness out;
  for (int k = 0; k < 3; ++k) {
    out.singular_values[k] = svd.singularValues()(k);
    out.null_vector[k] = svd.matrixV()(k, 2);
  }
  return out;
}

HgParameters scalar_shift(const HgParameters& params, const RationalAngle& d) {
  Angles a = params.alpha, b = params.beta;
  for (auto& x : a) x = x + d;
  for (auto& x : b) x = x + d;
  return HgParameters::make(a, b);
}

Angles recover_angles(const CMat3& m, std::int64_t max_den, const Tolerance& tol, double snap_tol) {
  const Roots roots = eigen_cubic(m, tol);
  const Tolerance snap(snap_tol);
  Angles out;
  for (int j = 0; j < 3; ++j) {
    if (std::abs(std::abs(roots[j]) - 1.0) > snap_tol)
      throw Error(ErrorCode::NonUnitEigenvalue, "eigenvalue of modulus " + std::to_string(std::abs(roots[j])));
    const SnapResult s = snap_to_rational(turns(roots[j]), max_den, snap);
    if (s.error > snap_tol)
      throw Error(ErrorCode::NoRationalMatch,
                  "argument " + std::to_string(turns(roots[j])) + " has no rational with small denominator");
    out[j] = s.value.mod1();
  }
  std::sort(out.begin(), out.end());
  return out;
}

HgParameters recover_parameters(const CMat3& A, const CMat3& B, std::int64_t max_den, const Tolerance& tol,
                                double snap_tol) {
  return HgParameters::make(recover_angles(A, max_den, tol, snap_tol), recover_angles(B, max_den, tol, snap_tol));
}

Signature classify(const HgParameters& params, const Tolerance& tol) {
  const HermitianData h = hermitian_form(params, tol);
  double scale = 0.0;
  for (double x : h.d) scale = std::max(scale, std::abs(x));
  Signature s;
  for (double x : h.d) {
    if (scale == 0.0 || std::abs(x) <= kDegenerateBand * scale)
      ++s.zero;
    else if (x > 0)
      ++s.positive;
    else
      ++s.negative;
  }
  return s.normalized();
}

std::optional<RationalAngle> shift_to_match(const HgParameters& computed, const HgParameters& target) {
  std::set<RationalAngle> candidates;
  for (int j = 0; j < 3; ++j) {
    candidates.insert((target.alpha[0] - computed.alpha[j]).mod1());
    candidates.insert((target.beta[0] - computed.beta[j]).mod1());
  }
  for (const RationalAngle& d : candidates)
    if (scalar_shift(computed, d) == target) return d;
  return std::nullopt;
}

const std::vector<BhRow>& bh_rows() {
  static const std::vector<BhRow> rows = [] {
    auto r = [](std::int64_t n, std::int64_t d) { return RationalAngle(n, d); };
    const Angles a2{r(3, 14), r(5, 14), r(13, 14)};
    const Angles a5{r(0, 1), r(1, 5), r(4, 5)};
    const Angles a7{r(1, 6), r(11, 30), r(29, 30)};
    const Angles a10{r(1, 9), r(4, 9), r(7, 9)};
    const Angles quarter{r(0, 1), r(1, 4), r(3, 4)};
    return std::vector<BhRow>{
        {2, HgParameters::make(a2, {r(0, 1), r(1, 3), r(2, 3)})},
        {3, HgParameters::make(a2, quarter)},
        {4, HgParameters::make(a2, {r(1, 7), r(2, 7), r(4, 7)})},
        {5, HgParameters::make(a5, {r(1, 6), r(1, 2), r(5, 6)})},
        {6, HgParameters::make(a5, {r(1, 10), r(1, 2), r(9, 10)})},
        {7, HgParameters::make(a7, {r(0, 1), r(1, 5), r(4, 5)})},
        {8, HgParameters::make(a7, quarter)},
        {9, HgParameters::make({r(1, 6), r(2, 3), r(5, 6)}, quarter)},
        {10, HgParameters::make(a10, {r(0, 1), r(1, 6), r(1, 2)})},
        {11, HgParameters::make(a10, quarter)},
        {12, HgParameters::make({r(1, 12), r(7, 12), r(5, 6)}, quarter)},
    };
  }();
  return rows;
}

std::optional<BhMatch> bh_lookup(const HgParameters& params) {
  for (const BhRow& row : bh_rows())
    if (auto d = shift_to_match(params, row.params)) return BhMatch{row.id, *d};
  return std::nullopt;
}

}  // namespace hgm
