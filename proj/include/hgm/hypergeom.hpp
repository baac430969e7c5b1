#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hgm/mat3.hpp"

namespace hgm {

using Angles = std::array<RationalAngle, 3>;
using Roots = std::array<Complex, 3>;

// Relative band below which a d_j or a form eigenvalue counts as zero.
inline constexpr double kDegenerateBand = 1e-7;

// Default tolerance for recognising eigenvalue arguments as rationals.
inline constexpr double kSnapTolerance = 1e-6;

struct HgParameters {
  Angles alpha;
  Angles beta;

  // Reduces mod 1 and sorts both sides.
  static HgParameters make(const Angles& alpha, const Angles& beta);

  Roots a() const;
  Roots b() const;
  bool shares_eigenvalue() const;
  bool alpha_distinct() const;
  std::string str() const;

  friend bool operator==(const HgParameters&, const HgParameters&) = default;
};

struct CompanionPair {
  CMat3 A;
  CMat3 B;
  Roots coeff_a;  // A1, A2, A3 of t^3 + A1 t^2 + A2 t + A3
  Roots coeff_b;
};

// Coefficients (X1, X2, X3) of prod (t - r_j) = t^3 + X1 t^2 + X2 t + X3.
Roots poly_from_roots(const Roots& r);

// First row (-X1, -X2, -X3), ones on the subdiagonal.
CMat3 companion(const Roots& coeff);

CompanionPair companion_pair(const HgParameters& params, const Tolerance& tol = {});

Roots c_coefficients(const Roots& a, const Roots& b, const Tolerance& tol = {});
// Same, with chi_B given by its coefficients t^3 + x0 t^2 + x1 t + x2.
Roots c_from_char_poly(const Roots& a, const Roots& chi_b, const Tolerance& tol = {});
Roots c_coefficients(const HgParameters& params, const Tolerance& tol = {});

struct HermitianData {
  Roots c;
  double psi = 0.0;  // in [0, pi)
  std::array<double, 3> d{};
  CMat3 D;
  double max_imag = 0.0;  // largest |Im| discarded when forming d
};

// d_j = -i conj(half_phase) c_j; real when half_phase^2 = b1 b2 b3 / (a1 a2 a3).
Roots form_d(const Roots& a, const Roots& b, Complex half_phase, const Tolerance& tol = {});
Roots d_from_c(const Roots& c, Complex half_phase);

HermitianData hermitian_form(const Roots& a, const Roots& b, const Tolerance& tol = {});
HermitianData hermitian_form(const HgParameters& params, const Tolerance& tol = {});

// 2 prod_k sin(pi(beta_k - alpha_j)) / prod_{k != j} sin(pi(alpha_k - alpha_j)), stored representatives.
std::array<double, 3> sine_product_d(const HgParameters& params);

// Sign relating sine_product_d to hermitian_form(params).d: (-1)^floor(sum beta - sum alpha).
int sine_product_sign(const HgParameters& params);

// Columns are eigenvectors of the companion matrix with eigenvalues a_j.
CMat3 diagonalizer_U(const Roots& a, const Tolerance& tol = {});
// Rows (1, -a_k - a_l, a_k a_l).
CMat3 diagonalizer_U_inverse(const Roots& a);

// U^{-1} B U assembled from the c_j.
CMat3 conjugated_B(const Roots& a, const Roots& c);

struct FormUniqueness {
  std::array<double, 3> singular_values{};  // descending
  std::array<double, 3> null_vector{};
};

// Real diagonal D' with M* D' M = D' for every M: least-squares null space.
FormUniqueness diagonal_invariant_forms(const std::vector<CMat3>& generators);

HgParameters scalar_shift(const HgParameters& params, const RationalAngle& d);

// Snapped eigenvalue arguments of a unit-modulus spectrum, mod 1.
Angles recover_angles(const CMat3& m, std::int64_t max_den, const Tolerance& tol = {},
                      double snap_tol = kSnapTolerance);

HgParameters recover_parameters(const CMat3& A, const CMat3& B, std::int64_t max_den = 360,
                                const Tolerance& tol = {}, double snap_tol = kSnapTolerance);

// Signs of the d_j, normalized so positive >= negative.
Signature classify(const HgParameters& params, const Tolerance& tol = {});

// Smallest d in [0, 1) with scalar_shift(computed, d) == target.
std::optional<RationalAngle> shift_to_match(const HgParameters& computed, const HgParameters& target);

struct BhRow {
  int id;
  HgParameters params;
};

const std::vector<BhRow>& bh_rows();

struct BhMatch {
  int id;
  RationalAngle shift;  // params + shift = row
};

std::optional<BhMatch> bh_lookup(const HgParameters& params);

}  // namespace hgm
