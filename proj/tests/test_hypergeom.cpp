#include "hgm/families.hpp"
#include "hgm/hypergeom.hpp"
#include "support.hpp"

using namespace hgm;
using namespace hgm::test;

namespace {

RationalAngle q(std::int64_t n, std::int64_t d = 1) { return {n, d}; }

const Complex kOmega = unit_phase(q(1, 3));

double diag_distance(const CMat3& m, const Roots& d) { return distance(m, CMat3::diag(d[0], d[1], d[2])); }

// c_j read off the off-diagonal entries of U^{-1} B U computed with a numerical inverse.
Roots oracle_c(const HgParameters& p) {
  const Roots a = p.a();
  const CMat3 u = diagonalizer_U(a);
  const CMat3 bp = inverse(u) * companion_pair(p).B * u;
  Roots c;
  for (int j = 0; j < 3; ++j) c[j] = bp((j + 1) % 3, j) / a[j];
  return c;
}

const BhRow& bh_row(int id) {
  for (const BhRow& r : bh_rows())
    if (r.id == id) return r;
  throw std::logic_error("no row");
}

}  // namespace

TEST_CASE("parameters reduce mod 1 and sort") {
  const HgParameters p = HgParameters::make({q(4, 3), q(-1, 3), q(0)}, {q(5, 6), q(1, 2), q(-5, 6)});
  CHECK(p.alpha == Angles{q(0), q(1, 3), q(2, 3)});
  CHECK(p.beta == Angles{q(1, 6), q(1, 2), q(5, 6)});
  CHECK(p.str() == "(0, 1/3, 2/3; 1/6, 1/2, 5/6)");
  CHECK(p.alpha_distinct());
  CHECK_FALSE(p.shares_eigenvalue());
  CHECK(HgParameters::make({q(0), q(0), q(1, 2)}, {q(1, 6), q(1, 3), q(5, 6)}).alpha_distinct() == false);
  CHECK(HgParameters::make({q(0), q(1, 4), q(1, 2)}, {q(1, 6), q(1, 2), q(5, 6)}).shares_eigenvalue());
}

TEST_CASE("companion_pair examples") {
  const HgParameters cube = HgParameters::make({q(0), q(1, 3), q(2, 3)}, {q(1, 6), q(1, 2), q(5, 6)});
  const CompanionPair cp = companion_pair(cube);
  CHECK(std::abs(cp.A(0, 0)) < 1e-15);
  CHECK(std::abs(cp.A(0, 1)) < 1e-15);
  CHECK(std::abs(cp.A(0, 2) - 1.0) < 1e-15);

  const HgParameters bh12 = HgParameters::make({q(1, 12), q(7, 12), q(5, 6)}, {q(0), q(1, 4), q(3, 4)});
  const CompanionPair p12 = companion_pair(bh12);
  const CMat3 a{-kOmega, -std::conj(kOmega), -1.0, 1, 0, 0, 0, 1, 0};
  const CMat3 b{1, -1, 1, 1, 0, 0, 0, 1, 0};
  CHECK(distance(p12.A, a) < 1e-12);
  CHECK(distance(p12.B, b) < 1e-12);
  // Literal subdiagonal ones and zeros.
  for (const CMat3& m : {p12.A, p12.B}) {
    CHECK(m(1, 0) == Complex(1.0));
    CHECK(m(2, 1) == Complex(1.0));
    CHECK(m(1, 1) == Complex(0.0));
    CHECK(m(1, 2) == Complex(0.0));
    CHECK(m(2, 0) == Complex(0.0));
    CHECK(m(2, 2) == Complex(0.0));
  }
  CHECK_THROWS_AS(companion_pair(HgParameters::make({q(0), q(1, 4), q(1, 2)}, {q(1, 6), q(1, 2), q(5, 6)})),
                  Error);
}

TEST_CASE("companion eigenvalues are the prescribed roots") {
  for (int i = 0; i < 300; ++i) {
    const HgParameters p = random_parameters();
    const CompanionPair cp = companion_pair(p);
    // The characteristic polynomial vanishes at each prescribed root.
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs((cp.A - CMat3::scalar(p.a()[j])).det()) < 1e-12);
      CHECK(std::abs((cp.B - CMat3::scalar(p.b()[j])).det()) < 1e-12);
    }
  }
}

TEST_CASE("c coefficients") {
  const Roots a{1.0, kOmega, std::conj(kOmega)};
  const Roots b{-1.0, -kOmega, -std::conj(kOmega)};
  for (Complex c : c_coefficients(a, b)) CHECK(std::abs(c + 2.0 / 3.0) < 1e-12);
  CHECK_THROWS_AS(c_coefficients(Roots{1.0, 1.0, -1.0}, b), Error);

  for (int i = 0; i < 300; ++i) {
    const HgParameters p = random_parameters();
    const Roots c = c_coefficients(p);
    const Roots a = p.a(), b = p.b();
    CHECK(std::abs(b[0] * b[1] * b[2] - a[0] * a[1] * a[2] * (c[0] + c[1] + c[2] + 1.0)) < 1e-9);
    const Roots o = oracle_c(p);
    for (int j = 0; j < 3; ++j) CHECK(std::abs(c[j] - o[j]) < 1e-8);
    const Roots via_poly = c_from_char_poly(a, poly_from_roots(b));
    for (int j = 0; j < 3; ++j) CHECK(std::abs(c[j] - via_poly[j]) < 1e-12);
  }
}

TEST_CASE("hermitian_form examples") {
  const HgParameters p = HgParameters::make({q(0), q(1, 3), q(2, 3)}, {q(1, 6), q(1, 2), q(5, 6)});
  const HermitianData h = hermitian_form(p);
  CHECK(h.psi == doctest::Approx(kPi / 2));
  for (double d : h.d) CHECK(d == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  // Sine-product cross-check.
  CHECK(2 * std::sin(kPi / 6) * (std::sin(kPi / 2) / std::sin(kPi / 3)) * (std::sin(5 * kPi / 6) / std::sin(2 * kPi / 3)) ==
        doctest::Approx(2.0 / 3.0));
  CHECK(classify(p) == Signature{3, 0, 0});

  const HgParameters bh5 = HgParameters::make({q(0), q(1, 5), q(4, 5)}, {q(1, 6), q(1, 2), q(5, 6)});
  const HermitianData h5 = hermitian_form(bh5);
  CHECK(((h5.d[0] > 0) == (h5.d[1] > 0)));
  CHECK(((h5.d[1] > 0) == (h5.d[2] > 0)));
}

TEST_CASE("invariant form of a hypergeometric group (random draws)") {
  for (int i = 0; i < 1000; ++i) {
    const HgParameters p = random_parameters();
    CAPTURE(p.str());
    const HermitianData h = hermitian_form(p);
    const Roots a = p.a();
    const CMat3 ap = CMat3::diag(a[0], a[1], a[2]);
    const CMat3 bp = conjugated_B(a, h.c);
    // Forms are defined up to real scale; residuals are measured on D / max|d_j|.
    const double scale = std::max({std::abs(h.d[0]), std::abs(h.d[1]), std::abs(h.d[2])});
    const CMat3 dnorm = (1.0 / scale) * h.D;
    CHECK(distance(ap.adjoint() * dnorm * ap, dnorm) < 1e-8);
    CHECK(distance(bp.adjoint() * dnorm * bp, dnorm) < 1e-8);
    CHECK(h.max_imag < 1e-10);
    CHECK(h.d[0] + h.d[1] + h.d[2] == doctest::Approx(2 * std::sin(h.psi)).epsilon(1e-9).scale(1.0));

    const auto cor = sine_product_d(p);
    const int sign = sine_product_sign(p);
    for (int j = 0; j < 3; ++j) CHECK(std::abs(sign * h.d[j] - cor[j]) < 1e-10);

    // Psi from the root product agrees with the exact rational branch.
    const HermitianData hr = hermitian_form(p.a(), p.b());
    CHECK(std::abs(hr.psi - h.psi) < 1e-12);

    const FormUniqueness u = diagonal_invariant_forms({ap, bp});
    // One-dimensional null space: a clear gap relative to the largest singular value.
    const double s0 = u.singular_values[0];
    CHECK(u.singular_values[2] < 1e-12 * s0);
    CHECK(u.singular_values[1] > 1e-9 * s0);
    // The null vector is proportional to d.
    double dn = 0, dot = 0;
    for (int j = 0; j < 3; ++j) {
      dn += h.d[j] * h.d[j];
      dot += h.d[j] * u.null_vector[j];
    }
    CHECK(std::abs(std::abs(dot) - std::sqrt(dn)) < 1e-8 * std::sqrt(dn) + 1e-12);
  }
}

TEST_CASE("conjugated_B equals U^{-1} B U") {
  for (int i = 0; i < 300; ++i) {
    const HgParameters p = random_parameters();
    const Roots a = p.a();
    const CMat3 u = diagonalizer_U(a);
    CHECK(distance(diagonalizer_U_inverse(a) * u, CMat3::identity()) < 1e-9);
    const CompanionPair cp = companion_pair(p);
    CHECK(distance(inverse(u) * cp.B * u, conjugated_B(a, c_coefficients(p))) < 1e-8);
    CHECK(diag_distance(inverse(u) * cp.A * u, a) < 1e-9);
    CHECK(std::abs(conjugated_B(a, c_coefficients(p)).trace() - cp.B.trace()) < 1e-9);
  }
}

TEST_CASE("BA^{-1} determinant and trace") {
  for (int i = 0; i < 300; ++i) {
    const HgParameters p = random_parameters();
    const CompanionPair cp = companion_pair(p);
    const Roots a = p.a(), b = p.b();
    const Complex ratio = b[0] * b[1] * b[2] / (a[0] * a[1] * a[2]);
    const CMat3 r = cp.B * inverse(cp.A);
    CHECK(std::abs(r.det() - ratio) < 1e-10);
    CHECK(std::abs(r.trace() - (2.0 + ratio)) < 1e-10);
  }
}

TEST_CASE("diagonalizer examples") {
  const Roots cube{1.0, kOmega, std::conj(kOmega)};
  const CMat3 shift{0, 0, 1, 1, 0, 0, 0, 1, 0};
  CHECK(diag_distance(inverse(diagonalizer_U(cube)) * shift * diagonalizer_U(cube), cube) < 1e-12);

  const FamilyBuild b = construct(FamilyId::three_fold(3, 2), 5);
  const Complex zh = unit_phase(q(-1, 15));
  const Roots a{kOmega * zh, std::conj(kOmega) * zh, zh};
  CHECK(diag_distance(inverse(diagonalizer_U(a)) * *b.symmetry * diagonalizer_U(a), a) < 1e-12);
  CHECK_THROWS_AS(diagonalizer_U(Roots{1.0, 1.0, -1.0}), Error);

  for (int i = 0; i < 200; ++i) {
    Roots r{cis_turns(uniform(0, 1)), cis_turns(uniform(0, 1)), cis_turns(uniform(0, 1))};
    if (std::abs(r[0] - r[1]) < 1e-2 || std::abs(r[1] - r[2]) < 1e-2 || std::abs(r[0] - r[2]) < 1e-2) continue;
    const CMat3 m = companion(poly_from_roots(r));
    CHECK(diag_distance(inverse(diagonalizer_U(r)) * m * diagonalizer_U(r), r) < 1e-9);
  }
}

TEST_CASE("scalar_shift") {
  const HgParameters p = HgParameters::make({q(3, 7), q(5, 7), q(6, 7)}, {q(1, 6), q(1, 2), q(5, 6)});
  CHECK(scalar_shift(p, q(0)) == p);
  CHECK(scalar_shift(p, q(1, 2)).beta == Angles{q(0), q(1, 3), q(2, 3)});

  const HgParameters p10 = HgParameters::make({q(1, 9), q(4, 9), q(7, 9)}, {q(1, 3), q(1, 2), q(5, 6)});
  CHECK(scalar_shift(p10, q(2, 3)) == bh_row(10).params);

  for (int i = 0; i < 500; ++i) {
    const HgParameters r = random_parameters();
    const RationalAngle d = random_angle(60);
    const HgParameters s = scalar_shift(r, d);
    CHECK(scalar_shift(s, -d) == r);
    const auto found = shift_to_match(r, s);
    REQUIRE(found);
    CHECK(scalar_shift(r, *found) == s);
    CHECK(*found >= q(0));
    CHECK(*found < q(1));
  }
}

TEST_CASE("recover_parameters") {
  for (int i = 0; i < 300; ++i) {
    const HgParameters p = random_parameters();
    const CompanionPair cp = companion_pair(p);
    CHECK(recover_parameters(cp.A, cp.B) == p);
  }
  const FamilyBuild t = construct(FamilyId::three_fold(3, 2), 5);
  const HgParameters r = recover_parameters(t.A, t.B);
  CHECK(r.alpha == Angles{q(4, 15), q(3, 5), q(14, 15)});
  CHECK(r.beta == Angles{q(1, 12), q(1, 3), q(7, 12)});

  const FamilyBuild f = construct(FamilyId::f23n(4), 4);
  CHECK(recover_parameters(f.A, f.B).beta == Angles{q(0), q(1, 3), q(2, 3)});

  CHECK_THROWS_AS(recover_angles(CMat3::diag(2.0, 1.0, 1.0), 360), Error);
  CHECK_THROWS_AS(recover_angles(CMat3::diag(cis_turns(1 / std::sqrt(2.0)), 1.0, 1.0), 360), Error);
}

TEST_CASE("classify examples") {
  CHECK(classify(bh_row(9).params) == Signature{3, 0, 0});
  CHECK(classify(expected_parameters(FamilyId::three_fold(3, 2), 5)) == Signature{2, 1, 0});
  CHECK(classify(expected_parameters(FamilyId::three_fold(3, 2), 4)).zero == 1);
  for (const BhRow& row : bh_rows()) {
    CAPTURE(row.id);
    CHECK(classify(row.params) == Signature{3, 0, 0});
  }
}

TEST_CASE("bh_lookup") {
  for (const BhRow& row : bh_rows()) {
    auto m = bh_lookup(row.params);
    REQUIRE(m);
    CHECK(m->id == row.id);
    CHECK(m->shift == q(0));
    auto s = bh_lookup(scalar_shift(row.params, q(1, 7)));
    REQUIRE(s);
    CHECK(s->id == row.id);
  }
  CHECK_FALSE(bh_lookup(HgParameters::make({q(0), q(1, 3), q(2, 3)}, {q(1, 6), q(1, 2), q(5, 6)})));
}
