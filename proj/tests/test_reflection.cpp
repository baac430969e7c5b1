#include "hgm/families.hpp"
#include "hgm/reflection.hpp"
#include "support.hpp"

using namespace hgm;
using namespace hgm::test;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const Complex kSigmaE2 = std::polar(1.0, kPi / 3);

ReflectionTriple e2_triple() { return mostow_generators({4, kSqrt2, kSigmaE2, kSqrt2}); }

Complex expected_trace(int p, double len) { return unit_phase(RationalAngle(1, p)) * (2.0 - len * len) + 1.0; }

}  // namespace

TEST_CASE("decoupled p = 2 triple") {
  const ReflectionTriple t = mostow_generators({2, 0.0, 0.0, 0.0});
  CHECK(distance(t.H, 2.0 * CMat3::identity()) < 1e-15);
  CHECK(distance(t.R1 * t.R2, t.R2 * t.R1) < 1e-15);
  CHECK(distance(t.R2 * t.R3, t.R3 * t.R2) < 1e-15);
  CHECK(distance(t.R1, CMat3::diag(-1.0, 1.0, 1.0)) < 1e-15);
  CHECK(form_residual(t) < 1e-9);
}

TEST_CASE("generators have determinant e^{2 pi i/p} and are reflections") {
  const ReflectionTriple t = e2_triple();
  for (const CMat3& r : {t.R1, t.R2, t.R3}) {
    CHECK(std::abs(r.det() - Complex(0, 1)) < 1e-12);
    CHECK(is_reflection_defect(r));
  }
  for (const CatalogEntry& e : catalog()) {
    const ReflectionTriple c = mostow_generators(family_parameters(e.family, e.p));
    const Complex z = unit_phase(RationalAngle(1, e.p));
    for (const CMat3& r : {c.R1, c.R2, c.R3}) {
      CHECK(std::abs(r.det() - z) < 1e-12);
      const Comparison k = compare(power(r, std::abs(e.p)), CMat3::identity());
      CHECK(k.holds());
    }
  }
  CHECK_THROWS_AS(mostow_generators({1, 0.0, 0.0, 0.0}), Error);
  CHECK_THROWS_AS(mostow_generators({0, 0.0, 0.0, 0.0}), Error);
}

TEST_CASE("trace formula on a catalog triple") {
  const Complex tau = -unit_phase(RationalAngle(-1, 9));
  const ReflectionTriple t = mostow_generators({3, tau, tau, tau});
  CHECK(std::abs((t.R1 * t.R2).trace() - (unit_phase(RationalAngle(1, 3)) * 1.0 + 1.0)) < 1e-12);
}

TEST_CASE("trace formulas on random parameters") {
  for (int i = 0; i < 200; ++i) {
    int p = uniform_int(2, 24) * (uniform_int(0, 1) ? 1 : -1);
    const ReflectionParams params{p, random_complex(2), random_complex(2), random_complex(2)};
    const ReflectionTriple t = mostow_generators(params);
    CHECK(std::abs((t.R1 * t.R2).trace() - expected_trace(p, std::abs(params.rho))) < 1e-10);
    CHECK(std::abs((t.R2 * t.R3).trace() - expected_trace(p, std::abs(params.sigma))) < 1e-10);
    CHECK(std::abs((t.R3 * t.R1).trace() - expected_trace(p, std::abs(params.tau))) < 1e-10);
    const double l = std::abs(params.sigma * params.tau - std::conj(params.rho));
    CHECK(std::abs((t.R1 * inverse(t.R3) * t.R2 * t.R3).trace() - expected_trace(p, l)) < 1e-10);
    CHECK(trace_formula_residual(t) < 1e-10);
    CHECK(form_residual(t) < 1e-9);
  }
}

TEST_CASE("negative p is the complex conjugate triple") {
  for (int i = 0; i < 100; ++i) {
    const int p = uniform_int(2, 20);
    const Complex rho = random_complex(2), sigma = random_complex(2), tau = random_complex(2);
    const ReflectionTriple pos = mostow_generators({p, rho, sigma, tau});
    const ReflectionTriple neg = mostow_generators({-p, std::conj(rho), std::conj(sigma), std::conj(tau)});
    CHECK(distance(neg.R1, pos.R1.conj()) < 1e-12);
    CHECK(distance(neg.R2, pos.R2.conj()) < 1e-12);
    CHECK(distance(neg.R3, pos.R3.conj()) < 1e-12);
    CHECK(distance(neg.H, -1.0 * pos.H.conj()) < 1e-12);
  }
}

TEST_CASE("braid_holds examples") {
  const CMat3 a = CMat3::diag(cis_turns(0.2), 1, 1), b = CMat3::diag(1, cis_turns(0.3), 1);
  CHECK(braid_holds(a, b, 2));
  const ReflectionTriple t = e2_triple();
  CHECK(braid_holds(t.R1, t.R2, 4));
  CHECK_FALSE(braid_holds(t.R1, t.R2, 3));
  CHECK(braid_holds(t.R1, t.R3, 4));
  for (const CatalogEntry& e : catalog()) {
    if (e.family.kind != FamilyKind::F23n) continue;
    const ReflectionTriple f = mostow_generators(family_parameters(e.family, e.p));
    CHECK(braid_holds(f.R2, f.R3, 2));
  }
}

TEST_CASE("braid_order examples") {
  const ReflectionTriple t = mostow_generators({5, kSqrt2, 0.0, 1.0});
  CHECK(braid_order(t.R1, t.R2) == 4);
  CHECK(braid_order(t.R2, t.R3) == 2);
  CHECK(braid_order(t.R3, t.R1) == 3);
  // |rho| = 3 gives infinite order.
  const ReflectionTriple u = mostow_generators({5, 3.0, 0.0, 1.0});
  CHECK_FALSE(braid_order(u.R1, u.R2).has_value());
}

TEST_CASE("braiding_parameters examples") {
  CHECK(braiding_parameters({4, kSqrt2, kSigmaE2, kSqrt2}).str() == "(3,4,4;4)");
  CHECK(braiding_parameters({5, 2 * std::cos(kPi / 5), 0.0, 1.0}).str() == "(2,3,5;5)");
  const Complex tau = -unit_phase(RationalAngle(-1, 15));
  CHECK(braiding_parameters({5, tau, tau, tau}).str() == "(3,3,3;5)");
  CHECK(braiding_parameters({5, 3.0, 0.0, 1.0}).str() == "(2,3,inf;inf)");
}

TEST_CASE("braid orders agree with the length criterion") {
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.family.str());
    CAPTURE(e.p);
    const ReflectionParams params = family_parameters(e.family, e.p);
    const ReflectionTriple t = mostow_generators(params);
    CHECK(braid_orders(t) == braiding_parameters(params));
    CHECK(braiding_parameters(params) == e.family.header());
  }
  // Random lengths 2 cos(pi/n) with random phases.
  for (int i = 0; i < 100; ++i) {
    const int n = uniform_int(2, 12), p = uniform_int(3, 12);
    const Complex rho = std::polar(2 * std::cos(kPi / n), uniform(0, 2 * kPi));
    const ReflectionTriple t = mostow_generators({p, rho, 0.0, 1.0});
    CHECK(braid_order(t.R1, t.R2) == n);
  }
}

TEST_CASE("form residual detects perturbation") {
  const ReflectionTriple t = e2_triple();
  CHECK(form_residual(t) < 1e-9);
  ReflectionTriple bad = t;
  bad.H = mostow_generators({4, kSqrt2 + 0.01, kSigmaE2, kSqrt2}).H;
  CHECK(form_residual(bad) > 1e-3);
  CHECK(form_residual(mostow_generators({2, 0.7, 1.1, 0.3})) < 1e-9);
}

TEST_CASE("braid signature strings") {
  BraidSignature b;
  b.v = {3, 4, std::nullopt, 2};
  CHECK(b.str() == "(3,4,inf;2)");
}
