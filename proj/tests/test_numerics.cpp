#include "hgm/numerics.hpp"
#include "support.hpp"

using namespace hgm;
using namespace hgm::test;

TEST_CASE("rational angles reduce and stay exact") {
  CHECK(RationalAngle(2, 4) == RationalAngle(1, 2));
  CHECK(RationalAngle(3, -6) == RationalAngle(-1, 2));
  CHECK(RationalAngle(-1, 3).mod1() == RationalAngle(2, 3));
  CHECK(RationalAngle(7, 3).mod1() == RationalAngle(1, 3));
  CHECK(RationalAngle(1, 3) + RationalAngle(1, 6) == RationalAngle(1, 2));
  CHECK((RationalAngle(1, 4) * 6) == RationalAngle(3, 2));
  CHECK((RationalAngle(1, 4) / 3) == RationalAngle(1, 12));
  CHECK(RationalAngle(1, 3) < RationalAngle(1, 2));
  CHECK(RationalAngle(5).str() == "5");
  CHECK(RationalAngle(-3, 9).str() == "-1/3");
  CHECK_THROWS_AS(RationalAngle(1, 0), Error);
}

TEST_CASE("rational parsing") {
  CHECK(RationalAngle::parse("13/90") == RationalAngle(13, 90));
  CHECK(RationalAngle::parse("-2/4") == RationalAngle(-1, 2));
  CHECK(RationalAngle::parse("0") == RationalAngle(0));
  for (const char* bad : {"", "1/", "/3", "a/b", "1/2/3", "0.5", "1/0"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(RationalAngle::parse(bad), Error);
  }
}

TEST_CASE("rational arithmetic agrees with exact fraction oracle") {
  // Oracle: cross-multiplied integer comparisons.
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t a = uniform_int(-500, 500), b = uniform_int(1, 360);
    const std::int64_t c = uniform_int(-500, 500), d = uniform_int(1, 360);
    const RationalAngle s = RationalAngle(a, b) + RationalAngle(c, d);
    CHECK(s.num() * (b * d) == (a * d + c * b) * s.den());
    CHECK(std::gcd(s.num(), s.den()) == 1);
    const RationalAngle m = RationalAngle(a, b).mod1();
    CHECK(m.num() >= 0);
    CHECK(m.num() < m.den());
    CHECK(((RationalAngle(a, b) - m).den()) == 1);
    CHECK((RationalAngle(a, b) + -RationalAngle(a, b)) == RationalAngle(0));
  }
}

TEST_CASE("tolerance bounds") {
  CHECK(Tolerance().eps == 1e-9);
  CHECK(Tolerance(1e-6).eps == 1e-6);
  CHECK_THROWS_AS(Tolerance(0.0), Error);
  CHECK_THROWS_AS(Tolerance(-1e-9), Error);
  CHECK_THROWS_AS(Tolerance(1e-3), Error);
}

TEST_CASE("unit_phase examples") {
  CHECK(unit_phase(RationalAngle(0)) == Complex(1.0, 0.0));
  CHECK(unit_phase(RationalAngle(1, 2)) == Complex(-1.0, 0.0));
  const Complex omega = unit_phase(RationalAngle(1, 3));
  CHECK(std::abs(omega - Complex(-0.5, std::sqrt(3.0) / 2.0)) < 1e-15);
  CHECK(std::abs(unit_phase(RationalAngle(-7, 4)) - Complex(0.0, 1.0)) == 0.0);
}

TEST_CASE("approx_eq examples") {
  CHECK(approx_eq({1, 0}, {1, 0}));
  CHECK_FALSE(approx_eq({1, 0}, {1 + 2e-9, 0}, Tolerance(1e-9)));
  const Complex w = unit_phase(RationalAngle(1, 3));
  CHECK(approx_eq(w * w * w, {1, 0}));
}

TEST_CASE("unit_phase is a homomorphism on small denominators") {
  for (int i = 0; i < 5000; ++i) {
    const RationalAngle a = random_angle(360), b = random_angle(360);
    CHECK(std::abs(unit_phase(a) * unit_phase(b) - unit_phase(a + b)) < 1e-12);
  }
}

TEST_CASE("turns is in [0,1)") {
  CHECK(turns({1, 0}) == 0.0);
  CHECK(turns({-1, 0}) == doctest::Approx(0.5));
  CHECK(turns({0, -1}) == doctest::Approx(0.75));
  CHECK(turns(Complex(1.0, -1e-300)) < 1.0);
}

TEST_CASE("snap_to_rational examples") {
  CHECK(snap_to_rational(0.5, 360).value == RationalAngle(1, 2));
  CHECK(snap_to_rational(turns(std::polar(1.0, 2 * kPi * 13.0 / 90.0)), 360).value == RationalAngle(13, 90));
  CHECK(snap_to_rational(0.333333333, 360).value == RationalAngle(1, 3));
  CHECK(snap_to_rational(0.333333333, 360).error < 1e-9);
}

TEST_CASE("snap round trip for every reduced q with denominator <= 360") {
  int checked = 0;
  for (std::int64_t den = 1; den <= 360; ++den) {
    for (std::int64_t num = 0; num < den; ++num) {
      if (std::gcd(num, den) != 1) continue;
      const RationalAngle q(num, den);
      const double x = turns(unit_phase(q));
      for (std::int64_t max_den : {den, std::int64_t{360}}) {
        const RationalAngle s = snap_to_rational(x, max_den, Tolerance(1e-6)).value.mod1();
        if (s != q) FAIL_CHECK(q.str() << " snapped to " << s.str() << " at max_den " << max_den);
        ++checked;
      }
    }
  }
  CHECK(checked > 50000);
}

TEST_CASE("snap reports the distance for irrational inputs") {
  CHECK(snap_to_rational(1.0 / std::sqrt(2.0), 360, Tolerance(1e-6)).error > 1e-6);
  CHECK_THROWS_AS(snap_to_rational(0.3334, 360, Tolerance(9e-4)), Error);
  CHECK_THROWS_AS(snap_to_rational(0.5, 0), Error);
}
