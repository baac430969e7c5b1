#include <cmath>

#include "hgm/families.hpp"

namespace hgm {

namespace {

RationalAngle q(std::int64_t n, std::int64_t d = 1) { return {n, d}; }

struct Row {
  FamilyId family;
  std::vector<int> p2, e2, h2;
  std::vector<int> bold;
  std::vector<int> excluded;
  const char* notes;
};

bool contains(const std::vector<int>& v, int x) {
  for (int y : v)
    if (y == x) return true;
  return false;
}

std::vector<CatalogEntry> expand(const std::vector<Row>& rows) {
  std::vector<CatalogEntry> out;
  for (const Row& r : rows) {
    auto add = [&](const std::vector<int>& ps, Geometry g) {
      for (int p : ps)
        out.push_back({r.family, p, g, contains(r.bold, p), contains(r.excluded, p), r.notes});
    };
    add(r.p2, Geometry::P2);
    add(r.e2, Geometry::E2);
    add(r.h2, Geometry::H2);
  }
  return out;
}

}  // namespace

const char* kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::ThreeFold: return "threefold";
    case FamilyKind::TwoFold: return "twofold";
    case FamilyKind::F334: return "f334";
    case FamilyKind::F23n: return "f23n";
    case FamilyKind::F344: return "f344";
  }
  return "?";
}

std::string FamilyId::str() const {
  switch (kind) {
    case FamilyKind::ThreeFold:
    case FamilyKind::TwoFold:
      return std::string(kind_name(kind)) + "(" + std::to_string(n) + "," + std::to_string(m) + ")";
    case FamilyKind::F334:
    case FamilyKind::F23n:
      return std::string(kind_name(kind)) + "(" + std::to_string(n) + ")";
    case FamilyKind::F344:
      return "f344";
  }
  return "?";
}

BraidSignature FamilyId::header() const {
  switch (kind) {
    case FamilyKind::ThreeFold: return {{n, n, n, m}};
    case FamilyKind::TwoFold: return {{n, n, m, m}};
    case FamilyKind::F334: return {{3, 3, 4, n}};
    case FamilyKind::F23n: return {{2, 3, n, n}};
    case FamilyKind::F344: return {{3, 4, 4, 4}};
  }
  return {};
}

const char* to_string(Geometry g) {
  switch (g) {
    case Geometry::P2: return "P2";
    case Geometry::E2: return "E2";
    case Geometry::H2: return "H2";
  }
  return "?";
}

Signature signature_of(Geometry g) {
  switch (g) {
    case Geometry::P2: return {3, 0, 0};
    case Geometry::E2: return {2, 0, 1};
    case Geometry::H2: return {2, 1, 0};
  }
  return {};
}

std::optional<Geometry> geometry_of(const Signature& s) {
  for (Geometry g : {Geometry::P2, Geometry::E2, Geometry::H2})
    if (signature_of(g) == s) return g;
  return std::nullopt;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = expand({
      {FamilyId::three_fold(3, 2), {2, 3}, {4}, {5, 6, 7, 8, 9, 10, 12, 18}, {9}, {},
       "Gamma(p,1/p+1/2), C(p,G25), BH11"},
      {FamilyId::three_fold(3, 3), {2}, {}, {4, 5, 6, 7, 8, 9, 10, 12, 18}, {7, 8, 10}, {},
       "Gamma(p,1/p+1/6), [BH12]"},
      {FamilyId::three_fold(3, 4), {2}, {}, {3, 4, 5, 6, 8, 12}, {5, 6}, {}, "Gamma(p,1/p)"},
      {FamilyId::three_fold(3, 5), {2}, {}, {3, 4, 5, 10}, {4}, {}, "Gamma(p,1/p-1/10)"},
      {FamilyId::three_fold(3, 6), {2}, {}, {3, 4, 6}, {4, 6}, {}, "Gamma(p,1/p-1/6)"},
      {FamilyId::three_fold(3, 7), {2}, {}, {3, 7}, {3}, {}, "Gamma(p,1/p-3/14)"},
      {FamilyId::three_fold(3, 8), {2}, {}, {3, 4}, {}, {}, "Gamma(p,1/p-1/4)"},
      {FamilyId::three_fold(3, 9), {2}, {}, {3}, {}, {}, "Gamma(p,1/p-5/18)"},
      {FamilyId::three_fold(3, 10), {2}, {}, {3}, {}, {}, "Gamma(p,1/p-3/10)"},
      {FamilyId::three_fold(3, 12), {2}, {}, {3}, {}, {}, "Gamma(p,1/p-1/3)"},
      {FamilyId::three_fold(4, 3), {2}, {}, {3, 4, 5, 6, 8, 12}, {4, 5, 6, 8, 12}, {},
       "S(p,sigma4-bar), C(p,G24), BH2"},
      {FamilyId::three_fold(4, 4), {}, {2}, {3, 4, 5, 6, 8, 12}, {5, 6}, {}, "[Gamma(4,2/p-1/4)]"},
      {FamilyId::three_fold(4, 5), {}, {}, {2, 3, 4}, {3, 4}, {}, "S(p,sigma5)"},
      {FamilyId::three_fold(5, 3), {2}, {}, {3, 4, 5, 10}, {}, {}, "S(p,sigma10), C(p,G23), BH5"},
      {FamilyId::three_fold(5, 5), {}, {}, {2, 3, 4, 5, 10}, {4}, {}, "[Gamma(5,2/p-3/10)]"},
      {FamilyId::three_fold(6, 4), {}, {2}, {3, 4, 6}, {3, 4, 6}, {}, "S(p,sigma1)"},

      {FamilyId::two_fold(3, 3), {2}, {}, {4, 5, 6, 7, 8, 9, 10, 12, 18}, {7, 8, 10}, {}, "BH12"},
      {FamilyId::two_fold(3, 4), {2}, {}, {3, 4, 5, 6, 8, 12}, {4, 5, 6, 8, 12}, {}, "T(p,S1)"},
      {FamilyId::two_fold(3, 5), {}, {}, {2, 3, 5, 10, -5}, {3}, {}, "T(p,H2)"},
      {FamilyId::two_fold(4, 3), {2}, {3}, {4, 5, 6, 8, 12}, {}, {}, "[T(p,S4)]"},
      {FamilyId::two_fold(4, 4), {}, {2}, {3, 4, 5, 6, 8, 12}, {5, 6}, {}, "[Gamma(4,2/p-1/4)]"},
      {FamilyId::two_fold(5, 4), {2}, {}, {3, 4, 5}, {4, 5}, {}, "[T(p,S2)]"},
      {FamilyId::two_fold(5, 5), {}, {}, {2, 3, 4, 5, 10}, {4}, {}, "[Gamma(5,2/p-3/10)]"},

      {FamilyId::f334(3), {2}, {}, {3, 4, 5, 6, 8, 12}, {5, 6}, {}, "[Gamma(p,1/p)]"},
      {FamilyId::f334(4), {2}, {}, {3, 4, 5, 6, 8, 12}, {4, 5, 6, 8, 12}, {}, "T(p,S1), [S(p,sigma4-bar)]"},
      {FamilyId::f334(5), {2}, {}, {3, 4, 5}, {4, 5}, {}, "T(p,S2), C(p,G27), BH7"},
      {FamilyId::f334(6), {}, {2}, {3, 4, 5}, {3, 4, 5}, {}, "T(p,E1), [S(p,sigma1)]"},
      {FamilyId::f334(7), {}, {}, {2, 7}, {}, {}, "T(p,H1-bar)"},

      {FamilyId::f23n(3), {2, 3}, {4}, {5, 6, 7, 8, 9, 10, 12, 18}, {9}, {}, "T(p,S3), [Gamma(p,1/p+1/2)]"},
      {FamilyId::f23n(4), {2}, {3}, {4, 5, 6, 8, 12}, {}, {}, "T(p,S4), C(p,G26), [Gamma(p,3/p-1/2)]"},
      {FamilyId::f23n(5), {2}, {}, {3, 4, 5, 10}, {}, {}, "T(p,S5), [S(p,sigma10)]"},
      {FamilyId::f23n(6), {}, {2}, {3, 4, 6}, {}, {}, "T(p,E3)"},

      {FamilyId::f344(), {}, {2}, {3, 4, 6, 12}, {4}, {3, 6, 12}, "T(p,E2)"},
  });
  return entries;
}

std::optional<CatalogEntry> find_entry(const FamilyId& family, int p) {
  for (const CatalogEntry& e : catalog())
    if (e.family == family && e.p == p) return e;
  return std::nullopt;
}

ReflectionParams family_parameters(const FamilyId& f, int p) {
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r5 = std::sqrt(5.0), r7 = std::sqrt(7.0);
  auto e = [](std::int64_t n, std::int64_t d) { return unit_phase(q(n, d)); };
  ReflectionParams out;
  out.p = p;
  switch (f.kind) {
    case FamilyKind::ThreeFold: {
      Complex tau;
      if (f.n == 3) tau = -e(-1, 3 * f.m);
      else if (f.n == f.m) tau = e(2, 3 * f.n) + e(-1, 3 * f.n);
      else if (f.n == 4 && f.m == 3) tau = Complex(-1.0, -r7) / 2.0;
      else if (f.n == 4 && f.m == 5) tau = e(-1, 18) * Complex(r5, r3) / 2.0;
      else if (f.n == 5 && f.m == 3) tau = (1.0 + r5) / 2.0;
      else if (f.n == 6 && f.m == 4) tau = Complex(-1.0, r2);
      else throw Error(ErrorCode::UnknownEntry, f.str());
      out.rho = out.sigma = out.tau = tau;
      return out;
    }
    case FamilyKind::TwoFold: {
      Complex rho;
      if (f.n == 3 && f.m == 3) rho = e(1, 6);
      else if (f.n == 3 && f.m == 4) rho = Complex(1.0, r7) / 2.0;
      else if (f.n == 3 && f.m == 5) rho = -e(1, 5) - e(2, 5);
      else if (f.n == 4 && f.m == 3) rho = 1.0;
      else if (f.n == 4 && f.m == 4) rho = Complex(1.0, 1.0);
      else if (f.n == 5 && f.m == 4) rho = e(1, 6) * Complex(r5, -r3) / 2.0;
      else if (f.n == 5 && f.m == 5) rho = e(1, 5) + 1.0;
      else throw Error(ErrorCode::UnknownEntry, f.str());
      out.rho = rho;
      out.sigma = out.tau = std::sqrt(2.0 * rho.real());
      return out;
    }
    case FamilyKind::F334: {
      Complex rho;
      switch (f.n) {
        case 3: rho = Complex(1.0, 1.0); break;
        case 4: rho = Complex(1.0, r7) / 2.0; break;
        case 5: rho = e(1, 3) * Complex(r5, -r3) / 2.0; break;
        case 6: rho = Complex(0.0, r2); break;
        case 7: rho = e(3, 7) * Complex(-1.0, r7) / 2.0; break;
        default: throw Error(ErrorCode::UnknownEntry, f.str());
      }
      out.rho = rho;
      out.sigma = out.tau = 1.0;
      return out;
    }
    case FamilyKind::F23n:
      if (f.n < 3 || f.n > 6) throw Error(ErrorCode::UnknownEntry, f.str());
      out.rho = 2.0 * std::cos(kPi / f.n);
      out.sigma = 0.0;
      out.tau = 1.0;
      return out;
    case FamilyKind::F344:
      out.rho = out.tau = r2;
      out.sigma = e(1, 6);
      return out;
  }
  throw Error(ErrorCode::UnknownEntry, f.str());
}

HgParameters expected_parameters(const FamilyId& f, int p) {
  const RationalAngle P = q(1, p);
  switch (f.kind) {
    case FamilyKind::ThreeFold: {
      const Angles alpha{q(1, 3) - P / 3, q(2, 3) - P / 3, q(1) - P / 3};
      Angles beta;
      const int k = f.m;
      if (f.n == 3) beta = {q(1, 6 * k), q(1, 2) - q(1, 3 * k), q(1, 2) + q(1, 6 * k)};
      else if (f.n == 4 && f.m == 3) beta = {q(3, 7), q(5, 7), q(6, 7)};
      else if (f.n == 4 && f.m == 4) beta = {q(1, 12), q(1, 6), q(3, 4)};
      else if (f.n == 4 && f.m == 5) beta = {q(1, 9), q(13, 90), q(67, 90)};
      else if (f.n == 5 && f.m == 3) beta = {q(0), q(1, 5), q(4, 5)};
      else if (f.n == 5 && f.m == 5) beta = {q(1, 10), q(2, 15), q(23, 30)};
      else if (f.n == 6 && f.m == 4) beta = {q(1, 8), q(3, 8), q(1, 2)};
      else throw Error(ErrorCode::UnknownEntry, f.str());
      return HgParameters::make(alpha, beta);
    }
    case FamilyKind::TwoFold: {
      const Angles alpha{q(1, 2) - P / 2, q(1, 2), q(1) - P / 2};
      Angles beta;
      if (f.n == 3 && f.m == 3) beta = {q(1, 12), q(1, 3), q(7, 12)};
      else if (f.n == 3 && f.m == 4) beta = {q(1, 7), q(2, 7), q(4, 7)};
      else if (f.n == 3 && f.m == 5) beta = {q(1, 15), q(1, 5), q(11, 15)};
      else if (f.n == 4 && f.m == 3) beta = {q(0), q(1, 3), q(2, 3)};
      else if (f.n == 4 && f.m == 4) beta = {q(1, 8), q(1, 4), q(5, 8)};
      else if (f.n == 5 && f.m == 4) beta = {q(1, 15), q(4, 15), q(2, 3)};
      else if (f.n == 5 && f.m == 5) beta = {q(3, 20), q(1, 5), q(13, 20)};
      else throw Error(ErrorCode::UnknownEntry, f.str());
      return HgParameters::make(alpha, beta);
    }
    case FamilyKind::F334:
    case FamilyKind::F23n: {
      const Angles alpha{q(1, 2) - q(1, f.n), q(1, 2) + q(1, f.n), q(1) - P};
      Angles beta;
      if (f.kind == FamilyKind::F334) {
        switch (f.n) {
          case 3: beta = {q(1, 8), q(1, 4), q(5, 8)}; break;
          case 4: beta = {q(1, 7), q(2, 7), q(4, 7)}; break;
          case 5: beta = {q(2, 15), q(1, 3), q(8, 15)}; break;
          case 6: beta = {q(1, 8), q(3, 8), q(1, 2)}; break;
          case 7: beta = {q(23, 42), q(4, 7), q(37, 42)}; break;
          default: throw Error(ErrorCode::UnknownEntry, f.str());
        }
      } else {
        switch (f.n) {
          case 3: beta = {q(0), q(1, 4), q(3, 4)}; break;
          case 4: beta = {q(0), q(1, 3), q(2, 3)}; break;
          case 5: beta = {q(0), q(2, 5), q(3, 5)}; break;
          case 6: beta = {q(0), q(1, 2), q(1, 2)}; break;
          default: throw Error(ErrorCode::UnknownEntry, f.str());
        }
      }
      return HgParameters::make(alpha, beta);
    }
    case FamilyKind::F344:
      return HgParameters::make({q(0), q(1, 3) - P, q(1) - P}, {q(1, 6) - P / 2, q(1, 2), q(2, 3) - P / 2});
  }
  throw Error(ErrorCode::UnknownEntry, f.str());
}

}  // namespace hgm
