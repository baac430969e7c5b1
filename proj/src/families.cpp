#include "hgm/families.hpp"

#include <algorithm>
#include <cmath>

namespace hgm {

namespace {

const Complex kI(0.0, 1.0);

CMat3 companion_rows(Complex x0, Complex x1, Complex x2) { return {x0, x1, x2, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0}; }

bool literal_companion_shape(const CMat3& m) {
  return m(1, 0) == Complex(1.0) && m(1, 1) == Complex(0.0) && m(1, 2) == Complex(0.0) &&
         m(2, 0) == Complex(0.0) && m(2, 1) == Complex(1.0) && m(2, 2) == Complex(0.0);
}

double max_abs(const std::array<double, 3>& v) {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

}  // namespace

Assignment FamilyBuild::letters() const {
  Assignment out{{"R1", triple.R1}, {"R2", triple.R2}, {"R3", triple.R3},
                 {"A", A},          {"B", B},          {"C", conjugator}};
  if (symmetry) {
    const char* name = family.kind == FamilyKind::ThreeFold ? "J" : family.kind == FamilyKind::TwoFold ? "Q" : "S";
    out.emplace(name, *symmetry);
  }
  return out;
}

FamilyBuild construct(const FamilyId& family, int p, const Tolerance& tol) {
  FamilyBuild b;
  b.family = family;
  b.p = p;
  b.triple = mostow_generators(family_parameters(family, p), tol);
  b.expected_params = expected_parameters(family, p);
  const ReflectionTriple& t = b.triple;
  const Complex rho = t.params.rho;
  const Complex zm = unit_phase(RationalAngle(-1, p));  // e^{-2 pi i/p}

  switch (family.kind) {
    case FamilyKind::ThreeFold: {
      const Complex tau = t.params.tau;
      const CMat3 J = {0.0, 0.0, zm, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0};
      b.symmetry = J;
      b.conjugator = CMat3::identity();
      b.A = J;
      b.B = t.R1 * J;
      b.A_closed = companion_rows(0.0, 0.0, zm);
      b.B_closed = companion_rows(tau, -std::conj(tau), 1.0);
      b.reflection = t.R1;
      b.reflection_name = "R1";
      break;
    }
    case FamilyKind::TwoFold: {
      const Complex s = t.params.sigma;
      const CMat3 Q = {rho, 1.0 - rho - std::conj(rho), s, 1.0, 0.0, 0.0, 0.0, s, -1.0};
      const CMat3 C = {1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, s};
      const CMat3 Ci = inverse(C, tol);
      b.symmetry = Q;
      b.conjugator = C;
      b.A = Ci * inverse(t.R1, tol) * Q * C;
      b.B = Ci * Q * C;
      b.A_closed = companion_rows(-1.0, zm, zm);
      b.B_closed = companion_rows(rho - 1.0, 1.0 - std::conj(rho), 1.0);
      b.reflection = Ci * t.R1 * C;
      b.reflection_name = "R1";
      break;
    }
    case FamilyKind::F334: {
      const CMat3 T = t.R1 * t.R2 * t.R3;
      const CMat3 C = {0.0, 1.0, -rho, 1.0, 1.0 - rho, -1.0, 0.0, -1.0, rho - 1.0};
      const CMat3 Ci = inverse(C, tol);
      const double tr = 2.0 * rho.real();
      b.conjugator = C;
      b.A = Ci * (zm * (inverse(t.R2, tol) * T)) * C;
      b.B = Ci * (zm * T) * C;
      b.A_closed = companion_rows(tr - 1.0 + zm, -1.0 + zm * (1.0 - tr), zm);
      b.B_closed = companion_rows(rho - 1.0, 1.0 - std::conj(rho), 1.0);
      b.reflection = Ci * t.R2 * C;
      b.reflection_name = "R2";
      break;
    }
    case FamilyKind::F23n: {
      const double r = rho.real();
      const CMat3 C = {0.0, -zm, zm, 0.0, 0.0, zm * r, 1.0, r * r - 2.0, 1.0};
      const CMat3 Ci = inverse(C, tol);
      b.conjugator = C;
      b.A = Ci * (zm * (t.R1 * t.R2)) * C;
      b.B = Ci * (zm * (t.R3 * t.R1 * t.R2)) * C;
      b.A_closed = companion_rows(2.0 - r * r + zm, zm * r * r - 2.0 * zm - 1.0, zm);
      b.B_closed = companion_rows(2.0 - r * r, r * r - 2.0, 1.0);
      b.reflection = Ci * t.R3 * C;
      b.reflection_name = "R3";
      break;
    }
    case FamilyKind::F344: {
      const Complex w = unit_phase(RationalAngle(1, 3));
      const Complex wb = std::conj(w);
      const double r2 = std::sqrt(2.0);
      const CMat3 S = {1.0, 0.0, 0.0, 0.0, 0.0, w, 0.0, -1.0, -wb};
      const CMat3 C = {0.0, -r2, r2 * w * zm, 0.0, w, -w, 1.0 / zm, -1.0 / zm, 0.0};
      const CMat3 Ci = inverse(C, tol);
      b.symmetry = S;
      b.conjugator = C;
      b.A = Ci * (zm * (S * t.R1)) * C;
      b.B = Ci * (zm * (t.R3 * S * t.R1)) * C;
      b.A_closed = companion_rows(1.0 - wb * zm, wb * zm - w * zm * zm, w * zm * zm);
      b.B_closed = companion_rows(-1.0, w * zm, w * zm);
      b.reflection = Ci * t.R3 * C;
      b.reflection_name = "R3";
      break;
    }
  }
  return b;
}

FamilyBuild build(const FamilyId& family, int p, const Tolerance& tol) {
  auto entry = find_entry(family, p);
  if (!entry) throw Error(ErrorCode::UnknownEntry, family.str() + " with p=" + std::to_string(p));
  if (entry->excluded)
    throw Error(ErrorCode::ExcludedFamily, family.str() + " with p=" + std::to_string(p) + " (3 divides p)");
  return construct(family, p, tol);
}

GeometryReport verify_geometry(const CatalogEntry& entry, const CheckConfig& cfg) {
  GeometryReport g;
  const ReflectionParams params = family_parameters(entry.family, entry.p);
  const ReflectionTriple t = mostow_generators(params, cfg.tol);
  g.signature = hermitian_signature(t.H, cfg.tol, kDegenerateBand).normalized();
  g.classification = geometry_of(g.signature);
  g.classification_match = g.classification == entry.classification;
  g.header = entry.family.header();
  g.criterion = braiding_parameters(params, cfg.max_braid, cfg.tol);
  g.orders = braid_orders(t, cfg.max_braid, cfg.tol);
  g.braid_match = g.header == g.criterion && g.header == g.orders;
  g.trace_residual = trace_formula_residual(t, cfg.tol);
  g.form_residual = form_residual(t);
  return g;
}

VerificationReport verify_entry(const CatalogEntry& entry, const CheckConfig& cfg) {
  VerificationReport r;
  r.entry = entry;
  r.params_expected = expected_parameters(entry.family, entry.p);
  r.geometry = verify_geometry(entry, cfg);
  const double eps = cfg.tol.eps;

  const GeometryReport& g = r.geometry;
  if (!g.classification_match)
    r.failures.push_back("signature " + g.signature.str() + " does not match " + to_string(entry.classification));
  if (!g.braid_match)
    r.failures.push_back("braiding: header " + g.header.str() + ", criterion " + g.criterion.str() + ", orders " +
                         g.orders.str());
  if (!(g.trace_residual <= eps)) r.failures.push_back("trace formulas off by " + std::to_string(g.trace_residual));
  if (!(g.form_residual <= eps)) r.failures.push_back("form not preserved, residual " + std::to_string(g.form_residual));

  if (entry.excluded) {
    r.pass = r.failures.empty();
    return r;
  }

  const FamilyBuild b = build(entry.family, entry.p, cfg.tol);
  r.closed_form_residual = std::max(distance(b.A, b.A_closed), distance(b.B, b.B_closed));
  r.companion_shape =
      literal_companion_shape(b.A_closed) && literal_companion_shape(b.B_closed) && r.closed_form_residual <= eps;
  if (!r.companion_shape)
    r.failures.push_back("companion shape: closed-form residual " + std::to_string(r.closed_form_residual));

  const CMat3 ba = b.B * inverse(b.A, cfg.tol);
  r.reflection_defect = is_reflection_defect(ba, cfg.tol);
  r.reflection_residual = distance(ba, b.reflection);
  if (!r.reflection_defect) r.failures.push_back("B A^-1 is not a reflection");
  if (!(r.reflection_residual <= eps))
    r.failures.push_back("B A^-1 differs from conjugated " + b.reflection_name + " by " +
                         std::to_string(r.reflection_residual));

  try {
    r.params_computed = recover_parameters(b.A, b.B, cfg.max_den, cfg.tol);
  } catch (const Error& e) {
    r.recovery_error = e.what();
    r.failures.push_back(std::string("parameter recovery: ") + e.what());
  }
  if (r.params_computed) {
    r.shift_used = shift_to_match(*r.params_computed, r.params_expected);
    r.params_match = r.shift_used.has_value();
    r.distinct_ab = !r.params_computed->shares_eigenvalue();
    if (!r.params_match)
      r.failures.push_back("parameters " + r.params_computed->str() + " do not match " + r.params_expected.str() +
                           " up to scalar shift");
    if (r.params_computed->alpha_distinct()) {
      try {
        r.hypergeom_signature = classify(*r.params_computed, cfg.tol);
      } catch (const Error&) {
      }
    }
  }
  r.pass = r.failures.empty();
  return r;
}

IdentityCheck check_identity(const std::string& lhs, const std::string& rhs, const Assignment& letters,
                             const Tolerance& tol) {
  IdentityCheck c;
  c.lhs = lhs;
  c.rhs = rhs;
  const CMat3 l = evaluate_word(GroupWord::parse(lhs), letters, tol);
  const CMat3 r = evaluate_word(GroupWord::parse(rhs), letters, tol);
  const Comparison cmp = compare(l, r, tol);
  c.relation = cmp.relation;
  c.scalar = cmp.scalar;
  c.residual = cmp.residual;
  return c;
}

IdentityReport verify_word_identities(const FamilyId& family, int p, const Tolerance& tol) {
  const FamilyBuild b = build(family, p, tol);
  std::vector<std::pair<std::string, std::string>> ids;
  switch (family.kind) {
    case FamilyKind::ThreeFold:
      ids = {{"R2", "J R1 J^-1"},
             {"R3", "J^-1 R1 J"},
             {"J^3", "1"},
             {"R1", "B A^-1"},
             {"R2", "A (B A^-1) A^-1"},
             {"R3", "A^-1 (B A^-1) A"}};
      break;
    case FamilyKind::TwoFold:
      ids = {{"Q R1 Q^-1", "R1 R2 R1^-1"},
             {"Q R2 Q^-1", "R1 R3 R1 R3^-1 R1^-1"},
             {"Q R3 Q^-1", "R1 R3 R1^-1"},
             {"Q^2", "R1 R2 R3"},
             {"R2", "R1^-1 Q R1 Q^-1 R1"},
             {"R3", "R2^-1 R1^-1 Q^2"},
             {"R3", "(R1^-1 Q)^2"},
             {"B A^-1", "C^-1 R1 C"}};
      break;
    case FamilyKind::F334:
      ids = {{"R2 (R1 R2 R3)^2 R2 (R1 R2 R3)^-2 R2^-1", "R1"},
             {"(R1 R2 R3)^2 R2^-1 (R1 R2 R3)^-2 R2^-1 (R1 R2 R3)", "R3"},
             {"(R1 R2 R3) (R2^-1 R1 R2 R3)^-1", "R2"},
             {"B A^-1", "C^-1 R2 C"}};
      break;
    case FamilyKind::F23n:
      ids = {{"R1", "R3 R1 R3 R1^-1 R3^-1"},
             {"R1", "R3 (R1 R2) R3 (R1 R2)^-1 R3^-1"},
             {"R2", "R3 (R1 R2) R3^-1 (R1 R2)^-1 R3^-1 (R1 R2)"},
             {"B A^-1", "C^-1 R3 C"}};
      break;
    case FamilyKind::F344: {
      ids = {{"S R1 S^-1", "R1"},
             {"S R2 S^-1", "R3"},
             {"S R3 S^-1", "R3^-1 R2 R3"},
             {"S R3^-1 R2 R3 S^-1", "R2"},
             {"S R2 R3 S^-1", "R2 R3"},
             {"S^3", "1"}};
      // p = 3m + 1 gives (S R1)^{3m} = R1^-1; p = 3m - 1 gives R1.
      if (p % 3 == 1)
        ids.push_back({"(S R1)^" + std::to_string(p - 1), "R1^-1"});
      else if (p % 3 == 2)
        ids.push_back({"(S R1)^" + std::to_string(p + 1), "R1"});
      ids.push_back({"R2", "S^-1 R3 S"});
      ids.push_back({"B A^-1", "C^-1 R3 C"});
      break;
    }
  }
  IdentityReport out;
  out.family = family;
  out.p = p;
  out.pass = true;
  const Assignment letters = b.letters();
  for (const auto& [l, r] : ids) {
    out.checks.push_back(check_identity(l, r, letters, tol));
    out.pass = out.pass && out.checks.back().relation != Relation::Unequal;
  }
  return out;
}

namespace {

struct BhSpec {
  int id;
  FamilyId host;
  int p;
  const char* A;
  const char* B;
  RationalAngle shift;
  std::vector<std::pair<std::string, std::string>> consequences;
};

const std::vector<BhSpec>& bh_specs() {
  static const std::vector<BhSpec> specs = {
      {2, FamilyId::three_fold(4, 3), 2, "R1 J", "J", {1, 2}, {{"B A^-1", "R1^-1"}}},
      {3, FamilyId::two_fold(3, 4), 2, "Q^-1", "R1 Q^-1", {1, 2}, {{"B A^-1", "R1"}}},
      {4, FamilyId::three_fold(4, 3), 2, "J^-1 R1 J^-1", "(R1 J^-1)^2", {0, 1},
       {{"B A^-1", "R1"}, {"(R1 J^-1)^7", "1"}, {"B^3", "(R1 J^-1)^-1"}, {"J^-1", "A B^3"}}},
      {5, FamilyId::three_fold(5, 3), 2, "R1 J", "J", {0, 1}, {{"B A^-1", "R1^-1"}}},
      {6, FamilyId::three_fold(5, 3), 2, "J^-1 R1 J^-1", "(R1 J^-1)^2", {1, 2},
       {{"B A^-1", "R1"}, {"J^-1", "A B^2"}}},
      {7, FamilyId::f334(5), 2, "R3 R2 R1", "R2 R3 R2 R1", {0, 1},
       {{"A", "(R1 R2 R3)^-1"}, {"B", "(R1 R2 R3 R2^-1)^-1"}, {"B A^-1", "R2"}}},
      {8, FamilyId::f334(5), 2, "R3 R2 R1", "R2 R1", {0, 1}, {{"A", "(R1 R2 R3)^-1"}, {"B A^-1", "R3^-1"}}},
      {9, FamilyId::three_fold(3, 2), 3, "R1 J^-1", "R1^-1 J^-1", {1, 3}, {{"A B^-1", "R1^-1"}, {"R1^3", "1"}}},
      {10, FamilyId::three_fold(3, 2), 3, "J^-1", "R1 J^-1", {2, 3}, {{"A B^-1", "R1^-1"}}},
      {11, FamilyId::three_fold(3, 2), 3, "J^-1", "R1^-1 J^-1", {1, 3}, {{"A B^-1", "R1"}}},
      {12, FamilyId::two_fold(3, 3), 2, "Q", "R1^-1 Q", {1, 2}, {{"B A^-1", "R1^-1"}}},
  };
  return specs;
}

}  // namespace

BhReport bh_identify(int id, const CheckConfig& cfg) {
  const auto& specs = bh_specs();
  auto it = std::find_if(specs.begin(), specs.end(), [&](const BhSpec& s) { return s.id == id; });
  if (it == specs.end()) throw Error(ErrorCode::UnknownId, "no BH group " + std::to_string(id));
  const BhSpec& s = *it;

  BhReport r;
  r.id = id;
  r.host = s.host;
  r.p = s.p;
  r.word_A = s.A;
  r.word_B = s.B;
  r.shift_stated = s.shift;
  for (const BhRow& row : bh_rows())
    if (row.id == id) r.params_table = row.params;

  const FamilyBuild b = build(s.host, s.p, cfg.tol);
  Assignment letters{{"R1", b.triple.R1}, {"R2", b.triple.R2}, {"R3", b.triple.R3}};
  if (b.symmetry) letters.emplace(s.host.kind == FamilyKind::ThreeFold ? "J" : "Q", *b.symmetry);
  const CMat3 A = evaluate_word(GroupWord::parse(s.A), letters, cfg.tol);
  const CMat3 B = evaluate_word(GroupWord::parse(s.B), letters, cfg.tol);
  letters.emplace("A", A);
  letters.emplace("B", B);

  r.params_computed = recover_parameters(A, B, cfg.max_den, cfg.tol);
  r.shift_found = shift_to_match(r.params_computed, r.params_table);
  r.params_match = scalar_shift(r.params_computed, r.shift_stated) == r.params_table;
  r.host_signature = hermitian_signature(b.triple.H, cfg.tol, kDegenerateBand).normalized();
  r.host_definite = r.host_signature == Signature{3, 0, 0};
  r.reflection_defect = is_reflection_defect(B * inverse(A, cfg.tol), cfg.tol);

  bool words_hold = true;
  for (const auto& [l, rhs] : s.consequences) {
    r.consequences.push_back(check_identity(l, rhs, letters, cfg.tol));
    words_hold = words_hold && r.consequences.back().relation != Relation::Unequal;
  }
  r.pass = r.params_match && r.host_definite && r.reflection_defect && words_hold;
  return r;
}

Bh12Decomposition bh12_decomposition(const Tolerance& tol) {
  const BhRow& row = *std::find_if(bh_rows().begin(), bh_rows().end(), [](const BhRow& x) { return x.id == 12; });
  const CompanionPair cp = companion_pair(row.params, tol);
  const Complex w = unit_phase(RationalAngle(1, 3));
  const std::array<std::array<Complex, 3>, 3> lines = {{{1.0, 1.0, -w}, {1.0, w, -1.0}, {1.0, 1.0, -std::conj(w)}}};
  const CMat3 refl = cp.B * inverse(cp.A, tol);

  auto apply = [](const CMat3& m, const std::array<Complex, 3>& v) {
    std::array<Complex, 3> out{};
    for (int r = 0; r < 3; ++r) out[r] = m(r, 0) * v[0] + m(r, 1) * v[1] + m(r, 2) * v[2];
    return out;
  };
  // Index of the line containing v, or -1.
  auto line_of = [&](const std::array<Complex, 3>& v) {
    for (int j = 0; j < 3; ++j) {
      const auto& u = lines[j];
      // u has u[0] = 1, so v is on the line iff v = v[0] u.
      double res = 0.0;
      for (int r = 0; r < 3; ++r) res = std::max(res, std::abs(v[r] - v[0] * u[r]));
      if (std::abs(v[0]) > tol.eps && res <= tol.eps * std::max(1.0, std::abs(v[0]))) return j;
    }
    return -1;
  };

  Bh12Decomposition out;
  out.pass = true;
  for (int k = 0; k < 3; ++k) {
    const CMat3 m = power(cp.A, k, tol) * refl * power(cp.A, -k, tol);
    std::array<bool, 3> hit{};
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
      const int j = line_of(apply(m, lines[i]));
      out.permutation[k][i] = j;
      if (j < 0 || hit[j]) ok = false;
      else hit[j] = true;
    }
    out.permutes[k] = ok;
    out.pass = out.pass && ok;
  }
  return out;
}

FormReport compare_forms(const FamilyId& family, int p, const Tolerance& tol) {
  if (family.kind != FamilyKind::ThreeFold && family.kind != FamilyKind::TwoFold)
    throw Error(ErrorCode::InvalidArgument, "form comparison is defined for three-fold and two-fold families only");
  const FamilyBuild b = build(family, p, tol);
  const ReflectionParams& q = b.triple.params;
  const double sn = std::sin(kPi / p);
  const double s = 2.0 * sn;

  FormReport r;
  r.family = family;
  r.p = p;
  Roots a;
  CMat3 gen_a, gen_b;
  if (family.kind == FamilyKind::ThreeFold) {
    const Complex w = unit_phase(RationalAngle(1, 3)), wb = std::conj(w);
    const Complex zh = unit_phase(RationalAngle(-1, 3 * p));  // e^{-2 pi i/3p}
    const Complex E = unit_phase(RationalAngle(1, 6 * p));    // e^{i pi/3p}
    const Complex tau = q.tau, taub = std::conj(q.tau);
    a = {w * zh, wb * zh, zh};
    r.V = {w * zh / 3.0,  wb * zh / 3.0, zh / 3.0,  1.0 / 3.0,           1.0 / 3.0,
           1.0 / 3.0,     wb * std::conj(zh) / 3.0, w * std::conj(zh) / 3.0, std::conj(zh) / 3.0};
    const Complex d1 = (s - kI * wb * std::conj(E) * tau + kI * w * E * taub) / 3.0;
    const Complex d2 = (s - kI * w * std::conj(E) * tau + kI * wb * E * taub) / 3.0;
    const Complex d3 = (s - kI * std::conj(E) * tau + kI * E * taub) / 3.0;
    const Complex d3_unphased = (s - kI * std::conj(E) * tau + kI * taub) / 3.0;
    r.d_closed = {d1.real(), d2.real(), d3.real()};
    gen_a = *b.symmetry;
    gen_b = b.triple.R1 * *b.symmetry;
    r.VHV = r.V.adjoint() * b.triple.H * r.V;
    r.unphased_d3_residual = std::abs(d3_unphased - r.VHV(2, 2));
    r.closed_residual = std::max({std::abs(d1 - r.VHV(0, 0)), std::abs(d2 - r.VHV(1, 1)), std::abs(d3 - r.VHV(2, 2))});
  } else {
    const Complex eb = unit_phase(RationalAngle(-1, 2 * p));  // e^{-i pi/p}
    const Complex rho = q.rho, rhob = std::conj(q.rho);
    const double root = q.sigma.real();
    a = {-eb, -1.0, eb};
    r.V = {-eb / 2.0, 0.0, eb / 2.0, 0.5, 0.0, 0.5, root / (2.0 * (1.0 - eb)), root / (2.0 * sn),
           root / (2.0 * (1.0 + eb))};
    const Complex d1 = (4.0 * sn * sn - (1.0 + eb) * rho - (1.0 + std::conj(eb)) * rhob) / (4.0 * sn);
    const Complex d2 = (rho + rhob) / (2.0 * sn);
    const Complex d3 = (4.0 * sn * sn - (1.0 - eb) * rho - (1.0 - std::conj(eb)) * rhob) / (4.0 * sn);
    r.d_closed = {d1.real(), d2.real(), d3.real()};
    gen_b = *b.symmetry;
    gen_a = inverse(b.triple.R1, tol) * gen_b;
    r.VHV = r.V.adjoint() * b.triple.H * r.V;
    r.closed_residual = std::max({std::abs(d1 - r.VHV(0, 0)), std::abs(d2 - r.VHV(1, 1)), std::abs(d3 - r.VHV(2, 2))});
  }

  // Columns of V must be eigenvectors of the A generator.
  const double eig_residual = distance(gen_a * r.V, r.V * CMat3::diag(a[0], a[1], a[2]));

  for (int i = 0; i < 3; ++i) {
    r.d_form[i] = r.VHV(i, i).real();
    for (int j = 0; j < 3; ++j)
      if (i != j) r.offdiag_residual = std::max(r.offdiag_residual, std::abs(r.VHV(i, j)));
  }

  const Roots c = c_from_char_poly(a, char_poly(gen_b), tol);
  const Roots dt = d_from_c(c, unit_phase(RationalAngle(1, 2 * p)));
  for (int j = 0; j < 3; ++j) {
    r.d_hypergeom[j] = dt[j].real();
    r.hypergeom_imag = std::max(r.hypergeom_imag, std::abs(dt[j].imag()));
  }

  double xy = 0.0, yy = 0.0;
  for (int j = 0; j < 3; ++j) {
    xy += r.d_form[j] * r.d_hypergeom[j];
    yy += r.d_hypergeom[j] * r.d_hypergeom[j];
  }
  r.factor = yy > 0.0 ? xy / yy : 0.0;
  for (int j = 0; j < 3; ++j)
    r.factor_residual = std::max(r.factor_residual, std::abs(r.d_form[j] - r.factor * r.d_hypergeom[j]));

  const double scale = std::max(1.0, max_abs(r.d_form));
  r.pass = eig_residual <= tol.eps * scale && r.offdiag_residual <= tol.eps && r.closed_residual <= tol.eps &&
           r.hypergeom_imag <= tol.eps && r.factor > 0.0 && r.factor_residual <= tol.eps * scale;
  return r;
}

}  // namespace hgm
