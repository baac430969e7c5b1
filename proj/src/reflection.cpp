#include "hgm/reflection.hpp"

#include <cmath>

namespace hgm {

namespace {

const Complex kI(0.0, 1.0);

std::optional<int> match_two_cos(double x, int n_max, const Tolerance& tol) {
  for (int n = 2; n <= n_max; ++n)
    if (std::abs(x - 2.0 * std::cos(kPi / n)) < tol.eps) return n;
  return std::nullopt;
}

}  // namespace

ReflectionTriple mostow_generators(const ReflectionParams& params, const Tolerance& tol) {
  if (std::abs(params.p) < 2) throw Error(ErrorCode::InvalidArgument, "|p| must be at least 2");
  const Complex z = unit_phase(RationalAngle(1, params.p));
  const Complex e = unit_phase(RationalAngle(1, 2 * params.p));
  const Complex eb = std::conj(e);
  const Complex rho = params.rho, sigma = params.sigma, tau = params.tau;
  const double s = 2.0 * std::sin(kPi / params.p);

  ReflectionTriple t;
  t.params = params;
  t.R1 = {z, rho, -std::conj(tau), 0.0, 1.0, 0.0, 0.0, 0.0, 1.0};
  t.R2 = {1.0, 0.0, 0.0, -z * std::conj(rho), z, sigma, 0.0, 0.0, 1.0};
  t.R3 = {1.0, 0.0, 0.0, 0.0, 1.0, 0.0, z * tau, -z * std::conj(sigma), z};
  t.H = {s,
         -kI * eb * rho,
         kI * eb * std::conj(tau),
         kI * e * std::conj(rho),
         s,
         -kI * eb * sigma,
         -kI * e * tau,
         kI * e * std::conj(sigma),
         s};

  for (const CMat3* r : {&t.R1, &t.R2, &t.R3}) {
    if (std::abs(r->det() - z) > tol.eps || !is_reflection_defect(*r, tol))
      throw Error(ErrorCode::InvalidArgument, "generator is not a reflection of determinant e^{2 pi i/p}");
  }
  return t;
}

std::string BraidSignature::str() const {
  auto f = [](const std::optional<int>& x) { return x ? std::to_string(*x) : std::string("inf"); };
  return "(" + f(v[0]) + "," + f(v[1]) + "," + f(v[2]) + ";" + f(v[3]) + ")";
}

BraidCheck braid_check(const CMat3& A, const CMat3& B, int n, const Tolerance& tol) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "braid length must be at least 2");
  CMat3 left = CMat3::identity(), right = CMat3::identity();
  for (int i = 0; i < n; ++i) {
    left = left * (i % 2 == 0 ? A : B);
    right = right * (i % 2 == 0 ? B : A);
  }
  BraidCheck out;
  const Comparison c = compare(left, right, tol);
  out.holds = c.relation == Relation::Entrywise;
  out.residual = c.residual;
  if (c.relation == Relation::Projective) out.projective_scalar = c.scalar;
  return out;
}

bool braid_holds(const CMat3& A, const CMat3& B, int n, const Tolerance& tol) {
  return braid_check(A, B, n, tol).holds;
}

std::optional<int> braid_order(const CMat3& A, const CMat3& B, int n_max, const Tolerance& tol) {
  for (int n = 2; n <= n_max; ++n)
    if (braid_holds(A, B, n, tol)) return n;
  return std::nullopt;
}

BraidSignature braiding_parameters(const ReflectionParams& params, int n_max, const Tolerance& tol) {
  BraidSignature out;
  const double values[4] = {std::abs(params.sigma), std::abs(params.tau), std::abs(params.rho),
                            std::abs(params.sigma * params.tau - std::conj(params.rho))};
  for (int k = 0; k < 4; ++k) out.v[k] = match_two_cos(values[k], n_max, tol);
  return out;
}

std::array<std::pair<CMat3, CMat3>, 4> braid_pairs(const ReflectionTriple& t, const Tolerance& tol) {
  const CMat3 conj_r2 = inverse(t.R3, tol) * t.R2 * t.R3;
  return {{{t.R2, t.R3}, {t.R3, t.R1}, {t.R1, t.R2}, {t.R1, conj_r2}}};
}

BraidSignature braid_orders(const ReflectionTriple& t, int n_max, const Tolerance& tol) {
  BraidSignature out;
  const auto pairs = braid_pairs(t, tol);
  for (int k = 0; k < 4; ++k) out.v[k] = braid_order(pairs[k].first, pairs[k].second, n_max, tol);
  return out;
}

double form_residual(const ReflectionTriple& t) {
  double worst = 0.0;
  for (const CMat3* r : {&t.R1, &t.R2, &t.R3}) worst = std::max(worst, distance(r->adjoint() * t.H * *r, t.H));
  return worst;
}

double trace_formula_residual(const ReflectionTriple& t, const Tolerance& tol) {
  const ReflectionParams& q = t.params;
  const Complex z = unit_phase(RationalAngle(1, q.p));
  const auto pairs = braid_pairs(t, tol);
  const double lengths[4] = {std::abs(q.sigma), std::abs(q.tau), std::abs(q.rho),
                             std::abs(q.sigma * q.tau - std::conj(q.rho))};
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    const Complex expected = z * (2.0 - lengths[k] * lengths[k]) + 1.0;
    worst = std::max(worst, std::abs((pairs[k].first * pairs[k].second).trace() - expected));
  }
  return worst;
}

}  // namespace hgm
