#pragma once

#include <array>
#include <optional>
#include <string>

#include "hgm/mat3.hpp"

namespace hgm {

struct ReflectionParams {
  int p = 2;  // may be negative; |p| >= 2
  Complex rho;
  Complex sigma;
  Complex tau;
};

struct ReflectionTriple {
  ReflectionParams params;
  CMat3 R1, R2, R3;
  CMat3 H;
};

ReflectionTriple mostow_generators(const ReflectionParams& params, const Tolerance& tol = {});

// Entries are nullopt for "no braid relation up to n_max".
struct BraidSignature {
  std::array<std::optional<int>, 4> v;  // a, b, c, d

  std::string str() const;
  friend bool operator==(const BraidSignature&, const BraidSignature&) = default;
};

struct BraidCheck {
  bool holds = false;  // entrywise
  std::optional<Complex> projective_scalar;
  double residual = 0.0;
};

BraidCheck braid_check(const CMat3& A, const CMat3& B, int n, const Tolerance& tol = {});
bool braid_holds(const CMat3& A, const CMat3& B, int n, const Tolerance& tol = {});
std::optional<int> braid_order(const CMat3& A, const CMat3& B, int n_max = 24, const Tolerance& tol = {});

// |sigma|, |tau|, |rho|, |sigma tau - conj(rho)| matched against 2 cos(pi/n).
BraidSignature braiding_parameters(const ReflectionParams& params, int n_max = 24, const Tolerance& tol = {});

// Braid orders of (R2,R3), (R3,R1), (R1,R2), (R1, R3^-1 R2 R3).
BraidSignature braid_orders(const ReflectionTriple& t, int n_max = 24, const Tolerance& tol = {});

// The four designated pairs, in (a, b, c, d) order.
std::array<std::pair<CMat3, CMat3>, 4> braid_pairs(const ReflectionTriple& t, const Tolerance& tol = {});

double form_residual(const ReflectionTriple& t);

// Largest deviation of the four pair traces from e^{2 pi i/p}(2 - |x|^2) + 1.
double trace_formula_residual(const ReflectionTriple& t, const Tolerance& tol = {});

}  // namespace hgm
