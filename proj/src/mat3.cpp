#include "hgm/mat3.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace hgm {

namespace {

Eigen::Matrix3cd to_eigen(const CMat3& m) {
  Eigen::Matrix3cd out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(r, c) = m(r, c);
  return out;
}

Complex eval_cubic(const std::array<Complex, 3>& c, Complex t) { return ((t + c[0]) * t + c[1]) * t + c[2]; }

Complex eval_cubic_deriv(const std::array<Complex, 3>& c, Complex t) {
  return (3.0 * t + 2.0 * c[0]) * t + c[1];
}

}  // namespace

CMat3::CMat3(std::initializer_list<Complex> entries) {
  if (entries.size() != 9) throw Error(ErrorCode::InvalidArgument, "CMat3 needs nine entries");
  std::copy(entries.begin(), entries.end(), e_.begin());
}

CMat3 CMat3::identity() { return diag(1.0, 1.0, 1.0); }

CMat3 CMat3::diag(Complex a, Complex b, Complex c) {
  CMat3 m;
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

CMat3 CMat3::adjoint() const {
  CMat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(r, c) = std::conj((*this)(c, r));
  return out;
}

CMat3 CMat3::conj() const {
  CMat3 out;
  for (int i = 0; i < 9; ++i) out.e_[i] = std::conj(e_[i]);
  return out;
}

CMat3 CMat3::transpose() const {
  CMat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(r, c) = (*this)(c, r);
  return out;
}

Complex CMat3::trace() const { return e_[0] + e_[4] + e_[8]; }

Complex CMat3::det() const {
  const CMat3& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

double CMat3::max_abs() const {
  double best = 0.0;
  for (const Complex& z : e_) best = std::max(best, std::abs(z));
  return best;
}

double CMat3::norm() const { return singular_values(*this)[0]; }

CMat3 operator*(const CMat3& a, const CMat3& b) {
  CMat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
  return out;
}

CMat3 operator+(const CMat3& a, const CMat3& b) {
  CMat3 out;
  for (int i = 0; i < 9; ++i) out.e_[i] = a.e_[i] + b.e_[i];
  return out;
}

CMat3 operator-(const CMat3& a, const CMat3& b) {
  CMat3 out;
  for (int i = 0; i < 9; ++i) out.e_[i] = a.e_[i] - b.e_[i];
  return out;
}

CMat3 operator*(Complex s, const CMat3& a) {
  CMat3 out;
  for (int i = 0; i < 9; ++i) out.e_[i] = s * a.e_[i];
  return out;
}

double distance(const CMat3& a, const CMat3& b) { return (a - b).max_abs(); }

std::pair<Complex, Complex> det_trace(const CMat3& m) { return {m.det(), m.trace()}; }

CMat3 inverse(const CMat3& m, const Tolerance& tol) {
  Complex d = m.det();
  if (std::abs(d) <= tol.eps) throw Error(ErrorCode::SingularMatrix, "determinant below tolerance");
  CMat3 adj;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      int r1 = (c + 1) % 3, r2 = (c + 2) % 3;
      int c1 = (r + 1) % 3, c2 = (r + 2) % 3;
      adj(r, c) = m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1);
    }
  }
  return (1.0 / d) * adj;
}

CMat3 power(const CMat3& m, int k, const Tolerance& tol) {
  CMat3 base = k < 0 ? inverse(m, tol) : m;
  CMat3 out = CMat3::identity();
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

std::array<Complex, 3> char_poly(const CMat3& m) {
  Complex minors = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                   m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  return {-m.trace(), minors, -m.det()};
}

std::array<Complex, 3> solve_cubic(const std::array<Complex, 3>& c) {
  const Complex a = c[0], b = c[1];
  const Complex shift = -a / 3.0;
  const Complex p = b - a * a / 3.0;
  const Complex q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c[2];

  const Complex disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  Complex u3 = -q / 2.0 + disc;
  Complex alt = -q / 2.0 - disc;
  if (std::abs(alt) > std::abs(u3)) u3 = alt;

  std::array<Complex, 3> roots;
  if (std::abs(u3) == 0.0) {
    roots.fill(shift);
    return roots;
  }
  const Complex u = std::polar(std::cbrt(std::abs(u3)), std::arg(u3) / 3.0);
  const Complex v = -p / (3.0 * u);
  const Complex w(-0.5, std::sqrt(3.0) / 2.0);
  roots[0] = u + v + shift;
  roots[1] = w * u + std::conj(w) * v + shift;
  roots[2] = std::conj(w) * u + w * v + shift;
  return roots;
}

std::array<Complex, 3> eigen_cubic(const CMat3& m, const Tolerance&) {
  const auto c = char_poly(m);
  auto roots = solve_cubic(c);

  // Cardano splits a double root by ~sqrt(machine eps); the pair mean is accurate.
  std::array<bool, 3> clustered{};
  const double scale = 1.0 + std::max({std::abs(roots[0]), std::abs(roots[1]), std::abs(roots[2])});
  const double radius = 1e-6 * scale;
  auto close = [&](int i, int j) { return std::abs(roots[i] - roots[j]) < radius; };
  if (close(0, 1) && close(1, 2) && close(0, 2)) {
    roots.fill(-c[0] / 3.0);
    clustered.fill(true);
  } else {
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (!clustered[i] && !clustered[j] && close(i, j)) {
          Complex mean = 0.5 * (roots[i] + roots[j]);
          roots[i] = roots[j] = mean;
          clustered[i] = clustered[j] = true;
        }
      }
    }
  }

  for (int i = 0; i < 3; ++i) {
    if (clustered[i]) continue;
    for (int it = 0; it < 2; ++it) {
      Complex f = eval_cubic(c, roots[i]);
      Complex df = eval_cubic_deriv(c, roots[i]);
      if (std::abs(df) == 0.0) break;
      Complex next = roots[i] - f / df;
      if (std::abs(eval_cubic(c, next)) >= std::abs(f)) break;
      roots[i] = next;
    }
  }

  std::sort(roots.begin(), roots.end(), [](Complex x, Complex y) {
    double tx = turns(x), ty = turns(y);
    if (tx != ty) return tx < ty;
    return std::abs(x) < std::abs(y);
  });
  return roots;
}

std::array<double, 3> singular_values(const CMat3& m) {
  const Eigen::Vector3d s = Eigen::JacobiSVD<Eigen::Matrix3cd>(to_eigen(m)).singularValues();
  return {s(0), s(1), s(2)};
}

bool is_reflection_defect(const CMat3& m, const Tolerance& tol) {
  const auto s = singular_values(m - CMat3::identity());
  const double eps = tol.eps * (1.0 + m.norm());
  return s[0] > eps && s[1] <= eps && s[2] <= eps;
}

Signature Signature::normalized() const {
  if (negative > positive) return {negative, positive, zero};
  return *this;
}

std::string Signature::str() const {
  return "(" + std::to_string(positive) + "," + std::to_string(negative) + "," + std::to_string(zero) + ")";
}

std::array<double, 3> hermitian_eigenvalues(const CMat3& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(to_eigen(h), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev(0), ev(1), ev(2)};
}

Signature hermitian_signature(const CMat3& h, const Tolerance& tol, std::optional<double> zero_rel) {
  if (distance(h, h.adjoint()) > tol.eps * std::max(1.0, h.max_abs()))
    throw Error(ErrorCode::NotHermitian, "H differs from H* beyond tolerance");
  const auto ev = hermitian_eigenvalues(h);
  double scale = 0.0;
  for (double x : ev) scale = std::max(scale, std::abs(x));
  const double band = zero_rel.value_or(tol.eps) * scale;
  Signature s;
  for (double x : ev) {
    if (scale == 0.0 || std::abs(x) <= band)
      ++s.zero;
    else if (x > 0)
      ++s.positive;
    else
      ++s.negative;
  }
  return s;
}

std::optional<Complex> projective_equal(const CMat3& m, const CMat3& n, const Tolerance& tol) {
  int best = -1;
  double best_abs = 0.0;
  for (int i = 0; i < 9; ++i) {
    double a = std::abs(n(i / 3, i % 3));
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  if (best < 0) return std::nullopt;
  const Complex lambda = m(best / 3, best % 3) / n(best / 3, best % 3);
  if (distance(m, lambda * n) <= tol.eps) return lambda;
  return std::nullopt;
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Entrywise: return "entrywise";
    case Relation::Projective: return "projective";
    case Relation::Unequal: return "unequal";
  }
  return "unequal";
}

Comparison compare(const CMat3& m, const CMat3& n, const Tolerance& tol) {
  Comparison out;
  out.residual = distance(m, n);
  if (out.residual <= tol.eps) {
    out.relation = Relation::Entrywise;
    return out;
  }
  if (auto s = projective_equal(m, n, tol)) {
    out.relation = Relation::Projective;
    out.scalar = *s;
  }
  return out;
}

}  // namespace hgm
