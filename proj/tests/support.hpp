#pragma once

#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <random>

#include "hgm/hypergeom.hpp"
#include "hgm/mat3.hpp"

namespace hgm::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Complex random_complex(double scale = 1.0) { return {uniform(-scale, scale), uniform(-scale, scale)}; }

inline CMat3 random_matrix(double scale = 1.0) {
  CMat3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = random_complex(scale);
  return m;
}

inline RationalAngle random_angle(int max_den) {
  const int den = uniform_int(1, max_den);
  return RationalAngle(uniform_int(0, den - 1), den);
}

// Distinct alpha, no alpha equal to a beta; denominators <= max_den.
inline HgParameters random_parameters(int max_den = 60) {
  for (;;) {
    Angles a, b;
    for (auto& x : a) x = random_angle(max_den);
    for (auto& x : b) x = random_angle(max_den);
    const HgParameters p = HgParameters::make(a, b);
    if (p.alpha_distinct() && !p.shares_eigenvalue()) return p;
  }
}

inline Eigen::Matrix3cd to_eigen(const CMat3& m) {
  Eigen::Matrix3cd e;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) e(r, c) = m(r, c);
  return e;
}

// Eigenvalues from Eigen's QR iteration, sorted by argument.
inline std::array<Complex, 3> oracle_eigenvalues(const CMat3& m) {
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(to_eigen(m), false);
  std::array<Complex, 3> out{es.eigenvalues()(0), es.eigenvalues()(1), es.eigenvalues()(2)};
  std::sort(out.begin(), out.end(), [](Complex x, Complex y) { return turns(x) < turns(y); });
  return out;
}

// Matching distance between two unordered triples.
inline double multiset_distance(std::array<Complex, 3> x, std::array<Complex, 3> y) {
  std::array<int, 3> perm{0, 1, 2};
  double best = 1e300;
  do {
    double d = 0.0;
    for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(x[i] - y[perm[i]]));
    best = std::min(best, d);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Complex cis_turns(double t) { return std::polar(1.0, 2.0 * kPi * t); }

}  // namespace hgm::test
