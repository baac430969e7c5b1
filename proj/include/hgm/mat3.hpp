#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgm/numerics.hpp"

namespace hgm {

class CMat3 {
 public:
  CMat3() { e_.fill(Complex(0.0, 0.0)); }
  // Row-major, nine entries.
  CMat3(std::initializer_list<Complex> entries);

  static CMat3 identity();
  static CMat3 diag(Complex a, Complex b, Complex c);
  static CMat3 scalar(Complex s) { return diag(s, s, s); }

  Complex& operator()(int r, int c) { return e_[3 * r + c]; }
  const Complex& operator()(int r, int c) const { return e_[3 * r + c]; }

  CMat3 adjoint() const;
  CMat3 conj() const;
  CMat3 transpose() const;
  Complex trace() const;
  Complex det() const;
  double max_abs() const;
  // Largest singular value.
  double norm() const;

  friend CMat3 operator*(const CMat3& a, const CMat3& b);
  friend CMat3 operator+(const CMat3& a, const CMat3& b);
  friend CMat3 operator-(const CMat3& a, const CMat3& b);
  friend CMat3 operator*(Complex s, const CMat3& a);

 private:
  std::array<Complex, 9> e_;
};

// Entrywise max |a - b|.
double distance(const CMat3& a, const CMat3& b);

std::pair<Complex, Complex> det_trace(const CMat3& m);

CMat3 inverse(const CMat3& m, const Tolerance& tol = {});

// M^k, with negative k via the inverse.
CMat3 power(const CMat3& m, int k, const Tolerance& tol = {});

// Monic characteristic polynomial t^3 + c[0] t^2 + c[1] t + c[2].
std::array<Complex, 3> char_poly(const CMat3& m);

// Roots of t^3 + c[0] t^2 + c[1] t + c[2], unsorted.
std::array<Complex, 3> solve_cubic(const std::array<Complex, 3>& c);

// Sorted by argument in [0, 2 pi), then by modulus.
std::array<Complex, 3> eigen_cubic(const CMat3& m, const Tolerance& tol = {});

std::array<double, 3> singular_values(const CMat3& m);

bool is_reflection_defect(const CMat3& m, const Tolerance& tol = {});

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  // Global sign flip so that positive >= negative.
  Signature normalized() const;
  std::string str() const;
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::array<double, 3> hermitian_eigenvalues(const CMat3& h);

// Eigenvalues within zero_rel * max|eigenvalue| of zero count as zero; zero_rel defaults to eps.
Signature hermitian_signature(const CMat3& h, const Tolerance& tol = {},
                              std::optional<double> zero_rel = std::nullopt);

std::optional<Complex> projective_equal(const CMat3& m, const CMat3& n, const Tolerance& tol = {});

enum class Relation { Entrywise, Projective, Unequal };

struct Comparison {
  Relation relation = Relation::Unequal;
  Complex scalar{1.0, 0.0};
  double residual = 0.0;  // entrywise residual of m - n

  bool holds() const { return relation != Relation::Unequal; }
};

const char* to_string(Relation r);

Comparison compare(const CMat3& m, const CMat3& n, const Tolerance& tol = {});

// Group words.

struct Syllable {
  std::string letter;
  int exponent = 1;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Syllable> syllables);

  // Letters are identifiers; supports juxtaposition, parentheses, "^k", "^-k", "^{-k}". "1" is the empty word.
  static GroupWord parse(const std::string& text);
  static GroupWord letter(const std::string& name, int exponent = 1);

  const std::vector<Syllable>& syllables() const { return s_; }
  bool empty() const { return s_.empty(); }

  GroupWord inverse() const;
  GroupWord pow(int k) const;
  std::string str() const;

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  void reduce();
  std::vector<Syllable> s_;
};

// The alternating products X Y X ... and Y X Y ... with n factors each, as words.
std::pair<GroupWord, GroupWord> braid_sides(const GroupWord& x, const GroupWord& y, int n);
// Relator br_n(x, y) = (X Y X ...)(Y X Y ...)^{-1}.
GroupWord braid_relator(const GroupWord& x, const GroupWord& y, int n);

using Assignment = std::map<std::string, CMat3>;

CMat3 evaluate_word(const GroupWord& w, const Assignment& assignment, const Tolerance& tol = {});

}  // namespace hgm
