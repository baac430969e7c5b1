#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "hgm/mat3.hpp"

namespace hgm {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}
  IntMatrix(int rows, int cols, const std::vector<long long>& row_major);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const BigInt& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  // row[dst] += k * row[src]
  void add_row(int dst, int src, const BigInt& k);
  void add_col(int dst, int src, const BigInt& k);
  void negate_row(int r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

// Exact determinant of a square matrix (fraction-free elimination).
BigInt determinant(const IntMatrix& m);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;
  std::vector<std::string> labels;  // human-readable relator names
};

// The presentation on R1, R2, S for p in {3, 4, 6}.
Presentation t_e2_presentation(int p);

IntMatrix exponent_matrix(const Presentation& pres);

struct SnfResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::vector<BigInt> invariant_factors;  // nonzero diagonal entries, d1 | d2 | ...
  int free_rank = 0;                       // columns minus rank
};

SnfResult smith_normal_form(const IntMatrix& m);

struct ObstructionReport {
  int p = 0;
  std::vector<BigInt> invariant_factors;
  int free_rank = 0;
  int min_generators = 0;  // factors > 1 plus free rank
  bool obstructed = false;
  std::string group;  // e.g. "Z3 x Z6 x Z6"
};

// Abelianization report for p in {3, 4, 6}; p = 4 is report-only.
ObstructionReport abelianization(int p);

// p in {3, 6}.
ObstructionReport verify_nongeneration(int p);

}  // namespace hgm
