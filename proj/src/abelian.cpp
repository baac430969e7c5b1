#include "hgm/abelian.hpp"

#include <map>

namespace hgm {

IntMatrix::IntMatrix(int rows, int cols, const std::vector<long long>& row_major) : IntMatrix(rows, cols) {
  if (row_major.size() != data_.size()) throw Error(ErrorCode::InvalidArgument, "IntMatrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = row_major[i];
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(int dst, int src, const BigInt& k) {
  for (int c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col(int dst, int src, const BigInt& k) {
  for (int r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(int r) {
  for (int c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "IntMatrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(r, k) == 0) continue;
      for (int c = 0; c < b.cols_; ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n && swap < 0; ++i)
        if (a(i, k) != 0) swap = i;
      if (swap < 0) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Presentation t_e2_presentation(int p) {
  if (p != 3 && p != 4 && p != 6) throw Error(ErrorCode::UnsupportedP, "presentation is stated for p = 3, 4, 6 only");
  const GroupWord r1 = GroupWord::letter("R1"), r2 = GroupWord::letter("R2"), s = GroupWord::letter("S");
  const GroupWord r3 = s * r2 * s.inverse();
  const GroupWord r2c = r1 * r2 * r1.inverse();

  Presentation pres;
  pres.generators = {"R1", "R2", "S"};
  auto add = [&](const std::string& label, const GroupWord& w) {
    pres.labels.push_back(label);
    pres.relators.push_back(w);
  };
  add("R1^p", r1.pow(p));
  add("R2^p", r2.pow(p));
  add("S^3", s.pow(3));
  add("(R1 R2 S R2 S^-1)^6", (r1 * r2 * r3).pow(6));
  add("br2(R1, S)", braid_relator(r1, s, 2));
  add("br4(R2, S)", braid_relator(r2, s, 4));
  add("br4(R1, R2)", braid_relator(r1, r2, 4));
  add("br6(S R2 S^-1, R1 R2 R1^-1)", braid_relator(r3, r2c, 6));
  // Exponents 4p/(p-4) and 3p/(p-3); omitted when the denominator is zero or negative.
  if (p - 4 > 0) add("(R1 R2)^" + std::to_string(4 * p / (p - 4)), (r1 * r2).pow(4 * p / (p - 4)));
  if (p - 3 > 0) add("(S R2 S^-1 R1 R2 R1^-1)^" + std::to_string(3 * p / (p - 3)), (r3 * r2c).pow(3 * p / (p - 3)));
  return pres;
}

IntMatrix exponent_matrix(const Presentation& pres) {
  std::map<std::string, int> column;
  for (std::size_t g = 0; g < pres.generators.size(); ++g) column[pres.generators[g]] = static_cast<int>(g);
  IntMatrix m(static_cast<int>(pres.relators.size()), static_cast<int>(pres.generators.size()));
  for (std::size_t r = 0; r < pres.relators.size(); ++r) {
    for (const Syllable& s : pres.relators[r].syllables()) {
      auto it = column.find(s.letter);
      if (it == column.end()) throw Error(ErrorCode::UnknownLetter, "relator letter '" + s.letter + "' is not a generator");
      m(static_cast<int>(r), it->second) += s.exponent;
    }
  }
  return m;
}

SnfResult smith_normal_form(const IntMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  IntMatrix a = m, U = IntMatrix::identity(rows), V = IntMatrix::identity(cols);
  using boost::multiprecision::abs;

  auto row_op = [&](int dst, int src, const BigInt& k) {
    a.add_row(dst, src, k);
    U.add_row(dst, src, k);
  };
  auto col_op = [&](int dst, int src, const BigInt& k) {
    a.add_col(dst, src, k);
    V.add_col(dst, src, k);
  };
  auto swap_r = [&](int x, int y) {
    a.swap_rows(x, y);
    U.swap_rows(x, y);
  };
  auto swap_c = [&](int x, int y) {
    a.swap_cols(x, y);
    V.swap_cols(x, y);
  };

  int t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Smallest nonzero |entry| in the trailing block, first in row-major order.
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pi < 0 || abs(a(i, j)) < abs(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_r(t, pi);
    swap_c(t, pj);

    while (true) {
      bool clear = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        row_op(i, t, -(a(i, t) / a(t, t)));
        if (a(i, t) != 0) clear = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        col_op(j, t, -(a(t, j) / a(t, t)));
        if (a(t, j) != 0) clear = false;
      }
      if (!clear) {
        // A remainder is now smaller than the pivot; bring the smallest into place.
        int bi = t, bj = t;
        for (int i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (int j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi, bj))) {
            bi = t;
            bj = j;
          }
        swap_r(t, bi);
        swap_c(t, bj);
        continue;
      }
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_op(t, bad, 1);
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      U.negate_row(t);
    }
  }

  SnfResult out{U, a, V, {}, 0};
  int rank = 0;
  for (int i = 0; i < std::min(rows, cols); ++i)
    if (a(i, i) != 0) {
      out.invariant_factors.push_back(a(i, i));
      ++rank;
    }
  out.free_rank = cols - rank;
  return out;
}

ObstructionReport abelianization(int p) {
  if (p == 12) throw Error(ErrorCode::UnsupportedP, "p = 12 is excluded but no presentation is available; no obstruction computed");
  const SnfResult snf = smith_normal_form(exponent_matrix(t_e2_presentation(p)));
  ObstructionReport r;
  r.p = p;
  r.invariant_factors = snf.invariant_factors;
  r.free_rank = snf.free_rank;
  std::string group;
  for (const BigInt& f : snf.invariant_factors) {
    if (f == 1) continue;
    ++r.min_generators;
    group += (group.empty() ? "Z" : " x Z") + f.str();
  }
  for (int i = 0; i < snf.free_rank; ++i) group += group.empty() ? "Z" : " x Z";
  r.min_generators += snf.free_rank;
  r.group = group.empty() ? "trivial" : group;
  r.obstructed = r.min_generators >= 3;
  return r;
}

ObstructionReport verify_nongeneration(int p) {
  if (p != 3 && p != 6) throw Error(ErrorCode::UnsupportedP, "non-generation is proved for p = 3 and p = 6 only");
  return abelianization(p);
}

}  // namespace hgm
