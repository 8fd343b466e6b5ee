#pragma once

#include <cstddef>
#include <vector>

#include "ncsym/rational.hpp"

namespace ncsym {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::vector<std::size_t> free_columns;
};

/// Gauss-Jordan elimination, pivots chosen left to right.
EchelonForm row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// One basis vector per free column f: x_f = 1, other free coordinates 0.
std::vector<std::vector<Rational>> nullspace(const Matrix& m);

}  // namespace ncsym
