#include "ncsym/linalg.hpp"

#include <utility>

namespace ncsym {

EchelonForm row_reduce(Matrix m) {
  EchelonForm out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) {
      out.free_columns.push_back(col);
      continue;
    }
    if (pivot != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      if (m(row, c) != 0) m(row, c) *= inv;
    std::vector<std::size_t> nonzero;
    for (std::size_t c = col; c < m.cols(); ++c)
      if (m(row, c) != 0) nonzero.push_back(c);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational factor = m(r, col);
      for (std::size_t c : nonzero) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<std::vector<Rational>> nullspace(const Matrix& m) {
  EchelonForm e = row_reduce(m);
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f : e.free_columns) {
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ncsym
