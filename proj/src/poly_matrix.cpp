#include "chull/poly_matrix.hpp"

#include "chull/algebra.hpp"
#include "chull/error.hpp"

namespace chull {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(ring, 1);
  return m;
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial p) {
  if (p.ring() != ring_ && !(p.ring() && *p.ring() == *ring_))
    throw Error(ErrorCode::RingMismatch, "matrix entry from a different ring");
  (*this)(r, c) = std::move(p);
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NonSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const RingPtr& ring = m.ring();
  if (n == 0) return Polynomial::constant(ring, 1);
  std::vector<std::vector<Polynomial>> a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(m(i, j));
  Polynomial prev = Polynomial::constant(ring, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return Polynomial(ring);
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = prev.is_constant() && prev.constant_term() == 1 ? std::move(num) : exact_divide(num, prev);
      }
      a[i][k] = Polynomial(ring);
    }
    prev = a[k][k];
  }
  Polynomial det = a[n - 1][n - 1];
  return negate ? -det : det;
}

namespace {

Polynomial cofactor_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.rows();
  if (row == n) return Polynomial::constant(m.ring(), 1);
  Polynomial sum(m.ring());
  bool plus = true;
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    std::size_t c = cols[idx];
    if (!m(row, c).is_zero()) {
      cols.erase(cols.begin() + static_cast<long>(idx));
      Polynomial minor = cofactor_rec(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<long>(idx), c);
      Polynomial term = m(row, c) * minor;
      if (plus) sum += term;
      else sum -= term;
    }
    plus = !plus;
  }
  return sum;
}

}  // namespace

Polynomial determinant_cofactor(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NonSquare, "determinant of a non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return cofactor_rec(m, cols, 0);
}

}  // namespace chull
