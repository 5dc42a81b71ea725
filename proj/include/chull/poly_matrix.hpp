#pragma once

#include <vector>

#include "chull/polynomial.hpp"

namespace chull {

/// Dense matrix of polynomials over one shared ring.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(RingPtr ring, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Stores `p` after checking it lives in this matrix's ring.
  void set(std::size_t r, std::size_t c, Polynomial p);

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> entries_;
};

/// Fraction-free Gaussian elimination (Bareiss). Throws NonSquare.
Polynomial determinant(const PolyMatrix& m);
/// Laplace expansion along the first row; used for n <= 4 and as an oracle.
Polynomial determinant_cofactor(const PolyMatrix& m);

}  // namespace chull
