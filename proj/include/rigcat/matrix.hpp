#ifndef RIGCAT_MATRIX_HPP
#define RIGCAT_MATRIX_HPP

#include <string>
#include <vector>

#include "rigcat/finperm.hpp"
#include "rigcat/rational.hpp"

namespace rigcat {

/// Dense matrix over exact rationals. As a morphism it points n -> m when
/// it has m rows and n columns.
class RatMatrix {
public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(nat rows, nat cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMatrix(nat rows, nat cols, std::vector<Rational> entries);

  nat rows() const { return rows_; }
  nat cols() const { return cols_; }

  Rational &at(nat i, nat j) { return entries_[(i - 1) * cols_ + (j - 1)]; }
  const Rational &at(nat i, nat j) const {
    return entries_[(i - 1) * cols_ + (j - 1)];
  }

  friend bool operator==(const RatMatrix &a, const RatMatrix &b) = default;

  static RatMatrix identity(nat n);

private:
  nat rows_, cols_;
  std::vector<Rational> entries_;
};

/// Ordinary matrix product a*b; requires a.cols == b.rows.
RatMatrix mat_mul(const RatMatrix &a, const RatMatrix &b);

/// Block-diagonal sum diag(a, b).
RatMatrix mat_sum(const RatMatrix &a, const RatMatrix &b);

/// Block pattern of b scaled by a: the (i,j) block is a*b[i][j].
RatMatrix mat_prod(const RatMatrix &a, const RatMatrix &b);

/// Exact inverse via Gauss-Jordan; requires a square invertible matrix.
RatMatrix mat_inverse(const RatMatrix &a);

/// P(p) with P[i][j] = 1 iff i == p(j).
RatMatrix perm_matrix(const Perm &p);

std::string describe(const RatMatrix &a);

} // namespace rigcat

#endif
