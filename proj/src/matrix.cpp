#include "rigcat/matrix.hpp"

#include <sstream>

namespace rigcat {

RatMatrix::RatMatrix(nat rows, nat cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    fail(errc::range_error, "entry grid does not match matrix shape");
}

RatMatrix RatMatrix::identity(nat n) {
  RatMatrix m(n, n);
  for (nat i = 1; i <= n; ++i)
    m.at(i, i) = Rational(1);
  return m;
}

RatMatrix mat_mul(const RatMatrix &a, const RatMatrix &b) {
  if (a.cols() != b.rows())
    fail(errc::domain_mismatch, "matrix shapes do not compose");
  RatMatrix out(a.rows(), b.cols());
  for (nat i = 1; i <= a.rows(); ++i)
    for (nat k = 1; k <= a.cols(); ++k) {
      const Rational &aik = a.at(i, k);
      if (aik.is_zero())
        continue;
      for (nat j = 1; j <= b.cols(); ++j) {
        const Rational &bkj = b.at(k, j);
        if (!bkj.is_zero())
          out.at(i, j) = out.at(i, j) + aik * bkj;
      }
    }
  return out;
}

RatMatrix mat_sum(const RatMatrix &a, const RatMatrix &b) {
  RatMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (nat i = 1; i <= a.rows(); ++i)
    for (nat j = 1; j <= a.cols(); ++j)
      out.at(i, j) = a.at(i, j);
  for (nat i = 1; i <= b.rows(); ++i)
    for (nat j = 1; j <= b.cols(); ++j)
      out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

RatMatrix mat_prod(const RatMatrix &a, const RatMatrix &b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (nat bi = 1; bi <= b.rows(); ++bi)
    for (nat bj = 1; bj <= b.cols(); ++bj) {
      const Rational &scale = b.at(bi, bj);
      if (scale.is_zero())
        continue;
      for (nat i = 1; i <= a.rows(); ++i)
        for (nat j = 1; j <= a.cols(); ++j)
          out.at((bi - 1) * a.rows() + i, (bj - 1) * a.cols() + j) =
              a.at(i, j) * scale;
    }
  return out;
}

RatMatrix mat_inverse(const RatMatrix &a) {
  if (a.rows() != a.cols())
    fail(errc::non_invertible_data, "only square matrices invert");
  const nat n = a.rows();
  RatMatrix work = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (nat col = 1; col <= n; ++col) {
    nat pivot = 0;
    for (nat row = col; row <= n; ++row)
      if (!work.at(row, col).is_zero()) {
        pivot = row;
        break;
      }
    if (pivot == 0)
      fail(errc::non_invertible_data, "singular matrix");
    if (pivot != col)
      for (nat j = 1; j <= n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    const Rational scale = Rational(1) / work.at(col, col);
    for (nat j = 1; j <= n; ++j) {
      work.at(col, j) = work.at(col, j) * scale;
      inv.at(col, j) = inv.at(col, j) * scale;
    }
    for (nat row = 1; row <= n; ++row) {
      if (row == col)
        continue;
      const Rational factor = work.at(row, col);
      if (factor.is_zero())
        continue;
      for (nat j = 1; j <= n; ++j) {
        work.at(row, j) = work.at(row, j) - factor * work.at(col, j);
        inv.at(row, j) = inv.at(row, j) - factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

RatMatrix perm_matrix(const Perm &p) {
  RatMatrix out(p.degree(), p.degree());
  for (nat j = 1; j <= p.degree(); ++j)
    out.at(p(j), j) = Rational(1);
  return out;
}

std::string describe(const RatMatrix &a) {
  std::ostringstream out;
  out << '[';
  for (nat i = 1; i <= a.rows(); ++i) {
    if (i > 1)
      out << ',';
    out << '[';
    for (nat j = 1; j <= a.cols(); ++j) {
      if (j > 1)
        out << ',';
      out << a.at(i, j).str();
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

} // namespace rigcat
