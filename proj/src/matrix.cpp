#include "matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace fh {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

struct IntegerEchelon {
  std::vector<std::vector<Integer>> rows;  // only the first pivots.size() rows are nonzero
  std::vector<std::size_t> pivots;
};

// Scales every row by the lcm of its denominators so elimination runs over Z.
std::vector<std::vector<Integer>> integer_rows(const RatMatrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer scale = 1;
    for (const Rational& x : m.row(r)) {
      if (x != 0) scale = boost::multiprecision::lcm(scale, Integer(denominator(x)));
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      if (x != 0) out[r][c] = Integer(numerator(x)) * (scale / Integer(denominator(x)));
    }
  }
  return out;
}

// Fraction-free elimination to row echelon form. Every intermediate entry is
// a minor of the input, so the division by the previous pivot is exact.
IntegerEchelon bareiss(const RatMatrix& m) {
  IntegerEchelon e{integer_rows(m), {}};
  auto& a = e.rows;
  const std::size_t n_rows = m.rows();
  const std::size_t n_cols = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
    std::size_t p = r;
    while (p < n_rows && a[p][c] == 0) ++p;
    if (p == n_rows) continue;
    std::swap(a[r], a[p]);
    const Integer& pivot = a[r][c];
    for (std::size_t i = r + 1; i < n_rows; ++i) {
      const Integer factor = a[i][c];
      for (std::size_t j = c + 1; j < n_cols; ++j) {
        if (factor == 0) {
          if (a[i][j] == 0) continue;
          a[i][j] = a[i][j] * pivot / prev;
        } else {
          a[i][j] = (a[i][j] * pivot - factor * a[r][j]) / prev;
        }
      }
      a[i][c] = 0;
    }
    prev = pivot;
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RatMatrix::is_zero() const {
  for (const Rational& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RatVector RatMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) {
    throw std::invalid_argument("matrix-vector size mismatch: " + std::to_string(cols_) +
                                " columns vs vector of length " + std::to_string(v.size()));
  }
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& x = (*this)(r, c);
      if (x != 0 && v[c] != 0) acc += x * v[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

void RatMatrix::set_block(std::size_t r0, std::size_t c0, const RatMatrix& block) {
  if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_) {
    throw std::out_of_range("block does not fit inside matrix");
  }
  for (std::size_t r = 0; r < block.rows(); ++r) {
    for (std::size_t c = 0; c < block.cols(); ++c) (*this)(r0 + r, c0 + c) = block(r, c);
  }
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product dimension mismatch: " + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()));
  }
  std::vector<std::vector<std::size_t>> b_nonzero(b.rows());
  for (std::size_t k = 0; k < b.rows(); ++k) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (b(k, j) != 0) b_nonzero[k].push_back(j);
    }
  }
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j : b_nonzero[k]) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

std::size_t rank(const RatMatrix& m) { return bareiss(m).pivots.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const IntegerEchelon e = bareiss(m);
  const std::size_t r = e.pivots.size();
  const std::size_t n = m.cols();

  // Back-substitute to reduced row echelon form.
  std::vector<RatVector> rref(r, RatVector(n));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (e.rows[i][j] != 0) rref[i][j] = Rational(e.rows[i][j]);
    }
  }
  for (std::size_t ii = r; ii-- > 0;) {
    const std::size_t p = e.pivots[ii];
    const Rational inv = 1 / rref[ii][p];
    for (Rational& x : rref[ii]) {
      if (x != 0) x *= inv;
    }
    for (std::size_t h = 0; h < ii; ++h) {
      const Rational f = rref[h][p];
      if (f == 0) continue;
      for (std::size_t j = p; j < n; ++j) {
        if (rref[ii][j] != 0) rref[h][j] -= f * rref[ii][j];
      }
    }
  }

  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < r; ++i) v[e.pivots[i]] = -rref[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t cohomology_dim(const RatMatrix& d_in, const RatMatrix& d_out) {
  if (d_out.cols() != d_in.rows()) {
    throw std::invalid_argument("cohomology_dim: outgoing differential has " +
                                std::to_string(d_out.cols()) + " columns but incoming has " +
                                std::to_string(d_in.rows()) + " rows");
  }
  if (!(d_out * d_in).is_zero()) {
    throw std::domain_error("cohomology_dim: composite of differentials is nonzero");
  }
  const std::size_t kernel = d_out.cols() - rank(d_out);
  return kernel - rank(d_in);
}

}  // namespace fh
