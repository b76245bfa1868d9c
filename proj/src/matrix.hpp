#pragma once

#include "rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fh {

/// Dense row-major matrix over the rationals.
///
/// Products skip zero entries on both sides, so the block-sparse coboundary
/// matrices built elsewhere multiply in time proportional to their nonzeros.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  bool is_zero() const;
  RatMatrix transpose() const;

  RatVector apply(std::span<const Rational> v) const;

  // Copies `block` into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const RatMatrix& block);

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& m);

/// Basis of the right null space in reduced-echelon parameter form: one
/// vector per free column, carrying 1 at that column and zeros at the other
/// free columns. Pivots are chosen as the first nonzero entry in column order,
/// so the output is deterministic.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// dim ker(d_out) - rank(d_in) for a two-step complex d_in then d_out.
/// Throws std::invalid_argument on a dimension mismatch and
/// std::domain_error when d_out * d_in is not the zero matrix.
std::size_t cohomology_dim(const RatMatrix& d_in, const RatMatrix& d_out);

}  // namespace fh
