#pragma once

#include "matrix.hpp"

#include <cstddef>
#include <vector>

namespace fh {

/// Coordinates of a product of L1 spaces. Each factor contributes one block
/// whose coordinates are the support atoms of its measure, so canonical
/// representatives correspond one-to-one with coordinate vectors.
struct BlockLayout {
  std::vector<std::vector<std::size_t>> atoms;
  std::vector<std::size_t> offsets;
  std::size_t dim = 0;

  std::size_t add(std::vector<std::size_t> support) {
    offsets.push_back(dim);
    dim += support.size();
    atoms.push_back(std::move(support));
    return atoms.size() - 1;
  }

  std::size_t blocks() const { return atoms.size(); }
  std::size_t width(std::size_t b) const { return atoms[b].size(); }

  /// Block b of a coordinate vector, expanded to `atom_count` atoms.
  RatVector scatter(std::size_t b, const RatVector& coords, std::size_t atom_count) const {
    RatVector full(atom_count);
    for (std::size_t i = 0; i < atoms[b].size(); ++i) full[atoms[b][i]] = coords[offsets[b] + i];
    return full;
  }

  /// Writes the support values of `full` into block b of `coords`.
  void gather(std::size_t b, const RatVector& full, RatVector& coords) const {
    for (std::size_t i = 0; i < atoms[b].size(); ++i) coords[offsets[b] + i] = full[atoms[b][i]];
  }
};

/// Adds sign * op[row_atoms, col_atoms] into `m` at the given block offsets.
/// `op` acts on full atom vectors.
inline void accumulate_block(RatMatrix& m, std::size_t row_off, std::size_t col_off,
                             const std::vector<std::size_t>& row_atoms,
                             const std::vector<std::size_t>& col_atoms, const RatMatrix& op,
                             int sign) {
  for (std::size_t r = 0; r < row_atoms.size(); ++r) {
    for (std::size_t c = 0; c < col_atoms.size(); ++c) {
      const Rational& x = op(row_atoms[r], col_atoms[c]);
      if (x == 0) continue;
      if (sign > 0) {
        m(row_off + r, col_off + c) += x;
      } else {
        m(row_off + r, col_off + c) -= x;
      }
    }
  }
}

/// Diagonal operator on full atom vectors.
inline RatMatrix diagonal(const RatVector& d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

}  // namespace fh
