#pragma once

#include "category.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fh {

/// Weakly monotone map [n] -> [k], stored as its value sequence.
struct MonotoneMap {
  std::size_t k = 0;
  std::vector<std::size_t> values;

  std::size_t n() const { return values.size() - 1; }
  std::size_t operator()(std::size_t i) const { return values.at(i); }
  bool strictly_increasing() const;

  friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;
  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
};

/// Delta([n],[k]) in lexicographic order; binomial(n+k+1, n+1) entries.
std::vector<MonotoneMap> enumerate_monotone(std::size_t n, std::size_t k);

/// theta o delta_l: deletes position l. Requires n >= 1 and l <= n.
MonotoneMap face(const MonotoneMap& theta, std::size_t l);

class NotComposableError : public std::invalid_argument {
 public:
  NotComposableError(std::size_t position, const std::string& what)
      : std::invalid_argument(what), position_(position) {}
  /// Index l (1-based) such that arrows l and l+1 do not meet.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A k-simplex of the nerve, kept as a parametrized chain: repeated objects
/// are distinct positions.
struct ParamSimplex {
  std::vector<ObjectId> objects;  // t_0 .. t_k
  std::vector<Path> arrows;       // i_1 .. i_k with i_l : t_{l-1} -> t_l

  std::size_t k() const { return arrows.size(); }

  friend auto operator<=>(const ParamSimplex&, const ParamSimplex&) = default;
  friend bool operator==(const ParamSimplex&, const ParamSimplex&) = default;
};

/// Throws NotComposableError when consecutive arrows do not meet.
ParamSimplex make_simplex(const std::vector<Path>& arrows);
ParamSimplex vertex_simplex(ObjectId obj);

/// Deletes vertex l, composing the two arrows around it when 0 < l < k.
ParamSimplex simplex_face(const Presentation& pres, const ParamSimplex& tau, std::size_t l);

/// i_b o ... o i_{a+1}; the identity at t_a when a == b.
Path segment(const Presentation& pres, const ParamSimplex& sigma, std::size_t a, std::size_t b);

std::string describe(const Presentation& pres, const ParamSimplex& s);

/// N_n of the time category. Table mode: every composable n-tuple of arrows,
/// identities included. Free mode: n-tuples of paths whose total length is at
/// most `max_total_len`; this slice is closed under faces.
std::vector<ParamSimplex> enumerate_nerve(const Presentation& pres, std::size_t n,
                                          std::size_t max_total_len);

}  // namespace fh
