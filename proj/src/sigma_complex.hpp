#pragma once

#include "blocks.hpp"
#include "gauge.hpp"
#include "nerve.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace fh {

/// Degree-n cochain: one class per theta in Delta([n],[k]), each stored on the
/// full atom set of position theta(0) and zero on gauge-null atoms.
struct SigmaCochain {
  std::size_t degree = 0;
  std::vector<RatVector> values;
};

/// Cochain complex of a simplex in its sigma-gauge, assembled up to a top
/// degree. Index order in each degree is the lexicographic order of
/// enumerate_monotone.
class SigmaComplex {
 public:
  const GaugeChain& gauge() const { return gauge_; }
  std::size_t max_degree() const { return degrees_.size() - 1; }

  const std::vector<MonotoneMap>& index(std::size_t n) const { return degrees_.at(n).index; }
  const BlockLayout& layout(std::size_t n) const { return degrees_.at(n).layout; }
  std::size_t dim(std::size_t n) const { return degrees_.at(n).layout.dim; }

  /// delta^n_sigma : C^{n-1} -> C^n. delta^0 is the zero map out of C^{-1} = 0.
  const RatMatrix& delta(std::size_t n) const { return degrees_.at(n).delta; }

  std::optional<std::size_t> position_of(const MonotoneMap& theta) const;

  SigmaCochain zero_cochain(std::size_t n) const;
  RatVector to_coords(const SigmaCochain& c) const;
  SigmaCochain from_coords(std::size_t n, const RatVector& coords) const;

  /// Value of c at theta (a full atom vector at position theta(0)).
  const RatVector& value(const SigmaCochain& c, const MonotoneMap& theta) const;

 private:
  friend SigmaComplex build_complex(GaugeChain g, std::size_t max_degree);
  SigmaComplex() = default;

  struct Degree {
    std::vector<MonotoneMap> index;
    std::map<MonotoneMap, std::size_t> lookup;
    BlockLayout layout;
    RatMatrix delta;
  };

  GaugeChain gauge_;
  std::vector<Degree> degrees_;
};

/// Assembles C^0..C^max_degree and delta^1..delta^max_degree blockwise:
///   delta^n(c)(theta) = T_{theta(0),theta(1)} c(theta o d_0) + sum_{l>=1} (-1)^l c(theta o d_l).
/// Throws std::invalid_argument when max_degree < 1 and std::logic_error if a
/// composite delta^{n+1} delta^n comes out nonzero.
SigmaComplex build_complex(GaugeChain g, std::size_t max_degree);

/// delta^{n+1}(c) evaluated directly from the defining formula, without the
/// assembled matrices.
SigmaCochain apply_coboundary(const SigmaComplex& sc, const SigmaCochain& c);

struct Cohomology {
  std::size_t degree = 0;
  std::size_t cocycles = 0;    // dim Z^n
  std::size_t coboundaries = 0;  // dim B^n
  std::size_t dimension = 0;   // dim H^n
  std::vector<SigmaCochain> cocycle_basis;
};

/// Z^n = ker delta^{n+1}, B^n = im delta^n with delta^0 = 0. Requires
/// n + 1 <= max_degree; throws std::out_of_range otherwise.
Cohomology cohomology(const SigmaComplex& sc, std::size_t n, bool with_basis = false);

struct CocycleIdentity {
  RatVector lhs;  // a(theta o d_1)
  RatVector rhs;  // T_{r0,r1} a(theta o d_0) + a(theta o d_2)
  bool holds = false;
};

CocycleIdentity check_cocycle_identity(const SigmaComplex& sc, const SigmaCochain& a, const MonotoneMap& theta);

struct PathDecomposition {
  bool strictly_increasing = false;
  bool is_cocycle = false;
  RatVector lhs;  // a(theta(0) -> theta(m))
  RatVector rhs;  // sum_l T_{theta(0),theta(l)} a(theta(l) -> theta(l+1))
  bool holds = false;
};

/// Both preconditions (theta strictly increasing, a in Z^1) are reported
/// rather than enforced, so a non-cocycle yields an explicit counterexample.
PathDecomposition check_path_decomposition(const SigmaComplex& sc, const SigmaCochain& a,
                                           const MonotoneMap& theta);

}  // namespace fh
