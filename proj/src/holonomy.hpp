#pragma once

#include "gauge.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fh {

class NotALoopError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class HolonomyClass { Trivial, Nontrivial };

const char* to_string(HolonomyClass c);

struct HolonomyReport {
  GaugeChain gauge;
  HolonomyClass classification = HolonomyClass::Trivial;
  MeasureRelation relation = MeasureRelation::Equal;  // mu^sigma_0 against mu^sigma_k
  std::optional<L1Class> distortion;                  // d mu^sigma_0 / d mu^sigma_k, when <<
  RatMatrix holonomy;                                 // T^sigma_{0,k}
  std::vector<PositionDistortion> internal;

  const ParamSimplex& sigma() const { return gauge.sigma(); }
  const Measure& initial() const { return gauge.measure(0); }
  const Measure& terminal() const { return gauge.measure(gauge.k()); }

  /// A loop exhibits homological arbitrage exactly when its holonomy is nontrivial.
  bool homological_arbitrage() const { return classification == HolonomyClass::Nontrivial; }
};

/// t_0 == t_k; a 0-simplex is the empty loop.
bool is_loop(const ParamSimplex& sigma);

/// Hol(sigma) = T^sigma_{0,k}. Throws NotALoopError.
RatMatrix holonomy_operator(const GaugeChain& g);

/// Trivial iff mu^sigma_0 and mu^sigma_k are equivalent. Throws NotALoopError.
HolonomyReport classify(const Filtration& f, const ParamSimplex& sigma);

struct LoopScan {
  std::size_t max_len = 0;
  std::size_t limit = 0;
  bool truncated = false;
  std::vector<HolonomyReport> reports;
};

/// Based, parametrized loops of 0..max_len arrows (rotations are distinct),
/// ordered by length and then lexicographically by arrow index. Arrows are
/// generators in free mode and non-identity arrows in table mode; the
/// length-0 loops are the vertices. Stops after `limit` reports and flags
/// the truncation.
LoopScan scan_loops(const Filtration& f, std::size_t max_len, std::size_t limit);

}  // namespace fh
