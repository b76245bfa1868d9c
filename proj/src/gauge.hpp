#pragma once

#include "filtration.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fh {

struct GaugePosition {
  ObjectId object = 0;
  FiniteProbSpace original;  // (atoms of t_l, mu_{t_l})
  FiniteProbSpace gauged;    // (atoms of t_l, mu^sigma_l)
};

/// Sigma-gauge of a parametrized simplex: measures pulled back from the last
/// position so that every arrow of the chain is measure-preserving.
class GaugeChain {
 public:
  const ParamSimplex& sigma() const { return sigma_; }
  std::size_t k() const { return sigma_.k(); }
  const std::vector<GaugePosition>& positions() const { return positions_; }
  const GaugePosition& position(std::size_t l) const { return positions_.at(l); }
  const Measure& measure(std::size_t l) const { return positions_.at(l).gauged.weights(); }

  /// F(i_l) : atoms of position l -> atoms of position l-1, for 1 <= l <= k.
  const AtomMap& step(std::size_t l) const { return steps_.at(l - 1); }

  /// F(<sigma>_a^b) : atoms of position b -> atoms of position a.
  AtomMap composed_map(std::size_t a, std::size_t b) const;

  /// T^sigma_{a,b} acting on full atom vectors; rows at mu^sigma_a-null atoms
  /// are zero when a < b, and the identity when a == b.
  const RatMatrix& transport(std::size_t a, std::size_t b) const;

 private:
  friend GaugeChain build_gauge(const Filtration& f, const ParamSimplex& sigma);

  ParamSimplex sigma_;
  std::vector<GaugePosition> positions_;
  std::vector<AtomMap> steps_;
  std::vector<RatMatrix> transports_;  // (k+1) x (k+1), row-major in (a, b), a <= b used
};

/// Backward recursion mu^sigma_k = mu_{t_k}, mu^sigma_l = pushforward of
/// mu^sigma_{l+1} along F(i_{l+1}). Throws std::invalid_argument when sigma is
/// not a chain of arrows of the filtration's presentation.
GaugeChain build_gauge(const Filtration& f, const ParamSimplex& sigma);

struct PositionDistortion {
  MeasureRelation relation;            // mu^sigma_l against mu_{t_l}
  std::optional<L1Class> derivative;   // d mu^sigma_l / d mu_{t_l}, when <<
};

std::vector<PositionDistortion> gauge_distortion(const GaugeChain& g);

}  // namespace fh
