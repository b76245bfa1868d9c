#pragma once

#include "filtration.hpp"
#include "nerve.hpp"

#include <cstdint>
#include <random>

namespace fhtest {

/// Seeded from FH_SEED when set, otherwise from a fixed default so runs are
/// reproducible. The seed in use is printed once per process.
class Rng {
 public:
  Rng();
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::size_t uniform(std::size_t lo, std::size_t hi);  // inclusive
  bool chance(std::size_t num, std::size_t den);
  fh::Rational positive_rational();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t default_seed();

/// Weights on n atoms: random positive rationals, each atom zeroed with
/// probability 1/4 (at least one kept), normalized to mass 1.
fh::Measure random_measure(Rng& rng, std::size_t n);

fh::AtomMap random_map(Rng& rng, std::size_t from, std::size_t to);

fh::FiniteProbSpace space_with(const fh::Measure& weights);

struct DagShape {
  std::size_t objects = 3;
  std::size_t generators = 3;
  bool measure_preserving = false;  // mu_s = pushforward(mu_t) exactly
};

/// Free filtration on a random acyclic quiver (generators go from lower to
/// higher object index). Target measures are (1/2) pushforward + (1/2) random,
/// so every generator is null-preserving by construction. In measure-preserving
/// mode each object has at most one outgoing generator.
fh::Filtration random_dag_filtration(Rng& rng, const DagShape& shape);

/// The same data as a finite table category (closure of the quiver).
fh::Filtration as_table(const fh::Filtration& free);

struct RandomChain {
  fh::Filtration filtration;
  fh::ParamSimplex sigma;
};

/// A free filtration carrying a k-simplex whose objects are drawn from a
/// small pool, so positions may repeat objects and the chain may be a loop.
/// Supports are closed under the arrow maps before weights are drawn, which
/// keeps every arrow null-preserving even around cycles.
RandomChain random_chain(Rng& rng, std::size_t k, std::size_t object_pool, bool force_loop = false);

}  // namespace fhtest
