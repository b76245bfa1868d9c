#pragma once

#include "blocks.hpp"
#include "category.hpp"
#include "finprob.hpp"
#include "nerve.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fh {

struct FiltrationViolation {
  enum class Kind { Category, NullPreservation, Functoriality };
  Kind kind;
  std::string message;
};

/// Contravariant functor from the time category into finite probability
/// spaces. For i : s -> t the stored map F(i) goes from the atoms of t to the
/// atoms of s.
class Filtration {
 public:
  /// `maps` lists F(g) for every generator (free mode) or every declared
  /// non-identity arrow (table mode); identities map to identities. Throws
  /// std::invalid_argument when a map does not fit its endpoint spaces.
  Filtration(Presentation pres, std::vector<FiniteProbSpace> spaces, std::vector<AtomMap> maps);

  const Presentation& presentation() const { return pres_; }
  const FiniteProbSpace& space(ObjectId obj) const { return spaces_.at(obj); }
  const std::vector<FiniteProbSpace>& spaces() const { return spaces_; }

  /// F(p) : atoms(dst p) -> atoms(src p).
  AtomMap map_of(const Path& p) const;

  /// F(p) with its measures; throws AbsContinuityError if not null-preserving.
  ProbMap prob_map(const Path& p) const;

  /// Table violations (table mode), per-arrow null-preservation failures with
  /// witness atoms, and per-pair functoriality failures (table mode).
  std::vector<FiltrationViolation> validate() const;

 private:
  Presentation pres_;
  std::vector<FiniteProbSpace> spaces_;
  std::vector<AtomMap> maps_;  // indexed like pres_.arrow_decls()
};

/// One canonical L1 class per object.
using AdaptedProcess = std::vector<L1Class>;

/// Radon-Nikodym derivative of the pushforward of mu_t along F(i) against
/// mu_s, for i : s -> t.
L1Class density(const Filtration& f, const Path& arrow);

/// Component at i : s -> t is E(F i)(f_t) - f_s * dF(i).
std::vector<L1Class> delta1(const Filtration& f, const AdaptedProcess& process,
                            const std::vector<Path>& arrows);

/// Coordinates of C^0 (one support block per object) and C^1 (one block per
/// arrow, on the support at its source).
BlockLayout process_layout(const Filtration& f);
BlockLayout arrow_layout(const Filtration& f, const std::vector<Path>& arrows);

/// Block matrix of delta^1 : C^0 -> C^1 over the given arrow set.
RatMatrix delta1_matrix(const Filtration& f, const std::vector<Path>& arrows);

AdaptedProcess process_from_coords(const Filtration& f, const RatVector& coords);
RatVector coords_from_process(const Filtration& f, const AdaptedProcess& process);

struct MartingaleKernel {
  std::size_t dimension = 0;
  std::vector<AdaptedProcess> basis;
  std::vector<Path> arrows;
};

MartingaleKernel martingale_kernel(const Filtration& f, const std::vector<Path>& arrows);

/// Default arrow set for martingale checks: every arrow in table mode, paths
/// up to `max_len` in free mode.
std::vector<Path> martingale_arrows(const Filtration& f, std::size_t max_len);
std::size_t default_path_bound(const Filtration& f);

/// Coordinates of the naive chain C^n: one block per simplex, on the support
/// of the measure at its first object.
BlockLayout nerve_layout(const Filtration& f, const std::vector<ParamSimplex>& simplices);

/// delta^n : C^{n-1} -> C^n of the naive mu-chain, with A_0 = E(F(first
/// arrow)), A_1 = multiplication by dF(first arrow), A_l = id for l >= 2.
/// Throws std::invalid_argument if `lower` is missing a face of `upper`.
RatMatrix naive_delta(const Filtration& f, std::size_t n, const std::vector<ParamSimplex>& lower,
                      const std::vector<ParamSimplex>& upper);

struct NaiveObstruction {
  std::size_t degree = 0;
  std::size_t path_bound = 0;
  bool truncated = false;  // free mode: nerve slices cut at path_bound
  std::size_t lower_count = 0;
  std::size_t middle_count = 0;
  std::size_t upper_count = 0;
  bool is_zero = true;
  // Witness, meaningful when !is_zero: (delta^{n+1} delta^n)(c)(tau) = value,
  // where c is the unit cochain at atom `cochain_atom` of simplex `cochain_simplex`.
  std::optional<ParamSimplex> tau;
  std::optional<ParamSimplex> cochain_simplex;
  std::size_t cochain_atom = 0;
  RatVector value;
};

/// Computes delta^{n+1} o delta^n exactly. The witness prefers a unit cochain
/// supported on the face tau o delta_1 o delta_0, where the (0,1) term of the
/// composite lives.
NaiveObstruction naive_obstruction(const Filtration& f, std::size_t n, std::size_t path_bound);

}  // namespace fh
