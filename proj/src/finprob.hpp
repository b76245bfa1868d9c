#pragma once

#include "matrix.hpp"
#include "rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fh {

using Measure = RatVector;

/// Raised when a measure fails to be absolutely continuous with respect to a
/// reference measure; carries the first atom where the reference vanishes but
/// the measure does not.
class AbsContinuityError : public std::domain_error {
 public:
  AbsContinuityError(std::size_t atom, const std::string& what)
      : std::domain_error(what), atom_(atom) {}
  std::size_t atom() const { return atom_; }

 private:
  std::size_t atom_;
};

/// Ordered finite atom set with exact probability weights; the sigma-algebra
/// is always the full power set.
class FiniteProbSpace {
 public:
  FiniteProbSpace(std::vector<std::string> atoms, Measure weights);

  std::size_t size() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::string& atom(std::size_t i) const { return atoms_.at(i); }
  const Measure& weights() const { return weights_; }
  const Rational& weight(std::size_t i) const { return weights_.at(i); }

  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Atom indices with positive weight, ascending.
  std::vector<std::size_t> support() const;

  /// Same atoms, different measure (the gauge keeps atoms and swaps measures).
  FiniteProbSpace with_measure(Measure weights) const;

  friend bool operator==(const FiniteProbSpace&, const FiniteProbSpace&) = default;

 private:
  std::vector<std::string> atoms_;
  Measure weights_;
};

/// Total function between atom index sets. Stored as image[source atom].
struct AtomMap {
  std::size_t target_size = 0;
  std::vector<std::size_t> image;

  std::size_t source_size() const { return image.size(); }

  static AtomMap identity(std::size_t n);

  /// Apply `first`, then `second`.
  static AtomMap then(const AtomMap& first, const AtomMap& second);

  friend bool operator==(const AtomMap&, const AtomMap&) = default;
};

/// Atom-level measurable map whose pushforward of the source measure is
/// absolutely continuous with respect to the target measure.
class ProbMap {
 public:
  /// Throws AbsContinuityError (witness = target atom) when the pushforward
  /// charges a null atom of the target.
  ProbMap(FiniteProbSpace source, FiniteProbSpace target, AtomMap map);

  const FiniteProbSpace& source() const { return source_; }
  const FiniteProbSpace& target() const { return target_; }
  const AtomMap& map() const { return map_; }

 private:
  FiniteProbSpace source_;
  FiniteProbSpace target_;
  AtomMap map_;
};

/// Integrable function class on a finite space, stored as its canonical
/// representative (exactly zero on every null atom).
class L1Class {
 public:
  L1Class(FiniteProbSpace space, RatVector values);

  static L1Class constant(const FiniteProbSpace& space, const Rational& value);

  const FiniteProbSpace& space() const { return space_; }
  const RatVector& values() const { return values_; }
  const Rational& operator[](std::size_t i) const { return values_.at(i); }

  Rational integral() const;

  friend bool operator==(const L1Class&, const L1Class&) = default;

 private:
  FiniteProbSpace space_;
  RatVector values_;
};

enum class MeasureRelation {
  Equal,
  Equivalent,
  FirstAbsContinuous,   // m1 << m2 only
  SecondAbsContinuous,  // m2 << m1 only
  Incomparable,
};

const char* to_string(MeasureRelation r);

/// Returns the first atom where `reference` is zero but `m` is not.
std::optional<std::size_t> abs_continuity_violation(const Measure& m, const Measure& reference);

Measure pushforward(const Measure& m, const AtomMap& map);
Measure pushforward(const FiniteProbSpace& source, const ProbMap& map);

MeasureRelation compare_measures(const Measure& m1, const Measure& m2);

/// dm1/dm2 as a class on (atoms, m2). Throws AbsContinuityError unless m1 << m2.
L1Class radon_nikodym(const Measure& m1, const FiniteProbSpace& reference);

/// Conditional expectation along `map` viewed as an operator from functions on
/// the source atoms to functions on the target atoms:
///   (E f)(y) = sum_{x -> y} f(x) source(x) / target(y)   when target(y) > 0,
/// and 0 at target-null atoms.
RatMatrix cond_expectation(const Measure& source, const Measure& target, const AtomMap& map);
RatMatrix cond_expectation(const ProbMap& map);

/// Atomwise product, re-canonicalized on the first argument's space.
L1Class product(const L1Class& f, const L1Class& g);

/// Applies an operator realized by cond_expectation to a class on its source.
L1Class apply(const RatMatrix& op, const L1Class& f, const FiniteProbSpace& target);

}  // namespace fh
