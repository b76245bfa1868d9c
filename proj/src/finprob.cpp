#include "finprob.hpp"

#include <set>
#include <utility>

namespace fh {

FiniteProbSpace::FiniteProbSpace(std::vector<std::string> atoms, Measure weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights)) {
  if (atoms_.empty()) throw std::invalid_argument("probability space needs at least one atom");
  if (atoms_.size() != weights_.size()) {
    throw std::invalid_argument("probability space has " + std::to_string(atoms_.size()) +
                                " atoms but " + std::to_string(weights_.size()) + " weights");
  }
  std::set<std::string> seen;
  for (const auto& a : atoms_) {
    if (!seen.insert(a).second) throw std::invalid_argument("duplicate atom \"" + a + "\"");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 0) {
      throw std::invalid_argument("negative weight at atom \"" + atoms_[i] + "\"");
    }
    total += weights_[i];
  }
  if (total != 1) throw std::invalid_argument("mass ≠ 1 (total is " + to_string(total) + ")");
}

std::optional<std::size_t> FiniteProbSpace::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i] == label) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> FiniteProbSpace::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] != 0) out.push_back(i);
  }
  return out;
}

FiniteProbSpace FiniteProbSpace::with_measure(Measure weights) const {
  return FiniteProbSpace(atoms_, std::move(weights));
}

AtomMap AtomMap::identity(std::size_t n) {
  AtomMap m{n, std::vector<std::size_t>(n)};
  for (std::size_t i = 0; i < n; ++i) m.image[i] = i;
  return m;
}

AtomMap AtomMap::then(const AtomMap& first, const AtomMap& second) {
  if (first.target_size != second.source_size()) {
    throw std::invalid_argument("atom maps are not composable");
  }
  AtomMap out{second.target_size, std::vector<std::size_t>(first.source_size())};
  for (std::size_t x = 0; x < first.source_size(); ++x) out.image[x] = second.image[first.image[x]];
  return out;
}

ProbMap::ProbMap(FiniteProbSpace source, FiniteProbSpace target, AtomMap map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.source_size() != source_.size() || map_.target_size != target_.size()) {
    throw std::invalid_argument("atom map does not match the spaces it connects");
  }
  for (std::size_t y : map_.image) {
    if (y >= target_.size()) throw std::invalid_argument("atom map image out of range");
  }
  const Measure pushed = pushforward(source_.weights(), map_);
  if (auto bad = abs_continuity_violation(pushed, target_.weights())) {
    throw AbsContinuityError(*bad, "map is not null-preserving at target atom \"" +
                                       target_.atom(*bad) + "\"");
  }
}

L1Class::L1Class(FiniteProbSpace space, RatVector values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size()) {
    throw std::invalid_argument("L1 class has " + std::to_string(values_.size()) +
                                " values for a space of " + std::to_string(space_.size()) + " atoms");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (space_.weight(i) == 0) values_[i] = 0;
  }
}

L1Class L1Class::constant(const FiniteProbSpace& space, const Rational& value) {
  return L1Class(space, RatVector(space.size(), value));
}

Rational L1Class::integral() const {
  Rational acc = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) acc += values_[i] * space_.weight(i);
  return acc;
}

const char* to_string(MeasureRelation r) {
  switch (r) {
    case MeasureRelation::Equal: return "Equal";
    case MeasureRelation::Equivalent: return "Equivalent";
    case MeasureRelation::FirstAbsContinuous: return "AbsContinuousFirst";
    case MeasureRelation::SecondAbsContinuous: return "AbsContinuousSecond";
    case MeasureRelation::Incomparable: return "Incomparable";
  }
  return "?";
}

std::optional<std::size_t> abs_continuity_violation(const Measure& m, const Measure& reference) {
  if (m.size() != reference.size()) throw std::invalid_argument("atom-set mismatch");
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (reference[i] == 0 && m[i] != 0) return i;
  }
  return std::nullopt;
}

Measure pushforward(const Measure& m, const AtomMap& map) {
  if (m.size() != map.source_size()) {
    throw std::invalid_argument("atom-set mismatch: measure has " + std::to_string(m.size()) +
                                " atoms, map source has " + std::to_string(map.source_size()));
  }
  Measure out(map.target_size);
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (m[x] != 0) out[map.image[x]] += m[x];
  }
  return out;
}

Measure pushforward(const FiniteProbSpace& source, const ProbMap& map) {
  if (source.atoms() != map.source().atoms()) throw std::invalid_argument("atom-set mismatch");
  return pushforward(source.weights(), map.map());
}

MeasureRelation compare_measures(const Measure& m1, const Measure& m2) {
  if (m1.size() != m2.size()) throw std::invalid_argument("atom-set mismatch");
  if (m1 == m2) return MeasureRelation::Equal;
  const bool first_ll = !abs_continuity_violation(m1, m2).has_value();
  const bool second_ll = !abs_continuity_violation(m2, m1).has_value();
  if (first_ll && second_ll) return MeasureRelation::Equivalent;
  if (first_ll) return MeasureRelation::FirstAbsContinuous;
  if (second_ll) return MeasureRelation::SecondAbsContinuous;
  return MeasureRelation::Incomparable;
}

L1Class radon_nikodym(const Measure& m1, const FiniteProbSpace& reference) {
  if (auto bad = abs_continuity_violation(m1, reference.weights())) {
    throw AbsContinuityError(*bad, "measure is not absolutely continuous at atom \"" +
                                       reference.atom(*bad) + "\"");
  }
  RatVector density(m1.size());
  for (std::size_t i = 0; i < m1.size(); ++i) {
    if (reference.weight(i) != 0) density[i] = m1[i] / reference.weight(i);
  }
  return L1Class(reference, std::move(density));
}

RatMatrix cond_expectation(const Measure& source, const Measure& target, const AtomMap& map) {
  if (source.size() != map.source_size() || target.size() != map.target_size) {
    throw std::invalid_argument("conditional expectation: measures do not match the atom map");
  }
  RatMatrix op(map.target_size, map.source_size());
  for (std::size_t x = 0; x < map.source_size(); ++x) {
    const std::size_t y = map.image[x];
    if (target[y] != 0 && source[x] != 0) op(y, x) = source[x] / target[y];
  }
  return op;
}

RatMatrix cond_expectation(const ProbMap& map) {
  return cond_expectation(map.source().weights(), map.target().weights(), map.map());
}

L1Class product(const L1Class& f, const L1Class& g) {
  if (f.values().size() != g.values().size()) throw std::invalid_argument("atom-set mismatch");
  RatVector out(f.values().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] * g[i];
  return L1Class(f.space(), std::move(out));
}

L1Class apply(const RatMatrix& op, const L1Class& f, const FiniteProbSpace& target) {
  return L1Class(target, op.apply(f.values()));
}

}  // namespace fh
