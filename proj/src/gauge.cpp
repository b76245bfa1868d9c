#include "gauge.hpp"

#include <stdexcept>

namespace fh {

namespace {

bool valid_path(const Presentation& pres, const Path& p) {
  if (p.src >= pres.object_count() || p.dst >= pres.object_count()) return false;
  const auto& decls = pres.arrow_decls();
  if (pres.mode() == Mode::Table) {
    return p.word.size() == 1 && p.word[0] < decls.size() && decls[p.word[0]].src == p.src &&
           decls[p.word[0]].dst == p.dst;
  }
  ObjectId at = p.src;
  for (std::size_t g : p.word) {
    if (g >= decls.size() || decls[g].src != at) return false;
    at = decls[g].dst;
  }
  return at == p.dst;
}

void check_simplex(const Presentation& pres, const ParamSimplex& sigma) {
  if (sigma.objects.size() != sigma.arrows.size() + 1) {
    throw std::invalid_argument("simplex must list k+1 objects for k arrows");
  }
  if (sigma.objects.front() >= pres.object_count()) throw std::invalid_argument("simplex object out of range");
  for (std::size_t l = 0; l < sigma.k(); ++l) {
    const Path& p = sigma.arrows[l];
    if (!valid_path(pres, p)) throw std::invalid_argument("simplex arrow " + std::to_string(l + 1) + " is not an arrow");
    if (p.src != sigma.objects[l] || p.dst != sigma.objects[l + 1]) {
      throw NotComposableError(l, "simplex arrows " + std::to_string(l) + " and " + std::to_string(l + 1) +
                                      " are not composable");
    }
  }
}

}  // namespace

AtomMap GaugeChain::composed_map(std::size_t a, std::size_t b) const {
  if (a > b || b > k()) throw std::out_of_range("gauge positions out of range");
  AtomMap out = AtomMap::identity(positions_[b].gauged.size());
  for (std::size_t l = b; l > a; --l) out = AtomMap::then(out, step(l));
  return out;
}

const RatMatrix& GaugeChain::transport(std::size_t a, std::size_t b) const {
  if (a > b || b > k()) {
    throw std::out_of_range("transport positions (" + std::to_string(a) + ", " + std::to_string(b) +
                            ") out of range for k = " + std::to_string(k()));
  }
  return transports_[a * (k() + 1) + b];
}

GaugeChain build_gauge(const Filtration& f, const ParamSimplex& sigma) {
  check_simplex(f.presentation(), sigma);
  GaugeChain g;
  g.sigma_ = sigma;
  const std::size_t k = sigma.k();
  for (std::size_t l = 1; l <= k; ++l) g.steps_.push_back(f.map_of(sigma.arrows[l - 1]));

  std::vector<Measure> gauged(k + 1);
  gauged[k] = f.space(sigma.objects[k]).weights();
  for (std::size_t l = k; l-- > 0;) gauged[l] = pushforward(gauged[l + 1], g.steps_[l]);

  for (std::size_t l = 0; l <= k; ++l) {
    const FiniteProbSpace& original = f.space(sigma.objects[l]);
    g.positions_.push_back(GaugePosition{sigma.objects[l], original, original.with_measure(gauged[l])});
  }

  g.transports_.resize((k + 1) * (k + 1));
  for (std::size_t a = 0; a <= k; ++a) {
    g.transports_[a * (k + 1) + a] = RatMatrix::identity(g.positions_[a].gauged.size());
    for (std::size_t b = a + 1; b <= k; ++b) {
      g.transports_[a * (k + 1) + b] = cond_expectation(gauged[b], gauged[a], g.composed_map(a, b));
    }
  }
  return g;
}

std::vector<PositionDistortion> gauge_distortion(const GaugeChain& g) {
  std::vector<PositionDistortion> out;
  for (const GaugePosition& p : g.positions()) {
    PositionDistortion d{compare_measures(p.gauged.weights(), p.original.weights()), std::nullopt};
    if (!abs_continuity_violation(p.gauged.weights(), p.original.weights())) {
      d.derivative = radon_nikodym(p.gauged.weights(), p.original);
    }
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace fh
