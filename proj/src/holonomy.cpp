#include "holonomy.hpp"

namespace fh {

const char* to_string(HolonomyClass c) {
  return c == HolonomyClass::Trivial ? "Trivial" : "Nontrivial";
}

bool is_loop(const ParamSimplex& sigma) { return sigma.objects.front() == sigma.objects.back(); }

RatMatrix holonomy_operator(const GaugeChain& g) {
  if (!is_loop(g.sigma())) throw NotALoopError("not a loop: the simplex does not end where it starts");
  return g.transport(0, g.k());
}

HolonomyReport classify(const Filtration& f, const ParamSimplex& sigma) {
  if (!is_loop(sigma)) throw NotALoopError("not a loop: the simplex does not end where it starts");
  HolonomyReport r;
  r.gauge = build_gauge(f, sigma);
  const Measure& initial = r.gauge.measure(0);
  const Measure& terminal = r.gauge.measure(r.gauge.k());
  r.relation = compare_measures(initial, terminal);
  r.classification = (r.relation == MeasureRelation::Equal || r.relation == MeasureRelation::Equivalent)
                         ? HolonomyClass::Trivial
                         : HolonomyClass::Nontrivial;
  if (!abs_continuity_violation(initial, terminal)) {
    r.distortion = radon_nikodym(initial, r.gauge.position(r.gauge.k()).gauged);
  }
  r.holonomy = holonomy_operator(r.gauge);
  r.internal = gauge_distortion(r.gauge);
  return r;
}

LoopScan scan_loops(const Filtration& f, std::size_t max_len, std::size_t limit) {
  const Presentation& pres = f.presentation();
  LoopScan scan;
  scan.max_len = max_len;
  scan.limit = limit;

  auto emit = [&](const ParamSimplex& s) {
    if (scan.reports.size() >= limit) {
      scan.truncated = true;
      return false;
    }
    scan.reports.push_back(classify(f, s));
    return true;
  };

  for (ObjectId o = 0; o < pres.object_count(); ++o) {
    if (!emit(vertex_simplex(o))) return scan;
  }

  std::vector<Path> steps;
  const auto& decls = pres.arrow_decls();
  for (std::size_t a = 0; a < decls.size(); ++a) {
    const Path p = pres.generator(a);
    if (!pres.is_identity(p)) steps.push_back(p);
  }

  std::vector<std::vector<Path>> level;
  for (const Path& p : steps) level.push_back({p});
  for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
    for (const auto& chain : level) {
      if (chain.front().src == chain.back().dst && !emit(make_simplex(chain))) return scan;
    }
    if (len == max_len) break;
    std::vector<std::vector<Path>> next;
    for (const auto& chain : level) {
      for (const Path& p : steps) {
        if (p.src != chain.back().dst) continue;
        auto ext = chain;
        ext.push_back(p);
        next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }
  return scan;
}

}  // namespace fh
