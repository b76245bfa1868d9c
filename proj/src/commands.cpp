#include "commands.hpp"

#include "holonomy.hpp"
#include "sigma_complex.hpp"

#include <sstream>

namespace fh {

namespace {

using json = nlohmann::json;

json class_json(const std::vector<std::string>& atoms, const RatVector& values) {
  return {{"atoms", atoms}, {"values", to_strings(values)}};
}

json matrix_json(const std::vector<std::string>& row_atoms, const std::vector<std::string>& col_atoms,
                 const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const Rational& x : m.row(r)) row.push_back(to_string(x));
    rows.push_back(row);
  }
  return {{"rows", row_atoms}, {"cols", col_atoms}, {"entries", rows}};
}

json names_json(const Presentation& pres, const ParamSimplex& s) {
  json arrows = json::array();
  for (const Path& p : s.arrows) arrows.push_back(pres.name(p));
  json objects = json::array();
  for (ObjectId o : s.objects) objects.push_back(pres.objects()[o]);
  return {{"arrows", arrows}, {"objects", objects}};
}

json gauge_json(const Presentation& pres, const GaugeChain& g) {
  json out = json::array();
  for (std::size_t l = 0; l <= g.k(); ++l) {
    const GaugePosition& p = g.position(l);
    out.push_back({{"position", l},
                   {"object", pres.objects()[p.object]},
                   {"atoms", p.gauged.atoms()},
                   {"gauge_measure", to_strings(p.gauged.weights())},
                   {"original_measure", to_strings(p.original.weights())}});
  }
  return out;
}

json envelope(const LoadedSpec& spec, const char* command, Outcome outcome, json truncation, json payload) {
  return {{"tool", "fh"},
          {"version", kToolVersion},
          {"command", command},
          {"input_digest", spec.digest},
          {"status", outcome == Outcome::Ok ? "ok" : "negative"},
          {"truncation", std::move(truncation)},
          {"payload", std::move(payload)}};
}

const char* kind_name(FiltrationViolation::Kind k) {
  switch (k) {
    case FiltrationViolation::Kind::Category: return "category";
    case FiltrationViolation::Kind::NullPreservation: return "null_preservation";
    case FiltrationViolation::Kind::Functoriality: return "functoriality";
  }
  return "?";
}

json violations_json(const std::vector<FiltrationViolation>& violations) {
  json out = json::array();
  for (const auto& v : violations) out.push_back({{"kind", kind_name(v.kind)}, {"message", v.message}});
  return out;
}

// Commands other than validate refuse invalid filtrations with the same report.
std::optional<CommandResult> reject_invalid(const LoadedSpec& spec, const char* command) {
  const auto violations = spec.filtration.validate();
  if (violations.empty()) return std::nullopt;
  return CommandResult{Outcome::Negative,
                       envelope(spec, command, Outcome::Negative, json::object(),
                                {{"error", "invalid filtration"}, {"violations", violations_json(violations)}})};
}

CommandResult negative(const LoadedSpec& spec, const char* command, const std::string& message) {
  return CommandResult{Outcome::Negative,
                       envelope(spec, command, Outcome::Negative, json::object(), {{"error", message}})};
}

bool has_path_longer_than(const Presentation& pres, std::size_t bound) {
  if (pres.mode() == Mode::Table) return false;
  for (const Path& p : pres.enumerate_arrows(bound + 1)) {
    if (p.word.size() > bound) return true;
  }
  return false;
}

// Loops of every length exist as soon as one nonempty loop exists.
bool has_directed_cycle(const Presentation& pres) {
  if (pres.mode() == Mode::Free) return !pres.quiver().is_acyclic();
  std::vector<ArrowDecl> steps;
  for (std::size_t a = 0; a < pres.arrow_decls().size(); ++a) {
    if (!pres.is_identity(pres.generator(a))) steps.push_back(pres.arrow_decls()[a]);
  }
  for (auto& s : steps) s.name = "a" + std::to_string(&s - steps.data());
  return !Quiver(pres.objects(), steps).is_acyclic();
}

json holonomy_json(const Presentation& pres, const HolonomyReport& r) {
  const GaugeChain& g = r.gauge;
  const auto& atoms0 = g.position(0).gauged.atoms();
  const auto& atomsk = g.position(g.k()).gauged.atoms();
  json internal = json::array();
  for (std::size_t l = 0; l < r.internal.size(); ++l) {
    const auto& d = r.internal[l];
    internal.push_back({{"position", l},
                        {"object", pres.objects()[g.position(l).object]},
                        {"relation", to_string(d.relation)},
                        {"derivative", d.derivative ? class_json(g.position(l).gauged.atoms(), d.derivative->values())
                                                    : json(nullptr)}});
  }
  return {{"simplex", names_json(pres, r.sigma())},
          {"k", g.k()},
          {"is_loop", true},
          {"classification", to_string(r.classification)},
          {"homological_arbitrage", r.homological_arbitrage()},
          {"initial_measure", class_json(atoms0, r.initial())},
          {"terminal_measure", class_json(atomsk, r.terminal())},
          {"relation", to_string(r.relation)},
          {"distortion", r.distortion ? class_json(atomsk, r.distortion->values()) : json(nullptr)},
          {"holonomy", matrix_json(atoms0, atomsk, r.holonomy)},
          {"gauge", gauge_json(pres, g)},
          {"internal_distortion", internal}};
}

}  // namespace

ParamSimplex parse_simplex(const Presentation& pres, const std::string& csv) {
  std::vector<Path> arrows;
  std::stringstream in(csv);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name.empty()) throw UsageError("empty arrow name in --simplex");
    const auto p = pres.find_arrow(name);
    if (!p) throw UsageError("unknown arrow \"" + name + "\" in --simplex");
    arrows.push_back(*p);
  }
  if (arrows.empty()) throw UsageError("--simplex needs at least one arrow name");
  try {
    return make_simplex(arrows);
  } catch (const NotComposableError& e) {
    const std::size_t l = e.position();
    throw NotComposableError(l, "simplex breaks between " + pres.name(arrows[l - 1]) + " (ends at " +
                                    pres.objects()[arrows[l - 1].dst] + ") and " + pres.name(arrows[l]) +
                                    " (starts at " + pres.objects()[arrows[l].src] + ")");
  }
}

CommandResult run_validate(const LoadedSpec& spec) {
  const Filtration& f = spec.filtration;
  const auto violations = f.validate();
  const Outcome outcome = violations.empty() ? Outcome::Ok : Outcome::Negative;
  json payload = {{"valid", violations.empty()},
                  {"mode", f.presentation().mode() == Mode::Free ? "free" : "table"},
                  {"objects", f.presentation().object_count()},
                  {"arrows", f.presentation().arrow_decls().size()},
                  {"violations", violations_json(violations)}};
  return {outcome, envelope(spec, "validate", outcome, json::object(), std::move(payload))};
}

CommandResult run_martingale(const LoadedSpec& spec, const MartingaleOptions& opts) {
  if (auto r = reject_invalid(spec, "martingale")) return *r;
  const Filtration& f = spec.filtration;
  const Presentation& pres = f.presentation();
  const std::size_t bound = opts.max_path_len.value_or(default_path_bound(f));
  const auto arrows = martingale_arrows(f, bound);
  const MartingaleKernel kernel = martingale_kernel(f, arrows);

  json arrow_names = json::array();
  for (const Path& p : arrows) arrow_names.push_back(pres.name(p));
  json payload = {{"dimension", kernel.dimension}, {"arrow_set", arrow_names}, {"arrow_count", arrows.size()}};
  json truncation = json::object();
  if (pres.mode() == Mode::Free) {
    payload["path_bound"] = bound;
    if (has_path_longer_than(pres, bound)) truncation["arrow_path_bound"] = bound;
  }
  if (opts.basis) {
    json basis = json::array();
    for (const AdaptedProcess& proc : kernel.basis) {
      json components = json::array();
      for (std::size_t o = 0; o < proc.size(); ++o) {
        components.push_back({{"object", pres.objects()[o]}, {"atoms", f.space(o).atoms()},
                              {"values", to_strings(proc[o].values())}});
      }
      basis.push_back(components);
    }
    payload["basis"] = basis;
  }
  return {Outcome::Ok, envelope(spec, "martingale", Outcome::Ok, std::move(truncation), std::move(payload))};
}

CommandResult run_complex(const LoadedSpec& spec, const ComplexOptions& opts) {
  if (opts.max_degree < 1) throw UsageError("max-degree must be ≥ 1");
  if (auto r = reject_invalid(spec, "complex")) return *r;
  const Filtration& f = spec.filtration;
  const Presentation& pres = f.presentation();
  ParamSimplex sigma;
  try {
    sigma = parse_simplex(pres, opts.simplex);
  } catch (const NotComposableError& e) {
    return negative(spec, "complex", e.what());
  }
  // H^n needs delta^{n+1}, so cochains are built one degree past the request.
  const SigmaComplex sc = build_complex(build_gauge(f, sigma), opts.max_degree + 1);

  json degrees = json::array();
  for (std::size_t n = 0; n <= sc.max_degree(); ++n) {
    json blocks = json::array();
    for (std::size_t b = 0; b < sc.layout(n).blocks(); ++b) blocks.push_back(sc.layout(n).width(b));
    degrees.push_back({{"degree", n}, {"index_count", sc.index(n).size()}, {"block_dims", blocks},
                       {"dim", sc.dim(n)}});
  }
  json cohom = json::array();
  for (std::size_t n = 0; n <= opts.max_degree; ++n) {
    const Cohomology h = cohomology(sc, n, opts.basis);
    json entry = {{"degree", n}, {"Z", h.cocycles}, {"B", h.coboundaries}, {"H", h.dimension}};
    if (opts.basis) {
      json basis = json::array();
      for (const SigmaCochain& c : h.cocycle_basis) {
        json comps = json::array();
        for (std::size_t i = 0; i < c.values.size(); ++i) {
          comps.push_back({{"theta", sc.index(n)[i].values}, {"values", to_strings(c.values[i])}});
        }
        basis.push_back(comps);
      }
      entry["cocycle_basis"] = basis;
    }
    cohom.push_back(entry);
  }
  json squares = json::array();
  // build_complex refuses to return a complex whose composites are nonzero.
  for (std::size_t n = 1; n < sc.max_degree(); ++n) squares.push_back({{"n", n}, {"status", "zero"}});

  json payload = {{"simplex", names_json(pres, sigma)},
                  {"k", sigma.k()},
                  {"max_degree", opts.max_degree},
                  {"gauge", gauge_json(pres, sc.gauge())},
                  {"degrees", degrees},
                  {"cohomology", cohom},
                  {"delta_squared", squares},
                  {"degree_zero_convention", "delta^0 = 0, so H^0 = Z^0"}};
  return {Outcome::Ok, envelope(spec, "complex", Outcome::Ok, json::object(), std::move(payload))};
}

CommandResult run_holonomy(const LoadedSpec& spec, const std::string& simplex) {
  if (auto r = reject_invalid(spec, "holonomy")) return *r;
  const Filtration& f = spec.filtration;
  ParamSimplex sigma;
  try {
    sigma = parse_simplex(f.presentation(), simplex);
    return {Outcome::Ok, envelope(spec, "holonomy", Outcome::Ok, json::object(),
                                  holonomy_json(f.presentation(), classify(f, sigma)))};
  } catch (const NotComposableError& e) {
    return negative(spec, "holonomy", e.what());
  } catch (const NotALoopError& e) {
    return negative(spec, "holonomy", e.what());
  }
}

CommandResult run_scan(const LoadedSpec& spec, const ScanOptions& opts) {
  if (auto r = reject_invalid(spec, "scan")) return *r;
  const Filtration& f = spec.filtration;
  const LoopScan scan = scan_loops(f, opts.max_len, opts.limit);
  json loops = json::array();
  for (const auto& r : scan.reports) loops.push_back(holonomy_json(f.presentation(), r));
  json truncation = json::object();
  if (has_directed_cycle(f.presentation())) truncation["loop_length_bound"] = opts.max_len;
  if (scan.truncated) truncation["loop_limit"] = opts.limit;
  json payload = {{"max_len", opts.max_len}, {"limit", opts.limit}, {"truncated", scan.truncated},
                  {"count", scan.reports.size()}, {"loops", loops}};
  return {Outcome::Ok, envelope(spec, "scan", Outcome::Ok, std::move(truncation), std::move(payload))};
}

CommandResult run_naive_check(const LoadedSpec& spec, const NaiveOptions& opts) {
  if (opts.degree < 1) throw UsageError("degree must be ≥ 1");
  if (auto r = reject_invalid(spec, "naive-check")) return *r;
  const Filtration& f = spec.filtration;
  const Presentation& pres = f.presentation();
  const std::size_t bound = opts.max_path_len.value_or(default_path_bound(f));
  const NaiveObstruction ob = naive_obstruction(f, opts.degree, bound);

  json payload = {{"degree", ob.degree},
                  {"is_zero", ob.is_zero},
                  {"nerve_sizes", {ob.lower_count, ob.middle_count, ob.upper_count}}};
  json truncation = json::object();
  if (pres.mode() == Mode::Free) {
    payload["path_bound"] = bound;
    if (ob.truncated) truncation["nerve_path_bound"] = bound;
  }
  if (ob.is_zero) {
    payload["witness"] = nullptr;
  } else {
    const ObjectId start = ob.cochain_simplex->objects.front();
    payload["witness"] = {
        {"tau", names_json(pres, *ob.tau)},
        {"cochain", {{"simplex", names_json(pres, *ob.cochain_simplex)},
                     {"object", pres.objects()[start]},
                     {"atom", f.space(start).atom(ob.cochain_atom)}}},
        {"value", class_json(f.space(ob.tau->objects.front()).atoms(), ob.value)}};
  }
  return {Outcome::Ok, envelope(spec, "naive-check", Outcome::Ok, std::move(truncation), std::move(payload))};
}

}  // namespace fh
