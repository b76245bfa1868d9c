#include "filtration.hpp"

#include <map>
#include <utility>

namespace fh {

namespace {

std::string quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

Filtration::Filtration(Presentation pres, std::vector<FiniteProbSpace> spaces, std::vector<AtomMap> maps)
    : pres_(std::move(pres)), spaces_(std::move(spaces)) {
  if (spaces_.size() != pres_.object_count()) {
    throw std::invalid_argument("filtration needs one space per object");
  }
  if (pres_.mode() == Mode::Table) {
    for (ObjectId o = 0; o < pres_.object_count(); ++o) maps_.push_back(AtomMap::identity(spaces_[o].size()));
  }
  maps_.insert(maps_.end(), std::make_move_iterator(maps.begin()), std::make_move_iterator(maps.end()));
  const auto& decls = pres_.arrow_decls();
  if (maps_.size() != decls.size()) {
    throw std::invalid_argument("filtration needs one map per arrow");
  }
  for (std::size_t a = 0; a < decls.size(); ++a) {
    const AtomMap& m = maps_[a];
    if (m.source_size() != spaces_[decls[a].dst].size() || m.target_size != spaces_[decls[a].src].size()) {
      throw std::invalid_argument("map of arrow " + quote(decls[a].name) +
                                  " does not go from the atoms of its target to the atoms of its source");
    }
    for (std::size_t y : m.image) {
      if (y >= m.target_size) throw std::invalid_argument("map of arrow " + quote(decls[a].name) + " leaves its codomain");
    }
  }
}

AtomMap Filtration::map_of(const Path& p) const {
  if (pres_.mode() == Mode::Table) return maps_.at(p.word.at(0));
  // F(g_1 ... g_m) = F(g_1) o ... o F(g_m): apply the last generator's map first.
  AtomMap out = AtomMap::identity(spaces_.at(p.dst).size());
  for (std::size_t i = p.word.size(); i-- > 0;) out = AtomMap::then(out, maps_.at(p.word[i]));
  return out;
}

ProbMap Filtration::prob_map(const Path& p) const {
  return ProbMap(spaces_.at(p.dst), spaces_.at(p.src), map_of(p));
}

std::vector<FiltrationViolation> Filtration::validate() const {
  using Kind = FiltrationViolation::Kind;
  std::vector<FiltrationViolation> out;
  const auto& decls = pres_.arrow_decls();

  if (pres_.mode() == Mode::Table) {
    for (const auto& v : pres_.category().validate_table()) out.push_back({Kind::Category, v.message});
  }

  for (std::size_t a = 0; a < decls.size(); ++a) {
    const Measure pushed = pushforward(spaces_[decls[a].dst].weights(), maps_[a]);
    if (auto bad = abs_continuity_violation(pushed, spaces_[decls[a].src].weights())) {
      out.push_back({Kind::NullPreservation,
                     "arrow " + quote(decls[a].name) + " is not null-preserving: the pushforward charges atom " +
                         quote(spaces_[decls[a].src].atom(*bad)) + " of " +
                         quote(pres_.objects()[decls[a].src]) + ", which has measure zero"});
    }
  }

  if (pres_.mode() == Mode::Table) {
    const FinCategory& cat = pres_.category();
    for (std::size_t i = 0; i < decls.size(); ++i) {
      for (std::size_t j = 0; j < decls.size(); ++j) {
        if (decls[i].dst != decls[j].src) continue;
        const auto r = cat.compose(i, j);
        if (!r) continue;
        // F(j o i) must equal F(i) o F(j): apply F(j) first.
        const AtomMap expected = AtomMap::then(maps_[j], maps_[i]);
        if (maps_[*r] == expected) continue;
        std::size_t atom = 0;
        while (atom < expected.image.size() && maps_[*r].image[atom] == expected.image[atom]) ++atom;
        out.push_back({Kind::Functoriality,
                       "functoriality fails for the pair (" + decls[j].name + "\xE2\x88\x98" + decls[i].name +
                           ") at atom " + quote(spaces_[decls[j].dst].atom(atom))});
      }
    }
  }
  return out;
}

L1Class density(const Filtration& f, const Path& arrow) {
  const Measure pushed = pushforward(f.space(arrow.dst).weights(), f.map_of(arrow));
  return radon_nikodym(pushed, f.space(arrow.src));
}

std::vector<L1Class> delta1(const Filtration& f, const AdaptedProcess& process, const std::vector<Path>& arrows) {
  if (process.size() != f.spaces().size()) throw std::invalid_argument("process needs one class per object");
  std::vector<L1Class> out;
  out.reserve(arrows.size());
  for (const Path& i : arrows) {
    const FiniteProbSpace& s = f.space(i.src);
    const RatMatrix e = cond_expectation(f.space(i.dst).weights(), s.weights(), f.map_of(i));
    const L1Class transported = apply(e, process.at(i.dst), s);
    const L1Class scaled = product(process.at(i.src), density(f, i));
    RatVector diff(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) diff[x] = transported[x] - scaled[x];
    out.emplace_back(s, std::move(diff));
  }
  return out;
}

BlockLayout process_layout(const Filtration& f) {
  BlockLayout layout;
  for (const auto& s : f.spaces()) layout.add(s.support());
  return layout;
}

BlockLayout arrow_layout(const Filtration& f, const std::vector<Path>& arrows) {
  BlockLayout layout;
  for (const Path& i : arrows) layout.add(f.space(i.src).support());
  return layout;
}

RatMatrix delta1_matrix(const Filtration& f, const std::vector<Path>& arrows) {
  const BlockLayout cols = process_layout(f);
  const BlockLayout rows = arrow_layout(f, arrows);
  RatMatrix m(rows.dim, cols.dim);
  for (std::size_t r = 0; r < arrows.size(); ++r) {
    const Path& i = arrows[r];
    const RatMatrix e = cond_expectation(f.space(i.dst).weights(), f.space(i.src).weights(), f.map_of(i));
    accumulate_block(m, rows.offsets[r], cols.offsets[i.dst], rows.atoms[r], cols.atoms[i.dst], e, +1);
    accumulate_block(m, rows.offsets[r], cols.offsets[i.src], rows.atoms[r], cols.atoms[i.src],
                     diagonal(density(f, i).values()), -1);
  }
  return m;
}

AdaptedProcess process_from_coords(const Filtration& f, const RatVector& coords) {
  const BlockLayout layout = process_layout(f);
  if (coords.size() != layout.dim) throw std::invalid_argument("coordinate vector has the wrong length");
  AdaptedProcess out;
  for (std::size_t o = 0; o < f.spaces().size(); ++o) {
    out.emplace_back(f.space(o), layout.scatter(o, coords, f.space(o).size()));
  }
  return out;
}

RatVector coords_from_process(const Filtration& f, const AdaptedProcess& process) {
  const BlockLayout layout = process_layout(f);
  RatVector coords(layout.dim);
  for (std::size_t o = 0; o < process.size(); ++o) layout.gather(o, process[o].values(), coords);
  return coords;
}

MartingaleKernel martingale_kernel(const Filtration& f, const std::vector<Path>& arrows) {
  MartingaleKernel out;
  out.arrows = arrows;
  for (const RatVector& v : kernel_basis(delta1_matrix(f, arrows))) {
    out.basis.push_back(process_from_coords(f, v));
  }
  out.dimension = out.basis.size();
  return out;
}

std::size_t default_path_bound(const Filtration& f) {
  if (f.presentation().mode() == Mode::Table) return 1;
  return 2 * f.presentation().arrow_decls().size();
}

std::vector<Path> martingale_arrows(const Filtration& f, std::size_t max_len) {
  return f.presentation().enumerate_arrows(max_len);
}

BlockLayout nerve_layout(const Filtration& f, const std::vector<ParamSimplex>& simplices) {
  BlockLayout layout;
  for (const auto& s : simplices) layout.add(f.space(s.objects.front()).support());
  return layout;
}

RatMatrix naive_delta(const Filtration& f, std::size_t n, const std::vector<ParamSimplex>& lower,
                      const std::vector<ParamSimplex>& upper) {
  if (n == 0) throw std::invalid_argument("naive coboundary degree must be at least 1");
  const Presentation& pres = f.presentation();
  const BlockLayout cols = nerve_layout(f, lower);
  const BlockLayout rows = nerve_layout(f, upper);
  std::map<ParamSimplex, std::size_t> index;
  for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], i);

  struct ArrowOps {
    RatMatrix transport;
    RatMatrix density;
  };
  std::map<Path, ArrowOps> cache;
  auto ops_for = [&](const Path& arrow) -> const ArrowOps& {
    auto it = cache.find(arrow);
    if (it == cache.end()) {
      ArrowOps ops{cond_expectation(f.space(arrow.dst).weights(), f.space(arrow.src).weights(), f.map_of(arrow)),
                   diagonal(density(f, arrow).values())};
      it = cache.emplace(arrow, std::move(ops)).first;
    }
    return it->second;
  };

  RatMatrix m(rows.dim, cols.dim);
  for (std::size_t r = 0; r < upper.size(); ++r) {
    const ParamSimplex& tau = upper[r];
    if (tau.k() != n) throw std::invalid_argument("simplex of the wrong degree in naive chain slice");
    const ArrowOps& ops = ops_for(tau.arrows.front());
    const RatMatrix id = RatMatrix::identity(f.space(tau.objects.front()).size());
    for (std::size_t l = 0; l <= n; ++l) {
      const auto it = index.find(simplex_face(pres, tau, l));
      if (it == index.end()) {
        throw std::invalid_argument("nerve slice is not closed under faces at " + describe(pres, tau));
      }
      const RatMatrix& op = l == 0 ? ops.transport : (l == 1 ? ops.density : id);
      accumulate_block(m, rows.offsets[r], cols.offsets[it->second], rows.atoms[r], cols.atoms[it->second], op,
                       l % 2 == 0 ? +1 : -1);
    }
  }
  return m;
}

NaiveObstruction naive_obstruction(const Filtration& f, std::size_t n, std::size_t path_bound) {
  if (n == 0) throw std::invalid_argument("naive obstruction degree must be at least 1");
  const Presentation& pres = f.presentation();
  NaiveObstruction out;
  out.degree = n;
  out.path_bound = path_bound;
  if (pres.mode() == Mode::Free) {
    for (const Path& p : pres.enumerate_arrows(path_bound + 1)) {
      if (p.word.size() > path_bound) {
        out.truncated = true;
        break;
      }
    }
  }

  const auto lower = enumerate_nerve(pres, n - 1, path_bound);
  const auto middle = enumerate_nerve(pres, n, path_bound);
  const auto upper = enumerate_nerve(pres, n + 1, path_bound);
  out.lower_count = lower.size();
  out.middle_count = middle.size();
  out.upper_count = upper.size();

  const RatMatrix composite = naive_delta(f, n + 1, middle, upper) * naive_delta(f, n, lower, middle);
  if (composite.is_zero()) return out;
  out.is_zero = false;

  const BlockLayout rows = nerve_layout(f, upper);
  const BlockLayout cols = nerve_layout(f, lower);
  std::map<ParamSimplex, std::size_t> lower_index;
  for (std::size_t i = 0; i < lower.size(); ++i) lower_index.emplace(lower[i], i);

  auto column_hits = [&](std::size_t r, std::size_t c) {
    for (std::size_t i = 0; i < rows.width(r); ++i) {
      if (composite(rows.offsets[r] + i, c) != 0) return true;
    }
    return false;
  };

  for (std::size_t r = 0; r < upper.size(); ++r) {
    std::optional<std::size_t> column;
    const ParamSimplex preferred = simplex_face(pres, simplex_face(pres, upper[r], 1), 0);
    if (auto it = lower_index.find(preferred); it != lower_index.end()) {
      for (std::size_t i = 0; i < cols.width(it->second) && !column; ++i) {
        if (column_hits(r, cols.offsets[it->second] + i)) column = cols.offsets[it->second] + i;
      }
    }
    for (std::size_t c = 0; c < cols.dim && !column; ++c) {
      if (column_hits(r, c)) column = c;
    }
    if (!column) continue;

    std::size_t block = 0;
    while (block + 1 < cols.blocks() && cols.offsets[block + 1] <= *column) ++block;
    out.tau = upper[r];
    out.cochain_simplex = lower[block];
    out.cochain_atom = cols.atoms[block][*column - cols.offsets[block]];
    out.value.assign(f.space(upper[r].objects.front()).size(), Rational(0));
    for (std::size_t i = 0; i < rows.width(r); ++i) {
      out.value[rows.atoms[r][i]] = composite(rows.offsets[r] + i, *column);
    }
    break;
  }
  return out;
}

}  // namespace fh
