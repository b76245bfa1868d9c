#include "sigma_complex.hpp"

#include <stdexcept>

namespace fh {

namespace {

RatVector add(RatVector a, const RatVector& b, int sign) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] == 0) continue;
    if (sign > 0) {
      a[i] += b[i];
    } else {
      a[i] -= b[i];
    }
  }
  return a;
}

MonotoneMap edge(std::size_t k, std::size_t p, std::size_t q) { return MonotoneMap{k, {p, q}}; }

}  // namespace

std::optional<std::size_t> SigmaComplex::position_of(const MonotoneMap& theta) const {
  if (theta.values.empty() || theta.n() >= degrees_.size()) return std::nullopt;
  const auto& lookup = degrees_[theta.n()].lookup;
  const auto it = lookup.find(theta);
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

SigmaCochain SigmaComplex::zero_cochain(std::size_t n) const {
  SigmaCochain c{n, {}};
  for (const MonotoneMap& theta : index(n)) {
    c.values.emplace_back(gauge_.position(theta(0)).gauged.size());
  }
  return c;
}

RatVector SigmaComplex::to_coords(const SigmaCochain& c) const {
  const BlockLayout& l = layout(c.degree);
  if (c.values.size() != l.blocks()) throw std::invalid_argument("cochain has the wrong number of components");
  RatVector coords(l.dim);
  for (std::size_t b = 0; b < l.blocks(); ++b) l.gather(b, c.values[b], coords);
  return coords;
}

SigmaCochain SigmaComplex::from_coords(std::size_t n, const RatVector& coords) const {
  const BlockLayout& l = layout(n);
  if (coords.size() != l.dim) throw std::invalid_argument("coordinate vector has the wrong length");
  SigmaCochain c{n, {}};
  for (std::size_t b = 0; b < l.blocks(); ++b) {
    c.values.push_back(l.scatter(b, coords, gauge_.position(index(n)[b](0)).gauged.size()));
  }
  return c;
}

const RatVector& SigmaComplex::value(const SigmaCochain& c, const MonotoneMap& theta) const {
  const auto pos = position_of(theta);
  if (!pos || theta.n() != c.degree) throw std::out_of_range("index is not in the cochain's degree");
  return c.values.at(*pos);
}

SigmaComplex build_complex(GaugeChain g, std::size_t max_degree) {
  if (max_degree < 1) throw std::invalid_argument("max-degree must be ≥ 1");
  SigmaComplex sc;
  sc.gauge_ = std::move(g);
  const GaugeChain& gauge = sc.gauge_;
  const std::size_t k = gauge.k();

  for (std::size_t n = 0; n <= max_degree; ++n) {
    SigmaComplex::Degree d;
    d.index = enumerate_monotone(n, k);
    for (std::size_t i = 0; i < d.index.size(); ++i) {
      d.lookup.emplace(d.index[i], i);
      d.layout.add(gauge.position(d.index[i](0)).gauged.support());
    }
    sc.degrees_.push_back(std::move(d));
  }

  sc.degrees_[0].delta = RatMatrix(sc.degrees_[0].layout.dim, 0);
  for (std::size_t n = 1; n <= max_degree; ++n) {
    const auto& rows = sc.degrees_[n];
    const auto& cols = sc.degrees_[n - 1];
    RatMatrix delta(rows.layout.dim, cols.layout.dim);
    for (std::size_t r = 0; r < rows.index.size(); ++r) {
      const MonotoneMap& theta = rows.index[r];
      const RatMatrix& id = gauge.transport(theta(0), theta(0));
      for (std::size_t l = 0; l <= n; ++l) {
        const std::size_t c = cols.lookup.at(face(theta, l));
        const RatMatrix& op = l == 0 ? gauge.transport(theta(0), theta(1)) : id;
        accumulate_block(delta, rows.layout.offsets[r], cols.layout.offsets[c], rows.layout.atoms[r],
                         cols.layout.atoms[c], op, l % 2 == 0 ? +1 : -1);
      }
    }
    sc.degrees_[n].delta = std::move(delta);
  }

  for (std::size_t n = 1; n < max_degree; ++n) {
    if (!(sc.degrees_[n + 1].delta * sc.degrees_[n].delta).is_zero()) {
      throw std::logic_error("sigma-gauge coboundaries fail delta^" + std::to_string(n + 1) + " o delta^" +
                             std::to_string(n) + " = 0");
    }
  }
  return sc;
}

SigmaCochain apply_coboundary(const SigmaComplex& sc, const SigmaCochain& c) {
  const GaugeChain& g = sc.gauge();
  const std::size_t n = c.degree + 1;
  SigmaCochain out{n, {}};
  for (const MonotoneMap& theta : enumerate_monotone(n, g.k())) {
    RatVector v = g.transport(theta(0), theta(1)).apply(sc.value(c, face(theta, 0)));
    for (std::size_t l = 1; l <= n; ++l) v = add(std::move(v), sc.value(c, face(theta, l)), l % 2 == 0 ? +1 : -1);
    out.values.push_back(std::move(v));
  }
  return out;
}

Cohomology cohomology(const SigmaComplex& sc, std::size_t n, bool with_basis) {
  if (n + 1 > sc.max_degree()) {
    throw std::out_of_range("cohomology in degree " + std::to_string(n) + " needs max-degree >= " +
                            std::to_string(n + 1));
  }
  Cohomology h;
  h.degree = n;
  const auto kernel = kernel_basis(sc.delta(n + 1));
  h.cocycles = kernel.size();
  h.coboundaries = n == 0 ? 0 : rank(sc.delta(n));
  h.dimension = h.cocycles - h.coboundaries;
  if (with_basis) {
    for (const RatVector& v : kernel) h.cocycle_basis.push_back(sc.from_coords(n, v));
  }
  return h;
}

CocycleIdentity check_cocycle_identity(const SigmaComplex& sc, const SigmaCochain& a, const MonotoneMap& theta) {
  if (a.degree != 1 || theta.n() != 2) throw std::invalid_argument("cocycle identity needs a 1-cochain and theta : [2] -> [k]");
  CocycleIdentity r;
  r.lhs = sc.value(a, face(theta, 1));
  r.rhs = add(sc.gauge().transport(theta(0), theta(1)).apply(sc.value(a, face(theta, 0))),
              sc.value(a, face(theta, 2)), +1);
  r.holds = r.lhs == r.rhs;
  return r;
}

PathDecomposition check_path_decomposition(const SigmaComplex& sc, const SigmaCochain& a, const MonotoneMap& theta) {
  if (a.degree != 1) throw std::invalid_argument("path decomposition needs a 1-cochain");
  if (theta.values.size() < 2) throw std::invalid_argument("path decomposition needs theta : [m] -> [k] with m >= 1");
  const std::size_t k = sc.gauge().k();
  const std::size_t m = theta.n();
  PathDecomposition r;
  r.strictly_increasing = theta.strictly_increasing();
  r.is_cocycle = true;
  for (const RatVector& v : apply_coboundary(sc, a).values) {
    for (const Rational& x : v) {
      if (x != 0) r.is_cocycle = false;
    }
  }
  r.lhs = sc.value(a, edge(k, theta(0), theta(m)));
  r.rhs.assign(r.lhs.size(), Rational(0));
  for (std::size_t l = 0; l < m; ++l) {
    const RatVector term = sc.gauge().transport(theta(0), theta(l)).apply(sc.value(a, edge(k, theta(l), theta(l + 1))));
    r.rhs = add(std::move(r.rhs), term, +1);
  }
  r.holds = r.lhs == r.rhs;
  return r;
}

}  // namespace fh
