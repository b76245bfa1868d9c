#include "nerve.hpp"

namespace fh {

bool MonotoneMap::strictly_increasing() const {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i - 1] >= values[i]) return false;
  }
  return true;
}

std::vector<MonotoneMap> enumerate_monotone(std::size_t n, std::size_t k) {
  std::vector<MonotoneMap> out;
  std::vector<std::size_t> cur(n + 1, 0);
  // Odometer over non-decreasing sequences, lexicographic.
  while (true) {
    out.push_back(MonotoneMap{k, cur});
    std::size_t i = n + 1;
    while (i > 0 && cur[i - 1] == k) --i;
    if (i == 0) break;
    const std::size_t v = cur[i - 1] + 1;
    for (std::size_t j = i - 1; j <= n; ++j) cur[j] = v;
  }
  return out;
}

MonotoneMap face(const MonotoneMap& theta, std::size_t l) {
  if (theta.values.size() < 2) throw std::out_of_range("face of a 0-dimensional index");
  if (l > theta.n()) {
    throw std::out_of_range("face index " + std::to_string(l) + " exceeds degree " +
                            std::to_string(theta.n()));
  }
  MonotoneMap out = theta;
  out.values.erase(out.values.begin() + static_cast<std::ptrdiff_t>(l));
  return out;
}

ParamSimplex make_simplex(const std::vector<Path>& arrows) {
  if (arrows.empty()) throw std::invalid_argument("simplex needs at least one arrow");
  ParamSimplex s;
  s.objects.push_back(arrows.front().src);
  for (std::size_t l = 0; l < arrows.size(); ++l) {
    if (arrows[l].src != s.objects.back()) {
      throw NotComposableError(l, "arrows " + std::to_string(l) + " and " + std::to_string(l + 1) +
                                      " are not composable");
    }
    s.objects.push_back(arrows[l].dst);
  }
  s.arrows = arrows;
  return s;
}

ParamSimplex vertex_simplex(ObjectId obj) { return ParamSimplex{{obj}, {}}; }

ParamSimplex simplex_face(const Presentation& pres, const ParamSimplex& tau, std::size_t l) {
  const std::size_t k = tau.k();
  if (k == 0 || l > k) {
    throw std::out_of_range("simplex face " + std::to_string(l) + " out of range for k = " +
                            std::to_string(k));
  }
  ParamSimplex out;
  out.objects = tau.objects;
  out.objects.erase(out.objects.begin() + static_cast<std::ptrdiff_t>(l));
  if (l == 0) {
    out.arrows.assign(tau.arrows.begin() + 1, tau.arrows.end());
  } else if (l == k) {
    out.arrows.assign(tau.arrows.begin(), tau.arrows.end() - 1);
  } else {
    out.arrows.assign(tau.arrows.begin(), tau.arrows.begin() + static_cast<std::ptrdiff_t>(l) - 1);
    out.arrows.push_back(pres.compose(tau.arrows[l - 1], tau.arrows[l]));
    out.arrows.insert(out.arrows.end(), tau.arrows.begin() + static_cast<std::ptrdiff_t>(l) + 1,
                      tau.arrows.end());
  }
  return out;
}

Path segment(const Presentation& pres, const ParamSimplex& sigma, std::size_t a, std::size_t b) {
  if (a > b || b > sigma.k()) {
    throw std::out_of_range("segment [" + std::to_string(a) + ", " + std::to_string(b) +
                            "] out of range for k = " + std::to_string(sigma.k()));
  }
  Path p = pres.identity(sigma.objects[a]);
  if (a == b) return p;
  p = sigma.arrows[a];
  for (std::size_t l = a + 1; l < b; ++l) p = pres.compose(p, sigma.arrows[l]);
  return p;
}

std::string describe(const Presentation& pres, const ParamSimplex& s) {
  std::string out = "(";
  if (s.k() == 0) {
    out += pres.objects().at(s.objects.front());
  } else {
    for (std::size_t l = 0; l < s.k(); ++l) {
      if (l > 0) out += ", ";
      out += pres.name(s.arrows[l]);
    }
  }
  return out + ")";
}

std::vector<ParamSimplex> enumerate_nerve(const Presentation& pres, std::size_t n,
                                          std::size_t max_total_len) {
  std::vector<std::vector<Path>> by_src(pres.object_count());
  for (Path& p : pres.enumerate_arrows(max_total_len)) by_src[p.src].push_back(std::move(p));

  struct Partial {
    ParamSimplex simplex;
    std::size_t used = 0;
  };
  std::vector<Partial> level;
  for (ObjectId o = 0; o < pres.object_count(); ++o) level.push_back({vertex_simplex(o), 0});
  const bool bounded = pres.mode() == Mode::Free;
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<Partial> next;
    for (const Partial& part : level) {
      for (const Path& p : by_src[part.simplex.objects.back()]) {
        const std::size_t used = part.used + pres.length(p);
        if (bounded && used > max_total_len) continue;
        Partial ext = part;
        ext.simplex.arrows.push_back(p);
        ext.simplex.objects.push_back(p.dst);
        ext.used = used;
        next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }
  std::vector<ParamSimplex> out;
  out.reserve(level.size());
  for (Partial& part : level) out.push_back(std::move(part.simplex));
  return out;
}

}  // namespace fh
