#include "oracle.hpp"
#include "random_filtration.hpp"
#include "sigma_complex.hpp"
#include "testing.hpp"

#include <doctest.h>

using namespace fh;
using fhtest::chain;
using fhtest::V;

namespace {

SigmaComplex complex_of(const char* spec, std::initializer_list<const char*> arrows, std::size_t max_degree) {
  const Filtration f = fhtest::load(spec);
  return build_complex(build_gauge(f, chain(f, arrows)), max_degree);
}

// a(theta) = m_{theta(1)} - m_{theta(0)} with m = (0, c, 2c), on both atoms.
SigmaCochain linear_cochain(const SigmaComplex& sc, const Rational& c) {
  SigmaCochain a = sc.zero_cochain(1);
  for (std::size_t i = 0; i < sc.index(1).size(); ++i) {
    const auto& t = sc.index(1)[i];
    const Rational v = c * (static_cast<long>(t(1)) - static_cast<long>(t(0)));
    a.values[i] = {v, v};
  }
  return a;
}

}  // namespace

TEST_SUITE("sigmacomplex") {
  TEST_CASE("block dimensions") {
    const SigmaComplex sc = complex_of("ex51.json", {"i1", "i2"}, 2);
    CHECK(sc.dim(0) == 6);
    CHECK(sc.dim(1) == 12);
    CHECK(sc.dim(2) == 20);
    CHECK(sc.delta(0).rows() == 6);
    CHECK(sc.delta(0).cols() == 0);
    const SigmaComplex s52 = complex_of("ex52.json", {"i1", "i2", "i3"}, 1);
    CHECK(s52.dim(0) == 6);
    CHECK_THROWS_AS(complex_of("ex51.json", {"i1", "i2"}, 0), std::invalid_argument);
  }

  TEST_CASE("identity transports give the plain difference") {
    const SigmaComplex sc = complex_of("ex51.json", {"i1", "i2"}, 1);
    SigmaCochain c = sc.zero_cochain(0);
    c.values = {V({"1", "2"}), V({"5", "-1"}), V({"0", "7"})};
    const SigmaCochain d = apply_coboundary(sc, c);
    for (std::size_t i = 0; i < sc.index(1).size(); ++i) {
      const auto& t = sc.index(1)[i];
      RatVector expected(2);
      for (std::size_t x = 0; x < 2; ++x) expected[x] = c.values[t(1)][x] - c.values[t(0)][x];
      CHECK(d.values[i] == expected);
    }
    CHECK(sc.from_coords(1, sc.delta(1).apply(sc.to_coords(c))).values == d.values);
  }

  TEST_CASE("cohomology of the worked examples matches the oracle") {
    const Filtration f51 = fhtest::load("ex51.json");
    const ParamSimplex s51 = chain(f51, {"i1", "i2"});
    const SigmaComplex sc = build_complex(build_gauge(f51, s51), 3);
    const oracle::Chain c51 = oracle::chain_of(f51, s51);
    const std::size_t expected[] = {2, 0, 0};
    for (std::size_t n = 0; n <= 2; ++n) {
      CHECK(cohomology(sc, n).dimension == expected[n]);
      CHECK(oracle::sigma_cohomology(c51, n) == expected[n]);
      CHECK(oracle::densify(sc.delta(n + 1)) == oracle::sigma_delta(c51, n + 1));
    }
    CHECK(cohomology_dim(sc.delta(0), sc.delta(1)) == 2);

    const Filtration f52 = fhtest::load("ex52.json");
    const ParamSimplex s52 = chain(f52, {"i1", "i2", "i3"});
    const SigmaComplex sc52 = build_complex(build_gauge(f52, s52), 2);
    CHECK(cohomology(sc52, 0).dimension == 2);
    CHECK(oracle::sigma_cohomology(oracle::chain_of(f52, s52), 0) == 2);
    CHECK_THROWS_AS(cohomology(sc52, 2), std::out_of_range);
  }

  TEST_CASE("vertex simplex") {
    const Filtration f = fhtest::load("ex52.json");
    const SigmaComplex sc = build_complex(build_gauge(f, vertex_simplex(2)), 2);
    CHECK(cohomology(sc, 0).dimension == 2);
    CHECK(cohomology(sc, 1).dimension == 0);
  }

  TEST_CASE("linear cochain is a cocycle") {
    const SigmaComplex sc = complex_of("ex51.json", {"i1", "i2"}, 2);
    const SigmaCochain a = linear_cochain(sc, 1);
    const SigmaCochain da = apply_coboundary(sc, a);
    CHECK(da.values.size() == 10);
    for (const auto& v : da.values) CHECK(v == V({"0", "0"}));

    const auto id = check_cocycle_identity(sc, a, MonotoneMap{2, {0, 1, 2}});
    CHECK(id.lhs == V({"2", "2"}));
    CHECK(id.rhs == V({"2", "2"}));
    CHECK(id.holds);
    const auto deg = check_cocycle_identity(sc, a, MonotoneMap{2, {0, 0, 2}});
    CHECK(deg.lhs == V({"2", "2"}));
    CHECK(deg.holds);
    const SigmaCochain zero = sc.zero_cochain(1);
    for (const auto& theta : sc.index(2)) CHECK(check_cocycle_identity(sc, zero, theta).holds);

    const auto path = check_path_decomposition(sc, a, MonotoneMap{2, {0, 1, 2}});
    CHECK(path.strictly_increasing);
    CHECK(path.is_cocycle);
    CHECK(path.lhs == V({"2", "2"}));
    CHECK(path.holds);
    CHECK(check_path_decomposition(sc, a, MonotoneMap{2, {0, 2}}).holds);
  }

  TEST_CASE("path decomposition reports a non-cocycle") {
    const SigmaComplex sc = complex_of("ex51.json", {"i1", "i2"}, 2);
    SigmaCochain a = sc.zero_cochain(1);
    a.values[*sc.position_of(MonotoneMap{2, {0, 2}})] = V({"1", "1"});
    const auto r = check_path_decomposition(sc, a, MonotoneMap{2, {0, 1, 2}});
    CHECK_FALSE(r.is_cocycle);
    CHECK_FALSE(r.holds);
  }

  TEST_CASE("cocycles of the loop example") {
    const SigmaComplex sc = complex_of("ex52.json", {"i1", "i2", "i3"}, 2);
    const Cohomology h = cohomology(sc, 1, true);
    REQUIRE_FALSE(h.cocycle_basis.empty());
    for (const auto& a : h.cocycle_basis) {
      CHECK(check_path_decomposition(sc, a, MonotoneMap{3, {0, 2, 3}}).holds);
      for (const auto& theta : sc.index(2)) CHECK(check_cocycle_identity(sc, a, theta).holds);
    }
  }

  TEST_CASE("randomized cochain condition") {
    fhtest::Rng rng;
    for (int trial = 0; trial < 30; ++trial) {
      const auto rc = fhtest::random_chain(rng, rng.uniform(0, 4), rng.uniform(1, 3), rng.chance(1, 3));
      const SigmaComplex sc = build_complex(build_gauge(rc.filtration, rc.sigma), 3);
      const oracle::Chain c = oracle::chain_of(rc.filtration, rc.sigma);
      for (std::size_t n = 1; n <= 3; ++n) CHECK(oracle::densify(sc.delta(n)) == oracle::sigma_delta(c, n));
      for (std::size_t n = 1; n < 3; ++n) CHECK((sc.delta(n + 1) * sc.delta(n)).is_zero());
      // Coboundaries are cocycles, evaluated vectorwise.
      SigmaCochain x = sc.zero_cochain(0);
      for (std::size_t i = 0; i < x.values.size(); ++i) {
        const auto& t = sc.index(0)[i];
        for (std::size_t atom = 0; atom < x.values[i].size(); ++atom) {
          if (sc.gauge().measure(t(0))[atom] != 0) x.values[i][atom] = rng.positive_rational();
        }
      }
      const SigmaCochain dx = apply_coboundary(sc, x);
      for (const auto& v : apply_coboundary(sc, dx).values) {
        for (const auto& e : v) CHECK(e == 0);
      }
    }
  }

  TEST_CASE("identity gauges are contractible") {
    fhtest::Rng rng;
    for (std::size_t k = 0; k <= 3; ++k) {
      const Measure m = fhtest::random_measure(rng, 4);
      std::vector<std::string> objs;
      std::vector<ArrowDecl> gens;
      for (std::size_t l = 0; l <= k; ++l) objs.push_back("t" + std::to_string(l));
      for (std::size_t l = 1; l <= k; ++l) gens.push_back({"g" + std::to_string(l), l - 1, l});
      const Filtration f(Presentation(Quiver(objs, gens)), std::vector<FiniteProbSpace>(k + 1, fhtest::space_with(m)),
                         std::vector<AtomMap>(k, AtomMap::identity(4)));
      std::vector<Path> arrows;
      for (std::size_t l = 0; l < k; ++l) arrows.push_back(f.presentation().generator(l));
      const ParamSimplex sigma = k == 0 ? vertex_simplex(0) : make_simplex(arrows);
      const SigmaComplex sc = build_complex(build_gauge(f, sigma), 3);
      std::size_t supp = 0;
      for (const auto& w : m) supp += w != 0;
      CHECK(cohomology(sc, 0).dimension == supp);
      CHECK(cohomology(sc, 1).dimension == 0);
      CHECK(cohomology(sc, 2).dimension == 0);
    }
  }
}
