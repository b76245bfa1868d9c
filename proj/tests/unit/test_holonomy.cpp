#include "holonomy.hpp"
#include "oracle.hpp"
#include "random_filtration.hpp"
#include "testing.hpp"

#include <doctest.h>

using namespace fh;
using fhtest::chain;
using fhtest::V;

namespace {

std::vector<const HolonomyReport*> of_length(const LoopScan& scan, std::size_t k) {
  std::vector<const HolonomyReport*> out;
  for (const auto& r : scan.reports) {
    if (r.gauge.k() == k) out.push_back(&r);
  }
  return out;
}

}  // namespace

TEST_SUITE("holonomy") {
  TEST_CASE("is_loop") {
    const Filtration f52 = fhtest::load("ex52.json");
    CHECK(is_loop(chain(f52, {"i1", "i2", "i3"})));
    const Filtration f51 = fhtest::load("ex51.json");
    CHECK_FALSE(is_loop(chain(f51, {"i1", "i2"})));
    CHECK(is_loop(vertex_simplex(0)));
    CHECK_THROWS_AS(classify(f51, chain(f51, {"i1", "i2"})), NotALoopError);
  }

  TEST_CASE("holonomy operators") {
    const Filtration f52 = fhtest::load("ex52.json");
    CHECK(holonomy_operator(build_gauge(f52, vertex_simplex(0))) == RatMatrix::identity(2));
    for (const char* spec : {"ex52.json", "ex53_modified.json"}) {
      CAPTURE(spec);
      const Filtration f = fhtest::load(spec);
      const ParamSimplex sigma = chain(f, {"i1", "i2", "i3"});
      const RatMatrix h = holonomy_operator(build_gauge(f, sigma));
      // Mean of f placed at atom 1; zero at the null atom 0.
      CHECK(h.apply(V({"1", "0"})) == V({"0", "1/2"}));
      CHECK(h.apply(V({"0", "1"})) == V({"0", "1/2"}));
      CHECK(oracle::densify(h) == oracle::transport(oracle::chain_of(f, sigma), 0, 3));
    }
  }

  TEST_CASE("classification of the worked examples") {
    const Filtration f52 = fhtest::load("ex52.json");
    const HolonomyReport r52 = classify(f52, chain(f52, {"i1", "i2", "i3"}));
    CHECK(r52.classification == HolonomyClass::Nontrivial);
    CHECK(r52.homological_arbitrage());
    CHECK(r52.initial() == V({"0", "1"}));
    CHECK(r52.terminal() == V({"1/2", "1/2"}));

    const Filtration f53 = fhtest::load("ex53.json");
    const HolonomyReport r53 = classify(f53, chain(f53, {"i1", "i2", "i3"}));
    CHECK(r53.classification == HolonomyClass::Trivial);
    CHECK_FALSE(r53.homological_arbitrage());
    REQUIRE(r53.distortion);
    CHECK(r53.distortion->values() == V({"1", "1"}));

    const Filtration mod = fhtest::load("ex53_modified.json");
    const HolonomyReport rm = classify(mod, chain(mod, {"i1", "i2", "i3"}));
    CHECK(rm.classification == HolonomyClass::Nontrivial);
    CHECK(rm.initial() == V({"0", "1"}));
  }

  TEST_CASE("loop scan") {
    const Filtration f52 = fhtest::load("ex52.json");
    const LoopScan scan = scan_loops(f52, 3, 1000);
    CHECK_FALSE(scan.truncated);
    CHECK(of_length(scan, 0).size() == 3);
    CHECK(of_length(scan, 1).empty());
    CHECK(of_length(scan, 2).empty());
    const auto loops = of_length(scan, 3);
    REQUIRE(loops.size() == 3);
    const HolonomyClass expected[] = {HolonomyClass::Nontrivial, HolonomyClass::Trivial, HolonomyClass::Nontrivial};
    for (std::size_t b = 0; b < 3; ++b) {
      CHECK(loops[b]->sigma().objects.front() == b);
      CHECK(loops[b]->classification == expected[b]);
    }
    CHECK(loops[1]->initial() == V({"1"}));
    CHECK(loops[2]->initial() == V({"0", "1"}));
    CHECK(loops[2]->terminal() == V({"1/4", "3/4"}));

    const LoopScan zero = scan_loops(f52, 0, 1000);
    CHECK(zero.reports.size() == 3);
    for (const auto& r : zero.reports) CHECK(r.classification == HolonomyClass::Trivial);

    const LoopScan cut = scan_loops(f52, 3, 4);
    CHECK(cut.truncated);
    CHECK(cut.reports.size() == 4);

    const Filtration line = fhtest::load("ex51.json");
    CHECK(scan_loops(line, 5, 1000).reports.size() == 3);
  }

  TEST_CASE("randomized loop properties") {
    fhtest::Rng rng;
    for (int trial = 0; trial < 60; ++trial) {
      const auto rc = fhtest::random_chain(rng, rng.uniform(1, 5), rng.uniform(1, 3), true);
      const HolonomyReport r = classify(rc.filtration, rc.sigma);
      const auto s0 = fhtest::space_with(r.initial()).support();
      const auto sk = fhtest::space_with(r.terminal()).support();
      CHECK((r.classification == HolonomyClass::Trivial) == (s0 == sk));
      // mu^sigma_0 << mu_{t_0} = mu^sigma_k for loops.
      CHECK_FALSE(abs_continuity_violation(r.initial(), r.terminal()));
      CHECK(r.distortion.has_value());
      RatMatrix composed = RatMatrix::identity(r.gauge.measure(0).size());
      for (std::size_t l = 1; l <= r.gauge.k(); ++l) composed = composed * r.gauge.transport(l - 1, l);
      CHECK(composed == r.holonomy);
    }
  }

  TEST_CASE("measure-preserving bijections give trivial holonomy") {
    fhtest::Rng rng;
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = rng.uniform(1, 5), k = rng.uniform(1, 4);
      // A cyclic shift by s on every arrow, uniform measures everywhere.
      std::vector<ArrowDecl> gens;
      std::vector<AtomMap> maps;
      for (std::size_t l = 1; l <= k; ++l) {
        gens.push_back({"g" + std::to_string(l), 0, 0});
        const std::size_t s = rng.uniform(0, n - 1);
        AtomMap m{n, std::vector<std::size_t>(n)};
        for (std::size_t x = 0; x < n; ++x) m.image[x] = (x + s) % n;
        maps.push_back(m);
      }
      const Filtration f(Presentation(Quiver({"t"}, gens)),
                         {fhtest::space_with(RatVector(n, Rational(1, static_cast<long>(n))))}, maps);
      std::vector<Path> arrows;
      for (std::size_t l = 0; l < k; ++l) arrows.push_back(f.presentation().generator(l));
      const HolonomyReport r = classify(f, make_simplex(arrows));
      CHECK(r.classification == HolonomyClass::Trivial);
      // Permutation matrix: one 1 per row and column.
      for (std::size_t i = 0; i < n; ++i) {
        Rational row = 0, col = 0;
        for (std::size_t j = 0; j < n; ++j) {
          CHECK((r.holonomy(i, j) == 0 || r.holonomy(i, j) == 1));
          row += r.holonomy(i, j);
          col += r.holonomy(j, i);
        }
        CHECK(row == 1);
        CHECK(col == 1);
      }
    }
  }
}
