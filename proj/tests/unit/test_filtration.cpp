#include "filtration.hpp"
#include "oracle.hpp"
#include "random_filtration.hpp"
#include "testing.hpp"

#include <doctest.h>

using namespace fh;
using fhtest::arrow;
using fhtest::V;

namespace {

FiniteProbSpace coin(const char* p0, const char* p1) { return FiniteProbSpace({"0", "1"}, V({p0, p1})); }

std::vector<Path> all_arrows(const Filtration& f) { return martingale_arrows(f, default_path_bound(f)); }

bool has_kind(const std::vector<FiltrationViolation>& vs, FiltrationViolation::Kind k) {
  for (const auto& v : vs) {
    if (v.kind == k) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("filtration") {
  TEST_CASE("bundled examples validate") {
    for (const char* name : {"ex51.json", "ex52.json", "ex53.json", "ex53_modified.json", "witness_naive.json"}) {
      CAPTURE(name);
      CHECK(fhtest::load(name).validate().empty());
    }
  }

  TEST_CASE("null-preservation failure carries the witness atom") {
    // coin -> coin, constant-0 map, target measure delta_1
    const Filtration f(Presentation(Quiver({"s", "t"}, {{"i", 0, 1}})), {coin("0", "1"), coin("1/2", "1/2")},
                       {AtomMap{2, {0, 0}}});
    const auto vs = f.validate();
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].kind == FiltrationViolation::Kind::NullPreservation);
    CHECK(vs[0].message.find("atom \"0\"") != std::string::npos);
  }

  TEST_CASE("functoriality failure names the pair") {
    const FinCategory cat({"a", "b", "c"}, {{"f", 0, 1}, {"g", 1, 2}, {"h", 0, 2}}, {{"f", "g", "h"}});
    const Filtration f(Presentation(cat), {coin("1/2", "1/2"), coin("1/2", "1/2"), coin("1/2", "1/2")},
                       {AtomMap::identity(2), AtomMap::identity(2), AtomMap{2, {1, 0}}});
    const auto vs = f.validate();
    REQUIRE(has_kind(vs, FiltrationViolation::Kind::Functoriality));
    for (const auto& v : vs) {
      if (v.kind == FiltrationViolation::Kind::Functoriality) {
        CHECK(v.message.find("f") != std::string::npos);
        CHECK(v.message.find("g") != std::string::npos);
      }
    }
  }

  TEST_CASE("density examples") {
    const Filtration f51 = fhtest::load("ex51.json");
    CHECK(density(f51, arrow(f51, "i1")).values() == V({"1", "1"}));
    const Filtration f52 = fhtest::load("ex52.json");
    CHECK(density(f52, arrow(f52, "i1")).values() == V({"0", "2"}));
    const Filtration mod = fhtest::load("ex53_modified.json");
    CHECK(density(mod, arrow(mod, "i3")).values() == V({"0", "2"}));
    for (ObjectId o = 0; o < f52.presentation().object_count(); ++o) {
      const Path id = f52.presentation().identity(o);
      CHECK(density(f52, id) == L1Class::constant(f52.space(o), 1));
      CHECK(cond_expectation(f52.prob_map(id)) == RatMatrix::identity(f52.space(o).size()));
    }
  }

  TEST_CASE("delta1 examples") {
    const Filtration f51 = fhtest::load("ex51.json");
    AdaptedProcess constant;
    for (const auto& s : f51.spaces()) constant.emplace_back(s, V({"3", "-5/2"}));
    for (const auto& c : delta1(f51, constant, all_arrows(f51))) CHECK(c.values() == V({"0", "0"}));

    const Filtration w = fhtest::load("witness_naive.json");
    const Path i1 = arrow(w, "i1");
    const AdaptedProcess mart{L1Class(w.space(0), V({"0", "1"})), L1Class(w.space(1), V({"1"}))};
    CHECK(delta1(w, mart, {i1})[0].values() == V({"0", "0"}));
    const AdaptedProcess off{L1Class(w.space(0), V({"0", "0"})), L1Class(w.space(1), V({"1"}))};
    CHECK(delta1(w, off, {i1})[0].values() == V({"0", "2"}));
  }

  TEST_CASE("martingale kernel examples") {
    for (const char* name : {"ex51.json", "witness_naive.json"}) {
      CAPTURE(name);
      const Filtration f = fhtest::load(name);
      const auto arrows = all_arrows(f);
      const MartingaleKernel k = martingale_kernel(f, arrows);
      CHECK(k.dimension == 2);
      const RatMatrix d = delta1_matrix(f, arrows);
      CHECK(oracle::nullity(oracle::densify(d), d.cols()) == 2);
      CHECK(oracle::densify(d) == oracle::martingale_delta(oracle::measures_of(f), oracle::arrows_of(f, arrows)));
      for (const auto& proc : k.basis) {
        for (const auto& c : delta1(f, proc, arrows)) {
          for (const auto& v : c.values()) CHECK(v == 0);
        }
      }
    }
    const Filtration single(Presentation(Quiver({"t"}, {})), {FiniteProbSpace({"a", "b", "c"}, V({"1/2", "0", "1/2"}))},
                            {});
    CHECK(martingale_kernel(single, all_arrows(single)).dimension == 2);
  }

  TEST_CASE("naive chain") {
    const Filtration w = fhtest::load("witness_naive.json");
    const NaiveObstruction ob = naive_obstruction(w, 1, 1);
    REQUIRE_FALSE(ob.is_zero);
    CHECK(w.presentation().name(ob.tau->arrows[0]) == "i1");
    CHECK(w.presentation().name(ob.tau->arrows[1]) == "id_t1");
    CHECK(ob.cochain_simplex->objects == std::vector<ObjectId>{1});
    CHECK(ob.value == V({"0", "-2"}));

    CHECK(naive_obstruction(fhtest::load("ex51.json"), 1, 1).is_zero);

    // delta^1 of the naive chain is delta1 on 1-simplices.
    const auto n0 = enumerate_nerve(w.presentation(), 0, 0);
    const auto n1 = enumerate_nerve(w.presentation(), 1, 0);
    std::vector<Path> arrows;
    for (const auto& s : n1) arrows.push_back(s.arrows[0]);
    CHECK(naive_delta(w, 1, n0, n1) == delta1_matrix(w, arrows));
  }

  TEST_CASE("randomized density composition and naive chain") {
    fhtest::Rng rng;
    for (int trial = 0; trial < 40; ++trial) {
      const Filtration f = fhtest::as_table(fhtest::random_dag_filtration(rng, {rng.uniform(2, 4), rng.uniform(1, 4), false}));
      REQUIRE(f.validate().empty());
      const Presentation& pres = f.presentation();
      const auto arrows = pres.enumerate_arrows(0);
      for (const Path& i : arrows) {
        for (const Path& j : arrows) {
          if (i.dst != j.src) continue;
          const L1Class lhs = density(f, pres.compose(i, j));
          const L1Class rhs = apply(cond_expectation(f.prob_map(i)), density(f, j), f.space(i.src));
          CHECK(lhs == rhs);
        }
      }
      const auto k = martingale_kernel(f, arrows);
      for (const auto& proc : k.basis) {
        for (const auto& c : delta1(f, proc, arrows)) {
          for (const auto& v : c.values()) CHECK(v == 0);
        }
      }
    }
    for (int trial = 0; trial < 15; ++trial) {
      const Filtration f = fhtest::as_table(fhtest::random_dag_filtration(rng, {rng.uniform(2, 4), rng.uniform(1, 4), true}));
      CHECK(naive_obstruction(f, 1, 1).is_zero);
    }
  }
}
