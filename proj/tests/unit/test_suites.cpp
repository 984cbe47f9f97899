#include <doctest.h>

#include <random>

#include "gonseq/errors.hpp"
#include "gonseq/random_graphs.hpp"
#include "gonseq/suites.hpp"

using namespace gonseq;

TEST_SUITE("suites") {
  TEST_CASE("small runs are clean") {
    SuiteOptions opts;
    opts.n_max = 4;
    CHECK(run_suite("complete", opts).all_ok());
    opts.n_max = 3;
    CHECK(run_suite("bipartite", opts).all_ok());
    opts.n_max = 2;
    opts.m_max = 3;
    const VerificationReport rook = run_suite("rook", opts);
    CHECK(rook.all_ok());
    CHECK(rook.records.size() == 6);
    SuiteOptions few;
    few.samples = 10;
    const VerificationReport rr = run_suite("riemann-roch", few);
    CHECK(rr.all_ok());
    CHECK(rr.properties.size() == 10);
    const VerificationReport red = run_suite("reduction", few);
    CHECK(red.all_ok());
    CHECK(red.properties.size() == 30);
  }

  TEST_CASE("suite names") {
    CHECK(suite_names().size() == 9);
    CHECK_THROWS_AS(run_suite("nope"), ValidationError);
  }

  TEST_CASE("seeds make reports reproducible") {
    SuiteOptions opts;
    opts.samples = 8;
    opts.seed = 99;
    CHECK(run_suite("reduction", opts).to_json().dump() == run_suite("reduction", opts).to_json().dump());
  }

  TEST_CASE("the legal firing set check agrees with burning") {
    Rng rng(41);
    for (int i = 0; i < 60; ++i) {
      const MultiGraph g = random_connected_multigraph(rng, 2, 5, 8);
      const Divisor d = random_divisor(rng, g.vertex_count(), 4);
      const Vertex q = static_cast<Vertex>(i % g.vertex_count());
      Divisor e = d;
      for (int v = 0; v < g.vertex_count(); ++v)
        if (v != q && e[v] < 0) e[v] = 0;
      CHECK(has_legal_firing_set(g, e, q) == !is_q_reduced(g, e, q));
    }
  }
}
