#include <doctest.h>

#include "gonseq/errors.hpp"
#include "gonseq/family.hpp"
#include "gonseq/gonality.hpp"
#include "gonseq/random_graphs.hpp"
#include "gonseq/rank.hpp"
#include "oracles.hpp"

using namespace gonseq;

namespace {

std::vector<int> values(const std::vector<GonalityResult>& rs) {
  std::vector<int> out;
  for (const auto& r : rs) out.push_back(r.value);
  return out;
}

}  // namespace

TEST_SUITE("gonality") {
  TEST_CASE("frozen sequences") {
    CHECK(values(gonality_sequence(make_family(family::Complete{4}), 3)) == std::vector<int>{3, 4, 6});
    CHECK(values(gonality_sequence(make_family(family::Complete{5}), 3)) == std::vector<int>{4, 5, 8});
    CHECK(values(gonality_sequence(make_family(family::Path{5}), 3)) == std::vector<int>{1, 2, 3});
    CHECK(values(gonality_sequence(make_family(family::SingleVertex{}), 2)) == std::vector<int>{1, 2});
    CHECK(values(gonality_sequence(make_family(family::BananaStar{2, 3}), 3)) == std::vector<int>{2, 4, 5});
    CHECK(values(gonality_sequence(make_family(family::Rook{2, 3}), 3)) == std::vector<int>{3, 5, 6});
    CHECK(values(gonality_sequence(make_family(family::CompleteBipartite{3, 4}), 3)) == std::vector<int>{3, 6, 7});
    // b = 2a lies past the range of the closed gon_1 and gon_2 forms; gon_2 reaches 2 gon_1.
    CHECK(values(gonality_sequence(make_family(family::BananaStar{2, 4}), 3)) == std::vector<int>{2, 4, 6});
    CHECK(values(gonality_sequence(make_family(family::BananaStar{3, 6}), 3)) == std::vector<int>{3, 6, 9});
    CHECK(values(gonality_sequence(make_family(family::BananaStar{4, 8}), 3)) == std::vector<int>{4, 8, 12});
  }

  TEST_CASE("witness certifies the value") {
    const MultiGraph g = make_family(family::BananaSym{0, 0, 2, 2, 4});
    for (int r = 1; r <= 3; ++r) {
      const GonalityResult res = gonality(g, r);
      CHECK(res.witness.degree() == res.value);
      CHECK(res.witness.is_effective());
      CHECK(is_q_reduced(g, res.witness, res.probe));
      CHECK(rank_at_least(g, res.witness, r));
      CHECK(res.classes_examined > 0);
    }
    CHECK(probe_vertex(g) == g.max_degree_vertex());
  }

  TEST_CASE("gonality agrees with exhaustive search over all effective divisors") {
    Rng rng(31);
    for (int i = 0; i < 12; ++i) {
      const MultiGraph g = random_connected_multigraph(rng, 2, 4, 6);
      const oracle::Lattice lattice(g);
      CAPTURE(write_graph(g));
      for (int r = 1; r <= 2; ++r) CHECK(gonality(g, r).value == lattice.gonality(r));
    }
    CHECK(gonality(make_family(family::Complete{4}), 2).value ==
          oracle::Lattice(make_family(family::Complete{4})).gonality(2));
  }

  TEST_CASE("reduced effective enumeration matches the definition") {
    Rng rng(3);
    for (int i = 0; i < 10; ++i) {
      const MultiGraph g = random_connected_multigraph(rng, 2, 5, 8);
      const Vertex q = probe_vertex(g);
      for (int d = 0; d <= 4; ++d) {
        std::vector<Divisor> expected;
        oracle::for_each_effective(g.vertex_count(), d, [&](const Divisor& e) {
          if (oracle::reduced_by_definition(g, e, q)) expected.push_back(e);
        });
        std::vector<Divisor> got = enumerate_reduced_effective(g, q, d);
        CHECK(std::is_sorted(got.begin(), got.end(), [q](Divisor x, Divisor y) {
          x[q] = y[q] = 0;
          return x < y;
        }));
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
      }
    }
  }

  TEST_CASE("superstables are counted by spanning trees") {
    for (const FamilySpec& spec : {FamilySpec{family::BananaUniform{3, 2}}, FamilySpec{family::Complete{4}},
                                   FamilySpec{family::BananaStar{3, 4}}, FamilySpec{family::Rook{2, 3}}}) {
      const MultiGraph g = make_family(spec);
      const Vertex q = probe_vertex(g);
      std::int64_t count = 0;
      for (int d = 0; d <= genus(g); ++d)
        for (const Divisor& e : enumerate_reduced_effective(g, q, d)) count += e[q] == 0;
      CHECK(count == oracle::Lattice(g).tree_count());
    }
  }

  TEST_CASE("ceilings and options") {
    const MultiGraph k4 = make_family(family::Complete{4});
    GonalityOptions opts;
    opts.ceiling = 1;
    CHECK_THROWS_AS(gonality(k4, 3, opts), ResourceLimit);
    opts.ceiling = 6;
    CHECK(gonality(k4, 3, opts).value == 6);
    CHECK_THROWS_AS(gonality(k4, 0), ValidationError);
  }

  TEST_CASE("worker count does not change value or witness") {
    const MultiGraph g = make_family(family::Rook{2, 3});
    GonalityOptions parallel;
    parallel.jobs = 3;
    parallel.batch = 2;
    for (int r = 1; r <= 3; ++r) {
      const GonalityResult a = gonality(g, r);
      const GonalityResult b = gonality(g, r, parallel);
      CHECK(a.value == b.value);
      CHECK(a.witness == b.witness);
      CHECK(a.classes_examined == b.classes_examined);
    }
  }
}
