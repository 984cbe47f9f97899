#include <doctest.h>

#include "gonseq/catalogue.hpp"
#include "gonseq/errors.hpp"

using namespace gonseq;

namespace {

std::vector<int> seq3(const FamilySpec& s) {
  std::vector<int> out;
  for (int r = 1; r <= 3; ++r) out.push_back(expected_gonality(s, r).value().value);
  return out;
}

}  // namespace

TEST_SUITE("catalogue") {
  TEST_CASE("closed forms") {
    CHECK(seq3(family::Complete{4}) == std::vector<int>{3, 4, 6});
    CHECK(seq3(family::Complete{6}) == std::vector<int>{5, 6, 10});
    CHECK(seq3(family::Rook{3, 4}) == std::vector<int>{8, 11, 12});
    CHECK(seq3(family::Rook{4, 4}) == std::vector<int>{12, 15, 16});
    CHECK(seq3(family::Rook{1, 4}) == seq3(family::Complete{4}));
    CHECK(seq3(family::Path{2}) == std::vector<int>{1, 2, 3});
    CHECK(seq3(family::CompleteBipartite{2, 4}) == std::vector<int>{2, 4, 6});
    CHECK(seq3(family::CompleteBipartite{3, 5}) == std::vector<int>{3, 6, 8});
    CHECK(seq3(family::BananaStar{3, 4}) == std::vector<int>{3, 5, 7});
    CHECK(seq3(family::BananaSym{0, 0, 3, 3, 7}) == std::vector<int>{6, 8, 11});
    CHECK(expected_gonality(family::BananaStar{3, 6}, 3)->value == 9);
    CHECK_FALSE(expected_gonality(family::BananaStar{3, 6}, 1));
    CHECK(expected_gonality(family::BananaUniform{3, 5}, 2)->value == 6);
    CHECK(expected_gonality(family::Complete{5}, 5)->source == "complete:kn-h");
    CHECK(expected_gonality(family::Complete{5}, 6)->source == "riemann-roch:r>=g");
    CHECK(expected_gonality(family::Path{3}, 7)->value == 7);
    CHECK_THROWS_AS(expected_gonality(family::Complete{3}, 0), ValidationError);
  }

  TEST_CASE("bipartite delta") {
    CHECK(bipartite_delta(2, 2, 1) == 2);
    CHECK(bipartite_delta(3, 3, 2) == 5);
    CHECK(bipartite_delta(3, 4, 3) == 7);
    CHECK(bipartite_delta(4, 4, 3) == 8);
    CHECK_FALSE(bipartite_delta(1, 1, 1));
  }

  TEST_CASE("symmetric bananas need the left half in the banana-star range") {
    CHECK(banana_sym_left_in_range({0, 0, 2, 2, 4}));
    CHECK_FALSE(banana_sym_left_in_range({0, 1, 2, 2, 4}));
    CHECK(banana_sym_left_in_range({0, 1, 2, 3, 6}));
    CHECK_FALSE(banana_sym_left_in_range({1, 0, 2, 3, 6}));
    CHECK(banana_sym_left_in_range({1, 0, 3, 3, 6}));
    CHECK_FALSE(banana_sym_left_in_range({1, 0, 3, 4, 6}));
    CHECK(banana_sym_left_in_range({1, 1, 3, 4, 8}));
    CHECK_FALSE(expected_gonality(family::BananaSym{0, 1, 2, 2, 4}, 1));
  }

  TEST_CASE("genus") {
    CHECK(family_genus(family::Complete{5}) == 6);
    CHECK(family_genus(family::Rook{3, 4}) == 19);
    CHECK(family_genus(family::BananaStar{3, 4}) == 5);
  }
}
