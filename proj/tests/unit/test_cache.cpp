#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "gonseq/cache.hpp"
#include "gonseq/errors.hpp"
#include "gonseq/family.hpp"

using namespace gonseq;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("gonseq-test-" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cache") {
  TEST_CASE("store, lookup and persistence") {
    const fs::path dir = fresh_dir("store");
    {
      GonalityCache cache(dir);
      CHECK_FALSE(cache.lookup("abc", 1));
      cache.store({"abc", 1, 3, Divisor({3, 0, 0}), 17, kToolVersion});
      REQUIRE(cache.lookup("abc", 1));
      CHECK(cache.lookup("abc", 1)->value == 3);
      CHECK_FALSE(cache.lookup("abc", 2));
    }
    GonalityCache reopened(dir);
    const auto hit = reopened.lookup("abc", 1);
    REQUIRE(hit);
    CHECK(hit->witness == Divisor({3, 0, 0}));
    CHECK(hit->classes_examined == 17);
    CHECK(hit->tool_version == kToolVersion);
    fs::remove_all(dir);
  }

  TEST_CASE("malformed lines are skipped") {
    const fs::path dir = fresh_dir("torn");
    fs::create_directories(dir);
    {
      std::ofstream out(dir / "gonality.jsonl");
      out << "{\"graph_hash\":\"h\",\"r\":1,\"value\":2,\"witness\":[2,0]}\n";
      out << "not json\n\n";
      out << "{\"graph_hash\":\"h\",\"r\":2,\"val";
    }
    GonalityCache cache(dir);
    CHECK(cache.lookup("h", 1));
    CHECK_FALSE(cache.lookup("h", 2));
    fs::remove_all(dir);
  }

  TEST_CASE("caching is transparent") {
    const fs::path dir = fresh_dir("transparent");
    GonalityCache cache(dir);
    const GonalitySolver solver = caching_solver(cache);
    const MultiGraph g = make_family(family::Rook{2, 3});
    const GonalityResult first = solver(g, 2, {});
    CHECK(cache.lookup(graph_hash(g), 2));
    const GonalityResult second = solver(g, 2, {});
    const GonalityResult direct = gonality(g, 2);
    CHECK(first.value == direct.value);
    CHECK(second.value == direct.value);
    CHECK(second.witness == first.witness);

    GonalityOptions tight;
    tight.ceiling = direct.value - 1;
    CHECK_THROWS_AS(solver(g, 2, tight), ResourceLimit);
    fs::remove_all(dir);
  }

  TEST_CASE("entries from another tool version are recomputed") {
    const fs::path dir = fresh_dir("version");
    GonalityCache cache(dir);
    const MultiGraph g = make_family(family::Complete{4});
    cache.store({graph_hash(g), 1, 1, Divisor({1, 0, 0, 0}), 0, "gonseq 0.0.0"});
    CHECK(caching_solver(cache)(g, 1, {}).value == 3);
    fs::remove_all(dir);
  }

  TEST_CASE("hash follows the canonical serialization") {
    CHECK(graph_hash(make_family(family::Complete{4})) == graph_hash(make_family(family::Complete{4})));
    CHECK(graph_hash(make_family(family::Complete{4})) != graph_hash(make_family(family::Rook{2, 2})));
  }
}
