#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gonseq/cli.hpp"

using namespace gonseq;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "gonseq-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

std::string k3_file() { return write_file("k3.graph", "vertices 3\nedge 0 1 1\nedge 0 2 1\nedge 1 2 1\n"); }

// GONSEQ_UPDATE_GOLDEN=1 rewrites the expected files instead of comparing.
void check_golden(const std::string& name, const std::string& actual) {
  const fs::path p = fs::path(GONSEQ_GOLDEN_DIR) / name;
  if (const char* u = std::getenv("GONSEQ_UPDATE_GOLDEN"); u && std::string(u) == "1") {
    std::ofstream(p) << actual;
    return;
  }
  std::ifstream in(p);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << p.string());
  std::stringstream expected;
  expected << in.rdbuf();
  CHECK(actual == expected.str());
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("reduce") {
    const Run r = run({"reduce", k3_file(), "0:-1 1:1 2:1", "0"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "1 0 0\n");
    const Run t = run({"reduce", k3_file(), "0:-1 1:1 2:1", "0", "--trace"});
    CHECK(t.out.find("round 1 burnt 0") != std::string::npos);
    CHECK(t.out.find("fired 1 2 x1") != std::string::npos);
    CHECK(run({"reduce", k3_file(), "0:1", "7"}).code == kExitUsage);
    CHECK(run({"reduce", k3_file(), "0:x", "0"}).code == kExitUsage);
    CHECK(run({"reduce", scratch("missing.graph").string(), "0:1", "0"}).code == kExitUsage);
  }

  TEST_CASE("rank") {
    const std::string k4 = scratch("k4.graph").string();
    REQUIRE(run({"family", "Complete(4)", "-o", k4}).code == kExitOk);
    const Run r = run({"rank", k4, "0:3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "rank 1\nfailing divisor 0:1 1:1\n");
    CHECK(run({"rank", k4, "0:-1"}).out == "rank -1\n");
    CHECK(run({"rank", k4, "0:30", "--degree-ceiling", "10"}).code == kExitResource);
  }

  TEST_CASE("gonality") {
    const std::string rook = scratch("rook23.graph").string();
    REQUIRE(run({"family", "Rook(2,3)", "-o", rook}).code == kExitOk);
    const Run r = run({"gonality", rook, "2", "--no-cache"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("value 5\n") != std::string::npos);
    CHECK(run({"gonality", rook, "2", "--no-cache", "--ceiling", "4"}).code == kExitResource);
    CHECK(run({"gonality", rook, "0"}).code == kExitUsage);
    CHECK(run({"gonality", rook, "1", "--no-cache", "--json"}).out.find("\"value\": 3") != std::string::npos);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"verify", "nope"}).code == kExitUsage);
    CHECK(run({"sweep", "--mode", "quads"}).code == kExitUsage);
    CHECK(run({"realize", "3"}).code == kExitUsage);
    CHECK(run({"family", "Complete(0)"}).code == kExitUsage);
    CHECK(run({"family", "Wheel(4)"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
  }

  TEST_CASE("family") {
    const Run info = run({"family", "Rook(3,4)", "--info"});
    CHECK(info.code == kExitOk);
    CHECK(info.out.find("gon1 8 ") != std::string::npos);
    CHECK(info.out.find("genus 19") != std::string::npos);
    const Run g = run({"family", "Complete(3)"});
    CHECK(g.out.find("edge") != std::string::npos);
  }

  TEST_CASE("realize") {
    const Run a = run({"realize", "5", "7", "10"});
    CHECK(a.code == kExitOk);
    CHECK(a.out.find("recipe (Complete(4) + CompleteBipartite(2,2))[l=10]\n") != std::string::npos);
    CHECK(run({"realize", "2", "5"}).code == kExitNegative);
    CHECK(run({"realize", "7", "11", "13"}).code == kExitNegative);
    CHECK(run({"realize", "7", "11", "13", "--allow-external-bases", "--no-cache"}).code == kExitOk);
    const std::string out = scratch("r3510.graph").string();
    const Run v = run({"realize", "3", "5", "--verify", "--no-cache", "--materialize", out});
    CHECK(v.code == kExitOk);
    CHECK(v.out.find("verify r=2 claimed 5 computed 5 ok") != std::string::npos);
    CHECK(fs::exists(out));
    check_golden("realize_5_7_10.json", run({"realize", "5", "7", "10", "--json"}).out);
  }

  TEST_CASE("ratio domain") {
    CHECK(run({"sweep", "--mode", "ratio", "--den-max", "0"}).code == kExitUsage);
  }

  TEST_CASE("golden sweeps") {
    check_golden("sweep_pairs.csv", run({"sweep", "--mode", "pairs", "--x-max", "6"}).out);
    check_golden("sweep_triples.csv", run({"sweep", "--mode", "triples", "--x-max", "5"}).out);
    check_golden("sweep_ratio.csv", run({"sweep", "--mode", "ratio", "--den-max", "4"}).out);
  }

  TEST_CASE("golden reports") {
    const Run rook = run({"verify", "rook", "--n-max", "2", "--m-max", "3", "--format", "json", "--no-cache"});
    CHECK(rook.code == kExitOk);
    check_golden("verify_rook.json", rook.out);
    const Run rr = run({"verify", "riemann-roch", "--samples", "5", "--no-cache"});
    CHECK(rr.code == kExitOk);
    check_golden("verify_riemann_roch.txt", rr.out);
    const std::string file = scratch("report.json").string();
    const Run to_file = run({"verify", "complete", "--n-max", "3", "--no-cache", "--format", "json", "-o", file});
    CHECK(to_file.out == "report " + file + ": 0 mismatches, 0 failed properties\n");
  }
}
