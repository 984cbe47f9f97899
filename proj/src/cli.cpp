#include "gonseq/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <memory>
#include <numeric>
#include <optional>

#include <CLI11.hpp>

#include "gonseq/cache.hpp"
#include "gonseq/catalogue.hpp"
#include "gonseq/divisor.hpp"
#include "gonseq/errors.hpp"
#include "gonseq/family.hpp"
#include "gonseq/gonality.hpp"
#include "gonseq/rank.hpp"
#include "gonseq/semigroup.hpp"
#include "gonseq/suites.hpp"

namespace gonseq {

namespace {

struct SolverFlags {
  std::optional<int> ceiling;
  int jobs = 1;
  bool no_cache = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--ceiling", ceiling, "Largest degree searched before giving up (exit 3)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--jobs", jobs, "Worker threads; 0 = one per hardware thread")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--no-cache", no_cache, "Bypass the result cache");
  }

  GonalityOptions options() const {
    GonalityOptions o;
    o.ceiling = ceiling;
    o.jobs = jobs;
    return o;
  }
};

// Owns the cache backing a caching solver.
class SolverHandle {
 public:
  explicit SolverHandle(bool no_cache) {
    if (no_cache) {
      solver_ = direct_solver;
    } else {
      cache_ = std::make_unique<GonalityCache>(GonalityCache::default_directory());
      solver_ = caching_solver(*cache_);
    }
  }
  const GonalitySolver& solver() const { return solver_; }

 private:
  std::unique_ptr<GonalityCache> cache_;
  GonalitySolver solver_;
};

std::vector<GonalityResult> solve_sequence(const GonalitySolver& solver, const MultiGraph& g, int r_max,
                                           GonalityOptions opts) {
  std::vector<GonalityResult> out;
  for (int r = 1; r <= r_max; ++r) {
    out.push_back(solver(g, r, opts));
    opts.lower_bound = out.back().value + 1;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string csv_row(const RealizationOutcome& o) {
  std::string row;
  for (int i = 0; i < 3; ++i) row += (i < o.target.size() ? std::to_string(o.target[i]) : std::string()) + ",";
  row += to_string(o.status) + ",";
  row += o.recipe ? csv_field(recipe_id(*o.recipe)) : std::string();
  return row;
}

Vertex checked_vertex(const MultiGraph& g, int v) {
  if (!g.contains(v))
    throw PreconditionError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(g.vertex_count()) +
                            ")");
  return v;
}

double millis(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

void print_outcome(const RealizationOutcome& o, std::ostream& out) {
  out << "target " << to_string(o.target) << '\n';
  out << "status " << to_string(o.status) << '\n';
  if (o.recipe) {
    out << "recipe " << recipe_id(*o.recipe) << '\n';
    out << "vertices " << recipe_vertex_count(*o.recipe) << '\n';
  }
  for (const auto& n : o.notes) out << "note " << n << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisor theory and higher gonality sequences of multigraphs", "gonseq"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  // reduce
  auto* reduce_cmd = app.add_subcommand("reduce", "q-reduce a divisor");
  std::string reduce_graph, reduce_divisor;
  int reduce_q = 0;
  bool reduce_trace = false;
  reduce_cmd->add_option("graph", reduce_graph, "Graph file")->required();
  reduce_cmd->add_option("divisor", reduce_divisor, "Divisor, e.g. '0:-1 1:1 2:1'")->required();
  reduce_cmd->add_option("q", reduce_q, "Base vertex")->required();
  reduce_cmd->add_flag("--trace", reduce_trace, "Print the burn order of each Dhar round");

  // rank
  auto* rank_cmd = app.add_subcommand("rank", "Baker-Norine rank of a divisor");
  std::string rank_graph, rank_divisor;
  RankOptions rank_opts;
  rank_cmd->add_option("graph", rank_graph, "Graph file")->required();
  rank_cmd->add_option("divisor", rank_divisor, "Divisor")->required();
  rank_cmd->add_option("--degree-ceiling", rank_opts.degree_ceiling, "Largest divisor degree accepted (exit 3 above)");
  rank_cmd->add_option("--jobs", rank_opts.jobs, "Worker threads; 0 = one per hardware thread")
      ->check(CLI::NonNegativeNumber);

  // gonality
  auto* gon_cmd = app.add_subcommand("gonality", "Exact r-th gonality");
  std::string gon_graph;
  int gon_r = 1;
  bool gon_json = false;
  SolverFlags gon_flags;
  gon_cmd->add_option("graph", gon_graph, "Graph file")->required();
  gon_cmd->add_option("r", gon_r, "Rank")->required()->check(CLI::PositiveNumber);
  gon_cmd->add_flag("--json", gon_json, "Print a JSON object");
  gon_flags.attach(gon_cmd);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite against the family catalogue");
  std::string suite;
  SuiteOptions suite_opts;
  std::string verify_format = "table";
  std::string verify_output;
  bool verify_timings = false;
  SolverFlags verify_flags;
  verify_cmd->add_option("suite", suite, "Suite name or 'all'")
      ->required()
      ->check(CLI::IsMember([] {
        auto names = suite_names();
        names.push_back("all");
        return names;
      }()));
  verify_cmd->add_option("--n-max", suite_opts.n_max, "Largest n (complete, bipartite, banana, rook)");
  verify_cmd->add_option("--m-max", suite_opts.m_max, "Largest m (rook)");
  verify_cmd->add_option("--a-max", suite_opts.a_max, "Largest a (banana-star, banana-sym)");
  verify_cmd->add_option("--e-max", suite_opts.e_max, "Largest edge multiplicity (banana)");
  verify_cmd->add_option("--samples", suite_opts.samples, "Random instances (glue, riemann-roch, reduction)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", suite_opts.seed, "Seed for randomized suites")->capture_default_str();
  verify_cmd->add_option("--format", verify_format, "table or json")->check(CLI::IsMember({"table", "json"}));
  verify_cmd->add_option("-o,--output", verify_output, "Write the report to a file instead of stdout");
  verify_cmd->add_flag("--timings", verify_timings, "Include wall-clock times");
  verify_flags.attach(verify_cmd);

  // realize
  auto* realize_cmd = app.add_subcommand("realize", "Build a graph with a prescribed gonality prefix");
  std::vector<int> target;
  std::string materialize;
  bool realize_verify = false;
  bool realize_json = false;
  RealizeOptions realize_opts;
  SolverFlags realize_flags;
  realize_cmd->add_option("target", target, "x y [z]")->required()->expected(2, 3);
  realize_cmd->add_option("--materialize", materialize, "Write the realizing graph to this file");
  realize_cmd->add_flag("--verify", realize_verify, "Confirm the claimed sequence with the exact solver");
  realize_cmd->add_flag("--allow-external-bases", realize_opts.allow_external_bases,
                        "Admit the (4,6,7) base after confirming it with the solver");
  realize_cmd->add_flag("--json", realize_json, "Print the outcome and recipe as JSON");
  realize_flags.attach(realize_cmd);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV of realization outcomes over a region");
  std::string sweep_mode = "pairs";
  int sweep_x_max = 6;
  int sweep_den_max = 4;
  RealizeOptions sweep_opts;
  sweep_cmd->add_option("--mode", sweep_mode, "pairs, triples or ratio")
      ->check(CLI::IsMember({"pairs", "triples", "ratio"}))
      ->capture_default_str();
  sweep_cmd->add_option("--x-max", sweep_x_max, "Largest x (pairs, triples)")->capture_default_str();
  sweep_cmd->add_option("--den-max", sweep_den_max, "Largest denominator (ratio)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep_cmd->add_flag("--allow-external-bases", sweep_opts.allow_external_bases, "As for realize");

  // family
  auto* family_cmd = app.add_subcommand("family", "Write a family graph, e.g. 'Rook(3,4)'");
  std::string family_text, family_output;
  bool family_info = false;
  family_cmd->add_option("spec", family_text, "Family spec")->required();
  family_cmd->add_option("-o,--output", family_output, "Write to this file instead of stdout");
  family_cmd->add_flag("--info", family_info, "Print genus and catalogued gonalities instead of the graph");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*reduce_cmd) {
      const MultiGraph g = load_graph(reduce_graph);
      const Divisor d = parse_divisor(reduce_divisor, g.vertex_count());
      const Vertex q = checked_vertex(g, reduce_q);
      std::vector<BurnRound> trace;
      const Divisor reduced = q_reduce(g, d, q, trace);
      out << format_chip_vector(reduced) << '\n';
      if (reduce_trace) {
        for (std::size_t i = 0; i < trace.size(); ++i) {
          out << "round " << i + 1 << " burnt";
          for (Vertex v : trace[i].burnt_order) out << ' ' << v;
          if (!trace[i].fired.empty()) {
            out << " | fired";
            for (Vertex v : trace[i].fired) out << ' ' << v;
            out << " x" << trace[i].times;
          }
          out << '\n';
        }
      }
      return kExitOk;
    }

    if (*rank_cmd) {
      const MultiGraph g = load_graph(rank_graph);
      const Divisor d = parse_divisor(rank_divisor, g.vertex_count());
      const RankResult r = rank(g, d, rank_opts);
      out << "rank " << r.rank << '\n';
      if (r.failing_witness) out << "failing " << format_divisor(*r.failing_witness) << '\n';
      return kExitOk;
    }

    if (*gon_cmd) {
      const MultiGraph g = load_graph(gon_graph);
      SolverHandle handle(gon_flags.no_cache);
      const auto start = std::chrono::steady_clock::now();
      GonalityResult res = handle.solver()(g, gon_r, gon_flags.options());
      const auto wall = std::chrono::steady_clock::now() - start;
      if (gon_json) {
        nlohmann::ordered_json j{{"r", res.r},
                                 {"value", res.value},
                                 {"witness", format_divisor(res.witness)},
                                 {"probe", res.probe},
                                 {"classes_examined", res.classes_examined},
                                 {"time_ms", millis(wall)}};
        out << j.dump(2) << '\n';
      } else {
        out << "r " << res.r << '\n';
        out << "value " << res.value << '\n';
        out << "witness " << format_divisor(res.witness) << '\n';
        out << "probe " << res.probe << '\n';
        out << "classes_examined " << res.classes_examined << '\n';
        out << "time_ms " << millis(wall) << '\n';
      }
      return kExitOk;
    }

    if (*verify_cmd) {
      SolverHandle handle(verify_flags.no_cache);
      suite_opts.gonality = verify_flags.options();
      suite_opts.solver = handle.solver();
      suite_opts.rank.jobs = verify_flags.jobs;
      const VerificationReport report = run_suite(suite, suite_opts);
      const std::string text =
          verify_format == "json" ? report.to_json(verify_timings).dump(2) + "\n" : report.to_table(verify_timings);
      if (verify_output.empty()) {
        out << text;
      } else {
        std::ofstream file(verify_output);
        if (!file) throw ParseError(0, "cannot write '" + verify_output + "'");
        file << text;
        out << "report " << verify_output << ": " << report.mismatches() << " mismatches, "
            << report.failed_properties() << " failed properties\n";
      }
      return report.all_ok() ? kExitOk : kExitNegative;
    }

    if (*realize_cmd) {
      const RealizationOutcome o = target.size() == 2 ? realize_pair(target[0], target[1])
                                                      : realize_triple(target[0], target[1], target[2], realize_opts);
      nlohmann::ordered_json j = outcome_to_json(o);
      if (!realize_json) print_outcome(o, out);
      bool confirmed = true;
      if (o.recipe && (!materialize.empty() || realize_verify)) {
        const MultiGraph g = recipe_to_graph(*o.recipe);
        if (!materialize.empty()) {
          save_graph(g, materialize);
          if (!realize_json) out << "graph " << materialize << '\n';
          j["graph"] = materialize;
        }
        if (realize_verify) {
          SolverHandle handle(realize_flags.no_cache);
          const auto got = solve_sequence(handle.solver(), g, o.target.size(), realize_flags.options());
          nlohmann::ordered_json checks = nlohmann::ordered_json::array();
          for (int r = 1; r <= o.target.size(); ++r) {
            const bool ok = got[r - 1].value == o.target[r - 1];
            confirmed = confirmed && ok;
            checks.push_back({{"r", r}, {"claimed", o.target[r - 1]}, {"computed", got[r - 1].value}, {"ok", ok}});
            if (!realize_json)
              out << "verify r=" << r << " claimed " << o.target[r - 1] << " computed " << got[r - 1].value
                  << (ok ? " ok" : " MISMATCH") << '\n';
          }
          j["verification"] = checks;
        }
      }
      if (realize_json) out << j.dump(2) << '\n';
      return o.realized() && confirmed ? kExitOk : kExitNegative;
    }

    if (*sweep_cmd) {
      if (sweep_mode == "ratio") {
        out << "q,x,y,z,status,recipe-id\n";
        for (int den = 1; den <= sweep_den_max; ++den)
          for (int num = den + 1; num <= 3 * den; ++num) {
            if (std::gcd(num, den) != 1) continue;
            out << num << '/' << den << ',' << csv_row(realize_ratio(num, den)) << '\n';
          }
        return kExitOk;
      }
      out << "x,y,z,status,recipe-id\n";
      for (int x = 1; x <= sweep_x_max; ++x)
        for (int y = x + 1; y <= 2 * x + 1; ++y) {
          if (sweep_mode == "pairs") {
            out << csv_row(realize_pair(x, y)) << '\n';
            continue;
          }
          for (int z = y + 1; z <= x + y + 1; ++z) out << csv_row(realize_triple(x, y, z, sweep_opts)) << '\n';
        }
      return kExitOk;
    }

    if (*family_cmd) {
      const FamilySpec spec = parse_family(family_text);
      const MultiGraph g = make_family(spec);
      if (family_info) {
        out << "family " << to_string(spec) << '\n';
        out << "vertices " << g.vertex_count() << '\n';
        out << "edges " << g.edge_count() << '\n';
        out << "genus " << genus(g) << '\n';
        for (int r = 1; r <= 3; ++r) {
          const auto v = expected_gonality(spec, r);
          out << "gon" << r << ' ' << (v ? std::to_string(v->value) + " " + v->source : std::string("unknown")) << '\n';
        }
        return kExitOk;
      }
      if (family_output.empty()) {
        out << write_graph(g);
      } else {
        save_graph(g, family_output);
      }
      return kExitOk;
    }
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const ArithmeticOverflow& e) {
    err << "arithmetic overflow: " << e.what() << '\n';
    return kExitResource;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedInput& e) {
    err << "unsupported input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace gonseq
