// Runs the ten acceptance criteria with the uncached solver; one PASS/FAIL line each.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "gonseq/catalogue.hpp"
#include "gonseq/family.hpp"
#include "gonseq/gonality.hpp"
#include "gonseq/semigroup.hpp"
#include "gonseq/suites.hpp"

using namespace gonseq;

namespace {

struct Verdict {
  bool ok = false;
  std::string detail;
};

std::string summarize(const VerificationReport& r) {
  std::size_t matched = 0;
  for (const auto& rec : r.records) matched += rec.status == MatchStatus::Match;
  std::ostringstream s;
  s << r.records.size() << " values, " << matched << " matched, " << r.mismatches() << " mismatched";
  if (!r.properties.empty()) s << ", " << r.properties.size() << " properties, " << r.failed_properties() << " failed";
  return s.str();
}

// Every value catalogued and matched; uncatalogued or mismatched values fail.
Verdict exact(const VerificationReport& r) {
  bool ok = !r.records.empty() || !r.properties.empty();
  for (const auto& rec : r.records) ok = ok && rec.status == MatchStatus::Match;
  ok = ok && r.failed_properties() == 0;
  std::string detail = summarize(r);
  for (const auto& rec : r.records)
    if (rec.status != MatchStatus::Match)
      detail += "; " + rec.case_id + " r=" + std::to_string(rec.r) + " " + to_string(rec.status);
  for (const auto& p : r.properties)
    if (!p.ok) detail += "; " + p.property + " " + p.case_id;
  return {ok, detail};
}

// Values whose cited statements apply must all match; the rest are listed but do not count.
Verdict applicable_only(const VerificationReport& r, const std::function<bool(const VerificationRecord&)>& applies) {
  bool ok = r.failed_properties() == 0;
  std::size_t applicable = 0, matched = 0;
  std::string detail;
  for (const auto& rec : r.records) {
    if (!applies(rec)) continue;
    ++applicable;
    if (rec.status == MatchStatus::Match) {
      ++matched;
    } else {
      ok = false;
      detail += "; " + rec.case_id + " r=" + std::to_string(rec.r) + " " + to_string(rec.status);
    }
  }
  ok = ok && applicable > 0;
  return {ok, std::to_string(applicable) + " applicable values, " + std::to_string(matched) + " matched, " +
                  std::to_string(r.records.size() - applicable) + " outside every cited hypothesis" + detail};
}

Verdict banana_families() {
  VerificationReport r = run_suite("banana");
  r.append(run_suite("banana-star"));
  // Base cases of the gon_3 = a + b induction.
  for (const auto& [a, b, v] : {std::tuple{2, 2, 4}, std::tuple{2, 3, 5}}) {
    const FamilySpec spec = family::BananaStar{a, b};
    r.properties.push_back({"base-case", to_string(spec), gonality_sequence(make_family(spec), 3)[2].value == v, ""});
  }
  // Every (a, b) in range needs gon_3; gon_1 and gon_2 are stated only for b <= 2a - 1.
  std::set<std::pair<int, int>> with_gon3;
  auto applies = [&](const VerificationRecord& rec) {
    const FamilySpec spec = family_from_json(rec.family);
    if (std::holds_alternative<family::BananaUniform>(spec)) return rec.r <= 2;
    const auto& f = std::get<family::BananaStar>(spec);
    if (rec.r == 3 && rec.status == MatchStatus::Match) with_gon3.insert({f.a, f.b});
    return rec.r == 3 || f.b <= 2 * f.a - 1;
  };
  Verdict v = applicable_only(r, applies);
  for (int a = 2; a <= 4; ++a)
    for (int b = a; b <= 2 * a; ++b)
      if (!with_gon3.count({a, b})) {
        v.ok = false;
        v.detail += "; no gon_3 for BananaStar(" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
  return v;
}

Verdict symmetric_bananas() {
  const VerificationReport r = run_suite("banana-sym");
  // (variant, r) -> k values with the cited hypotheses met, and the lower window ends they must include.
  std::map<std::tuple<int, int, int>, std::set<int>> covered;
  std::map<std::tuple<int, int, int>, std::set<int>> lower_ends;
  auto applies = [&](const VerificationRecord& rec) {
    const auto f = std::get<family::BananaSym>(family_from_json(rec.family));
    const int a = f.a, b = f.b, k = f.k;
    if (a > 3 || !(2 <= a && a <= b && b <= 2 * a - 1) || !banana_sym_left_in_range(f)) return false;
    const int k_max = f.left_shortened ? 2 * a + b - 2 : 2 * a + b - 1;
    const int lower = rec.r == 1 ? 2 * a : rec.r == 2 ? 2 * b - a + 3 : 2 * b;
    if (k < lower || (rec.r == 3 && k > k_max)) return false;
    const auto key = std::tuple{f.left_shortened, f.left_thinned, rec.r};
    covered[key].insert(k);
    if (k == lower) lower_ends[key].insert(k);
    return true;
  };
  Verdict v = applicable_only(r, applies);
  for (int s = 0; s <= 1; ++s)
    for (int t = 0; t <= 1; ++t)
      for (int rr = 1; rr <= 3; ++rr) {
        const auto key = std::tuple{s, t, rr};
        if (covered[key].size() < 2 || lower_ends[key].empty()) {
          v.ok = false;
          v.detail += "; variant (" + std::to_string(s) + "," + std::to_string(t) + ") r=" + std::to_string(rr) +
                      " lacks both window ends";
        }
      }
  return v;
}

Verdict rook_graphs() {
  VerificationReport r{"rook", {}, {}, {}};
  for (const auto& [n, m] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 3}})
    r.append(verify_family(family::Rook{n, m}, 3));
  return exact(r);
}

VerificationReport glue_report() {
  static const VerificationReport report = run_suite("glue");
  return report;
}

Verdict gluing() {
  VerificationReport r = glue_report();
  std::size_t sums = 0, refined = 0;
  for (const auto& rec : r.records) (rec.source == "glue:refined-bridge" ? refined : sums) += 1;
  std::erase_if(r.properties, [](const PropertyRecord& p) { return p.property == "restriction-rank"; });
  Verdict v = exact(r);
  v.ok = v.ok && sums > 0 && refined == 3;
  v.detail = std::to_string(sums) + " sum values, " + std::to_string(refined) + " refined values; " + v.detail;
  return v;
}

Verdict restriction() {
  VerificationReport r = glue_report();
  r.records.clear();
  std::erase_if(r.properties, [](const PropertyRecord& p) { return p.property != "restriction-rank"; });
  Verdict v = exact(r);
  v.ok = v.ok && r.properties.size() == 20;
  return v;
}

Verdict property_suite(const char* name, std::size_t expected) {
  const VerificationReport r = run_suite(name);
  Verdict v = exact(r);
  v.ok = v.ok && r.properties.size() == expected;
  return v;
}

Verdict realization() {
  std::vector<RealizationOutcome> outcomes;
  for (int x = 1; x <= 5; ++x)
    for (int y = x + 1; y <= 2 * x + 1; ++y) {
      RealizationOutcome o = realize_pair(x, y);
      if (o.realized()) outcomes.push_back(std::move(o));
    }
  std::size_t pairs = outcomes.size();
  for (const auto& [x, y, z] : {std::tuple{5, 7, 10}, std::tuple{3, 6, 8}, std::tuple{6, 8, 11}, std::tuple{12, 15, 16}})
    outcomes.push_back(realize_triple(x, y, z));
  bool ok = true;
  std::string failures;
  for (const auto& o : outcomes) {
    if (!o.realized()) {
      ok = false;
      failures += "; " + to_string(o.target) + " not realized";
      continue;
    }
    const auto got = gonality_sequence(recipe_to_graph(*o.recipe), o.target.size());
    for (int r = 1; r <= o.target.size(); ++r)
      if (got[r - 1].value != o.target[r - 1]) {
        ok = false;
        failures += "; " + recipe_id(*o.recipe) + " r=" + std::to_string(r) + " computed " +
                    std::to_string(got[r - 1].value);
      }
  }
  return {ok, std::to_string(pairs) + " pairs and 4 triples confirmed by the solver" + failures};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"complete graphs", [] { return exact(run_suite("complete")); }},
      {"complete bipartite graphs", [] { return exact(run_suite("bipartite")); }},
      {"banana families", banana_families},
      {"rook graphs", rook_graphs},
      {"symmetric bananas", symmetric_bananas},
      {"gluing", gluing},
      {"riemann-roch", [] { return property_suite("riemann-roch", 100); }},
      {"reduction", [] { return property_suite("reduction", 600); }},
      {"realization soundness", realization},
      {"restriction rank", restriction},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !v.ok;
    std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << v.detail
              << "; " << static_cast<long>(secs * 1000) << " ms)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
