#include "gonseq/verify.hpp"

#include <iomanip>
#include <sstream>

#include "gonseq/catalogue.hpp"

namespace gonseq {

std::string to_string(MatchStatus s) {
  switch (s) {
    case MatchStatus::Match:
      return "match";
    case MatchStatus::Mismatch:
      return "mismatch";
    case MatchStatus::Uncatalogued:
      return "uncatalogued";
  }
  return "unknown";
}

bool VerificationReport::all_ok() const { return mismatches() == 0 && failed_properties() == 0; }

std::size_t VerificationReport::mismatches() const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.status == MatchStatus::Mismatch;
  return n;
}

std::size_t VerificationReport::failed_properties() const {
  std::size_t n = 0;
  for (const auto& p : properties) n += !p.ok;
  return n;
}

void VerificationReport::append(const VerificationReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
  properties.insert(properties.end(), other.properties.begin(), other.properties.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

nlohmann::ordered_json VerificationReport::to_json(bool timings) const {
  nlohmann::ordered_json out;
  out["suite"] = suite;
  out["records"] = nlohmann::ordered_json::array();
  for (const auto& rec : records) {
    nlohmann::ordered_json j;
    j["case"] = rec.case_id;
    if (!rec.family.is_null()) j["family"] = rec.family;
    j["r"] = rec.r;
    j["expected"] = rec.expected ? nlohmann::ordered_json(*rec.expected) : nlohmann::ordered_json(nullptr);
    j["computed"] = rec.computed;
    j["witness"] = format_divisor(rec.witness);
    j["status"] = to_string(rec.status);
    j["source"] = rec.source;
    if (timings) j["time_ms"] = std::chrono::duration<double, std::milli>(rec.elapsed).count();
    out["records"].push_back(std::move(j));
  }
  out["properties"] = nlohmann::ordered_json::array();
  for (const auto& p : properties) {
    nlohmann::ordered_json j;
    j["property"] = p.property;
    j["case"] = p.case_id;
    j["ok"] = p.ok;
    j["detail"] = p.detail;
    out["properties"].push_back(std::move(j));
  }
  out["notes"] = notes;
  nlohmann::ordered_json summary;
  summary["records"] = records.size();
  summary["mismatches"] = mismatches();
  summary["properties"] = properties.size();
  summary["failed_properties"] = failed_properties();
  summary["all_ok"] = all_ok();
  out["summary"] = summary;
  return out;
}

std::string VerificationReport::to_table(bool timings) const {
  std::ostringstream out;
  out << "suite " << suite << '\n';
  if (!records.empty()) {
    out << std::left << std::setw(28) << "case" << std::setw(4) << "r" << std::setw(10) << "expected"
        << std::setw(10) << "computed" << std::setw(14) << "status" << "source";
    if (timings) out << "  time_ms";
    out << '\n';
    for (const auto& rec : records) {
      out << std::left << std::setw(28) << rec.case_id << std::setw(4) << rec.r << std::setw(10)
          << (rec.expected ? std::to_string(*rec.expected) : "-") << std::setw(10) << rec.computed << std::setw(14)
          << to_string(rec.status) << rec.source;
      if (timings)
        out << "  " << std::fixed << std::setprecision(2)
            << std::chrono::duration<double, std::milli>(rec.elapsed).count();
      out << '\n';
    }
  }
  if (!properties.empty()) {
    std::size_t failed = failed_properties();
    out << "properties: " << properties.size() - failed << '/' << properties.size() << " passed\n";
    for (const auto& p : properties)
      if (!p.ok) out << "  FAILED " << p.property << ' ' << p.case_id << ": " << p.detail << '\n';
  }
  for (const auto& n : notes) out << "note: " << n << '\n';
  out << (all_ok() ? "result: all ok" : "result: FAILURES") << " (" << mismatches() << " mismatches, "
      << failed_properties() << " failed properties)\n";
  return out.str();
}

GonalityResult direct_solver(const MultiGraph& g, int r, const GonalityOptions& opts) { return gonality(g, r, opts); }

VerificationRecord compare(std::string case_id, int r, std::optional<int> expected, std::string source,
                           const GonalityResult& computed) {
  VerificationRecord rec;
  rec.case_id = std::move(case_id);
  rec.r = r;
  rec.expected = expected;
  rec.computed = computed.value;
  rec.witness = computed.witness;
  rec.source = std::move(source);
  rec.elapsed = computed.elapsed;
  if (!expected) rec.status = MatchStatus::Uncatalogued;
  else rec.status = *expected == computed.value ? MatchStatus::Match : MatchStatus::Mismatch;
  return rec;
}

VerificationReport verify_family(const FamilySpec& spec, int r_max, const GonalityOptions& opts,
                                 const GonalitySolver& solver) {
  VerificationReport report;
  report.suite = "family";
  const MultiGraph g = make_family(spec);
  GonalityOptions level = opts;
  for (int r = 1; r <= r_max; ++r) {
    const GonalityResult res = solver(g, r, level);
    level.lower_bound = res.value + 1;
    const auto expected = expected_gonality(spec, r);
    VerificationRecord rec = compare(to_string(spec), r, expected ? std::optional<int>(expected->value) : std::nullopt,
                                     expected ? expected->source : "", res);
    rec.family = to_json(spec);
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace gonseq
