#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gonseq/divisor.hpp"
#include "gonseq/family.hpp"
#include "gonseq/gonality.hpp"

namespace gonseq {

enum class MatchStatus { Match, Mismatch, Uncatalogued };

std::string to_string(MatchStatus s);

/// One solver run compared against a predicted value.
struct VerificationRecord {
  std::string case_id;
  nlohmann::json family;  // null for graphs outside the family catalogue
  int r = 0;
  std::optional<int> expected;
  int computed = 0;
  Divisor witness;
  MatchStatus status = MatchStatus::Uncatalogued;
  std::string source;
  std::chrono::nanoseconds elapsed{0};
};

/// A pass/fail check of an identity or property on one instance.
struct PropertyRecord {
  std::string property;
  std::string case_id;
  bool ok = false;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::vector<VerificationRecord> records;
  std::vector<PropertyRecord> properties;
  std::vector<std::string> notes;

  /// No mismatches and no failed properties.
  bool all_ok() const;
  std::size_t mismatches() const;
  std::size_t failed_properties() const;
  void append(const VerificationReport& other);

  /// Stable field order; "time_ms" fields only when `timings`.
  nlohmann::ordered_json to_json(bool timings = false) const;
  std::string to_table(bool timings = false) const;
};

/// Computes gon_r with options; lets callers interpose a cache.
using GonalitySolver = std::function<GonalityResult(const MultiGraph&, int, const GonalityOptions&)>;

GonalityResult direct_solver(const MultiGraph& g, int r, const GonalityOptions& opts);

/// Solver values for r = 1..r_max (each seeded by the previous) against the catalogue.
VerificationReport verify_family(const FamilySpec& spec, int r_max, const GonalityOptions& opts = {},
                                 const GonalitySolver& solver = direct_solver);

/// Record for a solver run against an arbitrary prediction.
VerificationRecord compare(std::string case_id, int r, std::optional<int> expected, std::string source,
                           const GonalityResult& computed);

}  // namespace gonseq
