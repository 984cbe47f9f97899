#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gonseq/divisor.hpp"
#include "gonseq/multigraph.hpp"

namespace gonseq {

struct GonalityOptions {
  /// Largest degree searched; the built-in bound min(r·|V|, r + genus) applies regardless.
  std::optional<int> ceiling;
  /// Degrees below this are assumed to have no witness (e.g. gon_{r-1} + 1).
  int lower_bound = 0;
  /// Worker count; 0 means one per hardware thread.
  int jobs = 1;
  /// Candidates handed to the workers at a time.
  std::size_t batch = 1024;
};

struct GonalityResult {
  int r = 0;
  int value = 0;
  /// q-reduced for q = probe, rank >= r, degree = value.
  Divisor witness;
  Vertex probe = 0;
  std::uint64_t classes_examined = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Enumeration probe: maximum-degree vertex, least index on ties.
Vertex probe_vertex(const MultiGraph& g);

/// Visits every q-reduced effective divisor of the given degree in lexicographic
/// order of the chips away from q; stops early when `visit` returns false.
void for_each_reduced_effective(const MultiGraph& g, Vertex q, int degree,
                                const std::function<bool(const Divisor&)>& visit);
std::vector<Divisor> enumerate_reduced_effective(const MultiGraph& g, Vertex q, int degree);

/// Exact gon_r(G). Throws ResourceLimit when the configured ceiling is reached first.
GonalityResult gonality(const MultiGraph& g, int r, const GonalityOptions& opts = {});

/// gon_1 .. gon_{r_max}, each level seeded with the previous value + 1.
std::vector<GonalityResult> gonality_sequence(const MultiGraph& g, int r_max, const GonalityOptions& opts = {});

}  // namespace gonseq
