#pragma once

#include <optional>
#include <vector>

#include "gonseq/divisor.hpp"
#include "gonseq/multigraph.hpp"

namespace gonseq {

struct RankOptions {
  /// rank() throws ResourceLimit when deg(d) exceeds this.
  int degree_ceiling = 24;
  int jobs = 1;
};

struct RankResult {
  int rank = -1;
  /// Lexicographically least effective E of degree rank + 1 with d - E unwinnable.
  /// Absent when rank = -1.
  std::optional<Divisor> failing_witness;
};

/// Baker-Norine rank.
RankResult rank(const MultiGraph& g, const Divisor& d, const RankOptions& opts = {});

/// Whether d - E is winnable for every effective E of degree r. r >= 0.
bool rank_at_least(const MultiGraph& g, const Divisor& d, int r, const RankOptions& opts = {});

/// rank(d) - rank(K - d) - deg(d) - 1 + genus(g); zero whenever Riemann-Roch holds.
long riemann_roch_residual(const MultiGraph& g, const Divisor& d, const RankOptions& opts = {});

/// Single-threaded rank tester with reusable scratch; one per worker.
class RankChecker {
 public:
  explicit RankChecker(const MultiGraph& g);

  /// Same contract as rank_at_least().
  bool at_least(std::span<const Chips> d, int r);

  /// Lexicographically least failing E of degree r (as a sorted vertex tuple), if any.
  std::optional<std::vector<Vertex>> least_failure(std::span<const Chips> d, int r);

  bool winnable(std::span<const Chips> d);
  /// Whether d - E is winnable, E given as a vertex tuple.
  bool survives(std::span<const Chips> d, std::span<const Vertex> e);

 private:
  const MultiGraph& g_;
  ChipFiringWorkspace ws_;
  std::vector<Chips> scratch_;
  std::vector<Vertex> tuple_;
};

/// First multiset after `e` (sorted, values in [0, n)) in lexicographic order; false at the end.
bool next_multiset(std::vector<Vertex>& e, int n);

}  // namespace gonseq
