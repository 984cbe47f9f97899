#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gonseq/divisor.hpp"
#include "gonseq/multigraph.hpp"

namespace gonseq {

/// Seeded generator with a portable integer draw (std distributions differ across libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi]; lo <= hi.
  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Random spanning tree plus extra parallel or new edges; total edge count in [n-1, max_edges].
MultiGraph random_connected_multigraph(Rng& rng, int min_vertices, int max_vertices, int max_edges);

/// Random divisor with degree exactly `degree`; entries roughly in [-2, 4].
Divisor random_divisor(Rng& rng, int vertex_count, int degree);

/// Random nonempty proper vertex subset.
std::vector<Vertex> random_subset(Rng& rng, int vertex_count);

}  // namespace gonseq
