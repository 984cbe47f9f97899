#include "gonseq/random_graphs.hpp"

#include <algorithm>

#include "gonseq/errors.hpp"

namespace gonseq {

int Rng::uniform(int lo, int hi) {
  if (lo > hi) throw ValidationError("empty random range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

MultiGraph random_connected_multigraph(Rng& rng, int min_vertices, int max_vertices, int max_edges) {
  const int n = rng.uniform(min_vertices, max_vertices);
  if (max_edges < n - 1) throw ValidationError("edge budget too small for a spanning tree");
  MultiGraphBuilder b(n);
  for (int v = 1; v < n; ++v) b.add_edges(v, rng.uniform(0, v - 1));
  if (n >= 2) {
    const int extra = rng.uniform(0, max_edges - (n - 1));
    for (int i = 0; i < extra; ++i) {
      const int u = rng.uniform(0, n - 1);
      int v = rng.uniform(0, n - 2);
      if (v >= u) ++v;
      b.add_edges(u, v);
    }
  }
  return b.build();
}

Divisor random_divisor(Rng& rng, int vertex_count, int degree) {
  Divisor d = Divisor::zero(vertex_count);
  for (int v = 0; v < vertex_count; ++v) d[v] = rng.uniform(-2, 4);
  std::int64_t current = d.degree();
  while (current != degree) {
    const int v = rng.uniform(0, vertex_count - 1);
    if (current < degree) {
      ++d[v];
      ++current;
    } else {
      --d[v];
      --current;
    }
  }
  return d;
}

std::vector<Vertex> random_subset(Rng& rng, int vertex_count) {
  if (vertex_count < 2) return {};
  std::vector<Vertex> out;
  while (out.empty() || static_cast<int>(out.size()) == vertex_count) {
    out.clear();
    for (int v = 0; v < vertex_count; ++v)
      if (rng.coin()) out.push_back(v);
  }
  return out;
}

}  // namespace gonseq
