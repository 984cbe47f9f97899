#pragma once

// Backtracking multigraph isomorphism for test-sized graphs.

#include <algorithm>
#include <functional>
#include <vector>

#include "gonseq/multigraph.hpp"

namespace iso {

inline bool isomorphic(const gonseq::MultiGraph& a, const gonseq::MultiGraph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> extend = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = a.multiplicity(u, v) == b.multiplicity(map[u], w);
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (extend(v + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return extend(0);
}

}  // namespace iso
