#pragma once

// Definition-level references for small graphs, independent of the library's
// burning and reduction code.

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "gonseq/divisor.hpp"
#include "gonseq/multigraph.hpp"

namespace oracle {

using gonseq::Chips;
using gonseq::Divisor;
using gonseq::MultiGraph;
using gonseq::Vertex;

inline std::int64_t determinant(std::vector<std::vector<std::int64_t>> m) {
  // Bareiss elimination; exact for integer matrices.
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Visits every effective divisor of the given degree on n vertices.
inline void for_each_effective(int n, int degree, const std::function<void(const Divisor&)>& visit) {
  if (degree < 0) return;
  Divisor d = Divisor::zero(n);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == n - 1) {
      d[v] = left;
      visit(d);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      d[v] = c;
      rec(v + 1, left - c);
    }
  };
  rec(0, degree);
}

/// Linear equivalence through the reduced Laplacian: a ~ b iff adj(L') (a - b) = 0 mod det(L'),
/// where L' drops the last vertex.
class Lattice {
 public:
  explicit Lattice(const MultiGraph& g) : g_(g), n_(g.vertex_count()) {
    const int m = n_ - 1;
    std::vector<std::vector<std::int64_t>> lap(m, std::vector<std::int64_t>(m, 0));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) lap[i][j] = i == j ? g.degree(i) : -g.multiplicity(i, j);
    det_ = determinant(lap);
    adj_.assign(m, std::vector<std::int64_t>(m, 0));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        std::vector<std::vector<std::int64_t>> minor;
        for (int r = 0; r < m; ++r) {
          if (r == j) continue;
          std::vector<std::int64_t> row;
          for (int c = 0; c < m; ++c)
            if (c != i) row.push_back(lap[r][c]);
          minor.push_back(row);
        }
        adj_[i][j] = ((i + j) % 2 ? -1 : 1) * determinant(minor);
      }
  }

  std::int64_t tree_count() const { return det_; }

  bool equivalent(const Divisor& a, const Divisor& b) const {
    if (a.degree() != b.degree()) return false;
    const int m = n_ - 1;
    for (int i = 0; i < m; ++i) {
      std::int64_t s = 0;
      for (int j = 0; j < m; ++j) s += adj_[i][j] * (a[j] - b[j]);
      if (s % det_ != 0) return false;
    }
    return true;
  }

  bool winnable(const Divisor& d) const {
    bool found = false;
    for_each_effective(n_, static_cast<int>(d.degree()), [&](const Divisor& e) {
      if (!found && equivalent(d, e)) found = true;
    });
    return found;
  }

  int rank(const Divisor& d) const {
    if (!winnable(d)) return -1;
    for (int r = 1;; ++r) {
      bool all = true;
      for_each_effective(n_, r, [&](const Divisor& e) {
        if (all && !winnable(d - e)) all = false;
      });
      if (!all) return r - 1;
    }
  }

  /// Least degree of an effective divisor of rank >= r, searching every effective divisor.
  int gonality(int r) const {
    for (int d = r;; ++d) {
      bool found = false;
      for_each_effective(n_, d, [&](const Divisor& e) {
        if (!found && rank_at_least(e, r)) found = true;
      });
      if (found) return d;
    }
  }

 private:
  bool rank_at_least(const Divisor& d, int r) const {
    bool all = true;
    for_each_effective(n_, r, [&](const Divisor& e) {
      if (all && !winnable(d - e)) all = false;
    });
    return all;
  }

  const MultiGraph& g_;
  int n_;
  std::int64_t det_ = 1;
  std::vector<std::vector<std::int64_t>> adj_;
};

/// q-reduced by definition: effective off q and no nonempty U within V \ {q} fires legally.
inline bool reduced_by_definition(const MultiGraph& g, const Divisor& d, Vertex q) {
  const int n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v)
    if (v != q && d[v] < 0) return false;
  for (std::uint32_t u = 1; u < (1u << n); ++u) {
    if (u >> q & 1) continue;
    bool legal = true;
    for (Vertex v = 0; v < n && legal; ++v) {
      if (!(u >> v & 1)) continue;
      int out = 0;
      for (Vertex w = 0; w < n; ++w)
        if (!(u >> w & 1)) out += g.multiplicity(v, w);
      legal = d[v] >= out;
    }
    if (legal) return false;
  }
  return true;
}

}  // namespace oracle
