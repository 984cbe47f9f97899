#include "gonseq/rank.hpp"

#include <algorithm>
#include <string>

#include "gonseq/errors.hpp"
#include "gonseq/parallel.hpp"

namespace gonseq {

namespace {

constexpr std::size_t kBatch = 4096;

void require_size(const MultiGraph& g, const Divisor& d) {
  if (d.size() != g.vertex_count())
    throw ValidationError("divisor has " + std::to_string(d.size()) + " entries but the graph has " +
                          std::to_string(g.vertex_count()) + " vertices");
}

// E <= d pointwise with d effective, so d - E is effective.
bool dominated(std::span<const Chips> d, std::span<const Vertex> e) {
  if (std::any_of(d.begin(), d.end(), [](Chips c) { return c < 0; })) return false;
  for (std::size_t i = 0; i < e.size();) {
    std::size_t j = i;
    while (j < e.size() && e[j] == e[i]) ++j;
    if (static_cast<std::int64_t>(j - i) > d[e[i]]) return false;
    i = j;
  }
  return true;
}

Divisor tuple_to_divisor(int n, std::span<const Vertex> e) {
  Divisor out = Divisor::zero(n);
  for (Vertex v : e) ++out[v];
  return out;
}

// Parallel lexicographic sweep; returns the least failing multiset.
std::optional<std::vector<Vertex>> parallel_least_failure(const MultiGraph& g, std::span<const Chips> d, int r,
                                                          int jobs) {
  std::vector<RankChecker> checkers;
  checkers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) checkers.emplace_back(g);
  std::vector<std::vector<Vertex>> batch;
  std::vector<Vertex> e(r, 0);
  bool more = true;
  while (more) {
    batch.clear();
    while (more && batch.size() < kBatch) {
      batch.push_back(e);
      more = next_multiset(e, g.vertex_count());
    }
    auto hit = find_first(batch.size(), jobs, [&](std::size_t i, int w) {
      return !dominated(d, batch[i]) && !checkers[w].survives(d, batch[i]);
    });
    if (hit) return batch[*hit];
  }
  return std::nullopt;
}

}  // namespace

bool next_multiset(std::vector<Vertex>& e, int n) {
  // Rightmost position that can still grow; everything after it resets to its new value.
  for (int i = static_cast<int>(e.size()) - 1; i >= 0; --i) {
    if (e[i] + 1 < n) {
      const Vertex v = e[i] + 1;
      std::fill(e.begin() + i, e.end(), v);
      return true;
    }
  }
  return false;
}

RankChecker::RankChecker(const MultiGraph& g) : g_(g), ws_(g), scratch_(g.vertex_count()) {}

bool RankChecker::winnable(std::span<const Chips> d) {
  std::int64_t degree = 0;
  Vertex probe = -1;
  for (int v = 0; v < g_.vertex_count(); ++v) {
    degree += d[v];
    if (probe < 0 && d[v] < 0) probe = v;
  }
  if (degree < 0) return false;
  if (probe < 0) return true;
  std::copy(d.begin(), d.end(), scratch_.begin());
  return ws_.winnable_from(scratch_, probe);
}

bool RankChecker::survives(std::span<const Chips> d, std::span<const Vertex> e) {
  std::copy(d.begin(), d.end(), scratch_.begin());
  Vertex probe = -1;
  for (Vertex v : e)
    if (--scratch_[v] < 0 && probe < 0) probe = v;
  // d itself may carry debt elsewhere.
  for (Vertex v = 0; probe < 0 && v < g_.vertex_count(); ++v)
    if (scratch_[v] < 0) probe = v;
  if (probe < 0) return true;
  return ws_.winnable_from(scratch_, probe);
}

bool RankChecker::at_least(std::span<const Chips> d, int r) {
  if (r < 0) throw ValidationError("rank threshold must be nonnegative");
  if (r == 0) return winnable(d);
  std::int64_t degree = 0;
  for (Chips c : d) degree += c;
  if (degree < r) return false;
  const int n = g_.vertex_count();
  // Concentrated removals fail most often.
  for (Vertex v = 0; v < n; ++v) {
    tuple_.assign(r, v);
    if (dominated(d, tuple_)) continue;
    if (!survives(d, tuple_)) return false;
  }
  tuple_.assign(r, 0);
  do {
    if (dominated(d, tuple_)) continue;
    if (!survives(d, tuple_)) return false;
  } while (next_multiset(tuple_, n));
  return true;
}

std::optional<std::vector<Vertex>> RankChecker::least_failure(std::span<const Chips> d, int r) {
  if (r < 0) throw ValidationError("rank threshold must be nonnegative");
  tuple_.assign(r, 0);
  do {
    if (dominated(d, tuple_)) continue;
    if (!survives(d, tuple_)) return tuple_;
  } while (next_multiset(tuple_, g_.vertex_count()));
  return std::nullopt;
}

bool rank_at_least(const MultiGraph& g, const Divisor& d, int r, const RankOptions& opts) {
  require_size(g, d);
  if (r < 0) throw ValidationError("rank threshold must be nonnegative");
  const int jobs = resolve_jobs(opts.jobs);
  RankChecker checker(g);
  if (jobs <= 1 || r == 0) return checker.at_least(d.chips(), r);
  if (d.degree() < r) return false;
  return !parallel_least_failure(g, d.chips(), r, jobs).has_value();
}

RankResult rank(const MultiGraph& g, const Divisor& d, const RankOptions& opts) {
  require_size(g, d);
  RankChecker checker(g);
  if (d.degree() < 0 || !checker.winnable(d.chips())) return {};
  if (d.degree() > opts.degree_ceiling)
    throw ResourceLimit("rank computation needs degree <= " + std::to_string(opts.degree_ceiling) + ", got " +
                        std::to_string(d.degree()));
  const int jobs = resolve_jobs(opts.jobs);
  for (int r = 1;; ++r) {
    std::optional<std::vector<Vertex>> failure;
    if (jobs <= 1) {
      if (checker.at_least(d.chips(), r)) continue;
      failure = checker.least_failure(d.chips(), r);
    } else {
      failure = parallel_least_failure(g, d.chips(), r, jobs);
      if (!failure) continue;
    }
    return {r - 1, tuple_to_divisor(g.vertex_count(), *failure)};
  }
}

long riemann_roch_residual(const MultiGraph& g, const Divisor& d, const RankOptions& opts) {
  const Divisor k = canonical_divisor(g);
  const long lhs = rank(g, d, opts).rank;
  const long rhs = rank(g, k - d, opts).rank;
  return lhs - rhs - static_cast<long>(d.degree()) - 1 + genus(g);
}

}  // namespace gonseq
