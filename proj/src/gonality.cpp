#include "gonseq/gonality.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gonseq/errors.hpp"
#include "gonseq/parallel.hpp"
#include "gonseq/rank.hpp"

namespace gonseq {

namespace {

// Depth-first walk over superstable configurations c on V \ {q} with |c| <= budget,
// in lexicographic order. Superstables are down-closed, so a failing value ends
// its coordinate's loop.
class SuperstableWalk {
 public:
  SuperstableWalk(const MultiGraph& g, Vertex q) : ws_(g), q_(q), c_(g.vertex_count(), 0) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (v != q) others_.push_back(v);
  }

  // visit(c, |c|) returns false to stop. Returns false when stopped early.
  template <class Visit>
  bool run(int budget, Visit&& visit) {
    std::fill(c_.begin(), c_.end(), 0);
    return descend(0, budget, 0, visit);
  }

 private:
  template <class Visit>
  bool descend(std::size_t i, int remaining, int used, Visit& visit) {
    if (i == others_.size()) return visit(std::span<const Chips>(c_), used);
    const Vertex v = others_[i];
    const int cap = std::min(remaining, ws_.graph().degree(v) - 1);
    bool keep_going = descend(i + 1, remaining, used, visit);
    for (int value = 1; keep_going && value <= cap; ++value) {
      c_[v] = value;
      if (!ws_.burns_completely(c_, q_)) break;
      keep_going = descend(i + 1, remaining - value, used + value, visit);
    }
    c_[v] = 0;
    return keep_going;
  }

  ChipFiringWorkspace ws_;
  Vertex q_;
  std::vector<Chips> c_;
  std::vector<Vertex> others_;
};

}  // namespace

Vertex probe_vertex(const MultiGraph& g) { return g.max_degree_vertex(); }

void for_each_reduced_effective(const MultiGraph& g, Vertex q, int degree,
                                const std::function<bool(const Divisor&)>& visit) {
  if (!g.contains(q)) throw ValidationError("probe vertex out of range");
  if (degree < 0) throw ValidationError("degree must be nonnegative");
  SuperstableWalk walk(g, q);
  Divisor d = Divisor::zero(g.vertex_count());
  walk.run(degree, [&](std::span<const Chips> c, int used) {
    std::copy(c.begin(), c.end(), d.chips().begin());
    d[q] = degree - used;
    return visit(d);
  });
}

std::vector<Divisor> enumerate_reduced_effective(const MultiGraph& g, Vertex q, int degree) {
  std::vector<Divisor> out;
  for_each_reduced_effective(g, q, degree, [&](const Divisor& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

GonalityResult gonality(const MultiGraph& g, int r, const GonalityOptions& opts) {
  if (r < 1) throw ValidationError("gonality index r must be at least 1");
  const auto started = std::chrono::steady_clock::now();
  const int n = g.vertex_count();
  const Vertex q = probe_vertex(g);
  const int built_in = std::min(r * n, r + genus(g));
  const int limit = opts.ceiling ? std::min(*opts.ceiling, built_in) : built_in;
  const int start = std::max(r, opts.lower_bound);
  const int jobs = resolve_jobs(opts.jobs);
  const std::size_t batch_size = std::max<std::size_t>(1, opts.batch);

  std::vector<RankChecker> checkers;
  checkers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) checkers.emplace_back(g);

  GonalityResult result;
  result.r = r;
  result.probe = q;
  std::vector<Chips> batch;
  batch.reserve(batch_size * n);
  std::optional<std::size_t> hit;

  auto flush = [&](int) {
    const std::size_t count = batch.size() / n;
    hit = find_first(count, jobs, [&](std::size_t i, int w) {
      return checkers[w].at_least(std::span<const Chips>(batch.data() + i * n, n), r);
    });
    result.classes_examined += hit ? *hit + 1 : count;
    return !hit;
  };

  SuperstableWalk walk(g, q);
  for (int d = start; d <= limit; ++d) {
    // A witness is q-reduced with at least r chips on q.
    batch.clear();
    hit.reset();
    const bool exhausted = walk.run(d - r, [&](std::span<const Chips> c, int used) {
      const std::size_t at = batch.size();
      batch.insert(batch.end(), c.begin(), c.end());
      batch[at + q] = d - used;
      if (batch.size() / n < batch_size) return true;
      const bool go_on = flush(d);
      if (go_on) batch.clear();
      return go_on;
    });
    if (exhausted && !batch.empty()) flush(d);
    if (hit) {
      result.value = d;
      result.witness = Divisor(std::vector<Chips>(batch.begin() + *hit * n, batch.begin() + (*hit + 1) * n));
      result.elapsed = std::chrono::steady_clock::now() - started;
      return result;
    }
  }
  if (limit < built_in || start > built_in)
    throw ResourceLimit("no divisor of rank >= " + std::to_string(r) + " up to degree " + std::to_string(limit));
  throw std::logic_error("gonality search exhausted the universal upper bound");
}

std::vector<GonalityResult> gonality_sequence(const MultiGraph& g, int r_max, const GonalityOptions& opts) {
  std::vector<GonalityResult> out;
  GonalityOptions level = opts;
  for (int r = 1; r <= r_max; ++r) {
    out.push_back(gonality(g, r, level));
    level.lower_bound = std::max(opts.lower_bound, out.back().value + 1);
  }
  return out;
}

}  // namespace gonseq
