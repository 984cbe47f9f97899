#include "gonseq/divisor.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "gonseq/errors.hpp"

namespace gonseq {

namespace {

Chips narrow(std::int64_t value) {
  if (value < std::numeric_limits<Chips>::min() || value > std::numeric_limits<Chips>::max())
    throw ArithmeticOverflow("chip count overflow");
  return static_cast<Chips>(value);
}

void require_size(const MultiGraph& g, const Divisor& d) {
  if (d.size() != g.vertex_count())
    throw ValidationError("divisor has " + std::to_string(d.size()) + " entries but the graph has " +
                          std::to_string(g.vertex_count()) + " vertices");
}

void require_vertex(const MultiGraph& g, Vertex v) {
  if (!g.contains(v)) throw ValidationError("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Divisor Divisor::point(int vertex_count, Vertex v, Chips count) {
  Divisor d = zero(vertex_count);
  d[v] = count;
  return d;
}

std::int64_t Divisor::degree() const { return std::accumulate(chips_.begin(), chips_.end(), std::int64_t{0}); }

std::vector<Vertex> Divisor::support() const {
  std::vector<Vertex> out;
  for (int v = 0; v < size(); ++v)
    if (chips_[v] > 0) out.push_back(v);
  return out;
}

bool Divisor::is_effective() const {
  return std::all_of(chips_.begin(), chips_.end(), [](Chips c) { return c >= 0; });
}

bool Divisor::is_effective_away_from(Vertex q) const {
  for (int v = 0; v < size(); ++v)
    if (v != q && chips_[v] < 0) return false;
  return true;
}

Divisor& Divisor::operator+=(const Divisor& other) {
  if (other.size() != size()) throw ValidationError("divisor size mismatch");
  for (int v = 0; v < size(); ++v) chips_[v] = narrow(std::int64_t{chips_[v]} + other.chips_[v]);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
  if (other.size() != size()) throw ValidationError("divisor size mismatch");
  for (int v = 0; v < size(); ++v) chips_[v] = narrow(std::int64_t{chips_[v]} - other.chips_[v]);
  return *this;
}

Divisor restrict_to(const Divisor& d, Vertex first, int count) {
  if (first < 0 || count < 0 || first + count > d.size()) throw ValidationError("restriction range out of bounds");
  return Divisor(std::vector<Chips>(d.chips().begin() + first, d.chips().begin() + first + count));
}

std::string format_divisor(const Divisor& d) {
  std::ostringstream out;
  out << "divisor";
  for (int v = 0; v < d.size(); ++v)
    if (d[v] != 0) out << ' ' << v << ':' << d[v];
  return out.str();
}

std::string format_chip_vector(const Divisor& d) {
  std::ostringstream out;
  for (int v = 0; v < d.size(); ++v) out << (v ? " " : "") << d[v];
  return out.str();
}

Divisor parse_divisor(const std::string& text, int vertex_count) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  std::size_t first = (!tokens.empty() && tokens[0] == "divisor") ? 1 : 0;
  Divisor d = Divisor::zero(vertex_count);
  std::vector<char> seen(vertex_count, 0);
  for (std::size_t i = first; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    auto colon = tok.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
      throw ParseError(0, "malformed divisor token '" + tok + "' (expected <vertex>:<chips>)");
    long v = 0;
    long c = 0;
    try {
      std::size_t used_v = 0;
      std::size_t used_c = 0;
      v = std::stol(tok.substr(0, colon), &used_v);
      c = std::stol(tok.substr(colon + 1), &used_c);
      if (used_v != colon || used_c != tok.size() - colon - 1) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError(0, "malformed divisor token '" + tok + "' (expected <vertex>:<chips>)");
    }
    if (v < 0 || v >= vertex_count) throw ParseError(0, "divisor vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw ParseError(0, "vertex " + std::to_string(v) + " listed twice in divisor");
    if (c < std::numeric_limits<Chips>::min() || c > std::numeric_limits<Chips>::max())
      throw ParseError(0, "chip count out of range in '" + tok + "'");
    seen[v] = 1;
    d[static_cast<Vertex>(v)] = static_cast<Chips>(c);
  }
  return d;
}

// ---------------------------------------------------------------------------

ChipFiringWorkspace::ChipFiringWorkspace(const MultiGraph& g)
    : g_(g),
      burnt_(g.vertex_count(), 0),
      burnt_edges_(g.vertex_count(), 0),
      layers_(g.vertex_count()),
      delta_(g.vertex_count(), 0) {
  order_.reserve(g.vertex_count());
}

int ChipFiringWorkspace::burn(std::span<const Chips> chips, Vertex q) {
  std::fill(burnt_.begin(), burnt_.end(), 0);
  std::fill(burnt_edges_.begin(), burnt_edges_.end(), 0);
  order_.clear();
  burnt_[q] = 1;
  order_.push_back(q);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    for (const auto& nb : g_.neighbors(order_[i])) {
      const Vertex w = nb.vertex;
      if (burnt_[w]) continue;
      burnt_edges_[w] += nb.multiplicity;
      if (burnt_edges_[w] > chips[w]) {
        burnt_[w] = 1;
        order_.push_back(w);
      }
    }
  }
  return g_.vertex_count() - static_cast<int>(order_.size());
}

int ChipFiringWorkspace::fire_unburnt(std::span<Chips> chips) {
  const int n = g_.vertex_count();
  // Each unburnt v has burnt_edges_[v] <= chips[v] edges leaving U, so U fires at least once.
  std::int64_t times = std::numeric_limits<std::int64_t>::max();
  for (Vertex v = 0; v < n; ++v) {
    if (burnt_[v] || burnt_edges_[v] == 0) continue;
    times = std::min<std::int64_t>(times, chips[v] / burnt_edges_[v]);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (burnt_[v]) continue;
    if (burnt_edges_[v] != 0) chips[v] = narrow(chips[v] - times * burnt_edges_[v]);
    for (const auto& nb : g_.neighbors(v))
      if (burnt_[nb.vertex]) chips[nb.vertex] = narrow(chips[nb.vertex] + times * nb.multiplicity);
  }
  return static_cast<int>(times);
}

const std::vector<std::vector<Vertex>>& ChipFiringWorkspace::layers_from(Vertex q) {
  auto& layers = layers_[q];
  if (!layers.empty()) return layers;
  std::vector<int> dist(g_.vertex_count(), -1);
  dist[q] = 0;
  layers.push_back({q});
  while (true) {
    std::vector<Vertex> next;
    for (Vertex u : layers.back())
      for (const auto& nb : g_.neighbors(u))
        if (dist[nb.vertex] < 0) {
          dist[nb.vertex] = dist[u] + 1;
          next.push_back(nb.vertex);
        }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    layers.push_back(std::move(next));
  }
  return layers;
}

void ChipFiringWorkspace::clear_debt(std::span<Chips> chips, Vertex q) {
  const auto& layers = layers_from(q);
  // Working outward-in: firing the set of vertices strictly closer to q than
  // layer t moves chips into layer t and leaves everything farther untouched.
  for (std::size_t t = layers.size() - 1; t >= 1; --t) {
    const auto& layer = layers[t];
    const auto& inner = layers[t - 1];
    auto in_inner = [&](Vertex w) { return std::find(inner.begin(), inner.end(), w) != inner.end(); };
    std::int64_t times = 0;
    for (Vertex v : layer) {
      if (chips[v] >= 0) continue;
      std::int64_t inward = 0;
      for (const auto& nb : g_.neighbors(v))
        if (in_inner(nb.vertex)) inward += nb.multiplicity;
      times = std::max(times, (-std::int64_t{chips[v]} + inward - 1) / inward);
    }
    if (times == 0) continue;
    for (Vertex v : layer)
      for (const auto& nb : g_.neighbors(v))
        if (in_inner(nb.vertex)) {
          chips[v] = narrow(chips[v] + times * nb.multiplicity);
          chips[nb.vertex] = narrow(chips[nb.vertex] - times * nb.multiplicity);
        }
  }
}

void ChipFiringWorkspace::reduce(std::span<Chips> chips, Vertex q, std::vector<BurnRound>* trace) {
  clear_debt(chips, q);
  while (true) {
    const bool done = burn(chips, q) == 0;
    BurnRound round;
    if (trace) round.burnt_order.assign(order_.begin(), order_.end());
    if (done) {
      if (trace) trace->push_back(std::move(round));
      return;
    }
    if (trace)
      for (Vertex v = 0; v < g_.vertex_count(); ++v)
        if (!burnt_[v]) round.fired.push_back(v);
    round.times = fire_unburnt(chips);
    if (trace) trace->push_back(std::move(round));
  }
}

bool ChipFiringWorkspace::winnable_from(std::span<Chips> chips, Vertex probe) {
  clear_debt(chips, probe);
  while (chips[probe] < 0) {
    if (burn(chips, probe) == 0) return false;
    fire_unburnt(chips);
  }
  return true;
}

// ---------------------------------------------------------------------------

Divisor fire_set(const MultiGraph& g, const Divisor& d, std::span<const Vertex> set) {
  require_size(g, d);
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : set) {
    require_vertex(g, v);
    in[v] = 1;
  }
  std::vector<std::int64_t> acc(d.chips().begin(), d.chips().end());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!in[v]) continue;
    for (const auto& nb : g.neighbors(v)) {
      if (in[nb.vertex]) continue;
      acc[v] -= nb.multiplicity;
      acc[nb.vertex] += nb.multiplicity;
    }
  }
  std::vector<Chips> out(acc.size());
  std::transform(acc.begin(), acc.end(), out.begin(), narrow);
  return Divisor(std::move(out));
}

BurnResult dhar_burn(const MultiGraph& g, const Divisor& d, Vertex q) {
  require_size(g, d);
  require_vertex(g, q);
  if (!d.is_effective_away_from(q))
    throw PreconditionError("dhar_burn requires a divisor effective away from the probe vertex");
  ChipFiringWorkspace ws(g);
  ws.burn(d.chips(), q);
  BurnResult result;
  result.burnt_order.assign(ws.burn_order().begin(), ws.burn_order().end());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!ws.burnt(v)) result.unburnt.push_back(v);
  return result;
}

Divisor q_reduce(const MultiGraph& g, const Divisor& d, Vertex q) {
  require_size(g, d);
  require_vertex(g, q);
  Divisor out = d;
  ChipFiringWorkspace ws(g);
  ws.reduce(out.chips(), q);
  return out;
}

Divisor q_reduce(const MultiGraph& g, const Divisor& d, Vertex q, std::vector<BurnRound>& trace) {
  require_size(g, d);
  require_vertex(g, q);
  Divisor out = d;
  ChipFiringWorkspace ws(g);
  ws.reduce(out.chips(), q, &trace);
  return out;
}

bool is_q_reduced(const MultiGraph& g, const Divisor& d, Vertex q) {
  require_size(g, d);
  require_vertex(g, q);
  if (!d.is_effective_away_from(q)) return false;
  ChipFiringWorkspace ws(g);
  return ws.burns_completely(d.chips(), q);
}

bool is_winnable(const MultiGraph& g, const Divisor& d) {
  require_size(g, d);
  if (d.degree() < 0) return false;
  const auto debt = std::find_if(d.chips().begin(), d.chips().end(), [](Chips c) { return c < 0; });
  if (debt == d.chips().end()) return true;
  Divisor work = d;
  ChipFiringWorkspace ws(g);
  return ws.winnable_from(work.chips(), static_cast<Vertex>(debt - d.chips().begin()));
}

Divisor canonical_divisor(const MultiGraph& g) {
  Divisor k = Divisor::zero(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) k[v] = g.degree(v) - 2;
  return k;
}

}  // namespace gonseq
