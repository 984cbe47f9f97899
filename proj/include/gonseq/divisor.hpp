#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gonseq/multigraph.hpp"

namespace gonseq {

using Chips = std::int32_t;

/// Integer chip vector indexed by vertex.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(std::vector<Chips> chips) : chips_(std::move(chips)) {}

  static Divisor zero(int vertex_count) { return Divisor(std::vector<Chips>(vertex_count, 0)); }
  static Divisor point(int vertex_count, Vertex v, Chips count = 1);

  int size() const noexcept { return static_cast<int>(chips_.size()); }
  Chips operator[](Vertex v) const { return chips_[v]; }
  Chips& operator[](Vertex v) { return chips_[v]; }
  std::span<const Chips> chips() const noexcept { return chips_; }
  std::span<Chips> chips() noexcept { return chips_; }

  std::int64_t degree() const;
  /// Vertices holding a positive number of chips.
  std::vector<Vertex> support() const;
  bool is_effective() const;
  bool is_effective_away_from(Vertex q) const;

  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend bool operator==(const Divisor&, const Divisor&) = default;
  friend std::strong_ordering operator<=>(const Divisor& a, const Divisor& b) { return a.chips_ <=> b.chips_; }

 private:
  std::vector<Chips> chips_;
};

/// Divisor restricted to the vertex range [first, first + count).
Divisor restrict_to(const Divisor& d, Vertex first, int count);

/// "divisor <v>:<c> ..." listing nonzero entries in vertex order.
std::string format_divisor(const Divisor& d);
/// Space-separated chip vector, e.g. "1 0 0".
std::string format_chip_vector(const Divisor& d);
/// Accepts "<v>:<c>" tokens with an optional leading "divisor" keyword;
/// omitted vertices hold 0 chips. Throws ParseError.
Divisor parse_divisor(const std::string& text, int vertex_count);

struct BurnResult {
  std::vector<Vertex> unburnt;
  std::vector<Vertex> burnt_order;
};

/// One Dhar round recorded during reduction.
struct BurnRound {
  std::vector<Vertex> burnt_order;
  std::vector<Vertex> fired;  // unburnt set U; empty on the final round
  int times = 0;              // how many times U was fired
};

/// Reusable scratch space for chip-firing on one graph. Not thread-safe; use
/// one instance per worker. The graph must outlive the workspace.
class ChipFiringWorkspace {
 public:
  explicit ChipFiringWorkspace(const MultiGraph& g);

  const MultiGraph& graph() const noexcept { return g_; }

  /// Burns from q over chips effective away from q. Returns the number of unburnt vertices.
  int burn(std::span<const Chips> chips, Vertex q);
  /// After burn(): whether v burned, and its burnt-edge count.
  bool burnt(Vertex v) const { return burnt_[v] != 0; }
  std::span<const Vertex> burn_order() const { return {order_.data(), order_.size()}; }

  /// q-reducedness test for chips effective away from q.
  bool burns_completely(std::span<const Chips> chips, Vertex q) { return burn(chips, q) == 0; }

  /// Makes chips effective away from q by borrowing layer by layer toward q.
  void clear_debt(std::span<Chips> chips, Vertex q);

  /// In-place q-reduction. When `trace` is non-null, one BurnRound is appended per Dhar round.
  void reduce(std::span<Chips> chips, Vertex q, std::vector<BurnRound>* trace = nullptr);

  /// Decides winnability by reducing at `probe`, stopping as soon as the probe is out of debt.
  /// Modifies chips.
  bool winnable_from(std::span<Chips> chips, Vertex probe);

 private:
  // Fires the unburnt set left by the last burn() as often as it stays effective; returns the count.
  int fire_unburnt(std::span<Chips> chips);
  const std::vector<std::vector<Vertex>>& layers_from(Vertex q);

  const MultiGraph& g_;
  std::vector<char> burnt_;
  std::vector<int> burnt_edges_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::vector<Vertex>>> layers_;  // per q: BFS layers, computed lazily
  std::vector<std::int64_t> delta_;
};

/// Fires every vertex of `set` once.
Divisor fire_set(const MultiGraph& g, const Divisor& d, std::span<const Vertex> set);

/// Dhar's burning procedure from q. Throws PreconditionError unless d is effective away from q.
BurnResult dhar_burn(const MultiGraph& g, const Divisor& d, Vertex q);

/// The unique q-reduced divisor equivalent to d.
Divisor q_reduce(const MultiGraph& g, const Divisor& d, Vertex q);
Divisor q_reduce(const MultiGraph& g, const Divisor& d, Vertex q, std::vector<BurnRound>& trace);

bool is_q_reduced(const MultiGraph& g, const Divisor& d, Vertex q);

/// Whether d is equivalent to an effective divisor.
bool is_winnable(const MultiGraph& g, const Divisor& d);

/// K(v) = deg(v) - 2.
Divisor canonical_divisor(const MultiGraph& g);

}  // namespace gonseq
