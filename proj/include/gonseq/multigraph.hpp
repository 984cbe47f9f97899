#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace gonseq {

using Vertex = int;

/// Connected, loopless multigraph stored as a dense symmetric multiplicity
/// matrix plus per-vertex neighbour lists. Immutable after construction.
class MultiGraph {
 public:
  struct Neighbor {
    Vertex vertex;
    int multiplicity;
  };

  /// `multiplicity` is row-major, vertex_count x vertex_count. Empty `labels`
  /// means default labels ("0", "1", ...). Throws ValidationError when the
  /// matrix is asymmetric, has loops or negative entries, or is disconnected.
  MultiGraph(int vertex_count, std::vector<int> multiplicity, std::vector<std::string> labels = {});

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return edges_; }
  int multiplicity(Vertex u, Vertex v) const { return mult_[static_cast<std::size_t>(u) * n_ + v]; }
  int degree(Vertex v) const { return degree_[v]; }
  std::span<const Neighbor> neighbors(Vertex v) const { return adjacency_[v]; }

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool has_default_label(Vertex v) const;

  /// True when no pair of vertices is joined by more than one edge.
  bool is_simple() const;

  /// Vertex of maximal degree, least index on ties.
  Vertex max_degree_vertex() const;

  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  /// Structural equality (multiplicities only; labels ignored).
  bool same_edges(const MultiGraph& other) const { return n_ == other.n_ && mult_ == other.mult_; }

 private:
  int n_;
  int edges_ = 0;
  std::vector<int> mult_;
  std::vector<int> degree_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<std::string> labels_;
};

/// Incremental construction helper; validation happens in build().
class MultiGraphBuilder {
 public:
  explicit MultiGraphBuilder(int vertex_count);

  MultiGraphBuilder& add_edges(Vertex u, Vertex v, int count = 1);
  MultiGraphBuilder& set_label(Vertex v, std::string label);
  int vertex_count() const noexcept { return n_; }
  MultiGraph build() const;

 private:
  int n_;
  std::vector<int> mult_;
  std::vector<std::string> labels_;
};

/// First Betti number E - V + 1.
int genus(const MultiGraph& g);

/// Two graphs glued by `bridge_count` parallel edges between the designated vertices.
struct GlueSpec {
  const MultiGraph& left;
  Vertex left_vertex;
  const MultiGraph& right;
  Vertex right_vertex;
  int bridge_count;
};

/// Disjoint union plus the bridge bundle. Vertex order: left vertices, then right.
MultiGraph glue(const GlueSpec& spec);

/// Cartesian product of two simple graphs; vertex (u, v) gets index u * |V(h)| + v.
/// Throws UnsupportedInput when either factor has parallel edges.
MultiGraph cartesian_product(const MultiGraph& g, const MultiGraph& h);

/// Text graph format: "vertices <n>", optional "label <i> <name>" lines, then
/// "edge <u> <v> <mult>" per unordered pair (u < v) with mult >= 1. Lines
/// starting with '#' are comments. Writing emits labels only where they differ
/// from the default index label.
std::string write_graph(const MultiGraph& g);
MultiGraph read_graph(std::istream& in);
MultiGraph parse_graph(const std::string& text);
MultiGraph load_graph(const std::string& path);
void save_graph(const MultiGraph& g, const std::string& path);

/// Label-free serialization ("vertices" line plus sorted edge list); input to the cache hash.
std::string canonical_serialization(const MultiGraph& g);

/// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::string content_hash(const std::string& bytes);

}  // namespace gonseq
