#include "gonseq/multigraph.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "gonseq/errors.hpp"

namespace gonseq {

namespace {

bool is_connected(int n, const std::vector<std::vector<MultiGraph::Neighbor>>& adjacency) {
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (const auto& nb : adjacency[u]) {
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = 1;
        ++reached;
        stack.push_back(nb.vertex);
      }
    }
  }
  return reached == n;
}

}  // namespace

MultiGraph::MultiGraph(int vertex_count, std::vector<int> multiplicity, std::vector<std::string> labels)
    : n_(vertex_count), mult_(std::move(multiplicity)), labels_(std::move(labels)) {
  if (n_ <= 0) throw ValidationError("graph must have at least one vertex");
  const auto n = static_cast<std::size_t>(n_);
  if (mult_.size() != n * n) throw ValidationError("multiplicity matrix must be vertex_count x vertex_count");
  if (labels_.empty()) {
    labels_.reserve(n);
    for (int v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
  } else if (labels_.size() != n) {
    throw ValidationError("expected one label per vertex");
  }

  degree_.assign(n, 0);
  adjacency_.assign(n, {});
  long total = 0;
  for (int u = 0; u < n_; ++u) {
    if (this->multiplicity(u, u) != 0) throw ValidationError("loops are not allowed (vertex " + std::to_string(u) + ")");
    for (int v = 0; v < n_; ++v) {
      int m = this->multiplicity(u, v);
      if (m < 0) throw ValidationError("negative multiplicity");
      if (m != this->multiplicity(v, u)) throw ValidationError("multiplicity matrix must be symmetric");
      if (m > 0) {
        adjacency_[u].push_back({v, m});
        degree_[u] += m;
        total += m;
      }
    }
  }
  edges_ = static_cast<int>(total / 2);
  if (!is_connected(n_, adjacency_)) throw ValidationError("graph must be connected");
}

bool MultiGraph::has_default_label(Vertex v) const { return labels_[v] == std::to_string(v); }

bool MultiGraph::is_simple() const {
  return std::all_of(mult_.begin(), mult_.end(), [](int m) { return m <= 1; });
}

Vertex MultiGraph::max_degree_vertex() const {
  return static_cast<Vertex>(std::max_element(degree_.begin(), degree_.end()) - degree_.begin());
}

MultiGraphBuilder::MultiGraphBuilder(int vertex_count)
    : n_(vertex_count), mult_(static_cast<std::size_t>(std::max(vertex_count, 0)) * std::max(vertex_count, 0), 0) {
  if (vertex_count <= 0) throw ValidationError("graph must have at least one vertex");
}

MultiGraphBuilder& MultiGraphBuilder::add_edges(Vertex u, Vertex v, int count) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw ValidationError("edge endpoint out of range");
  if (u == v) throw ValidationError("loops are not allowed (vertex " + std::to_string(u) + ")");
  if (count < 0) throw ValidationError("edge count must be nonnegative");
  mult_[static_cast<std::size_t>(u) * n_ + v] += count;
  mult_[static_cast<std::size_t>(v) * n_ + u] += count;
  return *this;
}

MultiGraphBuilder& MultiGraphBuilder::set_label(Vertex v, std::string label) {
  if (v < 0 || v >= n_) throw ValidationError("label vertex out of range");
  if (labels_.empty()) {
    for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
  }
  labels_[v] = std::move(label);
  return *this;
}

MultiGraph MultiGraphBuilder::build() const { return MultiGraph(n_, mult_, labels_); }

int genus(const MultiGraph& g) { return g.edge_count() - g.vertex_count() + 1; }

MultiGraph glue(const GlueSpec& spec) {
  if (spec.bridge_count < 1) throw ValidationError("bridge count must be at least 1");
  if (!spec.left.contains(spec.left_vertex)) throw ValidationError("left glue vertex out of range");
  if (!spec.right.contains(spec.right_vertex)) throw ValidationError("right glue vertex out of range");
  const int nl = spec.left.vertex_count();
  const int nr = spec.right.vertex_count();
  MultiGraphBuilder b(nl + nr);
  for (int u = 0; u < nl; ++u) {
    for (const auto& nb : spec.left.neighbors(u))
      if (nb.vertex > u) b.add_edges(u, nb.vertex, nb.multiplicity);
    b.set_label(u, "L." + spec.left.label(u));
  }
  for (int u = 0; u < nr; ++u) {
    for (const auto& nb : spec.right.neighbors(u))
      if (nb.vertex > u) b.add_edges(nl + u, nl + nb.vertex, nb.multiplicity);
    b.set_label(nl + u, "R." + spec.right.label(u));
  }
  b.add_edges(spec.left_vertex, nl + spec.right_vertex, spec.bridge_count);
  return b.build();
}

MultiGraph cartesian_product(const MultiGraph& g, const MultiGraph& h) {
  if (!g.is_simple() || !h.is_simple())
    throw UnsupportedInput("cartesian_product requires simple graphs (multiplicity <= 1)");
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  MultiGraphBuilder b(ng * nh);
  auto id = [nh](int u, int v) { return u * nh + v; };
  for (int u = 0; u < ng; ++u) {
    for (int v = 0; v < nh; ++v) {
      b.set_label(id(u, v), "(" + g.label(u) + "," + h.label(v) + ")");
      for (const auto& nb : h.neighbors(v))
        if (nb.vertex > v) b.add_edges(id(u, v), id(u, nb.vertex), 1);
      for (const auto& nb : g.neighbors(u))
        if (nb.vertex > u) b.add_edges(id(u, v), id(nb.vertex, v), 1);
    }
  }
  return b.build();
}

std::string content_hash(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace gonseq
