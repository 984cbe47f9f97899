#pragma once

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "gonseq/multigraph.hpp"

namespace gonseq {

namespace family {

/// K_n.
struct Complete {
  int n;
  bool operator==(const Complete&) const = default;
};

/// K_{m,n}. Vertices: the m-side first, then the n-side.
struct CompleteBipartite {
  int m;
  int n;
  bool operator==(const CompleteBipartite&) const = default;
};

/// B_{n,e}: path v_1..v_n with e parallel edges between consecutive vertices.
struct BananaUniform {
  int n;
  int e;
  bool operator==(const BananaUniform&) const = default;
};

/// B*_{a,b}: path v_1..v_a with b - a + i + 1 edges between v_i and v_{i+1}.
struct BananaStar {
  int a;
  int b;
  bool operator==(const BananaStar&) const = default;
};

/// Two generalized bananas joined by a bundle of k edges.
///
/// The right half is always B*_{a,b} (listed w_a first, w_1 last). The left
/// half is B*_{a - s, b - t} with s = `left_shortened`, t = `left_thinned`,
/// listed v_1 first; the bundle joins the left half's last vertex to w_a.
/// Rendered textually as BananaSym(s,t,a,b,k).
struct BananaSym {
  int left_shortened;
  int left_thinned;
  int a;
  int b;
  int k;
  bool operator==(const BananaSym&) const = default;
};

/// K_n □ K_m, stored with n <= m; vertex (row i, column j) has index i * m + j.
struct Rook {
  int n;
  int m;
  bool operator==(const Rook&) const = default;
};

/// Path on n vertices.
struct Path {
  int n;
  bool operator==(const Path&) const = default;
};

struct SingleVertex {
  bool operator==(const SingleVertex&) const = default;
};

}  // namespace family

using FamilySpec = std::variant<family::Complete, family::CompleteBipartite, family::BananaUniform,
                                family::BananaStar, family::BananaSym, family::Rook, family::Path,
                                family::SingleVertex>;

/// Throws ValidationError naming the violated constraint.
void validate(const FamilySpec& spec);

/// Canonical form: Rook(n, m) with n <= m. Other families are returned unchanged.
FamilySpec normalized(const FamilySpec& spec);

/// Builds the family graph with the documented vertex order and labels.
MultiGraph make_family(const FamilySpec& spec);

/// e.g. "BananaSym(0,0,4,5,7)", "Rook(2,3)", "SingleVertex".
std::string to_string(const FamilySpec& spec);
FamilySpec parse_family(const std::string& text);

/// Short family name ("Complete", "BananaSym", ...).
std::string family_name(const FamilySpec& spec);

nlohmann::json to_json(const FamilySpec& spec);
FamilySpec family_from_json(const nlohmann::json& j);

}  // namespace gonseq
