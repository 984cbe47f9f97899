#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "gonseq/family.hpp"
#include "gonseq/multigraph.hpp"

namespace gonseq {

/// Prefix (gon_1, ..., gon_r) of a gonality sequence.
struct GonSeq {
  std::vector<int> entries;

  int size() const noexcept { return static_cast<int>(entries.size()); }
  int operator[](int i) const { return entries[i]; }
  int last() const { return entries.back(); }
  friend bool operator==(const GonSeq&, const GonSeq&) = default;
};

/// Entrywise sum; lengths must agree.
GonSeq operator+(const GonSeq& a, const GonSeq& b);
std::string to_string(const GonSeq& s);

/// Strictly increasing and x_{i+j} <= x_i + x_j whenever i + j <= r.
bool in_cone(const GonSeq& s);

struct Recipe;
using RecipePtr = std::shared_ptr<const Recipe>;

struct RecipeLeaf {
  FamilySpec family;
  std::string source;
};

struct RecipeGlue {
  RecipePtr left;
  RecipePtr right;
  int bridge = 0;
};

/// Realization tree; immutable, children shared.
struct Recipe {
  std::variant<RecipeLeaf, RecipeGlue> node;
  GonSeq sequence;

  bool is_leaf() const noexcept { return std::holds_alternative<RecipeLeaf>(node); }
};

RecipePtr make_leaf(FamilySpec family, GonSeq asserted, std::string source);
/// Glue node with the smallest admissible bridge: the sum of the children's last entries.
RecipePtr add(const RecipePtr& a, const RecipePtr& b);
/// Glue node with an explicit bridge; throws ValidationError below the admissible minimum.
RecipePtr glue_recipe(const RecipePtr& a, const RecipePtr& b, int bridge);

/// Materializes leaves with make_family and glues at each side's maximum-degree vertex.
MultiGraph recipe_to_graph(const Recipe& recipe);

nlohmann::ordered_json recipe_to_json(const Recipe& recipe);
RecipePtr recipe_from_json(const nlohmann::json& j);
/// Compact one-line form, e.g. "(Complete(4) + CompleteBipartite(2,2))[l=10]".
std::string recipe_id(const Recipe& recipe);
/// Number of leaves.
int leaf_count(const Recipe& recipe);
int recipe_vertex_count(const Recipe& recipe);

struct BaseEntry {
  GonSeq sequence;
  FamilySpec family;
  std::string source;
};

/// Family graphs with catalogued (gon_1, gon_2, gon_3), parameters bounded by `bound`.
std::vector<BaseEntry> base_catalogue(int bound = 6);

enum class RealizationStatus { Realized, InConeUnknown, OutsideCone };
std::string to_string(RealizationStatus s);

struct RealizationOutcome {
  RealizationStatus status = RealizationStatus::InConeUnknown;
  GonSeq target;
  RecipePtr recipe;  // set iff Realized
  std::vector<std::string> notes;

  bool realized() const noexcept { return status == RealizationStatus::Realized; }
};

struct RealizeOptions {
  /// Admit the asserted (4,6,7) base leaf, after confirming it with the solver.
  bool allow_external_bases = false;
};

/// (x, y) with x + 1 <= y <= 2x, by induction on y - x.
RealizationOutcome realize_pair(int x, int y);

/// Tries, in order: a single catalogued family; the z >= 2x constructions;
/// the symmetric-banana parameterization (z < 2x); the z >= 3x/2 + 2 composites;
/// the two-rook sum for (x, z - 2, z). Never guesses.
RealizationOutcome realize_triple(int x, int y, int z, const RealizeOptions& opts = {});

/// A realized triple with z / x = num / den. Throws DomainError unless 1 < num/den <= 3.
RealizationOutcome realize_ratio(int num, int den);

nlohmann::ordered_json outcome_to_json(const RealizationOutcome& outcome);

}  // namespace gonseq
