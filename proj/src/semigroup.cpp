#include "gonseq/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gonseq/catalogue.hpp"
#include "gonseq/errors.hpp"
#include "gonseq/gonality.hpp"

namespace gonseq {

namespace {

GonSeq seq(std::initializer_list<int> v) { return GonSeq{std::vector<int>(v)}; }

// Catalogue values for r = 1..len, or nothing when any is missing.
std::optional<GonSeq> catalogued_sequence(const FamilySpec& spec, int len) {
  GonSeq out;
  for (int r = 1; r <= len; ++r) {
    auto v = expected_gonality(spec, r);
    if (!v) return std::nullopt;
    out.entries.push_back(v->value);
  }
  return out;
}

std::string catalogued_source(const FamilySpec& spec, int len) {
  std::vector<std::string> tags;
  for (int r = 1; r <= len; ++r) {
    const std::string tag = expected_gonality(spec, r)->source;
    if (std::find(tags.begin(), tags.end(), tag) == tags.end()) tags.push_back(tag);
  }
  std::string out;
  for (const auto& t : tags) out += (out.empty() ? "" : ";") + t;
  return out;
}

// Leaf whose sequence comes from the catalogue; the caller guarantees coverage.
RecipePtr catalogued_leaf(const FamilySpec& spec, int len) {
  auto s = catalogued_sequence(spec, len);
  if (!s) throw std::logic_error("no catalogue sequence for " + to_string(spec));
  return make_leaf(spec, *s, catalogued_source(spec, len));
}

bool valid_spec(const FamilySpec& spec) {
  try {
    validate(spec);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

// A recipe, or the reason none was produced.
struct Step {
  RecipePtr recipe;
  std::vector<std::string> notes;

  static Step fail(std::string why) { return Step{nullptr, {std::move(why)}}; }
  explicit operator bool() const { return recipe != nullptr; }
};

// ---------------------------------------------------------------- single family

RecipePtr direct_family(const GonSeq& t) {
  const int x = t[0];
  const int y = t[1];
  const int z = t[2];
  std::vector<FamilySpec> candidates;
  if (t == seq({1, 2, 3})) candidates.push_back(family::Path{2});
  candidates.push_back(family::Complete{x + 1});
  for (int n : {z - x, y - x + 1, 2 * x})
    if (n >= x) candidates.push_back(family::CompleteBipartite{x, n});
  if (y - 1 >= x) candidates.push_back(family::BananaStar{x, y - 1});
  if (z > x && z % (z - x) == 0) candidates.push_back(family::Rook{z / (z - x), z - x});
  for (const auto& spec : candidates) {
    if (!valid_spec(spec)) continue;
    if (auto s = catalogued_sequence(spec, 3); s && *s == t) return catalogued_leaf(spec, 3);
  }
  return nullptr;
}

// ---------------------------------------------------------------- z >= 2x

bool z_at_least_2x_applies(int x, int y, int z) {
  if (!in_cone(seq({x, y, z})) || z < 2 * x) return false;
  if (y == x + 1 && z != 2 * x) return false;
  if (z == x + y && y != 2 * x) return false;
  return true;
}

// Branch-for-branch construction; requires z_at_least_2x_applies.
RecipePtr realize_z_at_least_2x(int x, int y, int z) {
  using family::Complete;
  using family::CompleteBipartite;
  if (z == 2 * x) {
    if (y == x + 1) return catalogued_leaf(Complete{x + 1}, 3);
    if (y == 2 * x - 1) return catalogued_leaf(CompleteBipartite{x, x}, 3);
    return add(catalogued_leaf(Complete{2 * x - y + 1}, 3), catalogued_leaf(CompleteBipartite{y - x, y - x}, 3));
  }
  if (y == 2 * x) return catalogued_leaf(CompleteBipartite{x, z - x}, 3);
  if (y == x + 2) return add(catalogued_leaf(Complete{x}, 3), catalogued_leaf(family::Path{2}, 3));
  return add(catalogued_leaf(Complete{2 * x - y + 2}, 3),
             catalogued_leaf(CompleteBipartite{y - x - 1, z + y - 3 * x - 1}, 3));
}

Step z_at_least_2x_step(int x, int y, int z, const std::string& role) {
  if (!z_at_least_2x_applies(x, y, z))
    return Step::fail(role + " " + to_string(seq({x, y, z})) + " is outside the z >= 2x constructions' hypotheses");
  return Step{realize_z_at_least_2x(x, y, z), {}};
}

// ---------------------------------------------------------------- symmetric bananas

bool symmetric_banana_applies(int x, int y, int z) {
  return in_cone(seq({x, y, z})) && y >= x + 2 && 3 * y <= 2 * (z + 2) && z + 2 <= x + y;
}

Step symmetric_banana_step(int x, int y, int z) {
  if (!symmetric_banana_applies(x, y, z))
    return Step::fail(to_string(seq({x, y, z})) + " is outside the symmetric-banana region");
  const int s = x % 2;
  const int t = y % 2;
  const int a = (x + s) / 2;
  const int b = t ? (y - 1) / 2 : (y - 2) / 2;
  const int k = t ? z - (y - 1) / 2 : z - y / 2;
  const family::BananaSym sym{s, t, a, b, k};
  const FamilySpec spec = sym;
  if (!valid_spec(spec)) return Step::fail("symmetric-banana parameters " + to_string(spec) + " are invalid");
  if (!banana_sym_left_in_range(sym))
    return Step::fail(to_string(spec) + " has its left half outside the banana-star range; its gonalities are "
                      "not established");
  // Each value rests on a bridge bound: the plain sum for gon_1, the refined one for gon_2,
  // and the gon_3 window.
  const int gon1_left = a - s;
  const int gon2_left = b - t + 1;
  const int k_max = s ? 2 * a + b - 2 : 2 * a + b - 1;
  if (k < gon1_left + a || k < gon2_left + (b + 1) - std::min(gon1_left, a) || k < 2 * b || k > k_max)
    return Step::fail(to_string(spec) + " has k outside the windows that fix gon_1..gon_3");
  std::ostringstream tag;
  tag << "symmetric-banana:parity(" << s << ',' << t << ")";
  return Step{make_leaf(spec, seq({x, y, z}), tag.str()), {}};
}

// (2a, b, 3a + 1) for 2a + 2 <= b <= 3a - 1, b != 2a + 3.
Step banana_plus_rook_step(int a, int b) {
  const std::string label = to_string(seq({2 * a, b, 3 * a + 1}));
  if (b < 2 * a + 2 || b > 3 * a - 1 || b == 2 * a + 3)
    return Step::fail(label + " is outside the banana-plus-rook range");
  if (b == 2 * a + 2) return symmetric_banana_step(2 * a, 2 * a + 2, 3 * a + 1);
  const int m = b - 2 * a - 1;
  const int n = 3 * a - b + 1;
  Step banana = symmetric_banana_step(2 * n, 2 * n + 2, 3 * n + 1);
  if (!banana) return banana;
  return Step{add(catalogued_leaf(family::Rook{3, m}, 3), banana.recipe), {}};
}

// ---------------------------------------------------------------- z >= 3x/2 + 2

bool three_halves_applies(int x, int y, int z) {
  return in_cone(seq({x, y, z})) && x + 2 <= y && y <= z - 2 && 2 * z >= 3 * x + 4;
}

Step external_sum(const RealizeOptions& opts) {
  if (!opts.allow_external_bases)
    return Step::fail("(7, 11, 13) = (3, 5, 6) + (4, 6, 7) needs the external (4, 6, 7) base; "
                      "enable external bases to use it");
  const FamilySpec stand_in = family::BananaSym{0, 0, 2, 2, 4};
  const auto solved = gonality_sequence(make_family(stand_in), 3);
  const GonSeq found = seq({solved[0].value, solved[1].value, solved[2].value});
  if (found != seq({4, 6, 7}))
    return Step::fail("external base stand-in " + to_string(stand_in) + " solved to " + to_string(found));
  RecipePtr base = make_leaf(stand_in, found, "external-base:solver-confirmed");
  return Step{add(realize_z_at_least_2x(3, 5, 6), base),
              {"external (4, 6, 7) base realized by " + to_string(stand_in) + ", confirmed by the exact solver"}};
}

Step three_halves_step(int x, int y, int z, const RealizeOptions& opts) {
  if (z >= 2 * x)
    return Step::fail("z >= 2x but z = x + y with y < 2x; the z >= 2x constructions exclude this case");
  if (y == x + 2) return symmetric_banana_step(x, y, z);
  if (z == 2 * x - 2 || z == 2 * x - 1) {
    if (x <= 7) {
      if (x == 7 && y == 11 && z == 13) return external_sum(opts);
      return symmetric_banana_step(x, y, z);
    }
    Step rest = z_at_least_2x_step(x - 6, y - 8, z - 9, "summand");
    if (!rest) return rest;
    return Step{add(rest.recipe, catalogued_leaf(family::Rook{3, 3}, 3)), {}};
  }
  if (3 * x <= y + z) {
    const int a = 2 * z - 3 * x;
    const int b = 2 * x - z;
    const int c = y + 3 * z - 6 * x + 1;
    Step left = z_at_least_2x_step(a, c, 2 * a, "summand");
    if (!left) return left;
    if (b < 3) return Step::fail("rook summand K_3 x K_" + std::to_string(b) + " needs at least 3 columns");
    return Step{add(left.recipe, catalogued_leaf(family::Rook{3, b}, 3)), {}};
  }
  const int a = 2 * z - 3 * x - 2;
  const int b = 2 * x - z + 1;
  for (int c = a + 1; c <= 2 * a - 1; ++c) {
    const int d = y - c;
    if (d < 2 * b + 2 || d > 3 * b - 1 || d == 2 * b + 3) continue;
    Step left = z_at_least_2x_step(a, c, 2 * a, "summand");
    if (!left) return left;
    Step right = banana_plus_rook_step(b, d);
    if (!right) return right;
    return Step{add(left.recipe, right.recipe), {}};
  }
  return Step::fail("no split y = c + d with (" + std::to_string(a) + ", c, " + std::to_string(2 * a) + ") and (" +
                    std::to_string(2 * b) + ", d, " + std::to_string(3 * b + 1) +
                    ") both constructible; the x + 4 corner is not covered by the z >= 2x constructions");
}

// ---------------------------------------------------------------- rook sums

// Smallest n >= 2 with (n+1)/n <= num/den < n/(n-1); requires 1 < num/den < 2.
int rook_band(long num, long den) {
  for (long n = 2;; ++n)
    if ((n + 1) * den <= n * num && num * (n - 1) < n * den) return static_cast<int>(n);
}

// (x, z - 2, z) = Rook(n, m) + Rook(n + 1, m').
Step two_rook_step(int x, int y, int z) {
  if (y != z - 2 || 2 * x <= z || z <= x) return Step::fail("not of the form (x, z - 2, z) with 1 < z/x < 2");
  const int n = rook_band(z, x);
  const long m = long{n} * z - long{n + 1} * x;
  const long m2 = long{n} * x - long{n - 1} * z;
  if (m < n || m2 < n + 1) return Step::fail("rook sum bounds m >= n, m' >= n + 1 fail");
  return Step{add(catalogued_leaf(family::Rook{n, static_cast<int>(m)}, 3),
                  catalogued_leaf(family::Rook{n + 1, static_cast<int>(m2)}, 3)),
              {}};
}

RealizationOutcome outcome(RealizationStatus status, GonSeq target, RecipePtr recipe, std::vector<std::string> notes) {
  if (recipe && recipe->sequence != target)
    throw std::logic_error("recipe for " + to_string(target) + " evaluates to " + to_string(recipe->sequence));
  return RealizationOutcome{status, std::move(target), std::move(recipe), std::move(notes)};
}

void collect(std::vector<std::string>& notes, const Step& s) {
  notes.insert(notes.end(), s.notes.begin(), s.notes.end());
}

}  // namespace

// ---------------------------------------------------------------- sequences

GonSeq operator+(const GonSeq& a, const GonSeq& b) {
  if (a.size() != b.size()) throw ValidationError("gonality sequences of different lengths");
  GonSeq out = a;
  for (int i = 0; i < a.size(); ++i) out.entries[i] += b[i];
  return out;
}

std::string to_string(const GonSeq& s) {
  std::string out = "(";
  for (int i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s[i]);
  return out + ")";
}

bool in_cone(const GonSeq& s) {
  for (int i = 0; i < s.size(); ++i)
    if (s[i] < 1) return false;
  for (int i = 0; i + 1 < s.size(); ++i)
    if (s[i] >= s[i + 1]) return false;
  // 1-based: x_{i+j} <= x_i + x_j.
  for (int i = 1; i <= s.size(); ++i)
    for (int j = i; i + j <= s.size(); ++j)
      if (s[i + j - 1] > s[i - 1] + s[j - 1]) return false;
  return true;
}

// ---------------------------------------------------------------- recipes

RecipePtr make_leaf(FamilySpec family, GonSeq asserted, std::string source) {
  validate(family);
  return std::make_shared<const Recipe>(Recipe{RecipeLeaf{normalized(family), std::move(source)}, std::move(asserted)});
}

RecipePtr glue_recipe(const RecipePtr& a, const RecipePtr& b, int bridge) {
  if (!a || !b) throw ValidationError("glue needs two recipes");
  if (a->sequence.size() != b->sequence.size() || a->sequence.size() == 0)
    throw ValidationError("glued recipes must carry sequences of the same nonzero length");
  const int minimum = a->sequence.last() + b->sequence.last();
  if (bridge < minimum)
    throw ValidationError("bridge " + std::to_string(bridge) + " below the admissible minimum " +
                          std::to_string(minimum));
  return std::make_shared<const Recipe>(Recipe{RecipeGlue{a, b, bridge}, a->sequence + b->sequence});
}

RecipePtr add(const RecipePtr& a, const RecipePtr& b) {
  if (!a || !b) throw ValidationError("glue needs two recipes");
  return glue_recipe(a, b, a->sequence.last() + b->sequence.last());
}

MultiGraph recipe_to_graph(const Recipe& recipe) {
  if (const auto* leaf = std::get_if<RecipeLeaf>(&recipe.node)) return make_family(leaf->family);
  const auto& g = std::get<RecipeGlue>(recipe.node);
  const MultiGraph left = recipe_to_graph(*g.left);
  const MultiGraph right = recipe_to_graph(*g.right);
  return glue({left, left.max_degree_vertex(), right, right.max_degree_vertex(), g.bridge});
}

nlohmann::ordered_json recipe_to_json(const Recipe& recipe) {
  nlohmann::ordered_json j;
  if (const auto* leaf = std::get_if<RecipeLeaf>(&recipe.node)) {
    j["leaf"] = to_json(leaf->family);
    j["sequence"] = recipe.sequence.entries;
    j["source"] = leaf->source;
    return j;
  }
  const auto& g = std::get<RecipeGlue>(recipe.node);
  j["glue"] = nlohmann::ordered_json{{"bridge", g.bridge}, {"left", recipe_to_json(*g.left)},
                                     {"right", recipe_to_json(*g.right)}};
  j["sequence"] = recipe.sequence.entries;
  return j;
}

RecipePtr recipe_from_json(const nlohmann::json& j) {
  try {
    const GonSeq stated{j.at("sequence").get<std::vector<int>>()};
    if (j.contains("leaf"))
      return make_leaf(family_from_json(j.at("leaf")), stated, j.value("source", std::string{}));
    const auto& g = j.at("glue");
    RecipePtr out = glue_recipe(recipe_from_json(g.at("left")), recipe_from_json(g.at("right")), g.at("bridge").get<int>());
    if (out->sequence != stated)
      throw ValidationError("glue sequence " + to_string(stated) + " is not the sum of its children " +
                            to_string(out->sequence));
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed recipe: ") + e.what());
  }
}

std::string recipe_id(const Recipe& recipe) {
  if (const auto* leaf = std::get_if<RecipeLeaf>(&recipe.node)) return to_string(leaf->family);
  const auto& g = std::get<RecipeGlue>(recipe.node);
  return "(" + recipe_id(*g.left) + " + " + recipe_id(*g.right) + ")[l=" + std::to_string(g.bridge) + "]";
}

int leaf_count(const Recipe& recipe) {
  if (recipe.is_leaf()) return 1;
  const auto& g = std::get<RecipeGlue>(recipe.node);
  return leaf_count(*g.left) + leaf_count(*g.right);
}

int recipe_vertex_count(const Recipe& recipe) {
  if (const auto* leaf = std::get_if<RecipeLeaf>(&recipe.node)) return make_family(leaf->family).vertex_count();
  const auto& g = std::get<RecipeGlue>(recipe.node);
  return recipe_vertex_count(*g.left) + recipe_vertex_count(*g.right);
}

std::vector<BaseEntry> base_catalogue(int bound) {
  std::vector<BaseEntry> out;
  auto push = [&](const FamilySpec& spec) {
    if (!valid_spec(spec)) return;
    if (auto s = catalogued_sequence(spec, 3)) out.push_back({*s, normalized(spec), catalogued_source(spec, 3)});
  };
  push(family::Path{2});
  for (int n = 3; n <= bound + 1; ++n) push(family::Complete{n});
  for (int m = 2; m <= bound; ++m)
    for (int n = m; n <= bound; ++n) push(family::CompleteBipartite{m, n});
  for (int a = 2; a <= bound; ++a)
    for (int b = a; b <= 2 * a - 1 && b <= bound; ++b) push(family::BananaStar{a, b});
  for (int n = 2; n <= bound; ++n)
    for (int m = n; m <= bound; ++m) push(family::Rook{n, m});
  for (int s = 0; s <= 1; ++s)
    for (int t = 0; t <= 1; ++t)
      for (int a = 2; a <= bound; ++a)
        for (int b = a; b <= 2 * a - 1 && b <= bound; ++b)
          for (int k = 2 * b; k <= 2 * a + b - 1; ++k) push(family::BananaSym{s, t, a, b, k});
  return out;
}

std::string to_string(RealizationStatus s) {
  switch (s) {
    case RealizationStatus::Realized:
      return "realized";
    case RealizationStatus::InConeUnknown:
      return "in-cone-unknown";
    case RealizationStatus::OutsideCone:
      return "outside-cone";
  }
  return "unknown";
}

// ---------------------------------------------------------------- realization

RealizationOutcome realize_pair(int x, int y) {
  const GonSeq target = seq({x, y});
  if (x < 1 || y < x + 1 || y > 2 * x)
    return outcome(RealizationStatus::OutsideCone, target, nullptr, {"pairs need x + 1 <= y <= 2x"});
  RecipePtr r = catalogued_leaf(family::Complete{2 * x - y + 2}, 2);
  for (int i = 0; i < y - x - 1; ++i) r = add(r, catalogued_leaf(family::Path{2}, 2));
  std::string note = "complete graph K_" + std::to_string(2 * x - y + 2);
  if (y > x + 1) note += " plus " + std::to_string(y - x - 1) + " copies of Path(2)";
  std::vector<std::string> notes{note};
  return outcome(RealizationStatus::Realized, target, r, std::move(notes));
}

RealizationOutcome realize_triple(int x, int y, int z, const RealizeOptions& opts) {
  const GonSeq target = seq({x, y, z});
  if (!in_cone(target))
    return outcome(RealizationStatus::OutsideCone, target, nullptr,
                   {"fails strict increase or subadditivity"});
  if (RecipePtr r = direct_family(target))
    return outcome(RealizationStatus::Realized, target, r, {"single catalogued family"});
  if (z_at_least_2x_applies(x, y, z))
    return outcome(RealizationStatus::Realized, target, realize_z_at_least_2x(x, y, z), {"z >= 2x construction"});
  std::vector<std::string> notes;
  if (z < 2 * x && symmetric_banana_applies(x, y, z)) {
    Step s = symmetric_banana_step(x, y, z);
    if (s) {
      std::vector<std::string> n{"symmetric-banana parameterization"};
      collect(n, s);
      return outcome(RealizationStatus::Realized, target, s.recipe, std::move(n));
    }
    collect(notes, s);
  }
  if (three_halves_applies(x, y, z)) {
    Step s = three_halves_step(x, y, z, opts);
    if (s) {
      std::vector<std::string> n{"z >= 3x/2 + 2 composite construction"};
      collect(n, s);
      return outcome(RealizationStatus::Realized, target, s.recipe, std::move(n));
    }
    collect(notes, s);
  }
  Step rooks = two_rook_step(x, y, z);
  if (rooks) return outcome(RealizationStatus::Realized, target, rooks.recipe, {"two-rook sum"});
  notes.push_back("no implemented construction covers this triple");
  return outcome(RealizationStatus::InConeUnknown, target, nullptr, std::move(notes));
}

RealizationOutcome realize_ratio(int num, int den) {
  if (den <= 0) throw DomainError("ratio denominator must be positive");
  const int g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (num <= den || num > 3 * den)
    throw DomainError("ratio " + std::to_string(num) + "/" + std::to_string(den) + " outside (1, 3]");
  if (num >= 2 * den) {
    // Smallest x = den * t >= 2 with some y meeting the z >= 2x hypotheses.
    for (int t = 1;; ++t) {
      const int x = den * t;
      const int z = num * t;
      if (x < 2) continue;
      for (int y = x + 1; y <= 2 * x; ++y) {
        if (!z_at_least_2x_applies(x, y, z)) continue;
        RealizationOutcome o = realize_triple(x, y, z);
        o.notes.insert(o.notes.begin(), "ratio " + std::to_string(num) + "/" + std::to_string(den) + " via z >= 2x");
        return o;
      }
    }
  }
  const int n = rook_band(num, den);
  if (num == n + 1 && den == n) {
    const int m = n + 1;
    const FamilySpec spec = family::Rook{n + 1, m};
    RecipePtr r = catalogued_leaf(spec, 3);
    return outcome(RealizationStatus::Realized, r->sequence, r,
                   {"ratio " + std::to_string(num) + "/" + std::to_string(den) + " via a single rook graph"});
  }
  for (int t = 1;; ++t) {
    const long x = long{den} * t;
    const long z = long{num} * t;
    const long m = n * z - (n + 1) * x;
    const long m2 = n * x - (n - 1) * z;
    if (m < n || m2 < n + 1) continue;
    Step s = two_rook_step(static_cast<int>(x), static_cast<int>(z - 2), static_cast<int>(z));
    std::vector<std::string> notes{"ratio " + std::to_string(num) + "/" + std::to_string(den) +
                                   " via a two-rook sum with n = " + std::to_string(n)};
    return outcome(RealizationStatus::Realized, s.recipe->sequence, s.recipe, std::move(notes));
  }
}

nlohmann::ordered_json outcome_to_json(const RealizationOutcome& o) {
  nlohmann::ordered_json j;
  j["target"] = o.target.entries;
  j["status"] = to_string(o.status);
  if (o.recipe) {
    j["recipe_id"] = recipe_id(*o.recipe);
    j["recipe"] = recipe_to_json(*o.recipe);
  }
  j["notes"] = o.notes;
  return j;
}

}  // namespace gonseq
