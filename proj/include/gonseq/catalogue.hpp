#pragma once

#include <optional>
#include <string>

#include "gonseq/family.hpp"

namespace gonseq {

struct CatalogueValue {
  int value = 0;
  std::string source;  // descriptive tag, e.g. "complete:kn-h"
};

/// Genus of make_family(spec), computed from the parameters.
long family_genus(const FamilySpec& spec);

/// Closed-form gon_r for the family when a formula covers (spec, r); nothing otherwise.
std::optional<CatalogueValue> expected_gonality(const FamilySpec& spec, int r);

/// Whether the left half B*(a - s, b - t) satisfies 2 <= a' <= b' <= 2a' - 1, the range in which
/// the banana-star values feeding the symmetric-banana formulas hold.
bool banana_sym_left_in_range(const family::BananaSym& f);

/// min { a·n + b·m - h : a <= m-1, b <= n-1, h = (a+1)(b+1) - 1 - r >= 0 }; nothing when the set is empty.
std::optional<int> bipartite_delta(int m, int n, int r);

}  // namespace gonseq
