#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gonseq/rank.hpp"
#include "gonseq/verify.hpp"

namespace gonseq {

inline constexpr std::uint64_t kDefaultSeed = 7;

/// Size knobs shared by the suites; unset fields take each suite's default.
struct SuiteOptions {
  std::optional<int> n_max;
  std::optional<int> m_max;
  std::optional<int> a_max;
  std::optional<int> e_max;
  std::optional<int> samples;
  std::uint64_t seed = kDefaultSeed;
  GonalityOptions gonality;
  GonalitySolver solver = direct_solver;
  RankOptions rank;
};

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Throws ValidationError for an unknown name. "all" concatenates every suite.
VerificationReport run_suite(const std::string& name, const SuiteOptions& opts = {});

/// K_n, 3 <= n <= n_max (6): r up to max(3, g - 1) for n <= 5, r <= 3 above.
VerificationReport complete_suite(const SuiteOptions& opts);
/// K_{m,n}, 2 <= m <= n <= n_max (4), r <= 3.
VerificationReport bipartite_suite(const SuiteOptions& opts);
/// B_{n,e}, 2 <= n <= n_max (5), 1 <= e <= e_max (5), r <= 2.
VerificationReport banana_suite(const SuiteOptions& opts);
/// B*_{a,b}, 2 <= a <= a_max (4), a <= b <= 2a, r <= 3.
VerificationReport banana_star_suite(const SuiteOptions& opts);
/// Every (s, t) variant, 2 <= a <= a_max (3), a <= b <= 2a - 1, k at the ends of each window, r <= 3.
VerificationReport banana_sym_suite(const SuiteOptions& opts);
/// K_n x K_m, 2 <= n <= m, n <= n_max (3), m <= m_max (4), r <= 3.
VerificationReport rook_suite(const SuiteOptions& opts);
/// Sum law at the plain and the refined bridge thresholds, glue genus, and the
/// restriction rank inequality; samples (5) random pairs for the sum law.
VerificationReport glue_suite(const SuiteOptions& opts);
/// samples (100) random (graph, divisor) pairs with zero Riemann-Roch residual.
VerificationReport riemann_roch_suite(const SuiteOptions& opts);
/// samples (200) random instances: idempotence, class uniqueness and the burning characterization.
VerificationReport reduction_suite(const SuiteOptions& opts);

/// Whether some nonempty U within V \ {q} can fire without sending any vertex of U into debt.
/// Exponential in |V|; the definition-level check the burning test is compared against.
bool has_legal_firing_set(const MultiGraph& g, const Divisor& d, Vertex q);

}  // namespace gonseq
