#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "gonseq/divisor.hpp"
#include "gonseq/verify.hpp"

namespace gonseq {

inline constexpr const char* kToolVersion = "gonseq 0.1.0";

struct CacheEntry {
  std::string graph_hash;
  int r = 0;
  int value = 0;
  Divisor witness;
  std::uint64_t classes_examined = 0;
  std::string tool_version = kToolVersion;
};

/// Append-only JSON-lines store of solved gonalities, keyed by (graph hash, r).
/// Lines that fail to parse are skipped.
class GonalityCache {
 public:
  explicit GonalityCache(std::filesystem::path directory);

  /// $GONSEQ_CACHE_DIR, else $HOME/.cache/gonseq, else ./.gonseq-cache.
  static std::filesystem::path default_directory();

  const std::filesystem::path& file() const noexcept { return file_; }
  std::optional<CacheEntry> lookup(const std::string& graph_hash, int r) const;
  void store(const CacheEntry& entry);

 private:
  std::filesystem::path file_;
  std::map<std::pair<std::string, int>, CacheEntry> entries_;
};

/// Hash of canonical_serialization(g).
std::string graph_hash(const MultiGraph& g);

/// Wraps `inner`, serving and recording results through `cache`. The cache must outlive the solver.
GonalitySolver caching_solver(GonalityCache& cache, GonalitySolver inner = direct_solver);

}  // namespace gonseq
