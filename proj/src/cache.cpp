#include "gonseq/cache.hpp"

#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "gonseq/errors.hpp"

namespace gonseq {

GonalityCache::GonalityCache(std::filesystem::path directory) : file_(std::move(directory) / "gonality.jsonl") {
  std::ifstream in(file_);
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      CacheEntry e;
      e.graph_hash = j.at("graph_hash").get<std::string>();
      e.r = j.at("r").get<int>();
      e.value = j.at("value").get<int>();
      e.witness = Divisor(j.at("witness").get<std::vector<Chips>>());
      e.classes_examined = j.value("classes_examined", std::uint64_t{0});
      e.tool_version = j.value("tool_version", std::string{});
      entries_[{e.graph_hash, e.r}] = std::move(e);
    } catch (const std::exception&) {
      // Torn or foreign line.
    }
  }
}

std::filesystem::path GonalityCache::default_directory() {
  if (const char* dir = std::getenv("GONSEQ_CACHE_DIR"); dir && *dir) return dir;
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "gonseq";
  return ".gonseq-cache";
}

std::optional<CacheEntry> GonalityCache::lookup(const std::string& hash, int r) const {
  auto it = entries_.find({hash, r});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void GonalityCache::store(const CacheEntry& e) {
  std::filesystem::create_directories(file_.parent_path());
  nlohmann::ordered_json j;
  j["graph_hash"] = e.graph_hash;
  j["r"] = e.r;
  j["value"] = e.value;
  j["witness"] = std::vector<Chips>(e.witness.chips().begin(), e.witness.chips().end());
  j["classes_examined"] = e.classes_examined;
  j["tool_version"] = e.tool_version;
  std::ofstream out(file_, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to cache file '" + file_.string() + "'");
  out << j.dump() << '\n';
  entries_[{e.graph_hash, e.r}] = e;
}

std::string graph_hash(const MultiGraph& g) { return content_hash(canonical_serialization(g)); }

GonalitySolver caching_solver(GonalityCache& cache, GonalitySolver inner) {
  return [&cache, inner = std::move(inner)](const MultiGraph& g, int r, const GonalityOptions& opts) {
    const std::string hash = graph_hash(g);
    if (auto hit = cache.lookup(hash, r); hit && hit->tool_version == kToolVersion && hit->witness.size() == g.vertex_count() &&
                                        hit->value >= opts.lower_bound) {
      const int built_in = std::min(r * g.vertex_count(), r + genus(g));
      const int limit = opts.ceiling ? std::min(*opts.ceiling, built_in) : built_in;
      if (hit->value > limit)
        throw ResourceLimit("no divisor of rank >= " + std::to_string(r) + " up to degree " + std::to_string(limit));
      GonalityResult res;
      res.r = r;
      res.value = hit->value;
      res.witness = hit->witness;
      res.probe = probe_vertex(g);
      res.classes_examined = hit->classes_examined;
      return res;
    }
    GonalityResult res = inner(g, r, opts);
    cache.store({hash, r, res.value, res.witness, res.classes_examined, kToolVersion});
    return res;
  };
}

}  // namespace gonseq
