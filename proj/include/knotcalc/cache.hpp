#pragma once

// Persistent per-cell cache: one JSON document per (p, k, parity, kind),
// written to a temporary file and renamed into place so concurrent readers
// never see a partial entry.
//
//   {"schema_version": 1, "engine_version": "...",
//    "key": {"p": .., "k": .., "parity": "even", "kind": "e1"},
//    "payload": {...}, "hash": "<sha256 of payload.dump()>"}
//
// Entries from another schema or engine version, or whose hash does not
// match their payload, are treated as misses.

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "knotcalc/spectral.hpp"

namespace knotcalc {

inline constexpr int kCacheSchemaVersion = 1;

enum class CellKind { cohomology, e1, d1, e2 };

const char* to_string(CellKind kind);

struct CacheKey {
  int p = 0;
  int k = 0;
  Parity parity = Parity::even;
  CellKind kind = CellKind::e2;
};

class CellCache {
 public:
  explicit CellCache(std::filesystem::path directory);

  const std::filesystem::path& directory() const { return directory_; }
  std::filesystem::path path_for(const CacheKey& key) const;

  std::optional<nlohmann::json> load(const CacheKey& key) const;
  // Full entry as stored on disk, without validation.
  std::optional<nlohmann::json> load_entry(const CacheKey& key) const;
  void store(const CacheKey& key, const nlohmann::json& payload) const;

  static std::string content_hash(const nlohmann::json& payload);

 private:
  std::filesystem::path directory_;
};

// Payloads: dimensions, bases in the diagram grammar, matrices as
// [row, col, "num/den"] triples.
nlohmann::json cohomology_payload(const CohomologySpace& space);
nlohmann::json e1_payload(const E1Cell& cell);
nlohmann::json d1_payload(const D1Matrix& d1);
nlohmann::json e2_payload(const E2Cell& cell);

}  // namespace knotcalc
