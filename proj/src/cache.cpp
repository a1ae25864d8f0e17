#include "knotcalc/cache.hpp"

#include <unistd.h>

#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <system_error>

#include <openssl/evp.h>

#include "knotcalc/errors.hpp"

namespace knotcalc {

using nlohmann::json;

const char* to_string(CellKind kind) {
  switch (kind) {
    case CellKind::cohomology:
      return "cohomology";
    case CellKind::e1:
      return "e1";
    case CellKind::d1:
      return "d1";
    case CellKind::e2:
      return "e2";
  }
  return "unknown";
}

namespace {

json key_json(const CacheKey& key) {
  return {{"p", key.p}, {"k", key.k}, {"parity", to_string(key.parity)}, {"kind", to_string(key.kind)}};
}

json basis_json(const std::vector<Monomial>& basis) {
  json out = json::array();
  for (const Monomial& m : basis) out.push_back(format(m));
  return out;
}

}  // namespace

CellCache::CellCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

std::filesystem::path CellCache::path_for(const CacheKey& key) const {
  return directory_ / (std::string(to_string(key.kind)) + "-" + to_string(key.parity) + "-p" + std::to_string(key.p) +
                       "-k" + std::to_string(key.k) + ".json");
}

std::string CellCache::content_hash(const json& payload) {
  const std::string bytes = payload.dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

std::optional<json> CellCache::load_entry(const CacheKey& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  json entry = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (entry.is_discarded()) return std::nullopt;
  return entry;
}

std::optional<json> CellCache::load(const CacheKey& key) const {
  auto entry = load_entry(key);
  if (!entry || !entry->is_object()) return std::nullopt;
  const json& e = *entry;
  if (e.value("schema_version", -1) != kCacheSchemaVersion) return std::nullopt;
  if (e.value("engine_version", std::string()) != kEngineVersion) return std::nullopt;
  if (!e.contains("key") || e["key"] != key_json(key)) return std::nullopt;
  if (!e.contains("payload") || !e.contains("hash") || !e["hash"].is_string()) return std::nullopt;
  if (e["hash"].get<std::string>() != content_hash(e["payload"])) return std::nullopt;
  return e["payload"];
}

void CellCache::store(const CacheKey& key, const json& payload) const {
  static std::atomic<unsigned long> counter{0};
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  if (ec) throw std::runtime_error("cannot create cache directory " + directory_.string() + ": " + ec.message());

  const json entry = {{"schema_version", kCacheSchemaVersion},
                      {"engine_version", kEngineVersion},
                      {"key", key_json(key)},
                      {"payload", payload},
                      {"hash", content_hash(payload)}};
  const std::filesystem::path target = path_for(key);
  std::filesystem::path temp = target;
  temp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << entry.dump() << '\n';
    if (!out) throw std::runtime_error("cannot write cache entry " + temp.string());
  }
  std::filesystem::rename(temp, target, ec);
  if (ec) {
    std::filesystem::remove(temp);
    throw std::runtime_error("cannot publish cache entry " + target.string() + ": " + ec.message());
  }
}

json cohomology_payload(const CohomologySpace& space) {
  return {{"dim", space.dim()},
          {"monomials", space.all_monomials.size()},
          {"relation_rank", space.relations.dim()},
          {"basis", basis_json(space.basis)}};
}

json e1_payload(const E1Cell& cell) {
  return {{"dim", cell.dim()},
          {"ambient_dim", cell.ambient->dim()},
          {"degeneracy_rank", cell.degeneracy.dim()},
          {"basis", basis_json(cell.basis)}};
}

json d1_payload(const D1Matrix& d1) {
  json entries = json::array();
  for (std::size_t r = 0; r < d1.matrix.rows(); ++r)
    for (const auto& e : d1.matrix.row(r)) entries.push_back(json::array({r, e.col, to_string(e.value)}));
  return {{"rows", d1.matrix.rows()},
          {"cols", d1.matrix.cols()},
          {"rank", d1.rank},
          {"source_basis", basis_json(d1.source->basis)},
          {"target_basis", basis_json(d1.target->basis)},
          {"entries", std::move(entries)}};
}

json e2_payload(const E2Cell& cell) {
  return {{"dim", cell.dim}, {"kernel_dim", cell.kernel_dim}, {"incoming_rank", cell.incoming_rank}};
}

}  // namespace knotcalc
