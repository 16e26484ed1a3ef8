#pragma once

// Disk cache for theta series. One JSON file per request, named by a stable
// hash of the request key; files carry a version tag, the full key, and the
// exponent/coefficient pairs with coefficients as decimal strings. Writes go
// through a temporary file and an atomic rename.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "lattice.hpp"
#include "qseries.hpp"

namespace vlplus::cache {

inline constexpr int kVersion = 1;

inline std::filesystem::path default_dir() {
  if (const char* e = std::getenv("VLPLUS_CACHE_DIR")) return e;
  return std::filesystem::temp_directory_path() / "vlplus-cache";
}

// Stable request key: frame, canonical basis, shift, truncation order.
inline std::string theta_key(const lat::Lattice& l, const exact::QVec& offset,
                             int order2) {
  auto rat = [](const exact::Rat& x) {
    return numerator(x).str() + "/" + denominator(x).str();
  };
  std::string key = "theta;dim=" + std::to_string(l.dim()) +
                    ";scale=" + rat(l.frame().scale) + ";basis=";
  for (const auto& row : l.basis()) {
    for (const auto& x : row) key += rat(x) + ",";
    key += ";";
  }
  key += "shift=";
  for (const auto& x : offset) key += rat(x) + ",";
  key += ";order2=" + std::to_string(order2);
  return key;
}

inline std::string key_hash(const std::string& key) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

inline std::optional<qs::QSeries> load_theta(const std::filesystem::path& dir,
                                             const std::string& key,
                                             int order2) {
  std::filesystem::path f = dir / (key_hash(key) + ".json");
  std::ifstream in(f);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
  if (!j.is_object() || j.value("version", -1) != kVersion ||
      j.value("key", "") != key)
    return std::nullopt;
  qs::QSeries s(order2);
  for (const auto& p : j.at("pairs")) {
    int e2 = p.at(0).get<int>();
    s.add_coeff2(e2, qs::Int(p.at(1).get<std::string>()));
  }
  return s;
}

inline void store_theta(const std::filesystem::path& dir,
                        const std::string& key, const qs::QSeries& s) {
  std::filesystem::create_directories(dir);
  nlohmann::json pairs = nlohmann::json::array();
  for (int e2 = 0; e2 <= s.order2(); ++e2)
    if (s.coeff2(e2) != 0) pairs.push_back({e2, s.coeff2(e2).str()});
  nlohmann::json j{{"version", kVersion}, {"key", key}, {"pairs", pairs}};
  std::filesystem::path f = dir / (key_hash(key) + ".json");
  std::filesystem::path tmp = f;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump() << "\n";
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      return;  // cache writes are best-effort
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, f, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

inline qs::QSeries theta_series_cached(const lat::Lattice& l,
                                       const exact::QVec& offset, int order2,
                                       const std::filesystem::path& dir,
                                       const lat::EnumBudget& budget = {}) {
  std::string key = theta_key(l, offset, order2);
  if (auto hit = load_theta(dir, key, order2)) return *hit;
  qs::QSeries s = lat::theta_series(l, offset, order2, budget);
  store_theta(dir, key, s);
  return s;
}

struct GcResult {
  std::uintmax_t freed_bytes = 0;
  std::size_t removed = 0;
  std::vector<std::string> unreadable;  // reported, never deleted
};

// Remove cache entries whose version tag is stale; current-version and
// unreadable files are left in place.
inline GcResult cache_gc(const std::filesystem::path& dir) {
  GcResult res;
  if (!std::filesystem::is_directory(dir))
    throw std::invalid_argument("cache_gc: not a directory");
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json")
      continue;
    nlohmann::json j;
    std::ifstream in(entry.path());
    bool readable = bool(in);
    if (readable) {
      try {
        in >> j;
      } catch (const nlohmann::json::exception&) {
        readable = false;
      }
    }
    if (!readable || !j.is_object() || !j.contains("version") ||
        !j["version"].is_number_integer()) {
      res.unreadable.push_back(entry.path().filename().string());
      continue;
    }
    if (j["version"].get<int>() == kVersion) continue;
    std::uintmax_t sz = entry.file_size();
    std::error_code ec;
    if (std::filesystem::remove(entry.path(), ec)) {
      res.freed_bytes += sz;
      ++res.removed;
    }
  }
  return res;
}

}  // namespace vlplus::cache
