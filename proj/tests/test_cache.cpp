#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "vlplus/cache.hpp"

using namespace vlplus;
using exact::QVec;
using exact::Rat;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("vlplus-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

lat::Lattice z2() {
  return lat::Lattice(lat::Frame{2, 1}, {{1, 0}, {0, 1}});
}

}  // namespace

TEST_CASE("theta results round-trip through the cache") {
  TempDir dir;
  lat::Lattice l = z2();
  QVec z(2, Rat(0));
  qs::QSeries direct = lat::theta_series(l, z, 6);
  qs::QSeries first = cache::theta_series_cached(l, z, 6, dir.path);
  CHECK(first == direct);
  // second call must be served from disk and agree byte-for-byte
  std::string key = cache::theta_key(l, z, 6);
  auto hit = cache::load_theta(dir.path, key, 6);
  REQUIRE(hit.has_value());
  CHECK(*hit == direct);
  qs::QSeries second = cache::theta_series_cached(l, z, 6, dir.path);
  CHECK(second == direct);
}

TEST_CASE("mismatched key or version misses instead of corrupting") {
  TempDir dir;
  lat::Lattice l(lat::Frame{2, 1}, {{2, 0}, {0, 2}});
  QVec odd{Rat(1), Rat(1)};
  cache::theta_series_cached(l, odd, 4, dir.path);
  CHECK_FALSE(cache::load_theta(dir.path, "someone else's key", 4).has_value());
  // offsets keep distinct entries
  QVec z(2, Rat(0));
  cache::theta_series_cached(l, z, 4, dir.path);
  CHECK(cache::load_theta(dir.path, cache::theta_key(l, odd, 4), 4)->coeff2(2) == 4);
  CHECK(cache::load_theta(dir.path, cache::theta_key(l, z, 4), 4)->coeff2(0) == 1);
}

TEST_CASE("gc removes only stale-version entries") {
  TempDir dir;
  CHECK(cache::cache_gc(dir.path).freed_bytes == 0);

  lat::Lattice l = z2();
  QVec z(2, Rat(0));
  cache::theta_series_cached(l, z, 4, dir.path);

  std::ofstream(dir.path / "stale.json")
      << "{\"version\": 0, \"key\": \"old\", \"pairs\": []}\n";
  std::ofstream(dir.path / "broken.json") << "not json at all\n";
  std::uintmax_t stale_size = std::filesystem::file_size(dir.path / "stale.json");

  auto res = cache::cache_gc(dir.path);
  CHECK(res.freed_bytes == stale_size);
  CHECK(res.removed == 1);
  CHECK(res.unreadable == std::vector<std::string>{"broken.json"});
  CHECK_FALSE(std::filesystem::exists(dir.path / "stale.json"));
  CHECK(std::filesystem::exists(dir.path / "broken.json"));
  // the current entry is untouched and still readable
  CHECK(cache::load_theta(dir.path, cache::theta_key(l, z, 4), 4).has_value());

  CHECK_THROWS_AS(cache::cache_gc(dir.path / "missing"), std::invalid_argument);
}
