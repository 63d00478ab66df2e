#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "flagheight/coset_cache.hpp"

using namespace flagheight;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("flagheight_cache_test_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::vector<std::vector<int>> words(const CosetList& cl) {
  std::vector<std::vector<int>> w;
  for (const auto& e : cl.reps) w.push_back(e.word());
  return w;
}

}  // namespace

TEST_CASE("file names") {
  RootSystem b3(CartanSpec::parse("B3"));
  CHECK(coset_cache::file_name(b3, {1, 2}) == "B3_t2-3.cosets");
  CHECK(coset_cache::file_name(b3, {}) == "B3_t.cosets");
}

TEST_CASE("round trip in memory") {
  RootSystem a3(CartanSpec::parse("A3"));
  const CosetList cl = coset_representatives(a3, {});
  const auto bytes = coset_cache::encode(a3, cl);
  CHECK(std::equal(bytes.begin(), bytes.begin() + 8, coset_cache::kMagic));
  const auto lookup = coset_cache::decode(bytes, a3, {});
  REQUIRE(lookup.status == coset_cache::Status::hit);
  CHECK(words(*lookup.cosets) == words(cl));
  CHECK(coset_cache::encode(a3, *lookup.cosets) == bytes);
  for (std::size_t i = 0; i < cl.reps.size(); ++i) CHECK(lookup.cosets->reps[i].matrix() == cl.reps[i].matrix());
}

TEST_CASE("stale and mismatched keys miss") {
  RootSystem a3(CartanSpec::parse("A3"));
  const CosetList cl = coset_representatives(a3, {0});
  const auto old = coset_cache::encode(a3, cl, "0.0.1");
  CHECK(coset_cache::decode(old, a3, {0}).status == coset_cache::Status::stale);
  const auto bytes = coset_cache::encode(a3, cl);
  CHECK(coset_cache::decode(bytes, a3, {1}).status == coset_cache::Status::stale);
  CHECK(coset_cache::decode(bytes, RootSystem(CartanSpec::parse("B3")), {0}).status == coset_cache::Status::stale);
}

TEST_CASE("corruption is detected") {
  RootSystem a3(CartanSpec::parse("A3"));
  const auto bytes = coset_cache::encode(a3, coset_representatives(a3, {}));
  for (std::size_t pos : {std::size_t{0}, std::size_t{9}, bytes.size() / 2, bytes.size() - 1}) {
    auto bad = bytes;
    bad[pos] ^= 0x5a;
    CHECK(coset_cache::decode(bad, a3, {}).status == coset_cache::Status::corrupt);
  }
  auto truncated = bytes;
  truncated.resize(bytes.size() - 3);
  CHECK(coset_cache::decode(truncated, a3, {}).status == coset_cache::Status::corrupt);
  CHECK(coset_cache::decode({}, a3, {}).status == coset_cache::Status::corrupt);
}

TEST_CASE("files on disk") {
  TempDir dir;
  RootSystem d4(CartanSpec::parse("D4"));
  const std::vector<std::size_t> theta{1, 2, 3};
  std::ostringstream log;
  const CosetList first = coset_cache::load_or_compute(dir.path, d4, theta, kDefaultWeylCap, &log);
  CHECK(first.reps.size() == weyl_order(d4) / parabolic_weyl_order(d4, theta));
  CHECK(first.reps.size() == 8);
  const fs::path file = dir.path / coset_cache::file_name(d4, theta);
  REQUIRE(fs::exists(file));
  const auto lookup = coset_cache::read(file, d4, theta);
  REQUIRE(lookup.status == coset_cache::Status::hit);
  CHECK(lookup.cosets->reps.size() == 8);
  CHECK(log.str().empty());

  CHECK(coset_cache::read(dir.path / "nothing.cosets", d4, theta).status == coset_cache::Status::missing);

  {
    std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(20);
    f.put('\x7f');
  }
  CHECK(coset_cache::read(file, d4, theta).status == coset_cache::Status::corrupt);
  const CosetList again = coset_cache::load_or_compute(dir.path, d4, theta, kDefaultWeylCap, &log);
  CHECK(log.str().find("warning") != std::string::npos);
  CHECK(words(again) == words(first));
  CHECK(coset_cache::read(file, d4, theta).status == coset_cache::Status::hit);
}
