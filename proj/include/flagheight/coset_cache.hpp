#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "flagheight/rootsys.hpp"
#include "flagheight/weyl.hpp"

namespace flagheight {

/// On-disk cache of minimal coset representatives.
///
/// Layout: 8-byte magic "FLHCOSET", 8-byte FNV-1a hash of the payload
/// (little endian), then the payload: u32 format version, length-prefixed
/// library version and Cartan type strings, u32 theta count with one byte per
/// index, u32 record count, and one record per representative (u8 word length
/// followed by one byte per letter).
namespace coset_cache {

inline constexpr char kMagic[8] = {'F', 'L', 'H', 'C', 'O', 'S', 'E', 'T'};
inline constexpr std::uint32_t kFormatVersion = 1;

enum class Status { hit, missing, stale, corrupt };

struct Lookup {
  Status status = Status::missing;
  std::optional<CosetList> cosets;
  std::string detail;
};

std::string library_version();
/// File name for (type, theta), e.g. "B3_t2-3.cosets".
std::string file_name(const RootSystem& rs, const std::vector<std::size_t>& theta);

std::vector<std::uint8_t> encode(const RootSystem& rs, const CosetList& cosets,
                                 const std::string& version = library_version());
/// Decodes and validates a cache image against the expected key.
Lookup decode(const std::vector<std::uint8_t>& bytes, const RootSystem& rs, const std::vector<std::size_t>& theta,
              const std::string& version = library_version());

void write(const std::filesystem::path& file, const RootSystem& rs, const CosetList& cosets);
Lookup read(const std::filesystem::path& file, const RootSystem& rs, const std::vector<std::size_t>& theta);

/// Loads from `dir` when possible, otherwise enumerates and stores. Corrupt or
/// stale files produce a warning on `log` and are regenerated.
CosetList load_or_compute(const std::filesystem::path& dir, const RootSystem& rs, std::vector<std::size_t> theta,
                          std::uint64_t cap, std::ostream* log);

}  // namespace coset_cache
}  // namespace flagheight
