#include "flagheight/coset_cache.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>

namespace flagheight::coset_cache {

namespace {

std::uint64_t fnv1a(const std::uint8_t* data, std::size_t size) {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= data[i];
    h *= 1099511628211ULL;
  }
  return h;
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_string(std::vector<std::uint8_t>& out, const std::string& s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.insert(out.end(), s.begin(), s.end());
}

class Reader {
 public:
  Reader(const std::vector<std::uint8_t>& bytes, std::size_t pos) : bytes_(bytes), pos_(pos) {}

  bool u8(std::uint8_t& v) {
    if (pos_ >= bytes_.size()) return false;
    v = bytes_[pos_++];
    return true;
  }
  bool u32(std::uint32_t& v) {
    if (bytes_.size() - pos_ < 4 || pos_ > bytes_.size()) return false;
    v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes_[pos_++]) << (8 * i);
    return true;
  }
  bool string(std::string& s) {
    std::uint32_t n = 0;
    if (!u32(n) || bytes_.size() - pos_ < n) return false;
    s.assign(bytes_.begin() + static_cast<std::ptrdiff_t>(pos_), bytes_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
    pos_ += n;
    return true;
  }
  bool at_end() const { return pos_ == bytes_.size(); }

 private:
  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_;
};

std::vector<std::size_t> normalized(std::vector<std::size_t> theta) {
  std::sort(theta.begin(), theta.end());
  theta.erase(std::unique(theta.begin(), theta.end()), theta.end());
  return theta;
}

}  // namespace

std::string library_version() { return FLAGHEIGHT_VERSION; }

std::string file_name(const RootSystem& rs, const std::vector<std::size_t>& theta) {
  std::string name = rs.spec().to_string() + "_t";
  bool first = true;
  for (std::size_t i : normalized(theta)) {
    if (!first) name += "-";
    name += std::to_string(i + 1);
    first = false;
  }
  return name + ".cosets";
}

std::vector<std::uint8_t> encode(const RootSystem& rs, const CosetList& cosets, const std::string& version) {
  if (rs.rank() >= 256) throw std::length_error("coset cache supports rank < 256");
  std::vector<std::uint8_t> payload;
  put_u32(payload, kFormatVersion);
  put_string(payload, version);
  put_string(payload, rs.spec().to_string());
  const auto theta = normalized(cosets.theta);
  put_u32(payload, static_cast<std::uint32_t>(theta.size()));
  for (std::size_t i : theta) payload.push_back(static_cast<std::uint8_t>(i));
  put_u32(payload, static_cast<std::uint32_t>(cosets.reps.size()));
  for (const WeylElement& w : cosets.reps) {
    if (w.length() > 255) throw std::length_error("reduced word longer than 255 letters");
    payload.push_back(static_cast<std::uint8_t>(w.length()));
    for (int letter : w.word()) payload.push_back(static_cast<std::uint8_t>(letter));
  }
  std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
  const std::uint64_t hash = fnv1a(payload.data(), payload.size());
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(hash >> (8 * i)));
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Lookup decode(const std::vector<std::uint8_t>& bytes, const RootSystem& rs, const std::vector<std::size_t>& theta,
              const std::string& version) {
  auto corrupt = [](std::string why) { return Lookup{Status::corrupt, std::nullopt, std::move(why)}; };
  if (bytes.size() < 16 || std::memcmp(bytes.data(), kMagic, 8) != 0) return corrupt("bad magic");
  std::uint64_t stored = 0;
  for (int i = 0; i < 8; ++i) stored |= static_cast<std::uint64_t>(bytes[8 + i]) << (8 * i);
  if (stored != fnv1a(bytes.data() + 16, bytes.size() - 16)) return corrupt("content hash mismatch");

  Reader in(bytes, 16);
  std::uint32_t format = 0;
  std::string file_version, type;
  if (!in.u32(format) || !in.string(file_version) || !in.string(type)) return corrupt("truncated header");
  if (format != kFormatVersion || file_version != version)
    return {Status::stale, std::nullopt, "written by version " + file_version};
  const auto want_theta = normalized(theta);
  std::uint32_t theta_count = 0;
  if (!in.u32(theta_count)) return corrupt("truncated theta");
  std::vector<std::size_t> file_theta;
  for (std::uint32_t t = 0; t < theta_count; ++t) {
    std::uint8_t i = 0;
    if (!in.u8(i)) return corrupt("truncated theta");
    file_theta.push_back(i);
  }
  if (type != rs.spec().to_string() || file_theta != want_theta)
    return {Status::stale, std::nullopt, "key mismatch (" + type + ")"};

  std::uint32_t count = 0;
  if (!in.u32(count)) return corrupt("truncated record count");
  const std::uint64_t expected = weyl_order(rs) / parabolic_weyl_order(rs, want_theta);
  if (count != expected) return corrupt("record count " + std::to_string(count) + " != " + std::to_string(expected));
  CosetList list{want_theta, {}};
  list.reps.reserve(count);
  for (std::uint32_t r = 0; r < count; ++r) {
    std::uint8_t len = 0;
    if (!in.u8(len)) return corrupt("truncated record");
    std::vector<int> word(len);
    for (auto& letter : word) {
      std::uint8_t b = 0;
      if (!in.u8(b) || b >= rs.rank()) return corrupt("bad letter in record");
      letter = b;
    }
    list.reps.emplace_back(rs, std::move(word));
  }
  if (!in.at_end()) return corrupt("trailing bytes");
  return {Status::hit, std::move(list), {}};
}

void write(const std::filesystem::path& file, const RootSystem& rs, const CosetList& cosets) {
  const auto bytes = encode(rs, cosets);
  std::filesystem::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write coset cache " + tmp);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("cannot write coset cache " + tmp);
  }
  std::filesystem::rename(tmp, file);
}

Lookup read(const std::filesystem::path& file, const RootSystem& rs, const std::vector<std::size_t>& theta) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return {Status::missing, std::nullopt, "no file"};
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode(bytes, rs, theta);
}

CosetList load_or_compute(const std::filesystem::path& dir, const RootSystem& rs, std::vector<std::size_t> theta,
                          std::uint64_t cap, std::ostream* log) {
  theta = normalized(theta);
  const auto file = dir / file_name(rs, theta);
  Lookup hit = read(file, rs, theta);
  if (hit.status == Status::hit) return std::move(*hit.cosets);
  if (log && hit.status != Status::missing)
    *log << "warning: ignoring coset cache " << file.string() << ": " << hit.detail << "; recomputing\n";
  CosetList cosets = coset_representatives(rs, theta, cap);
  try {
    write(file, rs, cosets);
  } catch (const std::exception& e) {
    if (log) *log << "warning: could not store coset cache: " << e.what() << "\n";
  }
  return cosets;
}

}  // namespace flagheight::coset_cache
