#pragma once

// Binary cache of a solved PNTable. All integers little-endian:
//
//   offset  size  field
//   0       8     magic "WYPNTBL\0"
//   8       4     format version (1)
//   12      1     variant 'K' or 'W'
//   13      3     zero
//   16      8     ell (K) or k (W)
//   24      8     bound B
//   32      8     payload word count W
//   40      8*W   classification bits, row-major over the half-board:
//                 rows y = 0..B, within a row x = 0..y; cell i is bit
//                 (i mod 64) of word (i div 64); 1 means P
//   40+8W   8     FNV-1a 64 checksum of every preceding byte

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wythoff/game.hpp"

namespace wythoff {

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace cache {

inline constexpr std::array<char, 8> kMagic{'W', 'Y', 'P', 'N', 'T', 'B', 'L', '\0'};
inline constexpr std::uint32_t kVersion = 1;

inline std::uint64_t fnv1a(const std::vector<std::uint8_t>& bytes, std::size_t len) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace detail {

inline void put(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

inline std::uint64_t get(const std::vector<std::uint8_t>& in, std::size_t& pos, int bytes) {
  if (pos + static_cast<std::size_t>(bytes) > in.size()) throw CacheError("cache: truncated file");
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(in[pos + i]) << (8 * i);
  pos += static_cast<std::size_t>(bytes);
  return v;
}

}  // namespace detail

inline std::vector<std::uint8_t> encode(const PNTable& t) {
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  detail::put(out, kVersion, 4);
  detail::put(out, static_cast<std::uint8_t>(t.spec().variant()), 1);
  detail::put(out, 0, 3);
  detail::put(out, t.spec().param(), 8);
  detail::put(out, t.bound(), 8);
  detail::put(out, t.raw_bits().size(), 8);
  for (auto w : t.raw_bits()) detail::put(out, w, 8);
  detail::put(out, fnv1a(out, out.size()), 8);
  return out;
}

inline PNTable decode(const std::vector<std::uint8_t>& in) {
  if (in.size() < 48 || !std::equal(kMagic.begin(), kMagic.end(), in.begin()))
    throw CacheError("cache: bad magic");
  std::size_t pos = kMagic.size();
  if (detail::get(in, pos, 4) != kVersion) throw CacheError("cache: unsupported format version");
  const auto variant = static_cast<char>(detail::get(in, pos, 1));
  if (detail::get(in, pos, 3) != 0) throw CacheError("cache: corrupt header");
  const auto param = detail::get(in, pos, 8);
  const auto bound = detail::get(in, pos, 8);
  const auto words = detail::get(in, pos, 8);
  if (bound > kMaxSolveBound) throw CacheError("cache: bound out of range");
  if (words != (PNTable::cells(bound) + 63) / 64) throw CacheError("cache: payload size does not match bound");
  if (in.size() != pos + 8 * words + 8) throw CacheError("cache: wrong file length");
  const std::size_t body = pos + 8 * words;
  std::size_t sum_pos = body;
  if (detail::get(in, sum_pos, 8) != fnv1a(in, body)) throw CacheError("cache: checksum mismatch");

  GameSpec spec = variant == 'K'   ? GameSpec::terminal(param)
                  : variant == 'W' ? GameSpec::blocking(param)
                                   : throw CacheError("cache: unknown variant");
  PNTable t(spec, bound);
  for (auto& w : t.raw_bits()) w = detail::get(in, pos, 8);
  return t;
}

inline void save(const PNTable& t, const std::string& path) {
  const auto bytes = encode(t);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::ios_base::failure("write failed for " + path);
}

inline PNTable load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode(bytes);
}

}  // namespace cache

/// Loads `path` when it holds a valid table for the same spec and bound,
/// otherwise solves and rewrites the cache.
inline PNTable solve_cached(const GameSpec& spec, nat bound, const std::string& path) {
  if (std::filesystem::exists(path)) {
    try {
      auto t = cache::load(path);
      if (t.spec() == spec && t.bound() == bound) return t;
    } catch (const CacheError&) {
      // stale or corrupt; fall through and rebuild
    }
  }
  auto t = solve(spec, bound);
  cache::save(t, path);
  return t;
}

}  // namespace wythoff
