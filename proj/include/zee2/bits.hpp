#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zee2 {

/// Largest supported coordinate arity. Group elements fit in one 32-bit mask.
inline constexpr int kMaxArity = 24;

/// Default seed for every randomized sweep; echoed in CLI output.
inline constexpr std::uint64_t kDefaultSeed = 1729;

inline int weight_of(std::uint32_t x) { return std::popcount(x); }

inline int parity_of(std::uint32_t x) { return std::popcount(x) & 1; }

/// Bit j of the result is x_0 + x_1 + ... + x_j (mod 2).
inline std::uint32_t prefix_parity(std::uint32_t x) {
  x ^= x << 1;
  x ^= x << 2;
  x ^= x << 4;
  x ^= x << 8;
  x ^= x << 16;
  return x;
}

inline std::uint32_t low_n_mask(int n) {
  return n >= 32 ? ~0u : ((std::uint32_t{1} << n) - 1);
}

/// Renders the low n bits with coordinate 1 (bit 0) leftmost: mask 3, n=5 -> "11000".
inline std::string to_bit_string(std::uint32_t x, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if ((x >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

/// Inverse of to_bit_string. Throws on characters other than 0/1.
inline std::uint32_t parse_bit_string(std::string_view s) {
  if (s.empty() || s.size() > static_cast<std::size_t>(kMaxArity))
    throw std::invalid_argument("bit string length out of range");
  std::uint32_t x = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      x |= std::uint32_t{1} << i;
    else if (s[i] != '0')
      throw std::invalid_argument("bit string must contain only 0/1");
  }
  return x;
}

/// Deterministic random source. All reductions avoid distribution classes so
/// that streams are reproducible across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform value in [0, bound), bound >= 1.
  std::uint32_t next_below(std::uint32_t bound) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(eng_()) * bound) >> 64);
  }

  std::uint32_t next_mask(int bits) {
    return static_cast<std::uint32_t>(eng_()) & low_n_mask(bits);
  }

  bool next_bit() { return (eng_() & 1) != 0; }

  /// Uniform in [lo, hi] inclusive.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    next_below(static_cast<std::uint32_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace zee2
