#include "zee2/code_loop.hpp"

#include <array>
#include <stdexcept>

#include "zee2/parallel.hpp"

namespace zee2 {

// ---------------------------------------------------------------------------
// BinaryCode

BinaryCode::BinaryCode(int length, std::vector<std::uint32_t> generators)
    : length_(length), generators_(std::move(generators)) {
  if (length < 1 || length > 32) throw std::invalid_argument("BinaryCode: length out of range");
  if (generators_.size() > 24) throw std::invalid_argument("BinaryCode: dimension out of range");
  const std::uint32_t mask = length >= 32 ? ~0u : ((std::uint32_t{1} << length) - 1);
  for (std::uint32_t g : generators_)
    if (g & ~mask) throw std::invalid_argument("BinaryCode: generator bits outside length");
  // Independence over Z_2.
  std::vector<std::uint32_t> m = generators_;
  int rank = 0;
  for (int col = 0; col < length && rank < static_cast<int>(m.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if ((m[static_cast<std::size_t>(r)] >> col) & 1) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
    for (int r = 0; r < static_cast<int>(m.size()); ++r)
      if (r != rank && ((m[static_cast<std::size_t>(r)] >> col) & 1))
        m[static_cast<std::size_t>(r)] ^= m[static_cast<std::size_t>(rank)];
    ++rank;
  }
  if (rank != static_cast<int>(m.size()))
    throw std::invalid_argument("BinaryCode: generators are linearly dependent");
}

std::uint32_t BinaryCode::encode(std::uint32_t x) const {
  if (x & ~low_n_mask(dimension()))
    throw std::invalid_argument("encode: coordinate bits outside dimension");
  std::uint32_t w = 0;
  for (std::uint32_t m = x; m; m &= m - 1)
    w ^= generators_[static_cast<std::size_t>(std::countr_zero(m))];
  return w;
}

std::uint32_t BinaryCode::encode(const GroupElement& x) const {
  if (x.arity() != dimension()) throw std::invalid_argument("encode: arity mismatch");
  return encode(x.bits());
}

bool BinaryCode::is_doubly_even() const {
  if (dimension() > 16) throw std::invalid_argument("is_doubly_even: dimension above 16");
  std::uint32_t cw = 0;
  // Gray-code walk over all codewords.
  const std::uint32_t count = std::uint32_t{1} << dimension();
  for (std::uint32_t i = 1; i < count; ++i) {
    cw ^= generators_[static_cast<std::size_t>(std::countr_zero(i))];
    if (std::popcount(cw) % 4 != 0) return false;
  }
  return true;
}

std::map<int, long> BinaryCode::weight_distribution() const {
  if (dimension() > 16) throw std::invalid_argument("weight_distribution: dimension above 16");
  std::map<int, long> dist;
  std::uint32_t cw = 0;
  dist[0]++;
  const std::uint32_t count = std::uint32_t{1} << dimension();
  for (std::uint32_t i = 1; i < count; ++i) {
    cw ^= generators_[static_cast<std::size_t>(std::countr_zero(i))];
    dist[std::popcount(cw)]++;
  }
  return dist;
}

// ---------------------------------------------------------------------------
// Golay code

BinaryCode golay_code() {
  // Identity left block (columns 1..12), printed right block (columns 13..24).
  static constexpr std::array<const char*, 12> kRightBlock = {
      "101000111011",
      "110100011101",
      "011010001111",
      "101101000111",
      "110110100011",
      "111011010001",
      "011101101001",
      "001110110101",
      "000111011011",
      "100011101101",
      "010001110111",
      "111111111110",
  };
  std::vector<std::uint32_t> rows;
  rows.reserve(12);
  for (int i = 0; i < 12; ++i) {
    const std::uint32_t right = parse_bit_string(kRightBlock[static_cast<std::size_t>(i)]);
    rows.push_back((std::uint32_t{1} << i) | (right << 12));
  }
  // Transcription self-checks. Distinct octads meet in at most 4 points, so
  // the pairwise condition among rows 1..11 is |l_i & l_j| = 4, equivalently
  // weight 8 of the sum; commutation in the loop only needs |l_i & l_j| = 0
  // mod 4.
  for (int i = 0; i < 11; ++i)
    if (std::popcount(rows[static_cast<std::size_t>(i)]) != 8)
      throw std::logic_error("golay_code: row weight is not 8");
  if (std::popcount(rows[11]) != 12) throw std::logic_error("golay_code: last row weight is not 12");
  for (int i = 0; i < 11; ++i)
    for (int j = i + 1; j < 11; ++j) {
      const std::uint32_t a = rows[static_cast<std::size_t>(i)],
                          b = rows[static_cast<std::size_t>(j)];
      if (std::popcount(a & b) != 4 || std::popcount(a ^ b) != 8)
        throw std::logic_error("golay_code: pairwise row intersections are off");
    }
  for (int i = 0; i < 11; ++i)
    if (std::popcount(rows[11] & rows[static_cast<std::size_t>(i)]) != 6)
      throw std::logic_error("golay_code: intersection with the last row is not 6");
  return BinaryCode(24, std::move(rows));
}

// ---------------------------------------------------------------------------
// Parker loop

namespace {

CubicPoly build_parker_poly() {
  CubicPoly a(12);
  // Indices of x_{i+k} are taken modulo 11 with representatives 1..11.
  const auto wrap = [](int j) { return (j - 1) % 11 + 1; };
  const auto bit = [](int i) { return std::uint32_t{1} << (i - 1); };
  for (int i = 1; i <= 11; ++i) {
    for (int k : {5, 8, 9}) a.toggle(bit(i) | bit(wrap(i + 1)) | bit(wrap(i + k)));
    for (int k : {6, 8}) a.toggle(bit(i) | bit(wrap(i + 2)) | bit(wrap(i + k)));
  }
  for (int i = 1; i <= 11; ++i) a.toggle(bit(12) | bit(i));
  for (int i = 1; i <= 11; ++i)
    for (int j = i + 1; j <= 11; ++j) a.toggle(bit(12) | bit(i) | bit(j));
  return a;
}

}  // namespace

const CubicPoly& parker_alpha_poly() {
  static const CubicPoly poly = build_parker_poly();
  return poly;
}

int parker_alpha(std::uint32_t x) { return parker_alpha_poly().eval(x); }

int parker_alpha(const GroupElement& x) {
  if (x.arity() != 12) throw std::invalid_argument("parker_alpha: arity must be 12");
  return parker_alpha(x.bits());
}

LoopSpec parker_factor_set() {
  Cochain2 table = fakset_cochain(parker_alpha_poly());
  // Signature (11, 1): add the diagonal term x_12 y_12.
  const std::uint32_t bit12 = std::uint32_t{1} << 11;
  for (std::uint32_t x = bit12; x < (std::uint32_t{1} << 12); ++x)
    for (std::uint32_t y = bit12; y < (std::uint32_t{1} << 12); ++y) table.flip(x, y);
  return {TwistSpec::custom(std::move(table))};
}

// ---------------------------------------------------------------------------
// Factor-set axioms

FactorSetReport verify_factor_set(const BinaryCode& code, const TwistSpec& f,
                                  std::uint64_t seed, long random_triples, int threads) {
  const int k = code.dimension();
  if (k == 0) return {true, true, true, std::nullopt, 0, 0};
  if (f.arity() != k) throw std::invalid_argument("verify_factor_set: arity mismatch");
  if (k > 16) throw std::invalid_argument("verify_factor_set: dimension above 16");
  const std::uint32_t count = std::uint32_t{1} << k;

  std::vector<std::uint32_t> cw(count);
  for (std::uint32_t x = 0; x < count; ++x)
    cw[x] = x ? cw[x & (x - 1)] ^ code.generators()[static_cast<std::size_t>(
                                      std::countr_zero(x & (0u - x)))]
              : 0;

  FactorSetReport report;
  auto record = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    if (!report.first_failure) report.first_failure = FactorSetWitness{x, y, z};
  };

  report.diagonal_ok = true;
  for (std::uint32_t x = 0; x < count; ++x)
    if (f.f(x, x) != ((std::popcount(cw[x]) >> 2) & 1)) {
      report.diagonal_ok = false;
      record(x, x, 0);
      break;
    }

  std::uint64_t witness = 0;
  report.symmetrization_ok = parallel_all(
      0, static_cast<std::uint64_t>(count) * count, threads,
      [&](std::uint64_t i) {
        const auto x = static_cast<std::uint32_t>(i >> k);
        const auto y = static_cast<std::uint32_t>(i & (count - 1));
        return (f.f(x, y) ^ f.f(y, x)) == ((std::popcount(cw[x] & cw[y]) >> 1) & 1);
      },
      &witness);
  report.pairs_checked = static_cast<std::uint64_t>(count) * count;
  if (!report.symmetrization_ok)
    record(static_cast<std::uint32_t>(witness >> k),
           static_cast<std::uint32_t>(witness & (count - 1)), 0);

  report.coboundary_ok = true;
  auto triple_ok = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    return f.phi(x, y, z) == (std::popcount(cw[x] & cw[y] & cw[z]) & 1);
  };
  for (int i = 0; i < k && report.coboundary_ok; ++i)
    for (int j = i + 1; j < k && report.coboundary_ok; ++j)
      for (int l = j + 1; l < k; ++l) {
        const std::uint32_t x = std::uint32_t{1} << i, y = std::uint32_t{1} << j,
                            z = std::uint32_t{1} << l;
        ++report.triples_checked;
        if (!triple_ok(x, y, z)) {
          report.coboundary_ok = false;
          record(x, y, z);
          break;
        }
      }
  Rng rng(seed);
  for (long t = 0; t < random_triples && report.coboundary_ok; ++t) {
    const std::uint32_t x = rng.next_mask(k), y = rng.next_mask(k), z = rng.next_mask(k);
    ++report.triples_checked;
    if (!triple_ok(x, y, z)) {
      report.coboundary_ok = false;
      record(x, y, z);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Moufang identity

MoufangResult moufang_check(const LoopSpec& loop, std::uint64_t seed, long trials) {
  const TwistSpec& f = loop.twist;
  const int n = loop.arity();
  MoufangResult result;
  result.ok = true;
  // u (v (u w)) = ((u v) u) w on unsigned basis triples; both sides land on
  // the same grade, so only the twist exponents must agree.
  auto holds = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    const int lhs = f.f(x, z) ^ f.f(y, x ^ z) ^ f.f(x, x ^ y ^ z);
    const int rhs = f.f(x, y) ^ f.f(x ^ y, x) ^ f.f(y, z);
    return lhs == rhs;
  };
  if (n <= 5) {
    const std::uint32_t size = std::uint32_t{1} << n;
    for (std::uint32_t x = 0; x < size; ++x)
      for (std::uint32_t y = 0; y < size; ++y)
        for (std::uint32_t z = 0; z < size; ++z) {
          ++result.triples_checked;
          if (!holds(x, y, z)) {
            result.ok = false;
            result.witness = FactorSetWitness{x, y, z};
            return result;
          }
        }
    return result;
  }
  Rng rng(seed);
  for (long t = 0; t < trials; ++t) {
    const std::uint32_t x = rng.next_mask(n), y = rng.next_mask(n), z = rng.next_mask(n);
    ++result.triples_checked;
    if (!holds(x, y, z)) {
      result.ok = false;
      result.witness = FactorSetWitness{x, y, z};
      return result;
    }
  }
  return result;
}

}  // namespace zee2
