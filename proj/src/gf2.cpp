#include "zee2/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace zee2 {

namespace {

void check_arity(int n) {
  if (n < 1 || n > kMaxArity) throw std::invalid_argument("arity out of range");
}

std::size_t word_count(std::uint64_t bit_count) {
  return static_cast<std::size_t>((bit_count + 63) / 64);
}

// In-place Moebius transform over the subset lattice of the low n bits.
// Self-inverse; converts truth table <-> ANF coefficient table.
void moebius_transform(std::vector<std::uint64_t>& v, int n) {
  static constexpr std::uint64_t kLowMask[6] = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
      0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};
  for (int i = 0; i < n && i < 6; ++i)
    for (auto& w : v) w ^= (w & kLowMask[i]) << (1 << i);
  for (int i = 6; i < n; ++i) {
    const std::size_t stride = std::size_t{1} << (i - 6);
    for (std::size_t base = 0; base < v.size(); base += 2 * stride)
      for (std::size_t j = 0; j < stride; ++j) v[base + stride + j] ^= v[base + j];
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Gl2Map

Gl2Map::Gl2Map(int n, std::vector<std::uint32_t> rows) : n_(n), rows_(std::move(rows)) {
  check_arity(n);
  if (rows_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("Gl2Map: wrong row count");
  for (std::uint32_t r : rows_)
    if (r & ~low_n_mask(n)) throw std::invalid_argument("Gl2Map: row bits outside arity");
  // Gaussian elimination to certify invertibility.
  std::vector<std::uint32_t> m = rows_;
  int rank = 0;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if ((m[static_cast<std::size_t>(r)] >> col) & 1) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
    for (int r = 0; r < n; ++r)
      if (r != rank && ((m[static_cast<std::size_t>(r)] >> col) & 1))
        m[static_cast<std::size_t>(r)] ^= m[static_cast<std::size_t>(rank)];
    ++rank;
  }
  if (rank != n) throw std::invalid_argument("Gl2Map: matrix is not invertible");
}

Gl2Map Gl2Map::identity(int n) {
  check_arity(n);
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = std::uint32_t{1} << i;
  return {n, std::move(rows)};
}

Gl2Map Gl2Map::inverse() const {
  // Gauss-Jordan on [M | I].
  std::vector<std::uint32_t> m = rows_;
  std::vector<std::uint32_t> inv = identity(n_).rows();
  int rank = 0;
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = rank; r < n_; ++r)
      if ((m[static_cast<std::size_t>(r)] >> col) & 1) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::logic_error("Gl2Map::inverse: singular");
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
    std::swap(inv[static_cast<std::size_t>(pivot)], inv[static_cast<std::size_t>(rank)]);
    for (int r = 0; r < n_; ++r)
      if (r != rank && ((m[static_cast<std::size_t>(r)] >> col) & 1)) {
        m[static_cast<std::size_t>(r)] ^= m[static_cast<std::size_t>(rank)];
        inv[static_cast<std::size_t>(r)] ^= inv[static_cast<std::size_t>(rank)];
      }
    ++rank;
  }
  // Rows are now a permuted identity; un-permute.
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n_));
  for (int r = 0; r < n_; ++r) {
    const int col = std::countr_zero(m[static_cast<std::size_t>(r)]);
    out[static_cast<std::size_t>(col)] = inv[static_cast<std::size_t>(r)];
  }
  return {n_, std::move(out)};
}

// ---------------------------------------------------------------------------
// Cochain1

Cochain1::Cochain1(int n) : n_(n) {
  check_arity(n);
  bits_.assign(word_count(std::uint64_t{1} << n), 0);
}

void Cochain1::set(std::uint32_t x, int v) {
  const std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if (v & 1)
    bits_[x >> 6] |= bit;
  else
    bits_[x >> 6] &= ~bit;
}

bool Cochain1::is_zero() const {
  for (std::uint64_t w : bits_)
    if (w) return false;
  return true;
}

Cochain1 Cochain1::operator^(const Cochain1& o) const {
  if (n_ != o.n_) throw std::invalid_argument("Cochain1: arity mismatch");
  Cochain1 r(n_);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] ^ o.bits_[i];
  return r;
}

// ---------------------------------------------------------------------------
// Cochain2

Cochain2 Cochain2::dense_zero(int n) {
  check_arity(n);
  if (n > kDenseArityCap) throw std::invalid_argument("Cochain2: arity too large for a dense table");
  return {n, std::vector<std::uint64_t>(word_count(std::uint64_t{1} << (2 * n)), 0), nullptr};
}

Cochain2 Cochain2::dense_from_rows(int n, std::vector<std::uint64_t> rows) {
  check_arity(n);
  if (n > kDenseArityCap) throw std::invalid_argument("Cochain2: arity too large for a dense table");
  if (rows.size() != word_count(std::uint64_t{1} << (2 * n)))
    throw std::invalid_argument("Cochain2: wrong word count");
  return {n, std::move(rows), nullptr};
}

Cochain2 Cochain2::lazy(int n, std::function<int(std::uint32_t, std::uint32_t)> f) {
  check_arity(n);
  return {n, {}, std::move(f)};
}

void Cochain2::flip(std::uint32_t x, std::uint32_t y) {
  if (!is_dense()) throw std::logic_error("Cochain2::flip on evaluator-backed cochain");
  const std::uint64_t i = (static_cast<std::uint64_t>(x) << n_) | y;
  bits_[i >> 6] ^= std::uint64_t{1} << (i & 63);
}

bool Cochain2::is_zero() const {
  if (is_dense()) {
    for (std::uint64_t w : bits_)
      if (w) return false;
    return true;
  }
  const std::uint32_t size = std::uint32_t{1} << n_;
  for (std::uint32_t x = 0; x < size; ++x)
    for (std::uint32_t y = 0; y < size; ++y)
      if ((*this)(x, y)) return false;
  return true;
}

bool Cochain2::equals_dense(const Cochain2& o) const {
  if (n_ != o.n_) return false;
  if (is_dense() && o.is_dense()) return bits_ == o.bits_;
  const std::uint32_t size = std::uint32_t{1} << n_;
  for (std::uint32_t x = 0; x < size; ++x)
    for (std::uint32_t y = 0; y < size; ++y)
      if ((*this)(x, y) != o(x, y)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// ANF

bool monomial_before(std::uint32_t a, std::uint32_t b) {
  const int da = std::popcount(a), db = std::popcount(b);
  if (da != db) return da > db;
  // Lexicographic on increasing index tuples: compare lowest set bits first.
  std::uint32_t x = a, y = b;
  while (x && y) {
    const int i = std::countr_zero(x), j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return false;
}

std::string monomial_str(std::uint32_t mono) {
  if (mono == 0) return "1";
  std::string s;
  for (std::uint32_t m = mono; m; m &= m - 1) {
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(std::countr_zero(m) + 1);
  }
  return s;
}

int AnfPoly::degree() const {
  int d = -1;
  for (std::uint32_t m : monomials) d = std::max(d, std::popcount(m));
  return d;
}

int AnfPoly::eval(std::uint32_t x) const {
  int v = 0;
  for (std::uint32_t m : monomials) v ^= ((x & m) == m);
  return v;
}

Cochain1 AnfPoly::truth_table() const {
  Cochain1 t(n);
  for (std::uint32_t m : monomials) t.flip(m);
  moebius_transform(t.words(), n);
  return t;
}

std::string AnfPoly::str() const {
  if (monomials.empty()) return "0";
  std::string s;
  for (std::uint32_t m : monomials) {
    if (!s.empty()) s += " + ";
    s += monomial_str(m);
  }
  return s;
}

AnfPoly anf(const Cochain1& t) {
  std::vector<std::uint64_t> v = t.words();
  moebius_transform(v, t.arity());
  AnfPoly p;
  p.n = t.arity();
  const std::uint64_t size = t.domain_size();
  for (std::uint64_t m = 0; m < size; ++m)
    if ((v[m >> 6] >> (m & 63)) & 1) p.monomials.push_back(static_cast<std::uint32_t>(m));
  std::sort(p.monomials.begin(), p.monomials.end(), monomial_before);
  return p;
}

// ---------------------------------------------------------------------------
// CubicPoly

CubicPoly::CubicPoly(int n) : n_(n) { check_arity(n); }

CubicPoly CubicPoly::from_monomials(int n, std::vector<std::uint32_t> monos) {
  CubicPoly p(n);
  for (std::uint32_t m : monos) p.toggle(m);
  return p;
}

CubicPoly CubicPoly::from_anf(const AnfPoly& a) {
  CubicPoly p(a.n);
  for (std::uint32_t m : a.monomials) p.toggle(m);
  return p;
}

int CubicPoly::degree() const {
  int d = 0;
  for (std::uint32_t m : monos_) d = std::max(d, std::popcount(m));
  return d;
}

void CubicPoly::toggle(std::uint32_t mono) {
  const int d = std::popcount(mono);
  if (d < 1 || d > 3) throw std::invalid_argument("CubicPoly: monomial degree must be 1..3");
  if (mono & ~low_n_mask(n_)) throw std::invalid_argument("CubicPoly: monomial outside arity");
  auto it = std::lower_bound(monos_.begin(), monos_.end(), mono, monomial_before);
  if (it != monos_.end() && *it == mono)
    monos_.erase(it);
  else
    monos_.insert(it, mono);
}

int CubicPoly::eval(std::uint32_t x) const {
  int v = 0;
  for (std::uint32_t m : monos_) v ^= ((x & m) == m);
  return v;
}

Cochain1 CubicPoly::truth_table() const {
  Cochain1 t(n_);
  for (std::uint32_t m : monos_) t.flip(m);
  moebius_transform(t.words(), n_);
  return t;
}

std::string CubicPoly::str() const {
  AnfPoly p;
  p.n = n_;
  p.monomials = monos_;
  return p.str();
}

// ---------------------------------------------------------------------------
// Coboundary-type operators

Cochain2 delta1(const Cochain1& b) {
  const int n = b.arity();
  if (n <= Cochain2::kDenseArityCap) {
    Cochain2 r = Cochain2::dense_zero(n);
    const std::uint32_t size = std::uint32_t{1} << n;
    for (std::uint32_t x = 0; x < size; ++x)
      for (std::uint32_t y = 0; y < size; ++y)
        if (b(x ^ y) ^ b(x) ^ b(y)) r.flip(x, y);
    return r;
  }
  auto bp = std::make_shared<const Cochain1>(b);
  return Cochain2::lazy(n, [bp](std::uint32_t x, std::uint32_t y) {
    return (*bp)(x ^ y) ^ (*bp)(x) ^ (*bp)(y);
  });
}

Cochain3 delta2(const Cochain2& f) {
  auto fp = std::make_shared<const Cochain2>(f);
  return {f.arity(), [fp](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
            return (*fp)(y, z) ^ (*fp)(x ^ y, z) ^ (*fp)(x, y ^ z) ^ (*fp)(x, y);
          }};
}

namespace {

template <class A>
Cochain3 polarize2(int n, A a) {
  return {n, [a](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
            return a(x ^ y ^ z) ^ a(x ^ y) ^ a(x ^ z) ^ a(y ^ z) ^ a(x) ^ a(y) ^ a(z);
          }};
}

template <class A>
Cochain4 polarize3(int n, A a) {
  // Full polarization over all argument subsets. The a(0) term only matters
  // for inputs with a nonzero constant part; it makes "vanishes identically
  // iff degree <= 3" hold on arbitrary truth tables.
  return {n, [a](std::uint32_t x, std::uint32_t y, std::uint32_t z, std::uint32_t t) {
            int v = a(x ^ y ^ z ^ t);
            v ^= a(x ^ y ^ z) ^ a(x ^ y ^ t) ^ a(x ^ z ^ t) ^ a(y ^ z ^ t);
            v ^= a(x ^ y) ^ a(x ^ z) ^ a(x ^ t) ^ a(y ^ z) ^ a(y ^ t) ^ a(z ^ t);
            v ^= a(x) ^ a(y) ^ a(z) ^ a(t);
            v ^= a(0);
            return v;
          }};
}

}  // namespace

Cochain3 delta2(const Cochain1& a) {
  auto ap = std::make_shared<const Cochain1>(a);
  return polarize2(a.arity(), [ap](std::uint32_t x) { return (*ap)(x); });
}

Cochain3 delta2(const CubicPoly& a) {
  auto ap = std::make_shared<const CubicPoly>(a);
  return polarize2(a.arity(), [ap](std::uint32_t x) { return ap->eval(x); });
}

Cochain4 delta3(const Cochain1& a) {
  auto ap = std::make_shared<const Cochain1>(a);
  return polarize3(a.arity(), [ap](std::uint32_t x) { return (*ap)(x); });
}

Cochain4 delta3(const CubicPoly& a) {
  auto ap = std::make_shared<const CubicPoly>(a);
  return polarize3(a.arity(), [ap](std::uint32_t x) { return ap->eval(x); });
}

Cochain3 linearity_defect_first(const Cochain2& b) {
  auto bp = std::make_shared<const Cochain2>(b);
  return {b.arity(), [bp](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
            return (*bp)(x ^ y, z) ^ (*bp)(x, z) ^ (*bp)(y, z);
          }};
}

Cochain3 linearity_defect_second(const Cochain2& b) {
  auto bp = std::make_shared<const Cochain2>(b);
  return {b.arity(), [bp](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
            return (*bp)(x, y ^ z) ^ (*bp)(x, y) ^ (*bp)(x, z);
          }};
}

}  // namespace zee2
