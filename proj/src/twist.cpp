#include "zee2/twist.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace zee2 {

std::string family_name(Family f) {
  switch (f) {
    case Family::O: return "O";
    case Family::M: return "M";
    case Family::Cl: return "Cl";
    case Family::Custom: return "Custom";
  }
  return "?";
}

Family family_from_name(std::string_view s) {
  if (s == "O") return Family::O;
  if (s == "M") return Family::M;
  if (s == "Cl") return Family::Cl;
  if (s == "Custom") return Family::Custom;
  throw std::invalid_argument("unknown family: " + std::string(s));
}

// ---------------------------------------------------------------------------
// TwistSpec

TwistSpec::TwistSpec(Family family, int n, int p) : family_(family), n_(n), p_(p) {}

TwistSpec TwistSpec::make(Family family, int n, int p) {
  if (family == Family::Custom)
    throw std::invalid_argument("make_twist: use TwistSpec::custom for custom tables");
  const int min_n = (family == Family::Cl) ? 1 : 3;
  if (n < min_n || n > kMaxArity)
    throw std::invalid_argument("make_twist: arity out of range for family " + family_name(family));
  if (p < 0 || p > n) throw std::invalid_argument("make_twist: signature out of range");
  TwistSpec spec(family, n, p);
  // The closed forms give u_i^2 = -1 (O, Cl) resp. +1 (M) for every i. The
  // diagonal correction sum_{i in mask} x_i y_i flips exactly the squares
  // needed so that u_i^2 = +1 iff i <= p.
  if (family == Family::M)
    spec.sig_mask_ = low_n_mask(n) & ~low_n_mask(p);
  else
    spec.sig_mask_ = low_n_mask(p);
  spec.build_tables();
  return spec;
}

TwistSpec TwistSpec::custom(Cochain2 f) {
  if (!f.is_dense())
    throw std::invalid_argument("custom twist requires a dense table");
  const std::uint32_t size = std::uint32_t{1} << f.arity();
  for (std::uint32_t x = 0; x < size; ++x)
    if (f(x, 0) || f(0, x))
      throw std::invalid_argument("custom twist must satisfy f(0,.) = f(.,0) = 0");
  TwistSpec spec(Family::Custom, f.arity(), 0);
  spec.f_table_ = std::make_shared<const Cochain2>(std::move(f));
  spec.build_tables();
  return spec;
}

TwistSpec TwistSpec::from_alpha(const CubicPoly& alpha) {
  return custom(fakset_cochain(alpha));
}

TwistSpec TwistSpec::pullback(const Gl2Map& map) const {
  if (map.arity() != n_) throw std::invalid_argument("pullback: arity mismatch");
  if (n_ > Cochain2::kDenseArityCap)
    throw std::invalid_argument("pullback: arity too large");
  Cochain2 table = Cochain2::dense(
      n_, [&](std::uint32_t x, std::uint32_t y) { return f(map.apply(x), map.apply(y)); });
  return custom(std::move(table));
}

int TwistSpec::closed_f(std::uint32_t x, std::uint32_t y) const {
  int v = parity_of(x & y & sig_mask_);
  switch (family_) {
    case Family::O: return v ^ twist_octonion(x, y);
    case Family::M: return v ^ twist_mseries(x, y);
    case Family::Cl: return v ^ twist_clifford(x, y);
    case Family::Custom: break;
  }
  throw std::logic_error("custom twist without table");
}

void TwistSpec::build_tables() {
  const std::uint32_t size = std::uint32_t{1} << n_;
  if (n_ <= Cochain2::kDenseArityCap && !f_table_) {
    Cochain2 t = Cochain2::dense_zero(n_);
    for (std::uint32_t x = 0; x < size; ++x)
      for (std::uint32_t y = 0; y < size; ++y)
        if (closed_f(x, y)) t.flip(x, y);
    f_table_ = std::make_shared<const Cochain2>(std::move(t));
  }
  if (n_ <= Cochain2::kDenseArityCap) {
    Cochain2 b = Cochain2::dense_zero(n_);
    const Cochain2& ft = *f_table_;
    for (std::uint32_t x = 0; x < size; ++x)
      for (std::uint32_t y = 0; y < x; ++y)
        if (ft(x, y) ^ ft(y, x)) {
          b.flip(x, y);
          b.flip(y, x);
        }
    beta_table_ = std::make_shared<const Cochain2>(std::move(b));
  }
  if (n_ <= kPhiTableArityCap) {
    const std::uint64_t bits = std::uint64_t{1} << (3 * n_);
    phi_table_.assign(static_cast<std::size_t>((bits + 63) / 64), 0);
    const Cochain2& ft = *f_table_;
    std::uint64_t i = 0;
    for (std::uint32_t x = 0; x < size; ++x)
      for (std::uint32_t y = 0; y < size; ++y) {
        const int fxy = ft(x, y);
        for (std::uint32_t z = 0; z < size; ++z, ++i) {
          const int v = ft(y, z) ^ ft(x ^ y, z) ^ ft(x, y ^ z) ^ fxy;
          phi_table_[i >> 6] |= static_cast<std::uint64_t>(v) << (i & 63);
        }
      }
  }
}

Cochain2 TwistSpec::beta_cochain() const {
  if (beta_table_) return *beta_table_;
  TwistSpec copy = *this;
  return Cochain2::lazy(n_, [copy](std::uint32_t x, std::uint32_t y) { return copy.beta(x, y); });
}

Cochain2 TwistSpec::f_cochain() const {
  if (f_table_) return *f_table_;
  TwistSpec copy = *this;
  return Cochain2::lazy(n_, [copy](std::uint32_t x, std::uint32_t y) { return copy.f(x, y); });
}

bool TwistSpec::operator==(const TwistSpec& o) const {
  if (n_ != o.n_) return false;
  const std::uint32_t size = std::uint32_t{1} << n_;
  for (std::uint32_t x = 0; x < size; ++x)
    for (std::uint32_t y = 0; y < size; ++y)
      if (f(x, y) != o.f(x, y)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Generating functions

GeneratingFunction closed_alpha(Family family, int n) {
  if (family == Family::Custom) throw std::invalid_argument("closed_alpha: no closed form");
  CubicPoly a(n);
  const bool triples = (family == Family::O || family == Family::M);
  const bool pairs = (family == Family::O || family == Family::Cl);
  for (int i = 0; i < n; ++i) a.toggle(std::uint32_t{1} << i);
  if (pairs)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) a.toggle((std::uint32_t{1} << i) | (std::uint32_t{1} << j));
  if (triples)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          a.toggle((std::uint32_t{1} << i) | (std::uint32_t{1} << j) | (std::uint32_t{1} << k));
  return {std::move(a), true};
}

namespace {

// Certifies phi(x,y,z) = phi(y,x,z) = phi(x,z,y); throws with a witness.
void certify_phi_symmetric(const TwistSpec& spec, std::uint64_t seed, int samples) {
  const int n = spec.arity();
  auto check = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    const int v = spec.phi(x, y, z);
    if (v != spec.phi(y, x, z) || v != spec.phi(x, z, y))
      throw SymmetryError(x, y, z,
                          "association bit is not symmetric; no generating function exists");
  };
  if (n <= 6) {
    const std::uint32_t size = std::uint32_t{1} << n;
    for (std::uint32_t x = 0; x < size; ++x)
      for (std::uint32_t y = 0; y < size; ++y)
        for (std::uint32_t z = 0; z < size; ++z) check(x, y, z);
    return;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        check(std::uint32_t{1} << i, std::uint32_t{1} << j, std::uint32_t{1} << k);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s)
    check(rng.next_mask(n), rng.next_mask(n), rng.next_mask(n));
}

}  // namespace

GeneratingFunction recover_alpha(const TwistSpec& spec, std::uint64_t seed, int samples) {
  const int n = spec.arity();
  certify_phi_symmetric(spec, seed, samples);

  // Weight induction: alpha(0) = 0, alpha(e_i) = 1, and for |y| >= 2 descend
  // along the lowest set bit: alpha(y) = beta(y + e_i, e_i) + alpha(y + e_i) + 1.
  const std::uint32_t size_mask = low_n_mask(n);
  Cochain1 table(n);
  for (int i = 0; i < n; ++i) table.set(std::uint32_t{1} << i, 1);
  for (std::uint32_t y = 1; y <= size_mask; ++y) {
    if (std::popcount(y) < 2) continue;
    const std::uint32_t e = y & (0u - y);
    const std::uint32_t x = y ^ e;
    table.set(y, spec.beta(x, e) ^ table(x) ^ 1);
  }
  // Path independence: every other descent bit must agree.
  for (std::uint32_t y = 1; y <= size_mask; ++y) {
    if (std::popcount(y) < 2) continue;
    for (std::uint32_t m = y; m; m &= m - 1) {
      const std::uint32_t e = m & (0u - m);
      const std::uint32_t x = y ^ e;
      if (table(y) != (spec.beta(x, e) ^ table(x) ^ 1))
        throw ConsistencyError(y, "generating-function recovery is path-dependent");
    }
  }
  // delta(alpha) = beta on all pairs.
  for (std::uint32_t x = 0; x <= size_mask; ++x)
    for (std::uint32_t y = 0; y <= size_mask; ++y)
      if ((table(x ^ y) ^ table(x) ^ table(y)) != spec.beta(x, y))
        throw ConsistencyError(x ^ y, "recovered alpha does not reproduce beta");
  // delta2(alpha) = phi: exhaustive when feasible, sampled otherwise.
  auto phi_matches = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    const int lhs = table(x ^ y ^ z) ^ table(x ^ y) ^ table(x ^ z) ^ table(y ^ z) ^ table(x) ^
                    table(y) ^ table(z);
    return lhs == spec.phi(x, y, z);
  };
  if (n <= 8) {
    for (std::uint32_t x = 0; x <= size_mask; ++x)
      for (std::uint32_t y = 0; y <= size_mask; ++y)
        for (std::uint32_t z = 0; z <= size_mask; ++z)
          if (!phi_matches(x, y, z))
            throw ConsistencyError(x, "recovered alpha does not reproduce phi");
  } else {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (int s = 0; s < samples; ++s)
      if (!phi_matches(rng.next_mask(n), rng.next_mask(n), rng.next_mask(n)))
        throw ConsistencyError(0, "recovered alpha does not reproduce phi");
  }

  AnfPoly p = anf(table);
  if (p.degree() > 3)
    throw ConsistencyError(0, "recovered alpha has degree above 3");
  return {CubicPoly::from_anf(p), true};
}

// ---------------------------------------------------------------------------
// Monomial-wise twist of a cubic polynomial

Cochain2 fakset_cochain(const CubicPoly& alpha) {
  const int n = alpha.arity();
  if (n > Cochain2::kDenseArityCap)
    throw std::invalid_argument("fakset_cochain: arity too large for a dense table");
  // Expand each alpha-monomial into (A, B) pairs meaning x^A y^B.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> terms;
  for (std::uint32_t m : alpha.monomials()) {
    switch (std::popcount(m)) {
      case 3: {
        std::uint32_t idx[3];
        std::uint32_t t = m;
        for (int a = 0; a < 3; ++a, t &= t - 1) idx[a] = t & (0u - t);
        terms.emplace_back(idx[0] | idx[1], idx[2]);
        terms.emplace_back(idx[0] | idx[2], idx[1]);
        terms.emplace_back(idx[1] | idx[2], idx[0]);
        break;
      }
      case 2: {
        const std::uint32_t lo = m & (0u - m);
        terms.emplace_back(lo, m ^ lo);
        break;
      }
      default:
        terms.emplace_back(m, m);
    }
  }
  const std::uint32_t size = std::uint32_t{1} << n;
  if (n < 6) {
    return Cochain2::dense(n, [&](std::uint32_t x, std::uint32_t y) {
      int v = 0;
      for (const auto& [a, b] : terms) v ^= ((x & a) == a) & ((y & b) == b);
      return v;
    });
  }
  // Row-wise build: f(x,.) has y-ANF {B : A subset x}, turned into a truth
  // row by one Moebius transform. Keeps construction near-linear in table size.
  const std::size_t row_words = size / 64;
  std::vector<std::uint64_t> table(row_words << n, 0);
  std::vector<std::uint64_t> row(row_words);
  static constexpr std::uint64_t kLowMask[6] = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
      0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};
  for (std::uint32_t x = 0; x < size; ++x) {
    std::fill(row.begin(), row.end(), 0);
    for (const auto& [a, b] : terms)
      if ((x & a) == a) row[b >> 6] ^= std::uint64_t{1} << (b & 63);
    for (int i = 0; i < 6; ++i)
      for (auto& w : row) w ^= (w & kLowMask[i]) << (1 << i);
    for (int i = 6; i < n; ++i) {
      const std::size_t stride = std::size_t{1} << (i - 6);
      for (std::size_t base = 0; base < row.size(); base += 2 * stride)
        for (std::size_t j = 0; j < stride; ++j) row[base + stride + j] ^= row[base + j];
    }
    std::copy(row.begin(), row.end(),
              table.begin() + static_cast<std::ptrdiff_t>(x * row_words));
  }
  return Cochain2::dense_from_rows(n, std::move(table));
}

// ---------------------------------------------------------------------------
// Coboundary testing and equivalence

std::optional<Cochain1> is_coboundary(const Cochain2& g) {
  const int n = g.arity();
  if (n > Cochain2::kDenseArityCap)
    throw std::invalid_argument("is_coboundary: arity too large");
  const std::uint32_t size = std::uint32_t{1} << n;
  for (std::uint32_t x = 0; x < size; ++x) {
    if (g(x, x)) return std::nullopt;
    for (std::uint32_t y = 0; y < x; ++y)
      if (g(x, y) != g(y, x)) return std::nullopt;
  }
  // Weight induction with b(0) = b(e_i) = 0, then verify delta(b) = g.
  Cochain1 b(n);
  for (std::uint32_t y = 1; y < size; ++y) {
    if (std::popcount(y) < 2) continue;
    const std::uint32_t e = y & (0u - y);
    const std::uint32_t x = y ^ e;
    b.set(y, g(x, e) ^ b(x));
  }
  for (std::uint32_t x = 0; x < size; ++x)
    for (std::uint32_t y = 0; y < size; ++y)
      if ((b(x ^ y) ^ b(x) ^ b(y)) != g(x, y)) return std::nullopt;
  return b;
}

EquivalenceReport equivalence_report(const TwistSpec& f, const TwistSpec& g) {
  if (f.arity() != g.arity())
    throw std::invalid_argument("equivalence_report: arity mismatch");
  const int n = f.arity();
  if (n > Cochain2::kDenseArityCap)
    throw std::invalid_argument("equivalence_report: arity too large");
  const std::uint32_t size = std::uint32_t{1} << n;

  EquivalenceReport report;
  report.beta_equal = true;
  for (std::uint32_t x = 0; x < size && report.beta_equal; ++x)
    for (std::uint32_t y = 0; y < size; ++y)
      if (f.beta(x, y) != g.beta(x, y)) {
        report.beta_equal = false;
        break;
      }
  // phi = phi' iff the difference d = f + g is a 2-cocycle; verified via the
  // four-term coboundary of d on all triples (n <= 6) or a capped sweep.
  auto d = [&](std::uint32_t x, std::uint32_t y) { return f.f(x, y) ^ g.f(x, y); };
  report.phi_equal = true;
  {
    const std::uint32_t cap = (n <= 6) ? size : (std::uint32_t{1} << 6);
    for (std::uint32_t x = 0; x < size && report.phi_equal; ++x)
      for (std::uint32_t y = 0; y < size && report.phi_equal; ++y) {
        const int dxy = d(x, y);
        for (std::uint32_t z = 0; z < cap; ++z)
          if (d(y, z) ^ d(x ^ y, z) ^ d(x, y ^ z) ^ dxy) {
            report.phi_equal = false;
            break;
          }
      }
  }

  // Strip the diagonal of d into a signature set: it must be a linear form.
  Cochain1 diag = Cochain1::tabulate(n, [&](std::uint32_t x) { return d(x, x); });
  AnfPoly diag_anf = anf(diag);
  if (diag_anf.degree() > 1) return report;  // not decomposable; verdict Unknown
  std::uint32_t sig = 0;
  for (std::uint32_t m : diag_anf.monomials) {
    if (m == 0) return report;  // constant diagonal cannot occur for twists
    sig |= m;
  }
  Cochain2 rest = Cochain2::dense(
      n, [&](std::uint32_t x, std::uint32_t y) { return d(x, y) ^ parity_of(x & y & sig); });
  auto b = is_coboundary(rest);
  if (b) {
    report.coboundary = std::move(b);
    report.signature_indices = sig;
    report.verdict = EquivalenceReport::Verdict::Equivalent;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Symmetric-group invariance

bool is_sn_invariant(const GeneratingFunction& gf) {
  const int n = gf.arity();
  std::array<std::size_t, 4> count{};
  for (std::uint32_t m : gf.alpha.monomials()) count[static_cast<std::size_t>(std::popcount(m))]++;
  const std::size_t full1 = static_cast<std::size_t>(n);
  const std::size_t full2 = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t full3 = static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6;
  if (count[1] != 0 && count[1] != full1) return false;
  if (count[2] != 0 && count[2] != full2) return false;
  if (count[3] != 0 && count[3] != full3) return false;
  // Confirm: on a weight-class representative, the structural value must
  // match the evaluation (guards against a miscounted monomial set).
  for (int w = 0; w <= n; ++w) {
    const std::uint32_t rep = low_n_mask(w);
    int expect = 0;
    if (count[1]) expect ^= w & 1;
    if (count[2]) expect ^= (w * (w - 1) / 2) & 1;
    if (count[3]) expect ^= (w * (w - 1) * (w - 2) / 6) & 1;
    if (gf.eval(rep) != expect) return false;
  }
  return true;
}

}  // namespace zee2
