#include <doctest.h>

#include "oracles.hpp"
#include "zee2/twist.hpp"

using namespace zee2;

namespace {

// Realized signature correction for a family: indices whose closed-form
// diagonal disagrees with the target squares u_i^2 = +1 iff i <= p.
std::uint32_t expected_sig_mask(Family fam, int n, int p) {
  if (fam == Family::M) return low_n_mask(n) & ~low_n_mask(p);
  return low_n_mask(p);
}

int naive_family_f(Family fam, int n, int p, std::uint32_t x, std::uint32_t y) {
  int base = 0;
  switch (fam) {
    case Family::O: base = oracle::f_octonion(x, y, n); break;
    case Family::M: base = oracle::f_mseries(x, y, n); break;
    case Family::Cl: base = oracle::f_clifford(x, y, n); break;
    case Family::Custom: break;
  }
  return base ^ oracle::diag_sum(x, y, expected_sig_mask(fam, n, p));
}

}  // namespace

TEST_CASE("closed-form twist evaluators match the index sums") {
  for (Family fam : {Family::O, Family::M, Family::Cl}) {
    const int lo = (fam == Family::Cl) ? 1 : 3;
    for (int n = lo; n <= 6; ++n)
      for (int p : {0, 1, n}) {
        const TwistSpec spec = TwistSpec::make(fam, n, p);
        for (std::uint32_t x = 0; x < (1u << n); ++x)
          for (std::uint32_t y = 0; y < (1u << n); ++y)
            CHECK(spec.f(x, y) == naive_family_f(fam, n, p, x, y));
      }
  }
}

TEST_CASE("closed-form twists beyond the table cap still match") {
  Rng rng(47);
  for (Family fam : {Family::O, Family::M, Family::Cl}) {
    const int n = 15;
    const TwistSpec spec = TwistSpec::make(fam, n, 4);
    for (int t = 0; t < 300; ++t) {
      const std::uint32_t x = rng.next_mask(n), y = rng.next_mask(n);
      CHECK(spec.f(x, y) == naive_family_f(fam, n, 4, x, y));
      CHECK(spec.beta(x, y) == (spec.f(x, y) ^ spec.f(y, x)));
    }
  }
}

TEST_CASE("generator squares follow the signature") {
  // u_i^2 = +1 iff i <= p, for every family.
  for (Family fam : {Family::O, Family::M, Family::Cl}) {
    const int n = 5;
    for (int p = 0; p <= n; ++p) {
      const TwistSpec spec = TwistSpec::make(fam, n, p);
      for (int i = 1; i <= n; ++i) {
        const std::uint32_t e = 1u << (i - 1);
        CHECK(spec.f(e, e) == (i <= p ? 0 : 1));
      }
    }
  }
}

TEST_CASE("octonion generators square to minus one at p = 0") {
  const TwistSpec spec = TwistSpec::make(Family::O, 3, 0);
  CHECK(spec.f(0b001, 0b001) == 1);
}

TEST_CASE("the Clifford twist is bilinear") {
  for (int p : {0, 2}) {
    const TwistSpec spec = TwistSpec::make(Family::Cl, 4, p);
    for (std::uint32_t x = 0; x < 16; ++x)
      for (std::uint32_t x2 = 0; x2 < 16; ++x2)
        for (std::uint32_t y = 0; y < 16; ++y) {
          CHECK((spec.f(x, y) ^ spec.f(x2, y)) == spec.f(x ^ x2, y));
          CHECK((spec.f(y, x) ^ spec.f(y, x2)) == spec.f(y, x ^ x2));
        }
  }
}

TEST_CASE("M-series generators commute") {
  const TwistSpec spec = TwistSpec::make(Family::M, 3, 3);
  CHECK(spec.f(0b001, 0b010) == 0);
  CHECK(spec.f(0b010, 0b001) == 0);
}

TEST_CASE("make_twist rejects bad parameters") {
  CHECK_THROWS_AS(TwistSpec::make(Family::O, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(TwistSpec::make(Family::M, 25, 0), std::invalid_argument);
  CHECK_THROWS_AS(TwistSpec::make(Family::O, 4, 5), std::invalid_argument);
  CHECK_THROWS_AS(TwistSpec::make(Family::Cl, 0, 0), std::invalid_argument);
  CHECK_NOTHROW(TwistSpec::make(Family::Cl, 1, 1));
}

TEST_CASE("twists are unital") {
  for (Family fam : {Family::O, Family::M, Family::Cl}) {
    const TwistSpec spec = TwistSpec::make(fam, 5, 2);
    for (std::uint32_t x = 0; x < 32; ++x) {
      CHECK(spec.f(x, 0) == 0);
      CHECK(spec.f(0, x) == 0);
    }
  }
}

TEST_CASE("commutation bit basics") {
  const TwistSpec fo = TwistSpec::make(Family::O, 5, 0);
  const TwistSpec fm = TwistSpec::make(Family::M, 5, 0);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j) continue;
      CHECK(fo.beta(1u << i, 1u << j) == 1);
      CHECK(fm.beta(1u << i, 1u << j) == 0);
    }
  Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    const std::uint32_t x = rng.next_mask(5);
    CHECK(fo.beta(x, x) == 0);
    CHECK(fo.beta(0, x) == 0);
  }
}

TEST_CASE("beta is signature independent") {
  for (int p = 0; p <= 4; ++p) {
    const TwistSpec a = TwistSpec::make(Family::O, 4, 0);
    const TwistSpec b = TwistSpec::make(Family::O, 4, p);
    for (std::uint32_t x = 0; x < 16; ++x)
      for (std::uint32_t y = 0; y < 16; ++y) CHECK(a.beta(x, y) == b.beta(x, y));
  }
}

TEST_CASE("closed generating functions have 4-periodic weight profiles") {
  const int n = 8;
  const int expect_cl[] = {1, 1, 0, 0, 1, 1, 0, 0};
  const int expect_o[] = {1, 1, 1, 0, 1, 1, 1, 0};
  const int expect_m[] = {1, 0, 0, 0, 1, 0, 0, 0};
  const GeneratingFunction a_cl = closed_alpha(Family::Cl, n);
  const GeneratingFunction a_o = closed_alpha(Family::O, n);
  const GeneratingFunction a_m = closed_alpha(Family::M, n);
  for (std::uint32_t x = 1; x < (1u << n); ++x) {
    const int w = std::popcount(x);
    CHECK(a_cl.eval(x) == expect_cl[w - 1]);
    CHECK(a_o.eval(x) == expect_o[w - 1]);
    CHECK(a_m.eval(x) == expect_m[w - 1]);
  }
  CHECK(a_cl.eval(0) == 0);
  CHECK(a_o.eval(0) == 0);
  CHECK(a_m.eval(0) == 0);
}

TEST_CASE("alpha recovery reproduces the closed forms") {
  for (int n = 3; n <= 6; ++n) {
    for (Family fam : {Family::O, Family::M, Family::Cl}) {
      const GeneratingFunction rec = recover_alpha(TwistSpec::make(fam, n, 0));
      CHECK(rec.normalized);
      CHECK(rec.alpha == closed_alpha(fam, n).alpha);
    }
  }
  // signature does not change the recovered function
  for (int p : {1, 3}) {
    const GeneratingFunction rec = recover_alpha(TwistSpec::make(Family::Cl, 4, p));
    CHECK(rec.alpha == closed_alpha(Family::Cl, 4).alpha);
  }
}

TEST_CASE("alpha recovery rejects non-symmetric association bits") {
  // f(x,y) = x1 x2 y3 has phi(e1,e2,e3) != phi(e3,e2,e1)
  const Cochain2 f = Cochain2::dense(3, [](std::uint32_t x, std::uint32_t y) {
    return ((x & 1) & ((x >> 1) & 1) & ((y >> 2) & 1)) ? 1 : 0;
  });
  const TwistSpec spec = TwistSpec::custom(f);
  CHECK_THROWS_AS(recover_alpha(spec), SymmetryError);
  try {
    recover_alpha(spec);
  } catch (const SymmetryError& e) {
    const int v = spec.phi(e.x, e.y, e.z);
    const bool broken = v != spec.phi(e.y, e.x, e.z) || v != spec.phi(e.x, e.z, e.y);
    CHECK(broken);
  }
}

TEST_CASE("monomial-wise twist satisfies the diagonal property") {
  const GeneratingFunction a = closed_alpha(Family::O, 3);
  const TwistSpec f = TwistSpec::from_alpha(a.alpha);
  for (std::uint32_t x = 0; x < 8; ++x) CHECK(f.f(x, x) == a.eval(x));

  const TwistSpec zero = TwistSpec::from_alpha(CubicPoly(4));
  for (std::uint32_t x = 0; x < 16; ++x)
    for (std::uint32_t y = 0; y < 16; ++y) CHECK(zero.f(x, y) == 0);

  CubicPoly lin(1);
  lin.toggle(1);
  const TwistSpec f1 = TwistSpec::from_alpha(lin);
  CHECK(f1.f(1, 1) == 1);
  CHECK(f1.f(1, 0) == 0);
  CHECK(f1.f(0, 1) == 0);
}

TEST_CASE("monomial-wise twist table matches the term-by-term rule") {
  Rng rng(59);
  for (int n : {6, 7}) {
    CubicPoly a(n);
    for (int t = 0; t < 10; ++t) {
      const std::uint32_t m = rng.next_mask(n);
      const int d = std::popcount(m);
      if (d >= 1 && d <= 3) a.toggle(m);
    }
    const Cochain2 table = fakset_cochain(a);
    // term-by-term oracle
    auto naive = [&](std::uint32_t x, std::uint32_t y) {
      int s = 0;
      for (std::uint32_t mono : a.monomials()) {
        std::uint32_t idx[3] = {0, 0, 0};
        int cnt = 0;
        for (std::uint32_t t2 = mono; t2; t2 &= t2 - 1) idx[cnt++] = t2 & (0u - t2);
        if (cnt == 3) {
          s ^= (((x & (idx[0] | idx[1])) == (idx[0] | idx[1])) && (y & idx[2])) ? 1 : 0;
          s ^= (((x & (idx[0] | idx[2])) == (idx[0] | idx[2])) && (y & idx[1])) ? 1 : 0;
          s ^= (((x & (idx[1] | idx[2])) == (idx[1] | idx[2])) && (y & idx[0])) ? 1 : 0;
        } else if (cnt == 2) {
          s ^= ((x & idx[0]) && (y & idx[1])) ? 1 : 0;
        } else {
          s ^= ((x & idx[0]) && (y & idx[0])) ? 1 : 0;
        }
      }
      return s;
    };
    for (int t = 0; t < 2000; ++t) {
      const std::uint32_t x = rng.next_mask(n), y = rng.next_mask(n);
      CHECK(table(x, y) == naive(x, y));
    }
  }
}

TEST_CASE("twist construction from alpha then recovery is the identity") {
  // all normalized cubics at n = 3: linear part full, free quadratic/cubic part
  const int n = 3;
  for (std::uint32_t sel = 0; sel < 16; ++sel) {
    CubicPoly a(n);
    a.toggle(0b001);
    a.toggle(0b010);
    a.toggle(0b100);
    if (sel & 1) a.toggle(0b011);
    if (sel & 2) a.toggle(0b101);
    if (sel & 4) a.toggle(0b110);
    if (sel & 8) a.toggle(0b111);
    const GeneratingFunction rec = recover_alpha(TwistSpec::from_alpha(a));
    CHECK(rec.alpha == a);
  }
}

TEST_CASE("coboundary recognition") {
  Rng rng(61);
  // random coboundaries are recognized and reproduced
  for (int n : {3, 4, 6}) {
    for (int t = 0; t < 10; ++t) {
      Cochain1 b(n);
      for (std::uint32_t x = 0; x < (1u << n); ++x) b.set(x, rng.next_bit());
      b.set(0, 0);
      const Cochain2 g = delta1(b);
      const auto rec = is_coboundary(g);
      REQUIRE(rec.has_value());
      const Cochain2 back = delta1(*rec);
      CHECK(back.equals_dense(g));
    }
  }
  // x1 y2 + x2 y1 is the coboundary of x1 x2
  {
    const int n = 3;
    const Cochain2 g = Cochain2::dense(n, [](std::uint32_t x, std::uint32_t y) {
      return ((x & 1) & ((y >> 1) & 1)) ^ (((x >> 1) & 1) & (y & 1));
    });
    const auto rec = is_coboundary(g);
    REQUIRE(rec.has_value());
    for (std::uint32_t x = 0; x < 8; ++x)
      CHECK((*rec)(x) == (((x & 1) & ((x >> 1) & 1)) ? 1 : 0));
  }
  // a diagonal signature term is a non-trivial cocycle
  {
    const Cochain2 g = Cochain2::dense(
        3, [](std::uint32_t x, std::uint32_t y) { return (x & y & 1) ? 1 : 0; });
    CHECK(!is_coboundary(g).has_value());
  }
}

TEST_CASE("equivalence report on signature variants") {
  const TwistSpec a = TwistSpec::make(Family::O, 4, 1);
  const TwistSpec b = TwistSpec::make(Family::O, 4, 3);
  const EquivalenceReport r = equivalence_report(a, b);
  CHECK(r.verdict == EquivalenceReport::Verdict::Equivalent);
  CHECK(r.beta_equal);
  CHECK(r.phi_equal);
  CHECK(r.signature_indices == 0b0110u);  // indices 2 and 3 differ
  REQUIRE(r.coboundary.has_value());
  CHECK(r.coboundary->is_zero());
}

TEST_CASE("equivalence report under an identity pullback") {
  const TwistSpec a = TwistSpec::make(Family::M, 4, 2);
  const EquivalenceReport r = equivalence_report(a, a.pullback(Gl2Map::identity(4)));
  CHECK(r.verdict == EquivalenceReport::Verdict::Equivalent);
  CHECK(r.signature_indices == 0);
  REQUIRE(r.coboundary.has_value());
  CHECK(r.coboundary->is_zero());
}

TEST_CASE("equivalence report distinguishes different quasialgebras") {
  const TwistSpec a = TwistSpec::make(Family::O, 3, 0);
  const TwistSpec b = TwistSpec::make(Family::M, 3, 0);
  const EquivalenceReport r = equivalence_report(a, b);
  CHECK(r.verdict == EquivalenceReport::Verdict::Unknown);
  CHECK(!r.beta_equal);
}

TEST_CASE("hexagon and pentagon identities hold for arbitrary twists") {
  Rng rng(67);
  auto check_spec = [](const TwistSpec& spec, Rng& rng2, bool exhaustive) {
    const int n = spec.arity();
    auto hex_pent = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z, std::uint32_t t) {
      const int hex1 = spec.phi(x, y, z) ^ spec.beta(x, y ^ z) ^ spec.phi(y, z, x) ^
                       spec.beta(z, x) ^ spec.phi(y, x, z) ^ spec.beta(x, y);
      const int hex2 = spec.phi(x, y, z) ^ spec.beta(z, y) ^ spec.phi(x, z, y) ^
                       spec.beta(z, x) ^ spec.phi(z, x, y) ^ spec.beta(x ^ y, z);
      const int pent = spec.phi(y, z, t) ^ spec.phi(x ^ y, z, t) ^ spec.phi(x, y ^ z, t) ^
                       spec.phi(x, y, z ^ t) ^ spec.phi(x, y, z);
      CHECK(hex1 == 0);
      CHECK(hex2 == 0);
      CHECK(pent == 0);
    };
    if (exhaustive) {
      for (std::uint32_t x = 0; x < (1u << n); ++x)
        for (std::uint32_t y = 0; y < (1u << n); ++y)
          for (std::uint32_t z = 0; z < (1u << n); ++z)
            for (std::uint32_t t = 0; t < (1u << n); ++t) hex_pent(x, y, z, t);
    } else {
      for (int s = 0; s < 3000; ++s)
        hex_pent(rng2.next_mask(n), rng2.next_mask(n), rng2.next_mask(n), rng2.next_mask(n));
    }
  };
  // random twisting functions at n = 3 and 4, exhaustive
  for (int n : {3, 4}) {
    for (int t = 0; t < 5; ++t) {
      Cochain2 f = Cochain2::dense_zero(n);
      for (std::uint32_t x = 1; x < (1u << n); ++x)
        for (std::uint32_t y = 1; y < (1u << n); ++y)
          if (rng.next_bit()) f.flip(x, y);
      check_spec(TwistSpec::custom(std::move(f)), rng, true);
    }
  }
  // families at n = 5 and 6, randomized
  for (int n : {5, 6}) {
    check_spec(TwistSpec::make(Family::O, n, 1), rng, false);
    check_spec(TwistSpec::make(Family::M, n, n), rng, false);
    check_spec(TwistSpec::make(Family::Cl, n, 0), rng, false);
  }
}

TEST_CASE("association bit of the O and M series is the all-distinct sum") {
  for (int n : {3, 4}) {
    const TwistSpec fo = TwistSpec::make(Family::O, n, 0);
    const TwistSpec fm = TwistSpec::make(Family::M, n, n);
    for (std::uint32_t x = 0; x < (1u << n); ++x)
      for (std::uint32_t y = 0; y < (1u << n); ++y)
        for (std::uint32_t z = 0; z < (1u << n); ++z) {
          const int expect = oracle::phi_all_distinct(x, y, z, n);
          CHECK(fo.phi(x, y, z) == expect);
          CHECK(fm.phi(x, y, z) == expect);
        }
  }
}

TEST_CASE("recovered alpha satisfies the degree-three equation") {
  Rng rng(71);
  for (int n : {4, 5}) {
    const GeneratingFunction rec = recover_alpha(TwistSpec::make(Family::O, n, 0));
    const Cochain4 d3 = delta3(rec.alpha);
    if (n == 4) {
      for (std::uint32_t x = 0; x < 16; ++x)
        for (std::uint32_t y = 0; y < 16; ++y)
          for (std::uint32_t z = 0; z < 16; ++z)
            for (std::uint32_t t = 0; t < 16; ++t) CHECK(d3(x, y, z, t) == 0);
    } else {
      for (int s = 0; s < 3000; ++s)
        CHECK(d3(rng.next_mask(n), rng.next_mask(n), rng.next_mask(n), rng.next_mask(n)) == 0);
    }
  }
}

TEST_CASE("symmetric-group invariance of generating functions") {
  CHECK(is_sn_invariant(closed_alpha(Family::O, 5)));
  CHECK(is_sn_invariant(closed_alpha(Family::M, 5)));
  CHECK(is_sn_invariant(closed_alpha(Family::Cl, 5)));
  CubicPoly partial(3);
  partial.toggle(0b011);
  CHECK(!is_sn_invariant(GeneratingFunction{partial, false}));
}

TEST_CASE("custom twists must be unital") {
  Cochain2 f = Cochain2::dense_zero(2);
  f.flip(0, 1);
  CHECK_THROWS_AS(TwistSpec::custom(std::move(f)), std::invalid_argument);
}
