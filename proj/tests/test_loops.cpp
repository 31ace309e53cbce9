#include <doctest.h>

#include "zee2/code_loop.hpp"

using namespace zee2;

TEST_CASE("golay transcription self-checks") {
  const BinaryCode g = golay_code();
  CHECK(g.length() == 24);
  CHECK(g.dimension() == 12);
  CHECK(std::popcount(g.generators()[0]) == 8);
  CHECK(std::popcount(g.generators()[0] & g.generators()[1]) == 4);
  CHECK(std::popcount(g.generators()[0] ^ g.generators()[1]) == 8);
  CHECK(std::popcount(g.generators()[11] & g.generators()[0]) == 6);
}

TEST_CASE("encoding") {
  const BinaryCode g = golay_code();
  CHECK(g.encode(0u) == 0u);
  CHECK(g.encode(GroupElement::basis(1, 12)) == g.generators()[0]);
  const int w = std::popcount(g.encode(0b11u));
  CHECK((w == 8 || w == 12 || w == 16));
  CHECK_THROWS_AS(g.encode(GroupElement::basis(1, 3)), std::invalid_argument);
}

TEST_CASE("doubly even codes") {
  const BinaryCode g = golay_code();
  CHECK(g.is_doubly_even());
  const auto dist = g.weight_distribution();
  CHECK(dist.at(0) == 1);
  CHECK(dist.at(8) == 759);
  CHECK(dist.at(12) == 2576);
  CHECK(dist.at(16) == 759);
  CHECK(dist.at(24) == 1);
  CHECK(dist.size() == 5);

  CHECK(!BinaryCode(2, {0b11}).is_doubly_even());
  CHECK(BinaryCode(4, {0b1111}).is_doubly_even());
}

TEST_CASE("parker generating function basics") {
  CHECK(parker_alpha(0u) == 0);
  CHECK(parker_alpha(GroupElement::basis(12, 12)) == 0);
  const CubicPoly& poly = parker_alpha_poly();
  CHECK(poly.degree() == 3);
  for (std::uint32_t m : poly.monomials()) CHECK(std::popcount(m) >= 2);
}

TEST_CASE("parker alpha polarization matches triple intersections on the basis") {
  // The oracle that validates the transcription: the second polarization of
  // the generating function at basis triples equals |l_i & l_j & l_k| mod 2.
  const BinaryCode g = golay_code();
  const Cochain3 phi = delta2(parker_alpha_poly());
  int checked = 0;
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      for (int k = j + 1; k < 12; ++k) {
        const int expect =
            std::popcount(g.generators()[static_cast<std::size_t>(i)] &
                          g.generators()[static_cast<std::size_t>(j)] &
                          g.generators()[static_cast<std::size_t>(k)]) & 1;
        CHECK(phi(1u << i, 1u << j, 1u << k) == expect);
        ++checked;
      }
  CHECK(checked == 220);
}

TEST_CASE("parker factor set diagonal and commutators") {
  const LoopSpec loop = parker_factor_set();
  const TwistSpec& f = loop.twist;
  CHECK(f.f(1u << 11, 1u << 11) == 1);  // u_12 squares to -1
  for (int i = 0; i < 11; ++i) CHECK(f.f(1u << i, 1u << i) == 0);
  for (int i = 0; i < 11; ++i)
    for (int j = 0; j < 11; ++j) CHECK((f.f(1u << i, 1u << j) ^ f.f(1u << j, 1u << i)) == 0);
  // u_12 anticommutes with every u_i, i <= 11
  for (int i = 0; i < 11; ++i) CHECK(f.beta(1u << 11, 1u << i) == 1);
}

TEST_CASE("parker factor set satisfies the code-loop axioms") {
  const FactorSetReport report =
      verify_factor_set(golay_code(), parker_factor_set().twist, kDefaultSeed, 20000);
  CHECK(report.diagonal_ok);
  CHECK(report.symmetrization_ok);
  CHECK(report.coboundary_ok);
  CHECK(report.all_ok());
  CHECK(report.pairs_checked == (std::uint64_t{1} << 24));
}

TEST_CASE("a flipped pair breaks the symmetrization axiom") {
  const LoopSpec loop = parker_factor_set();
  Cochain2 broken = loop.twist.f_cochain();
  broken.flip(5, 9);
  const FactorSetReport report =
      verify_factor_set(golay_code(), TwistSpec::custom(std::move(broken)), kDefaultSeed, 100);
  CHECK(!report.symmetrization_ok);
  REQUIRE(report.first_failure.has_value());
  const auto w = *report.first_failure;
  CHECK(((w.x == 5 && w.y == 9) || (w.x == 9 && w.y == 5)));
}

TEST_CASE("the zero-dimensional code is vacuously a factor set") {
  const BinaryCode trivial(24, {});
  const FactorSetReport report =
      verify_factor_set(trivial, parker_factor_set().twist, kDefaultSeed, 10);
  CHECK(report.all_ok());
}

TEST_CASE("moufang identity") {
  // the octonion loop
  const MoufangResult octo = moufang_check({TwistSpec::make(Family::O, 3, 0)});
  CHECK(octo.ok);
  CHECK(octo.triples_checked == 512);
  // split octonions and the M-series loop
  CHECK(moufang_check({TwistSpec::make(Family::O, 3, 3)}).ok);
  CHECK(moufang_check({TwistSpec::make(Family::M, 4, 0)}).ok);
  // the Parker loop, sampled
  const MoufangResult parker = moufang_check(parker_factor_set(), kDefaultSeed, 100000);
  CHECK(parker.ok);
  CHECK(parker.triples_checked == 100000);
  // a twist with a non-symmetric association bit fails with a witness
  const Cochain2 bad = Cochain2::dense(3, [](std::uint32_t x, std::uint32_t y) {
    return ((x & 1) & ((x >> 1) & 1) & ((y >> 2) & 1)) ? 1 : 0;
  });
  const MoufangResult broken = moufang_check({TwistSpec::custom(bad)});
  CHECK(!broken.ok);
  REQUIRE(broken.witness.has_value());
  const auto w = *broken.witness;
  const TwistSpec f = TwistSpec::custom(bad);
  const int lhs = f.f(w.x, w.z) ^ f.f(w.y, w.x ^ w.z) ^ f.f(w.x, w.x ^ w.y ^ w.z);
  const int rhs = f.f(w.x, w.y) ^ f.f(w.x ^ w.y, w.x) ^ f.f(w.y, w.z);
  CHECK(lhs != rhs);
}

TEST_CASE("loop structure of the signed basis elements") {
  // Unsigned multiplication table rows and columns are permutations, so left
  // and right division are solvable; products of signed basis elements stay
  // in the loop by construction of the twist.
  const TwistSpec f = TwistSpec::make(Family::O, 3, 0);
  for (std::uint32_t x = 0; x < 8; ++x) {
    std::uint32_t row = 0, col = 0;
    for (std::uint32_t y = 0; y < 8; ++y) {
      row |= 1u << (x ^ y);
      col |= 1u << (y ^ x);
    }
    CHECK(row == 0xFF);
    CHECK(col == 0xFF);
  }
}

TEST_CASE("binary code validation") {
  CHECK_THROWS_AS(BinaryCode(4, {0b0011, 0b0110, 0b0101}), std::invalid_argument);
  CHECK_THROWS_AS(BinaryCode(2, {0b100}), std::invalid_argument);
  CHECK_NOTHROW(BinaryCode(4, {0b0011, 0b0110}));
}
