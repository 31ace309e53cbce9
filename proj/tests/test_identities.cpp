#include <doctest.h>

#include "zee2/algebra.hpp"
#include "zee2/hurwitz.hpp"
#include "zee2/json_io.hpp"

using namespace zee2;

TEST_CASE("hurwitz-radon function") {
  CHECK(rho(1) == 1);
  CHECK(rho(2) == 2);
  CHECK(rho(4) == 4);
  CHECK(rho(8) == 8);
  CHECK(rho(16) == 9);
  CHECK(rho(32) == 10);
  CHECK(rho(64) == 12);
  CHECK(rho(128) == 16);
  CHECK(rho(256) == 17);
  CHECK(rho(48) == 9);  // 48 = 2^4 * 3
  CHECK(rho(3) == 1);
  CHECK_THROWS_AS(rho(0), std::invalid_argument);
}

TEST_CASE("index sets") {
  CHECK(hr_set(2) == std::vector<std::uint32_t>{0b00, 0b01, 0b10, 0b11});
  CHECK(hr_set(3).size() == 8);
  {
    const auto h5 = hr_set(5);
    CHECK(h5.size() == 10);
    // e_i and their complements
    for (int i = 0; i < 5; ++i) {
      CHECK(h5[static_cast<std::size_t>(i)] == (1u << i));
      CHECK(h5[static_cast<std::size_t>(5 + i)] == (0b11111u ^ (1u << i)));
    }
  }
  CHECK_THROWS_AS(hr_set(4), std::invalid_argument);
  CHECK_THROWS_AS(hr_set(8), std::invalid_argument);
  CHECK_THROWS_WITH(hr_set(4), doctest::Contains("multiple of 4"));

  for (int n = 1; n <= 11; ++n) {
    if (n % 4 == 0) continue;
    CHECK(hr_set(n).size() == static_cast<std::size_t>(rho(std::uint64_t{1} << n)));
  }
}

TEST_CASE("pairwise sums inside the index set have alpha one") {
  for (int n = 1; n <= 11; ++n) {
    if (n % 4 == 0) continue;
    const auto H = hr_set(n);
    for (std::size_t i = 0; i < H.size(); ++i)
      for (std::size_t j = 0; j < H.size(); ++j) {
        if (i == j) continue;
        const int w = std::popcount(H[i] ^ H[j]);
        CHECK(alpha_octonion_weight(w) == 1);
      }
  }
}

TEST_CASE("bilinear forms of the square identity") {
  const HrInstance inst = hr_forms(3);
  REQUIRE(inst.forms.size() == 8);
  for (const IntPoly& c : inst.forms) CHECK(c.term_count() == 8);
  // c_0 = a_0 b_0 - sum_{y != 0} a_y b_y  (the twist diagonal is alpha)
  int plus = 0, minus = 0;
  for (const auto& [m, coef] : inst.forms[0].terms()) {
    CHECK((coef == 1 || coef == -1));
    (coef == 1 ? plus : minus)++;
  }
  CHECK(plus == 1);
  CHECK(minus == 7);
  for (int n : {2, 5}) {
    const HrInstance i2 = hr_forms(n);
    for (const IntPoly& c : i2.forms)
      CHECK(c.term_count() == static_cast<std::size_t>(rho(std::uint64_t{1} << n)));
  }
}

TEST_CASE("square identities verify symbolically at small arity") {
  for (int n : {1, 2, 3}) {
    const HrVerification v = verify_hr(n);
    CHECK(v.ok);
    CHECK(v.symbolic);
  }
  CHECK_THROWS_AS(verify_hr(4), std::invalid_argument);
}

TEST_CASE("a flipped sign breaks the identity") {
  HrInstance inst = hr_forms(3);
  // negate one monomial of one form
  const auto& [mono, coef] = *inst.forms[3].terms().begin();
  inst.forms[3].add_term(mono, mpz_class(-2) * coef);
  const HrVerification v = verify_hr_instance(inst);
  CHECK(!v.ok);
}

TEST_CASE("the forms are the product coefficients in the algebra") {
  const int n = 5;
  const Algebra o5(TwistSpec::make(Family::O, n, 0), Mode::Real);
  const HrInstance inst = hr_forms(n);
  Rng rng(97);
  for (int trial = 0; trial < 5; ++trial) {
    AlgebraElement a(n), b(n);
    std::vector<mpz_class> av(32), bv(32);
    for (std::uint32_t x = 0; x < 32; ++x) {
      av[x] = static_cast<long>(rng.next_int(-50, 50));
      a.add_term(x, GaussianRational(mpq_class(av[x])));
    }
    for (std::uint32_t y : inst.H) {
      bv[y] = static_cast<long>(rng.next_int(-50, 50));
      b.add_term(y, GaussianRational(mpq_class(bv[y])));
    }
    const AlgebraElement ab = o5.multiply(a, b);
    auto assign = [&](VarId v) -> mpz_class {
      return (v & kBVarBase) ? bv[v & ~kBVarBase] : av[v];
    };
    for (std::uint32_t x = 0; x < 32; ++x) {
      const mpz_class expect = inst.forms[x].eval(assign);
      CHECK(ab.coeff(x) == GaussianRational(mpq_class(expect)));
    }
    const auto comp = composition_pair(o5, a, b);
    CHECK(comp.criterion);
    CHECK(comp.direct);
  }
}

TEST_CASE("lagrange identity") {
  CHECK(lagrange_identity(1));
  CHECK(lagrange_identity(3));
  CHECK(lagrange_identity(7));
  // dropping one cross term breaks it
  {
    const int n = 3;
    auto a = [](int i) { return IntPoly::variable(static_cast<VarId>(i)); };
    auto b = [](int i) { return IntPoly::variable(kBVarBase | static_cast<VarId>(i)); };
    IntPoly lhs_a, lhs_b, dot;
    for (int i = 0; i <= n; ++i) {
      lhs_a = lhs_a + a(i) * a(i);
      lhs_b = lhs_b + b(i) * b(i);
      dot = dot + a(i) * b(i);
    }
    IntPoly rhs = dot.squared();
    int dropped = 0;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (i == 0 && j == 1 && !dropped++) continue;
        const IntPoly cross = a(i) * b(j) - a(j) * b(i);
        rhs = rhs + cross.squared();
      }
    CHECK(!(lhs_a * lhs_b == rhs));
  }
}

TEST_CASE("integer polynomial ring axioms") {
  Rng rng(101);
  auto random_poly = [&rng]() {
    IntPoly p;
    const int terms = 1 + static_cast<int>(rng.next_below(5));
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      const int vars = static_cast<int>(rng.next_below(3));
      for (int v = 0; v < vars; ++v)
        m = m * Monomial::var(rng.next_below(4), 1 + rng.next_below(2));
      p.add_term(m, mpz_class(static_cast<long>(rng.next_int(-20, 20))));
    }
    return p;
  };
  for (int t = 0; t < 1000; ++t) {
    const IntPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b - b - a).is_zero());
  }
  // canonical rendering
  IntPoly p;
  p.add_term(Monomial::var(0) * Monomial::var(1), mpz_class(1));
  p.add_term(Monomial::var(0, 2), mpz_class(-3));
  p.add_term(Monomial::one(), mpz_class(7));
  const auto name = [](VarId v) { return std::string("v") + std::to_string(v); };
  CHECK(p.str(name) == "7 + v0*v1 - 3*v0^2");
}

TEST_CASE("square identity json rendering") {
  const HrInstance inst = hr_forms(2);
  const HrVerification v = verify_hr_instance(inst);
  const Json j = hr_instance_to_json(inst, v);
  CHECK(j["n"] == 2);
  CHECK(j["rho"] == 4);
  CHECK(j["H"].size() == 4);
  CHECK(j["verified"] == "symbolic");
  CHECK(j["forms"]["00"].size() == 4);
  const std::string text = hr_instance_to_text(inst);
  CHECK(text.find("c_00 =") != std::string::npos);
}
