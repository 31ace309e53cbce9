#include "zee2/hurwitz.hpp"

#include <bit>
#include <stdexcept>

#include "zee2/twist.hpp"

namespace zee2 {

int rho(std::uint64_t N) {
  if (N == 0) throw std::invalid_argument("rho: N must be positive");
  const int v = std::countr_zero(N);
  const int m = v / 4, l = v % 4;
  return 8 * m + (1 << l);
}

std::vector<std::uint32_t> hr_set(int n) {
  if (n < 1 || n > kMaxArity) throw std::invalid_argument("hr_set: arity out of range");
  if (n % 4 == 0)
    throw std::invalid_argument("hr_set: n must not be a multiple of 4");
  const std::uint32_t all = low_n_mask(n);
  std::vector<std::uint32_t> H;
  switch (n % 4) {
    case 1:
      for (int i = 0; i < n; ++i) H.push_back(std::uint32_t{1} << i);
      for (int i = 0; i < n; ++i) H.push_back(all ^ (std::uint32_t{1} << i));
      break;
    case 2:
      H.push_back(0);
      for (int i = 0; i < n; ++i) H.push_back(std::uint32_t{1} << i);
      for (int j = 1; j < n; ++j) H.push_back(1u | (std::uint32_t{1} << j));
      break;
    default:  // n = 3 mod 4
      H.push_back(0);
      for (int i = 0; i < n; ++i) H.push_back(std::uint32_t{1} << i);
      H.push_back(all);
      for (int i = 0; i < n; ++i) H.push_back(all ^ (std::uint32_t{1} << i));
      break;
  }
  if (H.size() != static_cast<std::size_t>(rho(std::uint64_t{1} << n)))
    throw std::logic_error("hr_set: size differs from rho(2^n)");
  return H;
}

std::string hr_var_name(int n, VarId v) {
  if (v & kBVarBase) return "b_" + to_bit_string(v & ~kBVarBase, n);
  return "a_" + to_bit_string(v, n);
}

HrInstance hr_forms(int n) {
  HrInstance inst;
  inst.n = n;
  inst.H = hr_set(n);
  const std::uint32_t size = std::uint32_t{1} << n;
  inst.forms.reserve(size);
  for (std::uint32_t x = 0; x < size; ++x) {
    IntPoly c;
    for (std::uint32_t y : inst.H) {
      const int sign = twist_octonion(x ^ y, y) ? -1 : 1;
      c.add_term(Monomial::var(x ^ y) * Monomial::var(kBVarBase | y), mpz_class(sign));
    }
    inst.forms.push_back(std::move(c));
  }
  return inst;
}

namespace {

constexpr int kSymbolicArityCap = 7;
constexpr long kEvalRange = 1000000;

bool randomized_check(const HrInstance& inst, std::uint64_t seed, int points) {
  const std::uint32_t size = std::uint32_t{1} << inst.n;
  Rng rng(seed);
  for (int trial = 0; trial < points; ++trial) {
    std::vector<mpz_class> a(size), b(size);
    for (std::uint32_t x = 0; x < size; ++x)
      a[x] = static_cast<long>(rng.next_int(-kEvalRange, kEvalRange));
    for (std::uint32_t y : inst.H)
      b[y] = static_cast<long>(rng.next_int(-kEvalRange, kEvalRange));
    auto assign = [&](VarId v) -> mpz_class {
      return (v & kBVarBase) ? b[v & ~kBVarBase] : a[v];
    };
    mpz_class lhs_a = 0, lhs_b = 0, rhs = 0;
    for (std::uint32_t x = 0; x < size; ++x) lhs_a += a[x] * a[x];
    for (std::uint32_t y : inst.H) lhs_b += b[y] * b[y];
    for (const IntPoly& c : inst.forms) {
      const mpz_class v = c.eval(assign);
      rhs += v * v;
    }
    if (lhs_a * lhs_b != rhs) return false;
  }
  return true;
}

}  // namespace

HrVerification verify_hr_instance(const HrInstance& inst, std::uint64_t seed) {
  HrVerification result;
  result.seed = seed;
  if (!randomized_check(inst, seed, 3)) return result;
  if (inst.n > kSymbolicArityCap) {
    result.ok = true;
    result.symbolic = false;
    return result;
  }
  const std::uint32_t size = std::uint32_t{1} << inst.n;
  IntPoly sum_a2, sum_b2, sum_c2;
  for (std::uint32_t x = 0; x < size; ++x)
    sum_a2.add_term(Monomial::var(x, 2), mpz_class(1));
  for (std::uint32_t y : inst.H) sum_b2.add_term(Monomial::var(kBVarBase | y, 2), mpz_class(1));
  for (const IntPoly& c : inst.forms) sum_c2 = sum_c2 + c.squared();
  result.ok = (sum_a2 * sum_b2 == sum_c2);
  result.symbolic = true;
  return result;
}

HrVerification verify_hr(int n, std::uint64_t seed) {
  return verify_hr_instance(hr_forms(n), seed);
}

bool lagrange_identity(int n) {
  if (n < 1) throw std::invalid_argument("lagrange_identity: n must be positive");
  // Variables a_0..a_n and b_0..b_n.
  auto a = [](int i) { return IntPoly::variable(static_cast<VarId>(i)); };
  auto b = [](int i) { return IntPoly::variable(kBVarBase | static_cast<VarId>(i)); };
  IntPoly lhs_a, lhs_b, dot;
  for (int i = 0; i <= n; ++i) {
    lhs_a = lhs_a + a(i) * a(i);
    lhs_b = lhs_b + b(i) * b(i);
    dot = dot + a(i) * b(i);
  }
  IntPoly rhs = dot.squared();
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      IntPoly cross = a(i) * b(j) - a(j) * b(i);
      rhs = rhs + cross.squared();
    }
  return lhs_a * lhs_b == rhs;
}

}  // namespace zee2
