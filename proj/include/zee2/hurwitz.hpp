#pragma once

// Hurwitz-Radon square identities: the function rho, the index sets H_n, the
// explicit signed bilinear forms, and exact symbolic verification.

#include <cstdint>
#include <string>
#include <vector>

#include "zee2/bits.hpp"
#include "zee2/intpoly.hpp"

namespace zee2 {

/// rho(N) = 8m + 2^l for N = 2^(4m+l) N' with N' odd, l in 0..3.
int rho(std::uint64_t N);

/// The index set H_n of size rho(2^n), defined for n mod 4 in {1,2,3}:
///   n = 1 mod 4:  e_i and their complements, 1 <= i <= n;
///   n = 2 mod 4:  e_i for 0 <= i <= n, and e_1 + e_j for 1 < j <= n;
///   n = 3 mod 4:  e_i and complements for 0 <= i <= n.
/// Throws std::invalid_argument for n a multiple of 4 (the construction
/// requires n not a multiple of 4).
std::vector<std::uint32_t> hr_set(int n);

/// Variable ids: a_x is the mask value of x, b_y is kBVarBase | y.
inline constexpr VarId kBVarBase = VarId{1} << 24;
std::string hr_var_name(int n, VarId v);

struct HrInstance {
  int n = 0;
  std::vector<std::uint32_t> H;
  /// forms[x] is the signed bilinear form c_x = sum_{y in H} s(x,y) a_{x+y} b_y
  /// with s(x,y) = (-1)^{f(x+y, y)} for the octonion-series twist at p = 0.
  std::vector<IntPoly> forms;
};

HrInstance hr_forms(int n);

struct HrVerification {
  bool ok = false;
  bool symbolic = false;  // false means only the randomized spot check ran
  std::uint64_t seed = 0;
};

/// Checks (sum_x a_x^2)(sum_{y in H} b_y^2) = sum_x c_x^2. Symbolic equality
/// for n <= 7 after a randomized pre-check at 3 integer points; randomized
/// only above that.
HrVerification verify_hr_instance(const HrInstance& inst, std::uint64_t seed = kDefaultSeed);
HrVerification verify_hr(int n, std::uint64_t seed = kDefaultSeed);

/// Symbolic proof of (a_0^2+...+a_n^2)(b_0^2+...+b_n^2) =
/// (sum a_i b_i)^2 + sum_{i<j} (a_i b_j - a_j b_i)^2.
bool lagrange_identity(int n);

}  // namespace zee2
