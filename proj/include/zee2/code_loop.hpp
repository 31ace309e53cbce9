#pragma once

// Moufang and code loops: doubly even binary codes, the binary Golay code,
// the Parker loop generating function and factor set, factor-set axiom
// verification, and the Moufang identity check.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "zee2/bits.hpp"
#include "zee2/gf2.hpp"
#include "zee2/twist.hpp"

namespace zee2 {

/// Binary linear code of length N <= 32 given by k independent generator
/// rows; codeword bit c (0-based) is column c+1 of the printed generator
/// matrix, left to right.
class BinaryCode {
 public:
  BinaryCode(int length, std::vector<std::uint32_t> generators);

  int length() const { return length_; }
  int dimension() const { return static_cast<int>(generators_.size()); }
  const std::vector<std::uint32_t>& generators() const { return generators_; }

  /// XOR of the generator rows selected by x; x has arity = dimension.
  std::uint32_t encode(std::uint32_t x) const;
  std::uint32_t encode(const GroupElement& x) const;

  /// Enumerates all 2^k codewords (k <= 16): every weight must be 0 mod 4.
  bool is_doubly_even() const;
  std::map<int, long> weight_distribution() const;

 private:
  int length_;
  std::vector<std::uint32_t> generators_;
};

/// The 12x24 generator matrix of the binary Golay code, transcribed with its
/// identity left block. Construction self-checks row weights (8 for rows
/// 1..11, 12 for row 12) and pairwise intersections (|l_i & l_j| = 8 for
/// i<j<=11, |l_12 & l_i| = 6), and aborts on any mismatch.
BinaryCode golay_code();

/// Generating function of the Parker loop on (Z_2)^12, identifying row l_i
/// with the basis vector e_i.
const CubicPoly& parker_alpha_poly();
int parker_alpha(std::uint32_t x);
int parker_alpha(const GroupElement& x);

/// Loop of the signed basis elements {+-u_x} of a twisted algebra; order
/// 2^(n+1).
struct LoopSpec {
  TwistSpec twist;
  int arity() const { return twist.arity(); }
};

/// Factor set of the Parker loop: the monomial-wise twist of the quadratic
/// and cubic part of the Parker generating function plus the diagonal term
/// x_12 y_12 (signature (11,1)).
LoopSpec parker_factor_set();

struct FactorSetWitness {
  std::uint32_t x = 0, y = 0, z = 0;
};

struct FactorSetReport {
  bool diagonal_ok = false;       // f(x,x) = |c(x)|/4 mod 2 on all coordinates
  bool symmetrization_ok = false; // f(x,y)+f(y,x) = |c(x) & c(y)|/2 mod 2 on all pairs
  bool coboundary_ok = false;     // delta f(x,y,z) = |c(x) & c(y) & c(z)| mod 2
  std::optional<FactorSetWitness> first_failure;
  std::uint64_t pairs_checked = 0;
  std::uint64_t triples_checked = 0;

  bool all_ok() const { return diagonal_ok && symmetrization_ok && coboundary_ok; }
};

/// Checks the three factor-set axioms of f against the code: the diagonal
/// axiom on all 2^k coordinates, the symmetrization axiom on all 2^(2k)
/// pairs, and the coboundary axiom on all basis triples plus random triples
/// (both sides are trilinear in the coordinates, so basis triples determine
/// them; the random sweep guards the trilinearity itself).
FactorSetReport verify_factor_set(const BinaryCode& code, const TwistSpec& f,
                                  std::uint64_t seed = kDefaultSeed,
                                  long random_triples = 100000, int threads = 1);

struct MoufangResult {
  bool ok = false;
  std::optional<FactorSetWitness> witness;
  std::uint64_t triples_checked = 0;
};

/// Tests u (v (u w)) = ((u v) u) w on basis triples of the loop. Signs cancel
/// on both sides, so unsigned triples suffice: exhaustive for n <= 5, random
/// samples above.
MoufangResult moufang_check(const LoopSpec& loop, std::uint64_t seed = kDefaultSeed,
                            long trials = 100000);

}  // namespace zee2
