#pragma once

// Twisting functions on (Z_2)^n and their analysis: the O/M/Clifford
// families with signatures, the quasialgebra maps beta and phi, generating
// functions (closed forms and recovery from a twist), the monomial-wise
// twist construction from a cubic polynomial, coboundary testing, and
// equivalence reports.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "zee2/bits.hpp"
#include "zee2/gf2.hpp"

namespace zee2 {

enum class Family { O, M, Cl, Custom };

std::string family_name(Family f);
Family family_from_name(std::string_view s);

// Raw closed-form evaluators, valid for any 1 <= n <= kMaxArity. The cubic
// part is sum_{i<j<k} (x_i x_j y_k + x_i y_j x_k + y_i x_j x_k); the
// quadratic part is sum_{i<=j} x_i y_j. The octonion-series twist is
// cubic + quadratic, the M-series twist is the cubic part alone, and the
// Clifford twist is the quadratic part alone.

inline int twist_cubic_part(std::uint32_t x, std::uint32_t y) {
  const int w = std::popcount(x);
  const int eq = std::popcount(x & y);
  const int ne = std::popcount(y) - eq;
  const auto choose2_parity = [](int m) { return (m * (m - 1) / 2) & 1; };
  return (eq * choose2_parity(w - 1) + ne * choose2_parity(w)) & 1;
}

inline int twist_quadratic_part(std::uint32_t x, std::uint32_t y) {
  return parity_of(prefix_parity(x) & y);
}

inline int twist_octonion(std::uint32_t x, std::uint32_t y) {
  return twist_cubic_part(x, y) ^ twist_quadratic_part(x, y);
}

inline int twist_mseries(std::uint32_t x, std::uint32_t y) {
  return twist_cubic_part(x, y);
}

inline int twist_clifford(std::uint32_t x, std::uint32_t y) {
  return twist_quadratic_part(x, y);
}

// Weight profiles of the closed-form generating functions (4-periodic).
inline int alpha_octonion_weight(int w) { return (w & 3) != 0; }
inline int alpha_mseries_weight(int w) { return (w & 3) == 1; }
inline int alpha_clifford_weight(int w) { return (w & 3) == 1 || (w & 3) == 2; }

/// A twisting function together with its provenance. For the O/M/Cl families
/// the signature parameter p in 0..n fixes the generator squares: u_i^2 = +1
/// for i <= p and -1 for i > p. Truth tables for f, beta (and phi when small)
/// are built eagerly for n <= Cochain2::kDenseArityCap so that evaluation is
/// lock-free and shareable across threads.
class TwistSpec {
 public:
  static constexpr int kPhiTableArityCap = 8;

  /// O/M require 3 <= n <= 24, Cl requires 1 <= n <= 24; 0 <= p <= n.
  static TwistSpec make(Family family, int n, int p);
  /// Arbitrary twisting function; requires unitality f(0,.) = f(.,0) = 0 and
  /// a dense table (n <= Cochain2::kDenseArityCap).
  static TwistSpec custom(Cochain2 f);
  /// Monomial-wise twist of a cubic polynomial: x_i x_j x_k contributes
  /// x_i x_j y_k + x_i y_j x_k + y_i x_j x_k, x_i x_j contributes x_i y_j,
  /// x_i contributes x_i y_i. The result satisfies f(x,x) = alpha(x).
  static TwistSpec from_alpha(const CubicPoly& alpha);
  /// The twist (x,y) -> f(T(x), T(y)).
  TwistSpec pullback(const Gl2Map& map) const;

  Family family() const { return family_; }
  int arity() const { return n_; }
  /// Signature parameter; meaningful for the O/M/Cl families only.
  int signature() const { return p_; }

  int f(std::uint32_t x, std::uint32_t y) const {
    if (f_table_) return (*f_table_)(x, y);
    return closed_f(x, y);
  }

  /// Commutation bit: beta(x,y) = f(x,y) + f(y,x).
  int beta(std::uint32_t x, std::uint32_t y) const {
    if (beta_table_) return (*beta_table_)(x, y);
    // Signature terms are symmetric, so beta never depends on p; for the
    // closed families it reduces to the weight profile of alpha.
    const int wx = std::popcount(x), wy = std::popcount(y), wxy = std::popcount(x ^ y);
    switch (family_) {
      case Family::O:
        return alpha_octonion_weight(wxy) ^ alpha_octonion_weight(wx) ^ alpha_octonion_weight(wy);
      case Family::M:
        return alpha_mseries_weight(wxy) ^ alpha_mseries_weight(wx) ^ alpha_mseries_weight(wy);
      case Family::Cl:
        return alpha_clifford_weight(wxy) ^ alpha_clifford_weight(wx) ^ alpha_clifford_weight(wy);
      case Family::Custom:
        break;
    }
    return f(x, y) ^ f(y, x);
  }

  /// Association bit: phi(x,y,z) = f(y,z)+f(x+y,z)+f(x,y+z)+f(x,y).
  int phi(std::uint32_t x, std::uint32_t y, std::uint32_t z) const {
    if (!phi_table_.empty()) {
      const std::uint64_t i =
          ((static_cast<std::uint64_t>(x) << n_ | y) << n_) | z;
      return static_cast<int>((phi_table_[i >> 6] >> (i & 63)) & 1);
    }
    return f(y, z) ^ f(x ^ y, z) ^ f(x, y ^ z) ^ f(x, y);
  }

  /// The commutation bit as a cochain (dense for n <= 12, lazy above).
  Cochain2 beta_cochain() const;
  /// The twisting function as a cochain.
  Cochain2 f_cochain() const;

  bool operator==(const TwistSpec& o) const;

 private:
  TwistSpec(Family family, int n, int p);
  int closed_f(std::uint32_t x, std::uint32_t y) const;
  void build_tables();

  Family family_;
  int n_;
  int p_;
  std::uint32_t sig_mask_ = 0;  // diagonal correction applied on top of the closed form
  std::shared_ptr<const Cochain2> f_table_;
  std::shared_ptr<const Cochain2> beta_table_;
  std::vector<std::uint64_t> phi_table_;  // 2^(3n) bits when n <= kPhiTableArityCap
};

/// Generating function of a twisted algebra: a cubic polynomial alpha whose
/// polarizations reproduce beta and phi. Normalized means alpha(0) = 0 and
/// alpha(e_i) = 1 for every i.
struct GeneratingFunction {
  CubicPoly alpha;
  bool normalized = false;

  int eval(std::uint32_t x) const { return alpha.eval(x); }
  int arity() const { return alpha.arity(); }
};

/// Closed-form generating functions of the three families.
GeneratingFunction closed_alpha(Family family, int n);

/// Thrown when a twist has a non-symmetric association bit, which rules out
/// a generating function. Carries a witness triple.
class SymmetryError : public std::runtime_error {
 public:
  SymmetryError(std::uint32_t x, std::uint32_t y, std::uint32_t z, std::string msg)
      : std::runtime_error(std::move(msg)), x(x), y(y), z(z) {}
  std::uint32_t x, y, z;
};

/// Thrown if the weight-induction recovery is path-dependent. Indicates an
/// internal inconsistency, not a legal input.
class ConsistencyError : public std::logic_error {
 public:
  ConsistencyError(std::uint32_t x, std::string msg)
      : std::logic_error(std::move(msg)), x(x) {}
  std::uint32_t x;
};

/// Recovers the unique normalized generating function of a twist whose phi is
/// symmetric. Symmetry is certified exhaustively for n <= 6, and on basis
/// triples plus `samples` random triples above. The recovered alpha is
/// re-verified: the descent is path-independent, delta(alpha) = beta on all
/// pairs, and delta2(alpha) = phi on all triples (n <= 8) or basis triples
/// plus samples (n > 8).
GeneratingFunction recover_alpha(const TwistSpec& spec,
                                 std::uint64_t seed = kDefaultSeed,
                                 int samples = 10000);

/// Dense table of the monomial-wise twist of alpha (see TwistSpec::from_alpha).
Cochain2 fakset_cochain(const CubicPoly& alpha);

/// If g is symmetric, vanishes on the diagonal and is the coboundary of some
/// b, returns one such b (with b(0) = b(e_i) = 0, rebuilt by weight induction
/// and verified on all pairs). Empty optional means g is not a coboundary.
std::optional<Cochain1> is_coboundary(const Cochain2& g);

struct EquivalenceReport {
  enum class Verdict { Equivalent, Unknown };

  bool beta_equal = false;
  bool phi_equal = false;
  /// Present when f - f' decomposes as delta(b) + sum_{i in S} x_i y_i.
  std::optional<Cochain1> coboundary;
  std::uint32_t signature_indices = 0;  // the set S as a mask
  Verdict verdict = Verdict::Unknown;
};

/// Decides whether two twists carry the same quasialgebra structure by
/// decomposing their difference into a coboundary and a diagonal signature
/// part. Equal-arity twists only.
EquivalenceReport equivalence_report(const TwistSpec& f, const TwistSpec& g);

/// True iff alpha is invariant under all coordinate permutations; checked
/// structurally (each degree layer full or empty) and confirmed by evaluating
/// on one representative per weight class.
bool is_sn_invariant(const GeneratingFunction& gf);

}  // namespace zee2
