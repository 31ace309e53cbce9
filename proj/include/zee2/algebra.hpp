#pragma once

// The twisted group algebra over (Z_2)^n: exact products with Gaussian
// rational coefficients, the canonical involution, the Euclidean norm,
// center and centralizers, simplicity verdicts, central splitting, the
// norm-composition criterion and signature isomorphisms.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "zee2/gf2.hpp"
#include "zee2/rational.hpp"
#include "zee2/twist.hpp"

namespace zee2 {

enum class Mode { Real, Complex };

/// Sparse element sum_x a_x u_x; no explicit zeros are stored.
class AlgebraElement {
 public:
  explicit AlgebraElement(int arity) : n_(arity) {}
  static AlgebraElement unit(int arity) { return monomial(GroupElement::zero(arity), 1); }
  static AlgebraElement monomial(const GroupElement& x, GaussianRational c);

  int arity() const { return n_; }
  const std::map<std::uint32_t, GaussianRational>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }
  bool is_real() const;

  GaussianRational coeff(std::uint32_t x) const;
  void add_term(std::uint32_t x, const GaussianRational& c);

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  AlgebraElement scaled(const GaussianRational& c) const;

  bool operator==(const AlgebraElement&) const = default;

 private:
  int n_;
  std::map<std::uint32_t, GaussianRational> coeffs_;
};

struct SimplicityVerdict {
  bool computational;
  bool closed_form;
};

struct CompositionReport {
  bool criterion;  // support-based test through the generating function
  bool direct;     // exact N(a b) = N(a) N(b)
};

/// Scalar table of the graded map that absorbs one diagonal signature term:
/// u_x -> i^{x_{i1}} u'_x, verified multiplicative over all pairs.
struct SignatureIso {
  int index;  // 1-based coordinate i1
  std::vector<GaussianRational> scalars;
};

class Algebra {
 public:
  /// Full product support is capped at n <= 16; center/centralizer scans work
  /// up to n = 24. The generating function is attached when phi is symmetric
  /// (closed form for the O/M/Cl families, recovered for custom twists).
  Algebra(TwistSpec spec, Mode mode);

  const TwistSpec& spec() const { return spec_; }
  Mode mode() const { return mode_; }
  int arity() const { return spec_.arity(); }
  const std::optional<GeneratingFunction>& alpha() const { return alpha_; }
  /// True when f(x,x) = alpha(x) everywhere, which makes the norm Euclidean.
  bool norm_is_euclidean() const { return euclidean_; }

  /// u_x u_y = sign * u_{x+y} with sign in {+1,-1}.
  std::pair<int, GroupElement> basis_product(const GroupElement& x, const GroupElement& y) const;

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

  /// Involution u_x -> (-1)^{alpha(x)} u_x, extended linearly. Requires a
  /// generating function.
  AlgebraElement conjugate(const AlgebraElement& a) const;

  /// Euclidean norm sum_x a_x^2 = (a conj(a))_0. Real elements only, and only
  /// when f(x,x) = alpha(x).
  mpq_class norm(const AlgebraElement& a) const;

  struct Center {
    int dimension;
    std::vector<GroupElement> basis;
  };
  /// All x with beta(x, .) = 0; the span of the corresponding u_x is the
  /// center. Requires a generating function.
  Center center() const;

  /// Number of y with beta(x, y) = 0 (dimension of the centralizer of u_x).
  std::uint64_t centralizer_dim(const GroupElement& x) const;

  /// Validates that an element fits this algebra (arity, and real coefficients
  /// in real mode).
  void check_element(const AlgebraElement& a) const;

 private:
  TwistSpec spec_;
  Mode mode_;
  std::optional<GeneratingFunction> alpha_;
  bool euclidean_ = false;
};

/// Simplicity of an O/M-family algebra. The computational verdict scans for
/// anticommuting partners and inspects the square of any homogeneous central
/// element; the closed-form verdict applies the parity rules (complex: the
/// degenerate arities are 4m for O and 4m+2 for M; real: additionally simple
/// when p and q are both odd). The two must agree or a diagnostic is thrown.
SimplicityVerdict is_simple(const Algebra& a);

/// For central u_z (z all-ones) with u_z^2 = +1, returns the complementary
/// idempotents (1+u_z)/2 and (1-u_z)/2. Throws if u_z is not central or if
/// u_z^2 = -1 (the complexification case).
std::pair<AlgebraElement, AlgebraElement> split_central(const Algebra& a);

/// Norm-composition test for a pair of real elements: the support criterion
/// (alpha = 1 on all admissible fourth-order differences) against the exact
/// product test N(a b) = N(a) N(b).
CompositionReport composition_pair(const Algebra& alg, const AlgebraElement& a,
                                   const AlgebraElement& b);

/// Complex mode only: builds and verifies the scalar table of the graded
/// isomorphism onto the twist with the i1-th diagonal term flipped.
SignatureIso signature_iso(const Algebra& a, int i1);

}  // namespace zee2
