#pragma once

// Exact multivariate polynomials with arbitrary-precision integer
// coefficients over commuting variables identified by numeric ids.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace zee2 {

using VarId = std::uint32_t;

/// Product of variable powers, kept sorted by variable id with positive
/// exponents only.
struct Monomial {
  std::vector<std::pair<VarId, std::uint32_t>> factors;

  static Monomial one() { return {}; }
  static Monomial var(VarId v, std::uint32_t exp = 1) { return {{{v, exp}}}; }

  int total_degree() const;
  Monomial operator*(const Monomial& o) const;
  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order: by total degree, then by the factor sequence.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class IntPoly {
 public:
  IntPoly() = default;
  static IntPoly constant(mpz_class c);
  static IntPoly variable(VarId v);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, mpz_class, MonomialOrder>& terms() const { return terms_; }

  void add_term(const Monomial& m, const mpz_class& c);

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly squared() const { return *this * *this; }
  IntPoly operator-() const;

  bool operator==(const IntPoly& o) const { return terms_ == o.terms_; }

  /// Exact evaluation under a variable assignment.
  mpz_class eval(const std::function<mpz_class(VarId)>& assignment) const;

  /// Rendering with a caller-supplied variable name map, canonical term order.
  std::string str(const std::function<std::string(VarId)>& name) const;

 private:
  std::map<Monomial, mpz_class, MonomialOrder> terms_;
};

}  // namespace zee2
