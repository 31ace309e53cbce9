#pragma once

// Bit-level linear algebra over Z_2: group elements of (Z_2)^n packed as
// masks, invertible linear maps, Boolean cochains in 1..4 arguments, the
// coboundary operator and its higher-order relatives, and algebraic normal
// forms of Boolean functions.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zee2/bits.hpp"

namespace zee2 {

/// An element of (Z_2)^n. Coordinate x_i (1-based) lives in bit i-1; addition
/// is bitwise XOR. Only the low n bits may be set.
class GroupElement {
 public:
  GroupElement(std::uint32_t bits, int arity) : bits_(bits), n_(arity) {
    if (arity < 1 || arity > kMaxArity)
      throw std::invalid_argument("GroupElement: arity out of range");
    if (bits & ~low_n_mask(arity))
      throw std::invalid_argument("GroupElement: bits outside arity");
  }

  static GroupElement zero(int arity) { return {0u, arity}; }
  /// e_i, with 1-based coordinate index i.
  static GroupElement basis(int i, int arity) {
    if (i < 1 || i > arity) throw std::invalid_argument("basis index");
    return {std::uint32_t{1} << (i - 1), arity};
  }
  static GroupElement all_ones(int arity) { return {low_n_mask(arity), arity}; }
  static GroupElement parse(std::string_view s) {
    return {parse_bit_string(s), static_cast<int>(s.size())};
  }

  std::uint32_t bits() const { return bits_; }
  int arity() const { return n_; }
  int weight() const { return std::popcount(bits_); }
  /// Value of coordinate x_i, 1-based.
  int coord(int i) const { return (bits_ >> (i - 1)) & 1; }
  std::string str() const { return to_bit_string(bits_, n_); }

  friend GroupElement operator+(GroupElement a, GroupElement b) {
    if (a.n_ != b.n_) throw std::invalid_argument("GroupElement: arity mismatch");
    return {a.bits_ ^ b.bits_, a.n_};
  }
  bool operator==(const GroupElement&) const = default;

 private:
  std::uint32_t bits_;
  int n_;
};

/// Invertible linear map (Z_2)^n -> (Z_2)^n. Row i holds the matrix row
/// T[i][*] as a mask; the image has coordinate i = parity(rows[i] & x).
/// Invertibility is established by Gaussian elimination at construction.
class Gl2Map {
 public:
  Gl2Map(int n, std::vector<std::uint32_t> rows);
  static Gl2Map identity(int n);

  int arity() const { return n_; }
  const std::vector<std::uint32_t>& rows() const { return rows_; }

  std::uint32_t apply(std::uint32_t x) const {
    std::uint32_t y = 0;
    for (int i = 0; i < n_; ++i)
      y |= static_cast<std::uint32_t>(parity_of(rows_[static_cast<std::size_t>(i)] & x)) << i;
    return y;
  }
  GroupElement apply(const GroupElement& x) const {
    if (x.arity() != n_) throw std::invalid_argument("Gl2Map: arity mismatch");
    return {apply(x.bits()), n_};
  }

  Gl2Map inverse() const;

 private:
  int n_;
  std::vector<std::uint32_t> rows_;
};

/// Z_2-valued function of one argument, stored as a truth table of 2^n bits.
class Cochain1 {
 public:
  explicit Cochain1(int n);
  template <class F>
  static Cochain1 tabulate(int n, F&& f) {
    Cochain1 t(n);
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x)
      if (f(x) & 1) t.flip(x);
    return t;
  }

  int arity() const { return n_; }
  std::uint64_t domain_size() const { return std::uint64_t{1} << n_; }

  int operator()(std::uint32_t x) const {
    return static_cast<int>((bits_[x >> 6] >> (x & 63)) & 1);
  }
  void set(std::uint32_t x, int v);
  void flip(std::uint32_t x) { bits_[x >> 6] ^= std::uint64_t{1} << (x & 63); }

  bool is_zero() const;
  bool operator==(const Cochain1&) const = default;

  Cochain1 operator^(const Cochain1& o) const;

  const std::vector<std::uint64_t>& words() const { return bits_; }
  std::vector<std::uint64_t>& words() { return bits_; }

 private:
  int n_;
  std::vector<std::uint64_t> bits_;
};

/// Z_2-valued function of two arguments. Dense truth table of 2^(2n) bits for
/// n <= kDenseArityCap; evaluator-backed above that.
class Cochain2 {
 public:
  static constexpr int kDenseArityCap = 12;

  template <class F>
  static Cochain2 dense(int n, F&& f) {
    Cochain2 c = dense_zero(n);
    const std::uint32_t size = std::uint32_t{1} << n;
    for (std::uint32_t x = 0; x < size; ++x)
      for (std::uint32_t y = 0; y < size; ++y)
        if (f(x, y) & 1) c.flip(x, y);
    return c;
  }
  static Cochain2 dense_zero(int n);
  static Cochain2 dense_from_rows(int n, std::vector<std::uint64_t> rows);
  static Cochain2 lazy(int n, std::function<int(std::uint32_t, std::uint32_t)> f);

  int arity() const { return n_; }
  bool is_dense() const { return !bits_.empty(); }

  int operator()(std::uint32_t x, std::uint32_t y) const {
    if (is_dense()) {
      const std::uint64_t i = (static_cast<std::uint64_t>(x) << n_) | y;
      return static_cast<int>((bits_[i >> 6] >> (i & 63)) & 1);
    }
    return eval_(x, y) & 1;
  }

  /// Dense mode only; used by table builders before the value is shared.
  void flip(std::uint32_t x, std::uint32_t y);

  bool is_zero() const;
  bool equals_dense(const Cochain2& o) const;

  const std::vector<std::uint64_t>& words() const { return bits_; }

 private:
  Cochain2(int n, std::vector<std::uint64_t> bits,
           std::function<int(std::uint32_t, std::uint32_t)> eval)
      : n_(n), bits_(std::move(bits)), eval_(std::move(eval)) {}

  int n_;
  std::vector<std::uint64_t> bits_;
  std::function<int(std::uint32_t, std::uint32_t)> eval_;
};

/// Evaluator-backed function of three arguments; never materialized.
class Cochain3 {
 public:
  Cochain3(int n, std::function<int(std::uint32_t, std::uint32_t, std::uint32_t)> f)
      : n_(n), eval_(std::move(f)) {}
  int arity() const { return n_; }
  int operator()(std::uint32_t x, std::uint32_t y, std::uint32_t z) const {
    return eval_(x, y, z) & 1;
  }

 private:
  int n_;
  std::function<int(std::uint32_t, std::uint32_t, std::uint32_t)> eval_;
};

/// Evaluator-backed function of four arguments; never materialized.
class Cochain4 {
 public:
  Cochain4(int n,
           std::function<int(std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t)> f)
      : n_(n), eval_(std::move(f)) {}
  int arity() const { return n_; }
  int operator()(std::uint32_t x, std::uint32_t y, std::uint32_t z, std::uint32_t t) const {
    return eval_(x, y, z, t) & 1;
  }

 private:
  int n_;
  std::function<int(std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t)> eval_;
};

/// Algebraic normal form of a Boolean function: XOR of monomials, each a mask
/// of participating coordinates (mask 0 is the constant term). Monomials are
/// kept in canonical order: degree descending, then lexicographic by the
/// increasing index tuple.
struct AnfPoly {
  int n = 0;
  std::vector<std::uint32_t> monomials;

  /// Max monomial degree; -1 for the zero polynomial.
  int degree() const;
  int eval(std::uint32_t x) const;
  Cochain1 truth_table() const;
  /// ASCII rendering, e.g. "x1*x2*x3 + x1*x2 + x1"; "0" when empty.
  std::string str() const;
};

/// Canonical monomial order used everywhere: degree descending, then
/// lexicographic on the increasing tuple of 1-based indices.
bool monomial_before(std::uint32_t a, std::uint32_t b);
std::string monomial_str(std::uint32_t mono);

/// Moebius transform of a truth table. Involutive against truth_table().
AnfPoly anf(const Cochain1& t);

/// Polynomial function (Z_2)^n -> Z_2 of degree <= 3 with no constant term.
/// Monomial masks have 1..3 bits set; the set is canonically ordered.
class CubicPoly {
 public:
  explicit CubicPoly(int n);
  static CubicPoly from_monomials(int n, std::vector<std::uint32_t> monos);
  /// Throws if the polynomial has a constant term or degree above 3.
  static CubicPoly from_anf(const AnfPoly& p);

  int arity() const { return n_; }
  const std::vector<std::uint32_t>& monomials() const { return monos_; }
  int degree() const;

  /// XOR-toggles a monomial in or out.
  void toggle(std::uint32_t mono);

  int eval(std::uint32_t x) const;
  Cochain1 truth_table() const;
  std::string str() const;

  bool operator==(const CubicPoly&) const = default;

 private:
  int n_;
  std::vector<std::uint32_t> monos_;
};

// Coboundary-type operators. delta1 is the usual group-cohomology coboundary
// of a 1-cochain; delta2 on a 2-cochain is the usual coboundary (four-term
// sum); delta2 on a function of one argument is the seven-term polarization
// whose vanishing characterizes degree <= 2; delta3 is the polarization over
// all subsets of four arguments, whose vanishing characterizes degree <= 3.
// On functions vanishing at 0 (every generating function) delta3 reduces to
// the fifteen nonempty terms.

Cochain2 delta1(const Cochain1& b);
Cochain3 delta2(const Cochain2& f);
Cochain3 delta2(const Cochain1& a);
Cochain3 delta2(const CubicPoly& a);
Cochain4 delta3(const Cochain1& a);
Cochain4 delta3(const CubicPoly& a);

/// Defect of linearity of a 2-cochain in its first argument:
/// (x,y,z) -> b(x+y,z)+b(x,z)+b(y,z).
Cochain3 linearity_defect_first(const Cochain2& b);
/// Same in the second argument: (x,y,z) -> b(x,y+z)+b(x,y)+b(x,z).
Cochain3 linearity_defect_second(const Cochain2& b);

}  // namespace zee2
