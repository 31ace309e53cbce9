#include "zee2/intpoly.hpp"

#include <stdexcept>

namespace zee2 {

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : factors) d += static_cast<int>(e);
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors.reserve(factors.size() + o.factors.size());
  std::size_t i = 0, j = 0;
  while (i < factors.size() && j < o.factors.size()) {
    if (factors[i].first < o.factors[j].first)
      r.factors.push_back(factors[i++]);
    else if (factors[i].first > o.factors[j].first)
      r.factors.push_back(o.factors[j++]);
    else {
      r.factors.emplace_back(factors[i].first, factors[i].second + o.factors[j].second);
      ++i;
      ++j;
    }
  }
  for (; i < factors.size(); ++i) r.factors.push_back(factors[i]);
  for (; j < o.factors.size(); ++j) r.factors.push_back(o.factors[j]);
  return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.factors < b.factors;
}

IntPoly IntPoly::constant(mpz_class c) {
  IntPoly p;
  if (c != 0) p.terms_.emplace(Monomial::one(), std::move(c));
  return p;
}

IntPoly IntPoly::variable(VarId v) {
  IntPoly p;
  p.terms_.emplace(Monomial::var(v), mpz_class(1));
  return p;
}

void IntPoly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  IntPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

IntPoly IntPoly::operator-() const {
  IntPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  IntPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

mpz_class IntPoly::eval(const std::function<mpz_class(VarId)>& assignment) const {
  mpz_class total = 0;
  for (const auto& [m, c] : terms_) {
    mpz_class v = c;
    for (const auto& [var, exp] : m.factors) {
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), assignment(var).get_mpz_t(), exp);
      v *= pw;
    }
    total += v;
  }
  return total;
}

std::string IntPoly::str(const std::function<std::string(VarId)>& name) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    mpz_class abs_c = neg ? mpz_class(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const bool unit = abs_c == 1 && !m.factors.empty();
    if (!unit) out += abs_c.get_str();
    bool first = unit;
    for (const auto& [var, exp] : m.factors) {
      if (!first || !unit) out += "*";
      out += name(var);
      if (exp > 1) out += "^" + std::to_string(exp);
      first = false;
    }
  }
  return out;
}

}  // namespace zee2
