#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace zee2 {

/// Exact Gaussian rational a + b*i with arbitrary-precision rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT: implicit by design
  explicit GaussianRational(mpq_class re) : re_(std::move(re)) {}
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
  static GaussianRational from_strings(const std::string& re, const std::string& im) {
    mpq_class r(re), m(im);
    r.canonicalize();
    m.canonicalize();
    return {std::move(r), std::move(m)};
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, mpq_class(-im_)}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  GaussianRational operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }

  bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }

  std::string str() const {
    if (im_ == 0) return re_.get_str();
    return re_.get_str() + (im_ < 0 ? "" : "+") + im_.get_str() + "i";
  }

 private:
  mpq_class re_ = 0;
  mpq_class im_ = 0;
};

}  // namespace zee2
