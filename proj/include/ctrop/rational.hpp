#pragma once

// Exact rationals (GMP) and Gaussian rationals.

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ctrop {

using Rational = mpq_class;
using Integer = mpz_class;

/// p/q in lowest terms.
inline Rational make_rational(long p, long q = 1) {
  if (q == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Parses "p/q", "p" or "-p/q". The result is canonicalized (gcd 1, q > 0).
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  Rational r;
  if (r.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

/// Always prints "p/q" with q > 0, including integers ("3/1").
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline int sign(const Rational& r) { return sgn(r); }

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit from real
  GaussianRational(long re) : re_(re) {}                 // NOLINT
  GaussianRational(int re) : re_(re) {}                  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
    if (norm == 0) throw std::domain_error("division by zero");
    Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
    Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {Rational(-a.re_), Rational(-a.im_)}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& c) {
    if (c.im_ == 0) return os << c.re_;
    if (c.re_ == 0) return os << c.im_ << "i";
    return os << "(" << c.re_ << (c.im_ > 0 ? "+" : "") << c.im_ << "i)";
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Zero test shared by every coefficient type used in SparsePoly.
inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const GaussianRational& c) { return c.is_zero(); }

}  // namespace ctrop
