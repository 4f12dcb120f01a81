#pragma once

// Sparse Laurent polynomials over exact coefficients.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ctrop/core.hpp"
#include "ctrop/rational.hpp"

namespace ctrop {

/// Exponent vector; entries may be negative (Laurent monomials).
using Exponent = std::vector<int>;

inline Exponent unit_exponent(std::size_t nvars, std::size_t var, int power = 1) {
  Exponent e(nvars, 0);
  e[var] = power;
  return e;
}

inline Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

inline int total_degree(const Exponent& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

/// Exact grading sum_k e_k * w_k.
inline Rational grading(const Exponent& e, const std::vector<Rational>& weights) {
  Rational g(0);
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k] != 0) g += weights[k] * e[k];
  return g;
}

template <class Coeff>
class SparsePoly {
 public:
  using Terms = std::map<Exponent, Coeff>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, Coeff c) {
    SparsePoly p(nvars);
    p.add_term(Exponent(nvars, 0), std::move(c));
    return p;
  }
  static SparsePoly variable(std::size_t nvars, std::size_t var) {
    SparsePoly p(nvars);
    p.add_term(unit_exponent(nvars, var), Coeff(1));
    return p;
  }
  static SparsePoly monomial(Exponent e, Coeff c = Coeff(1)) {
    SparsePoly p(e.size());
    p.add_term(std::move(e), std::move(c));
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// The coefficient of e (zero when absent).
  Coeff coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(Exponent e, Coeff c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent length does not match variable count");
    if (ctrop::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (ctrop::is_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly& operator*=(const Coeff& s) {
    if (ctrop::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) { return a *= Coeff(-1); }
  friend SparsePoly operator*(const Coeff& s, SparsePoly a) { return a *= s; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check(b);
    SparsePoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
    return out;
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Highest nonzero homogeneous component with respect to an exact grading.
  SparsePoly initial_form(const std::vector<Rational>& weights) const {
    if (is_zero()) throw PreconditionError("initial_form of the zero polynomial");
    if (weights.size() != nvars_) throw PreconditionError("initial_form: weight length mismatch");
    std::optional<Rational> best;
    for (const auto& [e, c] : terms_) {
      Rational g = grading(e, weights);
      if (!best || g > *best) best = g;
    }
    SparsePoly out(nvars_);
    for (const auto& [e, c] : terms_)
      if (grading(e, weights) == *best) out.add_term(e, c);
    return out;
  }

  /// Initial form for the grading log(weights): compares products prod_k weights_k^{e_k}.
  /// Exact replacement for logarithmic weights; weights must be positive.
  SparsePoly initial_form_multiplicative(const std::vector<Rational>& weights) const {
    if (is_zero()) throw PreconditionError("initial_form of the zero polynomial");
    auto value = [&](const Exponent& e) {
      Rational v(1);
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (weights[k] <= 0) throw PreconditionError("multiplicative weights must be positive");
        for (int p = 0; p < std::abs(e[k]); ++p) {
          if (e[k] > 0)
            v *= weights[k];
          else
            v /= weights[k];
        }
      }
      return v;
    };
    std::optional<Rational> best;
    for (const auto& [e, c] : terms_) {
      Rational v = value(e);
      if (!best || v > *best) best = v;
    }
    SparsePoly out(nvars_);
    for (const auto& [e, c] : terms_)
      if (value(e) == *best) out.add_term(e, c);
    return out;
  }

  /// True when every term has the same grading.
  bool is_homogeneous(const std::vector<Rational>& weights) const {
    std::optional<Rational> g0;
    for (const auto& [e, c] : terms_) {
      Rational g = grading(e, weights);
      if (!g0)
        g0 = g;
      else if (g != *g0)
        return false;
    }
    return true;
  }

  /// Evaluates at a point; negative exponents divide.
  template <class Value>
  Value evaluate(const std::vector<Value>& point) const {
    Value total(0);
    for (const auto& [e, c] : terms_) {
      Value term(c);
      for (std::size_t k = 0; k < e.size(); ++k) {
        for (int p = 0; p < std::abs(e[k]); ++p) {
          if (e[k] > 0)
            term *= point[k];
          else
            term /= point[k];
        }
      }
      total += term;
    }
    return total;
  }

 private:
  void check(const SparsePoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials live in different rings");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

using Poly = SparsePoly<GaussianRational>;
using RationalPoly = SparsePoly<Rational>;

/// A multiplicative map sending source variable k to scalar_k * x^{image_k} in the target ring.
template <class Coeff>
class MonomialMap {
 public:
  MonomialMap() = default;
  MonomialMap(std::size_t source_vars, std::size_t target_vars)
      : target_vars_(target_vars), images_(source_vars, Exponent(target_vars, 0)), scalars_(source_vars, Coeff(1)) {}

  std::size_t source_vars() const { return images_.size(); }
  std::size_t target_vars() const { return target_vars_; }

  void set(std::size_t var, Exponent image, Coeff scalar) {
    images_.at(var) = std::move(image);
    scalars_.at(var) = std::move(scalar);
  }
  const Exponent& image(std::size_t var) const { return images_.at(var); }
  const Coeff& scalar(std::size_t var) const { return scalars_.at(var); }

  /// Image of a single monomial together with its accumulated scalar.
  std::pair<Exponent, Coeff> apply_monomial(const Exponent& e) const {
    Exponent out(target_vars_, 0);
    Coeff s(1);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      for (std::size_t t = 0; t < target_vars_; ++t) out[t] += e[k] * images_[k][t];
      for (int p = 0; p < std::abs(e[k]); ++p) {
        if (e[k] > 0)
          s *= scalars_[k];
        else
          s /= scalars_[k];
      }
    }
    return {std::move(out), std::move(s)};
  }

  /// Applies the map term by term; like target monomials are grouped and summed.
  SparsePoly<Coeff> apply(const SparsePoly<Coeff>& p) const {
    if (p.nvars() != source_vars()) throw PreconditionError("MonomialMap: source ring mismatch");
    SparsePoly<Coeff> out(target_vars_);
    for (const auto& [e, c] : p.terms()) {
      auto [img, s] = apply_monomial(e);
      out.add_term(std::move(img), c * s);
    }
    return out;
  }

 private:
  std::size_t target_vars_ = 0;
  std::vector<Exponent> images_;
  std::vector<Coeff> scalars_;
};

// ---- Variables indexed by D --------------------------------------------------

/// x_{a,b} in the ring over D (any order of a, b; resolved canonically).
inline Poly x_var(Label a, Label b, int n) {
  return Poly::variable(static_cast<std::size_t>(n) * n, pair_index(a, b, n));
}

inline std::string format_poly_D(const Poly& p, int n) {
  const auto pairs = enumerate_D(n);
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    os << (first ? "" : " + ") << c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      os << "*x[" << to_string(pairs[k]) << "]";
      if (e[k] != 1) os << "^" << e[k];
    }
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace ctrop
