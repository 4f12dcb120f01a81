#pragma once

// Labels, the pair set D, weight vectors over D and the group W.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctrop/rational.hpp"

namespace ctrop {

/// Raised when an operation's documented precondition is violated.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element of N. Positive values are 1..n, negative values are the barred labels.
class Label {
 public:
  constexpr Label() = default;
  constexpr explicit Label(int value) : value_(value) {}

  constexpr int value() const { return value_; }
  constexpr int abs() const { return value_ < 0 ? -value_ : value_; }
  constexpr bool positive() const { return value_ > 0; }
  constexpr Label bar() const { return Label(-value_); }

  friend constexpr bool operator==(Label, Label) = default;
  /// Plain signed-integer order; only used for container ordering, never for prec.
  friend constexpr auto operator<=>(Label a, Label b) { return a.value_ <=> b.value_; }

 private:
  int value_ = 0;
};

inline std::string to_string(Label a) {
  return a.positive() ? std::to_string(a.value()) : std::to_string(a.abs()) + "'";
}

inline void check_size(int n) {
  if (n < 3) throw PreconditionError("problem size n must be at least 3, got " + std::to_string(n));
}

inline bool valid_label(Label a, int n) { return a.value() != 0 && a.abs() <= n; }

/// Position of a in 1 < ... < n < 1bar < ... < nbar. Also used as a dense slot index.
inline int prec_rank(Label a, int n) { return a.positive() ? a.value() - 1 : n + a.abs() - 1; }

/// Position of a in 1 < ... < n < nbar < ... < 1bar.
inline int dotprec_rank(Label a, int n) { return a.positive() ? a.value() - 1 : 2 * n - a.abs(); }

inline Label label_at_prec_rank(int rank, int n) {
  return rank < n ? Label(rank + 1) : Label(-(rank - n + 1));
}

inline Label label_at_dotprec_rank(int rank, int n) {
  return rank < n ? Label(rank + 1) : Label(-(2 * n - rank));
}

enum class Order { prec, dotprec };

inline int rank(Order order, Label a, int n) {
  return order == Order::prec ? prec_rank(a, n) : dotprec_rank(a, n);
}

/// Three-way comparison of labels in the chosen order.
inline std::strong_ordering compare(Order order, Label a, Label b, int n) {
  return rank(order, a, n) <=> rank(order, b, n);
}

/// The cyclic successor a++ in prec (nbar++ = 1).
inline Label successor(Label a, int n) { return label_at_prec_rank((prec_rank(a, n) + 1) % (2 * n), n); }

/// All 2n labels in prec order.
inline std::vector<Label> all_labels(int n) {
  std::vector<Label> out;
  for (int r = 0; r < 2 * n; ++r) out.push_back(label_at_prec_rank(r, n));
  return out;
}

/// Labels sorted by the given order.
inline std::vector<Label> sorted_by(Order order, std::vector<Label> labels, int n) {
  std::sort(labels.begin(), labels.end(),
            [&](Label a, Label b) { return rank(order, a, n) < rank(order, b, n); });
  return labels;
}

/// A canonical element of D: (i, j) with 1 <= i < j <= n, or (i, jbar) with i <= j.
struct Pair {
  Label first;
  Label second;

  friend constexpr bool operator==(const Pair&, const Pair&) = default;
  friend constexpr auto operator<=>(const Pair&, const Pair&) = default;
};

inline bool in_D(Label a, Label b) {
  if (!a.positive()) return false;
  if (b.positive()) return a.value() < b.value();
  return a.value() <= b.abs();
}

/// The unique element of {(a,b), (b,a), (abar,bbar), (bbar,abar)} lying in D.
inline Pair canonicalize(Label a, Label b) {
  if (a == b) throw PreconditionError("canonicalize: labels must be distinct");
  if (a.value() == 0 || b.value() == 0) throw PreconditionError("canonicalize: zero label");
  if (in_D(a, b)) return {a, b};
  if (in_D(b, a)) return {b, a};
  if (in_D(a.bar(), b.bar())) return {a.bar(), b.bar()};
  return {b.bar(), a.bar()};
}

inline std::string to_string(const Pair& p) {
  return std::to_string(p.first.value()) + "," + std::to_string(p.second.value());
}

/// D in its fixed order: positive pairs lexicographically, then mixed pairs by (first, |second|).
inline std::vector<Pair> enumerate_D(int n) {
  check_size(n);
  std::vector<Pair> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({Label(i), Label(j)});
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.push_back({Label(i), Label(-j)});
  return out;
}

/// Position of a canonical pair inside enumerate_D(n).
inline int pair_index(const Pair& p, int n) {
  const int i = p.first.value();
  if (p.second.positive()) {
    const int j = p.second.value();
    // pairs (i', j') with i' < i come first: sum_{i'<i} (n - i')
    return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
  }
  const int j = p.second.abs();
  const int base = n * (n - 1) / 2;
  return base + (i - 1) * n - (i - 1) * (i - 2) / 2 + (j - i);
}

inline int pair_index(Label a, Label b, int n) { return pair_index(canonicalize(a, b), n); }

/// A point of R^D with exact rational coordinates, stored densely in enumerate_D order.
/// Lookups at non-canonical (a, b) resolve to the canonical representative, so
/// w(a,b) = w(abar,bbar) holds by construction; w(a,a) = 0.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(int n) : n_(n), coords_(static_cast<std::size_t>(n) * n, Rational(0)) { check_size(n); }
  WeightVector(int n, std::vector<Rational> coords) : n_(n), coords_(std::move(coords)) {
    check_size(n);
    if (coords_.size() != static_cast<std::size_t>(n) * n)
      throw PreconditionError("WeightVector needs exactly n^2 coordinates");
  }

  int n() const { return n_; }
  std::size_t size() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }

  const Rational& operator[](std::size_t idx) const { return coords_[idx]; }
  Rational& operator[](std::size_t idx) { return coords_[idx]; }

  const Rational& at(const Pair& p) const { return coords_[pair_index(p, n_)]; }
  Rational& at(const Pair& p) { return coords_[pair_index(p, n_)]; }

  Rational operator()(Label a, Label b) const {
    if (a == b) return Rational(0);
    return coords_[pair_index(a, b, n_)];
  }

  WeightVector& operator+=(const WeightVector& o) {
    same_size(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
    return *this;
  }
  WeightVector& operator-=(const WeightVector& o) {
    same_size(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
    return *this;
  }
  WeightVector& operator*=(const Rational& c) {
    for (auto& x : coords_) x *= c;
    return *this;
  }
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend WeightVector operator*(const Rational& c, WeightVector a) { return a *= c; }

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.n_ == b.n_ && a.coords_ == b.coords_;
  }

  static WeightVector all_ones(int n) {
    WeightVector w(n);
    for (auto& x : w.coords_) x = 1;
    return w;
  }

 private:
  void same_size(const WeightVector& o) const {
    if (o.n_ != n_) throw PreconditionError("WeightVector size mismatch");
  }

  int n_ = 0;
  std::vector<Rational> coords_;
};

/// An element tau of W: a permutation of N commuting with bar, stored by the images of 1..n.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<Label> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    std::vector<bool> seen(n + 1, false);
    for (Label a : images_) {
      if (!valid_label(a, n) || seen[a.abs()])
        throw PreconditionError("GroupElement: images must be injective on absolute values");
      seen[a.abs()] = true;
    }
  }

  static GroupElement identity(int n) {
    std::vector<Label> im;
    for (int i = 1; i <= n; ++i) im.emplace_back(i);
    return GroupElement(std::move(im));
  }

  /// The transposition i <-> j (and ibar <-> jbar).
  static GroupElement swap(int n, int i, int j) {
    auto im = identity(n).images_;
    std::swap(im[i - 1], im[j - 1]);
    return GroupElement(std::move(im));
  }

  template <class Rng>
  static GroupElement random(int n, Rng& rng) {
    std::vector<Label> im;
    for (int i = 1; i <= n; ++i) im.emplace_back(i);
    std::shuffle(im.begin(), im.end(), rng);
    std::bernoulli_distribution flip(0.5);
    for (auto& a : im)
      if (flip(rng)) a = a.bar();
    return GroupElement(std::move(im));
  }

  /// All 2^n n! elements.
  static std::vector<GroupElement> enumerate(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<GroupElement> out;
    do {
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<Label> im;
        for (int k = 0; k < n; ++k) im.emplace_back((mask >> k) & 1 ? -perm[k] : perm[k]);
        out.emplace_back(std::move(im));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

  int n() const { return static_cast<int>(images_.size()); }
  const std::vector<Label>& images() const { return images_; }

  Label operator()(Label a) const {
    const Label img = images_[a.abs() - 1];
    return a.positive() ? img : img.bar();
  }

  /// (this * other)(a) = this(other(a)).
  GroupElement operator*(const GroupElement& other) const {
    std::vector<Label> im;
    for (int i = 1; i <= n(); ++i) im.push_back((*this)(other(Label(i))));
    return GroupElement(std::move(im));
  }

  GroupElement inverse() const {
    std::vector<Label> im(images_.size());
    for (int i = 1; i <= n(); ++i) {
      const Label img = images_[i - 1];
      im[img.abs() - 1] = img.positive() ? Label(i) : Label(-i);
    }
    return GroupElement(std::move(im));
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<Label> images_;
};

inline Pair act_pair(const GroupElement& tau, const Pair& p) { return canonicalize(tau(p.first), tau(p.second)); }

/// tau(w)_{tau(a),tau(b)} = w_{a,b}.
inline WeightVector act(const GroupElement& tau, const WeightVector& w) {
  if (tau.n() != w.n()) throw PreconditionError("act: size mismatch");
  WeightVector out(w.n());
  for (const Pair& p : enumerate_D(w.n())) out.at(act_pair(tau, p)) = w.at(p);
  return out;
}

/// (w_i)_{a,b} = |{a,b} ∩ {i, ibar}|.
inline std::vector<WeightVector> lineality_basis(int n) {
  check_size(n);
  std::vector<WeightVector> out;
  const auto pairs = enumerate_D(n);
  for (int i = 1; i <= n; ++i) {
    WeightVector w(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      w[k] = int(pairs[k].first.abs() == i) + int(pairs[k].second.abs() == i);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace ctrop
