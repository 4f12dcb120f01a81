#pragma once

// The cluster configuration space in u-coordinates over D*.

#include <gmpxx.h>

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ctrop/core.hpp"
#include "ctrop/ideal.hpp"
#include "ctrop/polygon.hpp"
#include "ctrop/tropical.hpp"

namespace ctrop {

// ---- D* and the projection rho --------------------------------------------------------------

/// D without the pairs (i, i+1) and (1, nbar).
inline std::vector<Pair> d_star(int n) {
  check_size(n);
  std::vector<Pair> out;
  for (const Pair& p : enumerate_D(n)) {
    if (successor(p.first, n) == p.second || successor(p.second, n) == p.first) continue;
    out.push_back(p);
  }
  return out;
}

inline std::size_t d_star_size(int n) { return static_cast<std::size_t>(n) * n - n; }

/// Index in d_star(n) of the representative of {(a,b),(b,a),(abar,bbar),(bbar,abar)}.
inline int d_star_index(Label a, Label b, int n) {
  if (a == b || successor(a, n) == b || successor(b, n) == a)
    throw PreconditionError("d_star_index: pair " + to_string(a) + "," + to_string(b) + " has no u-coordinate");
  const Pair p = canonicalize(a, b);
  const auto ds = d_star(n);
  for (std::size_t k = 0; k < ds.size(); ++k)
    if (ds[k].first == p.first && ds[k].second == p.second) return static_cast<int>(k);
  throw PreconditionError("d_star_index: pair outside D*");
}

/// rho(w)_{a,b} = w_{a++,b} + w_{a,b++} - w_{a,b} - w_{a++,b++}.
inline std::vector<Rational> rho(const WeightVector& w) {
  const int n = w.n();
  std::vector<Rational> out;
  for (const Pair& p : d_star(n)) {
    const Label a = p.first, b = p.second, a2 = successor(a, n), b2 = successor(b, n);
    out.push_back(w(a2, b) + w(a, b2) - w(a, b) - w(a2, b2));
  }
  return out;
}

/// Exponent vector of y_{a,b} in the x-variables.
inline Exponent y_exponent(const Pair& p, int n) {
  const Label a = p.first, b = p.second, a2 = successor(a, n), b2 = successor(b, n);
  Exponent e(ring_size(n), 0);
  ++e[pair_index(a2, b, n)];
  ++e[pair_index(a, b2, n)];
  --e[pair_index(a, b, n)];
  --e[pair_index(a2, b2, n)];
  return e;
}

/// Substitution y_{a,b} -> x_{a++,b} x_{a,b++} / (x_{a,b} x_{a++,b++}).
inline MonomialMap<GaussianRational> y_to_x_map(int n) {
  const auto ds = d_star(n);
  MonomialMap<GaussianRational> m(ds.size(), ring_size(n));
  for (std::size_t k = 0; k < ds.size(); ++k) m.set(k, y_exponent(ds[k], n), GaussianRational(1));
  return m;
}

// ---- u-equations -------------------------------------------------------------------------------------

/// [a,b) in the cyclic prec order.
inline std::vector<Label> half_open_interval(Label a, Label b, int n) {
  std::vector<Label> out;
  for (Label c = a; c != b; c = successor(c, n)) out.push_back(c);
  return out;
}

/// M_{A,B} = product of y_{a,b} over a in A, b in B.
inline Exponent interval_monomial(const std::vector<Label>& A, const std::vector<Label>& B, int n) {
  Exponent e(d_star_size(n), 0);
  for (Label a : A)
    for (Label b : B) ++e[d_star_index(a, b, n)];
  return e;
}

/// r*_{a,b,c,d} = M_{[a,b),[c,d)} + M_{[b,c),[d,a)} - 1.
inline Poly ustar_r(Label a, Label b, Label c, Label d, int n) {
  auto q = sorted_quadruple({a, b, c, d}, n);
  auto iv = [&](int i, int j) { return half_open_interval(q[i], q[j], n); };
  Poly p(d_star_size(n));
  p.add_term(interval_monomial(iv(0, 1), iv(2, 3), n), GaussianRational(1));
  p.add_term(interval_monomial(iv(1, 2), iv(3, 0), n), GaussianRational(1));
  p.add_term(Exponent(d_star_size(n), 0), GaussianRational(-1));
  return p;
}

/// s*_{i,j,k} = M_{[j,k),[kbar,i)} + M_{[i,j),[jbar,kbar)} + M_{[i,j),[k,ibar)} - 2.
inline Poly ustar_s(int i, int j, int k, int n) {
  check_triple(i, j, k, n);
  const Label I(i), J(j), K(k);
  auto iv = [&](Label x, Label y) { return half_open_interval(x, y, n); };
  Poly p(d_star_size(n));
  p.add_term(interval_monomial(iv(J, K), iv(K.bar(), I), n), GaussianRational(1));
  p.add_term(interval_monomial(iv(I, J), iv(J.bar(), K.bar()), n), GaussianRational(1));
  p.add_term(interval_monomial(iv(I, J), iv(K, I.bar()), n), GaussianRational(1));
  p.add_term(Exponent(d_star_size(n), 0), GaussianRational(-2));
  return p;
}

/// r*_{a,b,c,d} after substitution times x_{a,c} x_{b,d} equals r_{a,b,c,d}.
inline bool ustar_r_identity(Label a, Label b, Label c, Label d, int n) {
  auto q = sorted_quadruple({a, b, c, d}, n);
  Exponent den(ring_size(n), 0);
  ++den[pair_index(q[0], q[2], n)];
  ++den[pair_index(q[1], q[3], n)];
  return y_to_x_map(n).apply(ustar_r(a, b, c, d, n)) * Poly::monomial(den) == r_gen(q, n);
}

/// s*_{i,j,k} after substitution times x_{i,k} x_{i,jbar} x_{j,kbar} equals s_{i,j,k}.
inline bool ustar_s_identity(int i, int j, int k, int n) {
  const Label I(i), J(j), K(k);
  Exponent den(ring_size(n), 0);
  ++den[pair_index(I, K, n)];
  ++den[pair_index(I, J.bar(), n)];
  ++den[pair_index(J, K.bar(), n)];
  return y_to_x_map(n).apply(ustar_s(i, j, k, n)) * Poly::monomial(den) == s_gen(i, j, k, n);
}

/// All r* (one per distinct r) and all s*.
inline std::vector<Poly> all_u_equations(int n, bool include_s = true) {
  std::vector<Poly> out;
  for (const auto& rel : distinct_relations(n)) out.push_back(ustar_r(rel.labels[0], rel.labels[1], rel.labels[2], rel.labels[3], n));
  if (include_s)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) out.push_back(ustar_s(i, j, k, n));
  return out;
}

/// No u-equation has a monomial initial form at the given point of R^{D*}.
inline bool u_monomial_free(const std::vector<Rational>& v, int n) {
  for (const auto& p : all_u_equations(n))
    if (p.initial_form(v).size() == 1) return false;
  return true;
}

namespace detail {

/// Product of the absolute diagonal entries of a diagonalization by unimodular row and column operations.
inline mpz_class lattice_index(std::vector<std::vector<mpz_class>> m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  mpz_class prod = 1;
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (m[r][c] != 0 && (pr == rows || abs(m[r][c]) < abs(m[pr][pc]))) pr = r, pc = c;
      if (pr == rows) return 0;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        mpz_class f = m[r][t] / m[t][t];
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= f * m[t][c];
        if (m[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        mpz_class f = m[t][c] / m[t][t];
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= f * m[r][t];
        if (m[t][c] != 0) clean = false;
      }
      if (clean) break;
    }
    prod *= abs(m[t][t]);
  }
  return prod;
}

}  // namespace detail

/// True when every y exponent is orthogonal to the lineality space.
inline bool y_exponents_orthogonal_to_lineality(int n) {
  const auto lb = lineality_basis(n);
  for (const auto& p : d_star(n)) {
    auto e = y_exponent(p, n);
    for (const auto& l : lb) {
      Rational dot(0);
      for (std::size_t k = 0; k < e.size(); ++k) dot += e[k] * l[k];
      if (dot != 0) return false;
    }
  }
  return true;
}

/// Index of the lattice spanned by the y exponents inside its saturation; 0 if they are dependent.
inline mpz_class y_lattice_index(int n) {
  std::vector<std::vector<mpz_class>> m;
  for (const auto& p : d_star(n)) {
    std::vector<mpz_class> row;
    for (int x : y_exponent(p, n)) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return detail::lattice_index(std::move(m));
}

// ---- Cross-ratios and sign patterns --------------------------------------------------------

struct ProjPoint {
  Rational p, q;
  ProjPoint(Rational p_, Rational q_) : p(std::move(p_)), q(std::move(q_)) {
    if (p == 0 && q == 0) throw PreconditionError("ProjPoint: both coordinates zero");
  }
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.p * b.q == a.q * b.p; }
};

inline Rational bracket(const ProjPoint& x, const ProjPoint& y) { return x.p * y.q - x.q * y.p; }

/// (alpha, beta; gamma, delta) = [alpha gamma][beta delta] / ([alpha delta][beta gamma]).
inline Rational cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d) {
  const Rational den = bracket(a, d) * bracket(b, c);
  if (den == 0 || bracket(a, c) == 0 || bracket(b, d) == 0 || bracket(a, b) == 0 || bracket(c, d) == 0)
    throw PreconditionError("cross_ratio: points must be pairwise distinct");
  return bracket(a, c) * bracket(b, d) / den;
}

using SignPattern = std::vector<int>;  ///< indexed by d_star(n)

inline void check_symmetric_ordering(const DihedralOrdering& lambda) {
  if (!lambda.is_csdo() && !lambda.is_asdo()) throw PreconditionError("ordering is neither a CSDO nor an ASDO");
}

/// Chords {p1,p2} and {q1,q2} with distinct endpoints on a circle of m points cross.
inline bool chords_cross(int p1, int p2, int q1, int q2, int m) {
  auto inside = [&](int x) { return ((x - p1 + m) % m) < ((p2 - p1 + m) % m); };
  return inside(q1) != inside(q2);
}

/// nu_{a,b} = -1 iff the chord {a, a++} crosses {b, b++} in the circular placement.
inline SignPattern sign_pattern(const DihedralOrdering& lambda) {
  check_symmetric_ordering(lambda);
  const int n = lambda.n(), m = 2 * n;
  SignPattern out;
  for (const Pair& p : d_star(n)) {
    const Label a = p.first, b = p.second;
    const bool x = chords_cross(lambda.position(a), lambda.position(successor(a, n)), lambda.position(b),
                                lambda.position(successor(b, n)), m);
    out.push_back(x ? -1 : 1);
  }
  return out;
}

struct SamplePoint {
  DihedralOrdering ordering;
  std::map<Label, ProjPoint> alpha;
  std::vector<Rational> y;  ///< indexed by d_star(n)
};

/// Rational points realizing a CSDO (abar = (-a2 : a1)) or an ASDO (abar = (-a1 : a2)), with u-coordinates.
inline SamplePoint sample_config(const DihedralOrdering& lambda, std::uint64_t seed) {
  check_symmetric_ordering(lambda);
  const int n = lambda.n(), m = 2 * n;
  const bool central = lambda.is_csdo();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 9), den(1, 4);
  int shift = 0;
  if (!central) {
    const int s = (lambda.position(Label(1)) + lambda.position(Label(-1))) % m;
    shift = ((s + 1) / 2) % n;
  }
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<Rational> t;
    Rational acc(0);
    for (int k = 0; k < n; ++k) {
      acc += make_rational(num(rng), den(rng));
      t.push_back(acc);
    }
    std::map<Label, ProjPoint> alpha;
    for (Label a : lambda.labels()) {
      const int pos = ((lambda.position(a) - shift) % m + m) % m;
      if (central) {
        if (pos < n) alpha.emplace(a, ProjPoint(t[pos], 1));
        else alpha.emplace(a, ProjPoint(-1, t[pos - n]));
      } else {
        if (pos < n) alpha.emplace(a, ProjPoint(t[pos], 1));
        else alpha.emplace(a, ProjPoint(-t[m - 1 - pos], 1));
      }
    }
    bool distinct = true;
    for (const auto& [a, x] : alpha)
      for (const auto& [b, y] : alpha)
        if (a < b && x == y) distinct = false;
    if (!distinct) continue;
    SamplePoint out{lambda, alpha, {}};
    for (const Pair& p : d_star(n)) {
      const Label a = p.first, b = p.second;
      out.y.push_back(cross_ratio(alpha.at(a), alpha.at(successor(a, n)), alpha.at(successor(b, n)), alpha.at(b)));
    }
    return out;
  }
  throw std::runtime_error("sample_config: no generic realization found");
}

/// Evaluates a polynomial in the y-variables at a rational point.
inline GaussianRational evaluate_at(const Poly& p, const std::vector<Rational>& point) {
  std::vector<GaussianRational> z;
  for (const auto& r : point) z.emplace_back(r);
  return p.evaluate<GaussianRational>(z);
}

// ---- Signed tropicalizations and counts -------------------------------------------------------

/// An ASPT compatible with some CSDO.
inline bool is_cspt(const LeafLabeledTree& t) {
  if (!is_aspt(t)) return false;
  for (const auto& lambda : enumerate_csdo(t.n()))
    if (compatible(t, lambda)) return true;
  return false;
}

struct SignedTrop {
  DihedralOrdering ordering;
  bool central = false;
  SignPattern pattern;
  std::map<int, std::vector<CanonicalKey>> cones;  ///< by k(T, v), sorted
  int maximal() const {
    const int top = 2 * ordering.n() - 1;
    auto it = cones.find(top);
    return it == cones.end() ? 0 : static_cast<int>(it->second.size());
  }
};

/// Cones of all ASPTs compatible with the ordering (CSPTs for a CSDO).
inline SignedTrop signed_trop(const DihedralOrdering& lambda) {
  check_symmetric_ordering(lambda);
  SignedTrop out{lambda, lambda.is_csdo(), sign_pattern(lambda), {}};
  for (const auto& t : enumerate_fan(lambda.n()).trees)
    if (compatible(t, lambda) && (!out.central || is_cspt(t))) out.cones[edge_orbit_count(t)].push_back(canonical_key(t));
  for (auto& [k, keys] : out.cones) std::sort(keys.begin(), keys.end());
  return out;
}

struct PatternCounts {
  long m_count = 0;                 ///< 2^{n-2} (n+1) (n-1)!
  long x_count = 0;                 ///< 2^{2n-2} (n+1) (n-1)!
  std::optional<long> enumerated;   ///< distinct nu over all CSDOs and ASDOs, n <= 4
  long csdo = 0, asdo = 0;
};

inline long factorial(long k) { return k <= 1 ? 1 : k * factorial(k - 1); }

inline PatternCounts count_patterns(int n) {
  check_size(n);
  PatternCounts c;
  c.m_count = (1L << (n - 2)) * (n + 1) * factorial(n - 1);
  c.x_count = (1L << (2 * n - 2)) * (n + 1) * factorial(n - 1);
  c.csdo = (1L << (n - 2)) * factorial(n - 1);
  c.asdo = (1L << (n - 2)) * factorial(n);
  if (n <= 4) {
    std::set<SignPattern> seen;
    for (const auto& l : enumerate_csdo(n)) seen.insert(sign_pattern(l));
    for (const auto& l : enumerate_asdo(n)) seen.insert(sign_pattern(l));
    c.enumerated = static_cast<long>(seen.size());
  }
  return c;
}

}  // namespace ctrop
