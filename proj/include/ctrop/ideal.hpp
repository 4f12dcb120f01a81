#pragma once

// Polynomials in the variables x_{a,b}: generators, initial forms and monomial maps.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ctrop/core.hpp"
#include "ctrop/polygon.hpp"
#include "ctrop/poly.hpp"
#include "ctrop/trees.hpp"

namespace ctrop {

inline std::size_t ring_size(int n) { return static_cast<std::size_t>(n) * n; }

/// Four distinct labels sorted by the given order.
inline std::array<Label, 4> sorted_quadruple(std::array<Label, 4> q, int n, Order order = Order::prec) {
  for (Label x : q)
    if (!valid_label(x, n)) throw PreconditionError("quadruple: invalid label");
  std::sort(q.begin(), q.end(), [&](Label x, Label y) { return rank(order, x, n) < rank(order, y, n); });
  for (int k = 0; k + 1 < 4; ++k)
    if (q[k] == q[k + 1]) throw PreconditionError("quadruple: repeated label");
  return q;
}

/// r_{a,b,c,d} = x_{a,b}x_{c,d} + x_{a,d}x_{b,c} - x_{a,c}x_{b,d} with a < b < c < d in prec.
inline Poly r_gen(Label a, Label b, Label c, Label d, int n) {
  auto q = sorted_quadruple({a, b, c, d}, n);
  auto x = [&](int i, int j) { return x_var(q[i], q[j], n); };
  return x(0, 1) * x(2, 3) + x(0, 3) * x(1, 2) - x(0, 2) * x(1, 3);
}

inline Poly r_gen(const std::array<Label, 4>& q, int n) { return r_gen(q[0], q[1], q[2], q[3], n); }

struct Relation {
  std::array<Label, 4> labels;  ///< prec-sorted representative
  Poly poly;
};

/// All distinct r's: one per bar-orbit of 4-element subsets of N.
inline std::vector<Relation> distinct_relations(int n) {
  check_size(n);
  const auto N = all_labels(n);
  std::vector<Relation> out;
  std::set<std::vector<Label>> seen;
  const std::size_t m = N.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l) {
          std::array<Label, 4> q{N[i], N[j], N[k], N[l]};
          std::vector<Label> key(q.begin(), q.end()), bar_key;
          for (Label x : q) bar_key.push_back(x.bar());
          std::sort(key.begin(), key.end());
          std::sort(bar_key.begin(), bar_key.end());
          if (seen.count(bar_key)) continue;
          seen.insert(key);
          out.push_back({q, r_gen(q, n)});
        }
  return out;
}

/// n(n-1)(2n^2-4n+3)/6.
inline long relation_count_formula(long n) { return n * (n - 1) * (2 * n * n - 4 * n + 3) / 6; }

inline void check_triple(int i, int j, int k, int n) {
  if (!(1 <= i && i < j && j < k && k <= n)) throw PreconditionError("triple must satisfy 1 <= i < j < k <= n");
}

/// s_{i,j,k} = x_{ij}x_{ij'}x_{kk'} + x_{ik}x_{ik'}x_{jj'} + x_{jk}x_{jk'}x_{ii'} - 2x_{ik}x_{ij'}x_{jk'}.
inline Poly s_gen(int i, int j, int k, int n) {
  check_triple(i, j, k, n);
  const Label I(i), J(j), K(k);
  auto x = [&](Label a, Label b) { return x_var(a, b, n); };
  return x(I, J) * x(I, J.bar()) * x(K, K.bar()) + x(I, K) * x(I, K.bar()) * x(J, J.bar()) +
         x(J, K) * x(J, K.bar()) * x(I, I.bar()) - GaussianRational(2) * (x(I, K) * x(I, J.bar()) * x(J, K.bar()));
}

/// s_{i,j,k} = x_{j,k'} r_{i,j,k,i'} - x_{i,k'} r_{i,j,k,j'} + x_{i,j'} r_{i,j,k,k'}.
inline bool s_identity_check(int i, int j, int k, int n) {
  check_triple(i, j, k, n);
  const Label I(i), J(j), K(k);
  Poly rhs = x_var(J, K.bar(), n) * r_gen(I, J, K, I.bar(), n) - x_var(I, K.bar(), n) * r_gen(I, J, K, J.bar(), n) +
             x_var(I, J.bar(), n) * r_gen(I, J, K, K.bar(), n);
  return rhs == s_gen(i, j, k, n);
}

inline Poly initial_form(const Poly& p, const WeightVector& w) { return p.initial_form(w.coords()); }

// ---- Automorphisms h_tau --------------------------------------------------------------------

/// x_{a,b} -> eps1(b, tau) eps2(a, b, tau) x_{tau(a), tau(b)}.
inline MonomialMap<GaussianRational> h_tau_map(const GroupElement& tau) {
  const int n = tau.n();
  MonomialMap<GaussianRational> m(ring_size(n), ring_size(n));
  for (const Pair& p : enumerate_D(n)) {
    const Label a = p.first, b = p.second;
    const Label ta = tau(a), tb = tau(b);
    int sign = 1;
    if (!b.positive() && tb.positive()) sign = -sign;
    if (prec_rank(tb, n) < prec_rank(ta, n)) sign = -sign;
    m.set(pair_index(p, n), unit_exponent(ring_size(n), pair_index(ta, tb, n)), GaussianRational(sign));
  }
  return m;
}

inline Poly h_tau(const Poly& p, const GroupElement& tau) { return h_tau_map(tau).apply(p); }

// ---- Monomial ideals --------------------------------------------------------------------------

enum class MonomialIdeal { prec, dotprec };  ///< I_mon and I'_mon

/// Generators x_{a,c}x_{b,d} for a < b < c < d in the chosen order.
inline std::set<Exponent> monomial_ideal_generators(int n, MonomialIdeal which) {
  const Order order = which == MonomialIdeal::prec ? Order::prec : Order::dotprec;
  const auto N = sorted_by(order, all_labels(n), n);
  std::set<Exponent> gens;
  const std::size_t m = N.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l) {
          Exponent e(ring_size(n), 0);
          ++e[pair_index(N[i], N[k], n)];
          ++e[pair_index(N[j], N[l], n)];
          gens.insert(e);
        }
  return gens;
}

inline bool divides(const Exponent& g, const Exponent& e) {
  for (std::size_t k = 0; k < g.size(); ++k)
    if (g[k] > e[k]) return false;
  return true;
}

/// True when the monomial lies outside the chosen monomial ideal.
inline bool standard_monomial(const Exponent& e, int n, MonomialIdeal which) {
  for (const auto& g : monomial_ideal_generators(n, which))
    if (divides(g, e)) return false;
  return true;
}

/// All exponent vectors of total degree d in nvars variables, lexicographically.
inline std::vector<Exponent> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Exponent> out;
  Exponent e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t var, int left) -> void {
    if (var + 1 == nvars) {
      e[var] = left;
      out.push_back(e);
      e[var] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  if (nvars > 0) rec(rec, 0, d);
  return out;
}

inline int count_standard_monomials(int n, int d, MonomialIdeal which) {
  const auto gens = monomial_ideal_generators(n, which);
  int count = 0;
  for (const auto& e : monomials_of_degree(ring_size(n), d))
    if (std::none_of(gens.begin(), gens.end(), [&](const Exponent& g) { return divides(g, e); })) ++count;
  return count;
}

// ---- The map pi ------------------------------------------------------------------------------------

/// pi into C[u_1..u_n, v_1..v_n] (u_k at index k-1, v_k at index n+k-1):
/// pi(x_{a,b}) = v_a v_{|b|} times u_{|c|} over the edges e_c of the dotprec path from a to b.
inline MonomialMap<GaussianRational> pi_map(int n) {
  check_size(n);
  MonomialMap<GaussianRational> m(ring_size(n), 2 * static_cast<std::size_t>(n));
  for (const Pair& p : enumerate_D(n)) {
    const int i = p.first.value();
    const int j = p.second.abs();
    Exponent e(2 * n, 0);
    ++e[n + i - 1];
    ++e[n + j - 1];
    if (p.second.positive()) {
      for (int k = i; k <= j - 1; ++k) ++e[k - 1];
    } else {
      for (int k = i; k <= n; ++k) ++e[k - 1];
      for (int k = j; k <= n - 1; ++k) ++e[k - 1];
    }
    m.set(pair_index(p, n), e, GaussianRational(1));
  }
  return m;
}

/// Path length between a and b in the path graph on N ordered by dotprec.
inline int graph_g_distance(Label a, Label b, int n) { return std::abs(dotprec_rank(a, n) - dotprec_rank(b, n)); }

/// w''_{a,b} = |Path(a,b)| in the path graph.
inline WeightVector graph_g_weight(int n) {
  WeightVector w(n);
  for (const Pair& p : enumerate_D(n)) w.at(p) = graph_g_distance(p.first, p.second, n);
  return w;
}

/// Initial form for the logarithmic weight ln|Path(a,b)|, compared exactly as products.
inline Poly initial_form_log_path(const Poly& p, int n) {
  std::vector<Rational> w(ring_size(n));
  for (const Pair& q : enumerate_D(n)) w[pair_index(q, n)] = graph_g_distance(q.first, q.second, n);
  return p.initial_form_multiplicative(w);
}

// ---- Cones of trees and the maps psi --------------------------------------------------------------

/// A point strictly inside C_{T,v}: unit weight on every non-leaf edge, zero on leaf edges.
inline WeightVector interior_point(const LeafLabeledTree& t) {
  std::vector<Rational> w(t.edges().size());
  for (int e = 0; e < static_cast<int>(w.size()); ++e) w[e] = t.is_leaf_edge(e) ? 0 : 1;
  return to_weight_vector(distances(t, w));
}

/// True when the subtree spanned by the four leaves has a vertex of degree 4.
inline bool quartet_is_star(const LeafLabeledTree& t, Label a, Label b, Label c, Label d) {
  auto median = [&](Label x, Label y, Label z) {
    auto p1 = t.path_vertices(t.leaf(x), t.leaf(y));
    auto p2 = t.path_vertices(t.leaf(x), t.leaf(z));
    auto p3 = t.path_vertices(t.leaf(y), t.leaf(z));
    for (int v : p1)
      if (std::count(p2.begin(), p2.end(), v) && std::count(p3.begin(), p3.end(), v)) return v;
    throw std::logic_error("quartet_is_star: no median");
  };
  const int m = median(a, b, c);
  return m == median(a, b, d) && m == median(a, c, d);
}

enum class PsiPrecondition { ok, not_symmetric, not_aspt, not_maximal, wrong_labeling };

inline PsiPrecondition psi_precondition(const LeafLabeledTree& t) {
  if (!t.full()) return PsiPrecondition::wrong_labeling;
  if (!symmetry(t)) return PsiPrecondition::not_symmetric;
  if (!is_aspt(t)) return PsiPrecondition::not_aspt;
  if (edge_orbit_count(t) != 2 * t.n() - 1) return PsiPrecondition::not_maximal;
  if (!compatible(t, mu0(t.n()))) return PsiPrecondition::wrong_labeling;
  return PsiPrecondition::ok;
}

inline std::string to_string(PsiPrecondition p) {
  switch (p) {
    case PsiPrecondition::ok: return "ok";
    case PsiPrecondition::not_symmetric: return "tree has no symmetry";
    case PsiPrecondition::not_aspt: return "tree is not an ASPT";
    case PsiPrecondition::not_maximal: return "ASPT is not maximal";
    case PsiPrecondition::wrong_labeling: return "tree is not realized over the standard labeling";
  }
  return "";
}

/// Index of the sigma-orbit of every edge, numbered by first occurrence.
inline std::vector<int> edge_orbit_index(const LeafLabeledTree& t, const Symmetry& s) {
  std::vector<int> idx(t.edges().size(), -1);
  int next = 0;
  for (int e = 0; e < static_cast<int>(idx.size()); ++e)
    if (idx[e] < 0) idx[e] = idx[s.edge_image[e]] = next++;
  return idx;
}

/// c_{T,v}(a,b): 2 if the vertex path meets exactly one sigma-fixed vertex, i if a, b are both
/// in [1,n] or both outside, else 1.
inline GaussianRational psi_coefficient(const LeafLabeledTree& t, const Symmetry& s, Label a, Label b) {
  int fixed = 0;
  for (int v : t.path_vertices(t.leaf(a), t.leaf(b)))
    if (s.fixes_vertex(v)) ++fixed;
  if (fixed == 1) return GaussianRational(2);
  if (a.positive() == b.positive()) return GaussianRational::i();
  return GaussianRational(1);
}

/// psi_{T,v}(x_{a,b}) = c_{T,v}(a,b) times t_e over the path, with one t per edge orbit.
inline MonomialMap<GaussianRational> psi_map(const LeafLabeledTree& t) {
  if (auto pre = psi_precondition(t); pre != PsiPrecondition::ok) throw PreconditionError("psi_map: " + to_string(pre));
  const int n = t.n();
  const auto s = *symmetry(t);
  const auto orbit = edge_orbit_index(t, s);
  MonomialMap<GaussianRational> m(ring_size(n), 2 * static_cast<std::size_t>(n) - 1);
  for (const Pair& p : enumerate_D(n)) {
    Exponent e(2 * n - 1, 0);
    for (int edge : t.path_edges(t.leaf(p.first), t.leaf(p.second))) ++e[orbit[edge]];
    m.set(pair_index(p, n), e, psi_coefficient(t, s, p.first, p.second));
  }
  return m;
}

inline bool psi_kernel_member(const MonomialMap<GaussianRational>& psi, const Poly& p) { return psi.apply(p).is_zero(); }

/// x_{a,c} x_{b,d} for the quadruple sorted by dotprec.
inline Exponent crossing_monomial(const std::array<Label, 4>& q, int n) {
  auto s = sorted_quadruple(q, n, Order::dotprec);
  Exponent e(ring_size(n), 0);
  ++e[pair_index(s[0], s[2], n)];
  ++e[pair_index(s[1], s[3], n)];
  return e;
}

/// Toric initial ideal on the cone of an ASPT: no vertex of degree above 3.
inline bool is_toric_cone(const LeafLabeledTree& t) {
  if (!is_aspt(t)) throw PreconditionError("is_toric_cone: not an ASPT");
  return t.max_degree() <= 3;
}

}  // namespace ctrop
