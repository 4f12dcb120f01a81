#pragma once

// Brute-force verifiers that do not call the code they check.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ctrop/core.hpp"
#include "ctrop/ideal.hpp"
#include "ctrop/poly.hpp"
#include "ctrop/trees.hpp"

namespace ctrop::oracle {

// ---- Tree shapes ----------------------------------------------------------------------------------

/// An unlabeled tree: adjacency lists; vertices of degree 1 are leaves.
using Shape = std::vector<std::vector<int>>;

namespace detail {

inline std::string ahu(const Shape& g, int v, int parent) {
  std::vector<std::string> kids;
  for (int u : g[v])
    if (u != parent) kids.push_back(ahu(g, u, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

/// Canonical string of an unlabeled tree: minimum AHU encoding over all roots.
inline std::string shape_code(const Shape& g) {
  std::string best;
  for (int v = 0; v < static_cast<int>(g.size()); ++v) {
    auto s = ahu(g, v, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

/// Labeled trees on k vertices from Pruefer sequences.
inline std::vector<std::vector<std::pair<int, int>>> all_labeled_trees(int k) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (k == 1) return {{}};
  if (k == 2) return {{{0, 1}}};
  std::vector<int> seq(k - 2, 0);
  for (;;) {
    std::vector<int> deg(k, 1);
    for (int x : seq) ++deg[x];
    std::vector<std::pair<int, int>> edges;
    auto d = deg;
    for (int x : seq) {
      int leaf = 0;
      while (d[leaf] != 1) ++leaf;
      edges.push_back({leaf, x});
      --d[leaf];
      --d[x];
    }
    int u = -1, v = -1;
    for (int i = 0; i < k; ++i)
      if (d[i] == 1) (u < 0 ? u : v) = i;
    edges.push_back({u, v});
    out.push_back(edges);
    int pos = k - 3;
    while (pos >= 0 && seq[pos] == k - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return out;
}

}  // namespace detail

/// All trees with the given number of leaves and no vertex of degree 2, one per isomorphism class.
inline std::vector<Shape> tree_shapes(int leaves) {
  std::map<std::string, Shape> found;
  for (int k = 1; k <= leaves - 2; ++k)
    for (const auto& edges : detail::all_labeled_trees(k)) {
      std::vector<int> deg(k, 0);
      for (auto [a, b] : edges) ++deg[a], ++deg[b];
      // distribute leaves so that each internal vertex has degree at least 3
      std::vector<int> extra(k, 0);
      std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == k) {
          if (left != 0) return;
          Shape g(k);
          for (auto [a, b] : edges) g[a].push_back(b), g[b].push_back(a);
          for (int x = 0; x < k; ++x)
            for (int l = 0; l < extra[x]; ++l) {
              g.push_back({x});
              g[x].push_back(static_cast<int>(g.size()) - 1);
            }
          found.emplace(detail::shape_code(g), g);
          return;
        }
        for (int e = std::max(0, 3 - deg[v]); e <= left; ++e) {
          extra[v] = e;
          rec(v + 1, left - e);
        }
        extra[v] = 0;
      };
      rec(0, leaves);
    }
  std::vector<Shape> out;
  for (auto& [code, g] : found) out.push_back(std::move(g));
  return out;
}

/// Every leaf labeling by N of every 6-leaf shape, deduplicated by canonical key.
inline std::vector<LeafLabeledTree> enumerate_all_trees(int n) {
  if (n != 3) throw PreconditionError("enumerate_all_trees: only n = 3 is supported");
  std::map<CanonicalKey, LeafLabeledTree> found;
  const auto labels = all_labels(n);
  for (const auto& g : tree_shapes(2 * n)) {
    std::vector<int> leaf_vertices;
    for (int v = 0; v < static_cast<int>(g.size()); ++v)
      if (g[v].size() == 1) leaf_vertices.push_back(v);
    std::vector<Edge> edges;
    for (int v = 0; v < static_cast<int>(g.size()); ++v)
      for (int u : g[v])
        if (v < u) edges.push_back({v, u, std::nullopt});
    std::vector<int> perm(labels.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::map<Label, int> leaves;
      for (std::size_t k = 0; k < labels.size(); ++k) leaves[labels[perm[k]]] = leaf_vertices[k];
      LeafLabeledTree t(n, static_cast<int>(g.size()), edges, leaves);
      auto key = canonical_key(t);
      if (!found.count(key)) found.emplace(std::move(key), std::move(t));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<LeafLabeledTree> out;
  for (auto& [k, t] : found) out.push_back(std::move(t));
  return out;
}

// ---- ASPT realization through splits -------------------------------------------------------------------

/// Nontrivial splits of a tree as sets of labels (the side not containing label 1).
inline std::set<std::set<Label>> splits(const LeafLabeledTree& t) {
  std::set<std::set<Label>> out;
  for (int e = 0; e < static_cast<int>(t.edges().size()); ++e) {
    if (t.is_leaf_edge(e)) continue;
    // labels on the side of edge.v when the edge is cut
    std::set<int> side{t.edges()[e].v};
    std::vector<int> stack{t.edges()[e].v};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto [y, f] : t.neighbors(x))
        if (f != e && side.insert(y).second) stack.push_back(y);
    }
    std::set<Label> A, B;
    for (const auto& [a, v] : t.leaves()) (side.count(v) ? A : B).insert(a);
    out.insert(A.count(Label(1)) ? B : A);
  }
  return out;
}

/// Circular orders of N with position(a) + position(abar) constant and odd.
inline std::vector<std::vector<Label>> axial_circular_orders(int n) {
  std::vector<std::vector<Label>> out;
  auto labels = all_labels(n);
  std::sort(labels.begin(), labels.end());
  const int m = 2 * n;
  do {
    std::map<Label, int> pos;
    for (int k = 0; k < m; ++k) pos[labels[k]] = k;
    const int c = (pos[Label(1)] + pos[Label(-1)]) % m;
    if (c % 2 == 0) continue;
    bool ok = true;
    for (int i = 1; i <= n; ++i) ok &= (pos[Label(i)] + pos[Label(-i)]) % m == c;
    if (ok) out.push_back(labels);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

/// A set of labels occupies consecutive positions of a circular order.
inline bool is_arc(const std::set<Label>& A, const std::vector<Label>& order) {
  const int m = static_cast<int>(order.size());
  int starts = 0;
  for (int k = 0; k < m; ++k)
    if (A.count(order[k]) && !A.count(order[(k + m - 1) % m])) ++starts;
  return starts == 1;
}

/// Dual of an axially symmetric subdivision under an axially symmetric labeling:
/// splits closed under bar and all arcs of one axial circular order.
inline bool realizable_aspt(const LeafLabeledTree& t, const std::vector<std::vector<Label>>& orders) {
  const auto S = splits(t);
  const auto all = all_labels(t.n());
  for (const auto& A : S) {
    std::set<Label> bar, comp;
    for (Label a : A) bar.insert(a.bar());
    for (Label a : all)
      if (!bar.count(a)) comp.insert(a);
    if (!S.count(bar) && !S.count(comp)) return false;
  }
  for (const auto& order : orders)
    if (std::all_of(S.begin(), S.end(), [&](const auto& A) { return is_arc(A, order); })) return true;
  return false;
}

// ---- Graded dimensions ---------------------------------------------------------------------------------

/// iota: x_{i,j} -> z1i z2j - z1j z2i and x_{i,jbar} -> z1i z1j + z2i z2j (z_{t,i} at index (t-1)n + i - 1).
inline std::vector<RationalPoly> iota_images(int n) {
  const std::size_t nz = 2 * static_cast<std::size_t>(n);
  auto z = [&](int t, int i) { return RationalPoly::variable(nz, (t - 1) * n + i - 1); };
  std::vector<RationalPoly> out(ring_size(n), RationalPoly(nz));
  for (const Pair& p : enumerate_D(n)) {
    const int i = p.first.value(), j = p.second.abs();
    out[pair_index(p, n)] = p.second.positive() ? z(1, i) * z(2, j) - z(1, j) * z(2, i)
                                                 : z(1, i) * z(1, j) + z(2, i) * z(2, j);
  }
  return out;
}

inline RationalPoly iota(const Poly& p, int n) {
  const auto img = iota_images(n);
  RationalPoly out(2 * static_cast<std::size_t>(n));
  for (const auto& [e, c] : p.terms()) {
    if (c.im() != 0) throw PreconditionError("iota: coefficients must be rational");
    RationalPoly term = RationalPoly::constant(2 * static_cast<std::size_t>(n), c.re());
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int q = 0; q < e[k]; ++q) term = term * img[k];
    out += term;
  }
  return out;
}

/// Rank by fraction-free elimination.
inline int bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

/// Dimension of the degree-d part of the coordinate ring, as the rank of iota on degree-d monomials.
inline int graded_dimension(int d, int n = 3) {
  if (n != 3 || d < 0 || d > 3) throw PreconditionError("graded_dimension: supported for n = 3 and d <= 3");
  const auto img = iota_images(n);
  std::map<Exponent, std::size_t> column;
  std::vector<std::map<std::size_t, mpz_class>> sparse;
  for (const auto& e : monomials_of_degree(ring_size(n), d)) {
    RationalPoly p = RationalPoly::constant(2 * static_cast<std::size_t>(n), Rational(1));
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int q = 0; q < e[k]; ++q) p = p * img[k];
    std::map<std::size_t, mpz_class> row;
    for (const auto& [z, c] : p.terms()) {
      auto it = column.emplace(z, column.size()).first;
      row[it->second] = c.get_num();
    }
    sparse.push_back(std::move(row));
  }
  std::vector<std::vector<mpz_class>> dense(sparse.size(), std::vector<mpz_class>(column.size(), 0));
  for (std::size_t r = 0; r < sparse.size(); ++r)
    for (const auto& [c, v] : sparse[r]) dense[r][c] = v;
  return bareiss_rank(std::move(dense));
}

// ---- Symmetric triangulations ---------------------------------------------------------------------------------

enum class TriangulationMode { central, axial_maximal };

namespace detail {

using Diag = std::pair<int, int>;

inline bool cross(Diag a, Diag b) {
  auto in = [&](int x, Diag d) { return d.first < x && x < d.second; };
  if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second) return false;
  return in(b.first, a) != in(b.second, a);
}

inline Diag norm(int p, int q, int m) {
  p = ((p % m) + m) % m;
  q = ((q % m) + m) % m;
  return p < q ? Diag{p, q} : Diag{q, p};
}

}  // namespace detail

/// Exhaustive count over all dissections of the 2n-gon.
inline long count_symmetric_triangulations(int n, TriangulationMode mode) {
  if (n < 3 || n > 5) throw PreconditionError("count_symmetric_triangulations: 3 <= n <= 5");
  const int m = 2 * n;
  std::vector<detail::Diag> diags;
  for (int p = 0; p < m; ++p)
    for (int q = p + 2; q < m; ++q)
      if (!(p == 0 && q == m - 1)) diags.push_back({p, q});
  auto image = [&](detail::Diag d) {
    return mode == TriangulationMode::central ? detail::norm(d.first + n, d.second + n, m)
                                              : detail::norm(-d.first, -d.second, m);
  };
  long count = 0;
  std::vector<detail::Diag> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == diags.size()) {
      std::set<detail::Diag> s(chosen.begin(), chosen.end());
      for (auto d : chosen)
        if (!s.count(image(d))) return;
      if (mode == TriangulationMode::central) {
        if (static_cast<int>(chosen.size()) == m - 3) ++count;
        return;
      }
      // maximal: no symmetric pair of diagonals can be added
      for (auto d : diags) {
        if (s.count(d)) continue;
        auto e = image(d);
        if (e != d && detail::cross(d, e)) continue;
        bool ok = true;
        for (auto c : chosen) ok &= !detail::cross(c, d) && !detail::cross(c, e);
        if (ok) return;
      }
      ++count;
      return;
    }
    rec(k + 1);
    for (auto c : chosen)
      if (detail::cross(c, diags[k])) return;
    chosen.push_back(diags[k]);
    rec(k + 1);
    chosen.pop_back();
  };
  rec(0);
  return count;
}

inline long binomial(long a, long b) {
  long r = 1;
  for (long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

inline long catalan(long k) { return binomial(2 * k, k) / (k + 1); }

// ---- Report ------------------------------------------------------------------------------------------------

struct Check {
  std::string name;
  long expected = 0;
  long got = 0;
  std::string source;  ///< "published" or "derived"
  bool ok() const { return expected == got; }
};

}  // namespace ctrop::oracle
