#pragma once

// Leaf-labeled phylogenetic trees and their metrics.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctrop/core.hpp"
#include "ctrop/rational.hpp"

namespace ctrop {

struct Edge {
  int u = 0;
  int v = 0;
  std::optional<Rational> weight;
};

/// A tree whose leaves are labeled bijectively by a symmetric K ⊆ N, optionally weighted.
/// Invariants (checked on construction): connected and acyclic, no degree-2 vertex,
/// the degree-1 vertices are exactly the labeled ones, weights either on every edge or
/// on none, non-leaf edges of weighted trees have positive weight.
class LeafLabeledTree {
 public:
  LeafLabeledTree() = default;
  LeafLabeledTree(int n, int num_vertices, std::vector<Edge> edges, std::map<Label, int> leaves)
      : n_(n), num_vertices_(num_vertices), edges_(std::move(edges)), leaves_(std::move(leaves)) {
    build_and_validate();
  }

  int n() const { return n_; }
  int num_vertices() const { return num_vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::map<Label, int>& leaves() const { return leaves_; }
  bool weighted() const { return !edges_.empty() && edges_.front().weight.has_value(); }

  /// Labels in prec order.
  std::vector<Label> labels() const {
    std::vector<Label> k;
    for (const auto& [a, v] : leaves_) k.push_back(a);
    return sorted_by(Order::prec, k, n_);
  }
  bool full() const { return static_cast<int>(leaves_.size()) == 2 * n_; }

  int leaf(Label a) const {
    auto it = leaves_.find(a);
    if (it == leaves_.end()) throw PreconditionError("label " + to_string(a) + " is not a leaf");
    return it->second;
  }
  std::optional<Label> label_of(int vertex) const {
    auto it = vertex_label_.find(vertex);
    if (it == vertex_label_.end()) return std::nullopt;
    return it->second;
  }

  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const {
    int d = 0;
    for (int v = 0; v < num_vertices_; ++v) d = std::max(d, degree(v));
    return d;
  }
  /// (neighbor, edge id) pairs.
  const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_[v]; }

  bool is_leaf_vertex(int v) const { return vertex_label_.count(v) > 0; }
  bool is_leaf_edge(int e) const { return is_leaf_vertex(edges_[e].u) || is_leaf_vertex(edges_[e].v); }

  /// Edge ids on the path between two vertices.
  std::vector<int> path_edges(int from, int to) const {
    std::vector<int> out;
    auto parent = bfs_parents(from);
    for (int x = to; x != from; x = edges_[parent[x]].u == x ? edges_[parent[x]].v : edges_[parent[x]].u)
      out.push_back(parent[x]);
    return out;
  }
  /// Vertices on the path between two vertices, endpoints included.
  std::vector<int> path_vertices(int from, int to) const {
    std::vector<int> out{to};
    auto parent = bfs_parents(from);
    for (int x = to; x != from;) {
      const Edge& e = edges_[parent[x]];
      x = e.u == x ? e.v : e.u;
      out.push_back(x);
    }
    return out;
  }

  /// The same tree with new edge weights (validated) or without weights.
  LeafLabeledTree with_weights(const std::vector<Rational>& w) const {
    auto edges = edges_;
    for (std::size_t k = 0; k < edges.size(); ++k) edges[k].weight = w.at(k);
    return {n_, num_vertices_, std::move(edges), leaves_};
  }
  LeafLabeledTree unweighted() const {
    auto edges = edges_;
    for (auto& e : edges) e.weight.reset();
    return {n_, num_vertices_, std::move(edges), leaves_};
  }
  /// Relabels leaves by a -> tau(a) (the tree (T, v∘tau^{-1})).
  LeafLabeledTree relabeled(const GroupElement& tau) const {
    std::map<Label, int> leaves;
    for (const auto& [a, v] : leaves_) leaves[tau(a)] = v;
    return {n_, num_vertices_, edges_, std::move(leaves)};
  }

 private:
  std::vector<int> bfs_parents(int from) const {
    std::vector<int> parent(num_vertices_, -1);
    std::vector<bool> seen(num_vertices_, false);
    std::queue<int> q;
    q.push(from);
    seen[from] = true;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (auto [y, e] : adj_[x])
        if (!seen[y]) {
          seen[y] = true;
          parent[y] = e;
          q.push(y);
        }
    }
    return parent;
  }

  void build_and_validate() {
    if (n_ < 1) throw PreconditionError("tree: bad n");
    if (num_vertices_ < 2 || static_cast<int>(edges_.size()) != num_vertices_ - 1)
      throw PreconditionError("tree: a tree on V vertices has V-1 edges");
    adj_.assign(num_vertices_, {});
    for (int k = 0; k < static_cast<int>(edges_.size()); ++k) {
      const Edge& e = edges_[k];
      if (e.u < 0 || e.v < 0 || e.u >= num_vertices_ || e.v >= num_vertices_ || e.u == e.v)
        throw PreconditionError("tree: bad edge endpoints");
      adj_[e.u].push_back({e.v, k});
      adj_[e.v].push_back({e.u, k});
    }
    auto parent = bfs_parents(0);
    for (int v = 1; v < num_vertices_; ++v)
      if (parent[v] < 0) throw PreconditionError("tree: not connected");
    for (const auto& [a, v] : leaves_) {
      if (!valid_label(a, n_)) throw PreconditionError("tree: invalid label");
      if (!leaves_.count(a.bar())) throw PreconditionError("tree: label set is not symmetric");
      if (v < 0 || v >= num_vertices_ || degree(v) != 1) throw PreconditionError("tree: labeled vertex is not a leaf");
      if (!vertex_label_.emplace(v, a).second) throw PreconditionError("tree: two labels on one leaf");
    }
    for (int v = 0; v < num_vertices_; ++v) {
      if (degree(v) == 2) throw PreconditionError("tree: degree-2 vertex");
      if (degree(v) == 1 && !vertex_label_.count(v)) throw PreconditionError("tree: unlabeled leaf");
    }
    const bool w0 = edges_.front().weight.has_value();
    for (int k = 0; k < static_cast<int>(edges_.size()); ++k) {
      if (edges_[k].weight.has_value() != w0) throw PreconditionError("tree: partially weighted");
      if (w0 && !is_leaf_edge(k) && *edges_[k].weight <= 0)
        throw PreconditionError("tree: non-leaf edge weight must be positive");
    }
  }

  int n_ = 0;
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::map<Label, int> leaves_;
  std::map<int, Label> vertex_label_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

// ---- Dissimilarities -----------------------------------------------------------

/// A symmetric function K x K -> Q with zero diagonal, K a set of labels.
class Dissimilarity {
 public:
  Dissimilarity() = default;
  Dissimilarity(int n, std::vector<Label> K) : n_(n), K_(sorted_by(Order::prec, std::move(K), n)),
      d_(static_cast<std::size_t>(4) * n * n, Rational(0)) {}

  int n() const { return n_; }
  const std::vector<Label>& labels() const { return K_; }
  bool contains(Label a) const { return std::find(K_.begin(), K_.end(), a) != K_.end(); }

  const Rational& operator()(Label a, Label b) const { return d_[slot(a, b)]; }
  void set(Label a, Label b, const Rational& v) {
    if (a == b) return;
    d_[slot(a, b)] = v;
    d_[slot(b, a)] = v;
  }

  Rational max_abs() const {
    Rational m(0);
    for (const auto& x : d_) m = std::max(m, Rational(abs(x)));
    return m;
  }

  friend bool operator==(const Dissimilarity& a, const Dissimilarity& b) {
    return a.n_ == b.n_ && a.K_ == b.K_ && a.d_ == b.d_;
  }

 private:
  std::size_t slot(Label a, Label b) const {
    return static_cast<std::size_t>(prec_rank(a, n_)) * 2 * n_ + prec_rank(b, n_);
  }

  int n_ = 0;
  std::vector<Label> K_;
  std::vector<Rational> d_;
};

/// The map w-hat: w-hat(a,b) = w_{a,b} for a != b, zero on the diagonal.
inline Dissimilarity hat(const WeightVector& w) {
  Dissimilarity d(w.n(), all_labels(w.n()));
  for (Label a : d.labels())
    for (Label b : d.labels())
      if (a != b) d.set(a, b, w(a, b));
  return d;
}

/// Reads off the canonical coordinates of a full dissimilarity.
inline WeightVector to_weight_vector(const Dissimilarity& d) {
  if (static_cast<int>(d.labels().size()) != 2 * d.n()) throw PreconditionError("to_weight_vector: need K = N");
  WeightVector w(d.n());
  for (const Pair& p : enumerate_D(d.n())) w.at(p) = d(p.first, p.second);
  return w;
}

/// Path-length sums with an arbitrary per-edge weight vector (weights need not be positive).
inline Dissimilarity distances(const LeafLabeledTree& t, const std::vector<Rational>& edge_weights) {
  Dissimilarity d(t.n(), t.labels());
  const auto& K = d.labels();
  for (std::size_t x = 0; x < K.size(); ++x)
    for (std::size_t y = x + 1; y < K.size(); ++y) {
      Rational s(0);
      for (int e : t.path_edges(t.leaf(K[x]), t.leaf(K[y]))) s += edge_weights[e];
      d.set(K[x], K[y], s);
    }
  return d;
}

/// d_{T,v,l}(a,b) = sum of l(e) over Path(v(a), v(b)).
inline Dissimilarity distances(const LeafLabeledTree& t) {
  if (!t.weighted()) throw PreconditionError("distances: tree is unweighted");
  std::vector<Rational> w;
  for (const auto& e : t.edges()) w.push_back(*e.weight);
  return distances(t, w);
}

/// Unit weights on every edge; a symmetric weighting for any tree with a symmetry.
inline std::vector<Rational> unit_weights(const LeafLabeledTree& t) {
  return std::vector<Rational>(t.edges().size(), Rational(1));
}

// ---- Four-point condition and reconstruction ----------------------------------------

struct FourPointResult {
  bool ok = true;
  std::optional<std::array<Label, 4>> witness;  ///< prec-sorted quadruple with a unique maximum
};

/// Among d(a,b)+d(c,d), d(a,c)+d(b,d), d(a,d)+d(b,c) the maximum must be attained twice.
/// The witness is the quadruple with the largest gap between the two largest sums
/// (first in prec-lexicographic order on ties).
inline FourPointResult four_point_ok(const Dissimilarity& d) {
  const auto& K = d.labels();
  const std::size_t m = K.size();
  FourPointResult out;
  Rational best_gap(0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l) {
          const Label a = K[i], b = K[j], c = K[k], e = K[l];
          std::array<Rational, 3> s{d(a, b) + d(c, e), d(a, c) + d(b, e), d(a, e) + d(b, c)};
          std::sort(s.begin(), s.end());
          const Rational gap = s[2] - s[1];
          if (gap > best_gap) {
            best_gap = gap;
            out = {false, std::array<Label, 4>{a, b, c, e}};
          }
        }
  return out;
}

inline FourPointResult four_point_ok(const WeightVector& w) { return four_point_ok(hat(w)); }

class ReconstructionError : public std::invalid_argument {
 public:
  ReconstructionError(const std::string& what, std::array<Label, 4> witness)
      : std::invalid_argument(what), witness_(witness) {}
  const std::array<Label, 4>& witness() const { return witness_; }

 private:
  std::array<Label, 4> witness_;
};

namespace detail {

// Mutable weighted tree used while inserting leaves.
struct WorkTree {
  std::vector<std::map<int, Rational>> adj;

  int add_vertex() {
    adj.emplace_back();
    return static_cast<int>(adj.size()) - 1;
  }
  void link(int u, int v, const Rational& w) {
    adj[u][v] = w;
    adj[v][u] = w;
  }
  void unlink(int u, int v) {
    adj[u].erase(v);
    adj[v].erase(u);
  }
  std::vector<int> path(int from, int to) const {
    std::vector<int> parent(adj.size(), -1);
    std::queue<int> q;
    q.push(from);
    parent[from] = from;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (const auto& [y, w] : adj[x])
        if (parent[y] < 0) {
          parent[y] = x;
          q.push(y);
        }
    }
    std::vector<int> out{to};
    for (int x = to; x != from; x = parent[x]) out.push_back(parent[x]);
    std::reverse(out.begin(), out.end());
    return out;
  }
};

}  // namespace detail

/// Metric shift used by reconstruct: every leaf edge of the shifted tree is at least 1/2.
inline Rational reconstruction_shift(const Dissimilarity& d) { return 1 + 3 * d.max_abs(); }

/// The unique tree without degree-2 vertices realizing d (leaf edges may be negative).
/// Shifts off-diagonal entries by C, inserts leaves one at a time at their exact
/// attachment points, then removes C/2 from every leaf edge.
inline LeafLabeledTree reconstruct(const Dissimilarity& d) {
  if (auto fp = four_point_ok(d); !fp.ok)
    throw ReconstructionError("reconstruct: four-point condition fails", *fp.witness);
  const auto& K = d.labels();
  if (K.size() < 3) throw PreconditionError("reconstruct: need at least 3 leaves");
  const Rational C = reconstruction_shift(d);
  auto dist = [&](Label a, Label b) { return a == b ? Rational(0) : Rational(d(a, b) + C); };

  detail::WorkTree wt;
  std::map<Label, int> leaf_vertex;
  leaf_vertex[K[0]] = wt.add_vertex();
  leaf_vertex[K[1]] = wt.add_vertex();
  if (dist(K[0], K[1]) <= 0) throw std::logic_error("reconstruct: shifted distance not positive");
  wt.link(leaf_vertex[K[0]], leaf_vertex[K[1]], dist(K[0], K[1]));

  for (std::size_t xi = 2; xi < K.size(); ++xi) {
    const Label x = K[xi];
    std::optional<Rational> best;
    Label bi, bj;
    for (std::size_t i = 0; i < xi; ++i)
      for (std::size_t j = i + 1; j < xi; ++j) {
        Rational h = (dist(x, K[i]) + dist(x, K[j]) - dist(K[i], K[j])) / 2;
        if (!best || h < *best) {
          best = h;
          bi = K[i];
          bj = K[j];
        }
      }
    const Rational h = *best;
    const Rational g = dist(x, bi) - h;  // offset of the attachment point from leaf bi
    if (h <= 0 || g <= 0 || g >= dist(bi, bj))
      throw std::logic_error("reconstruct: leaves coincide after the metric shift");
    auto path = wt.path(leaf_vertex[bi], leaf_vertex[bj]);
    Rational walked(0);
    int attach = -1;
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
      const int u = path[s], v = path[s + 1];
      const Rational len = wt.adj[u].at(v);
      if (g == walked + len) {
        attach = v;
        break;
      }
      if (g < walked + len) {
        const Rational first = g - walked;
        const Rational rest = len - first;
        wt.unlink(u, v);
        attach = wt.add_vertex();
        wt.link(u, attach, first);
        wt.link(attach, v, rest);
        break;
      }
      walked += len;
    }
    if (attach < 0) throw std::logic_error("reconstruct: attachment point not found");
    const int xv = wt.add_vertex();
    leaf_vertex[x] = xv;
    wt.link(attach, xv, h);
  }

  // Smooth degree-2 vertices (none are expected to arise).
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < static_cast<int>(wt.adj.size()); ++v)
      if (wt.adj[v].size() == 2) {
        auto it = wt.adj[v].begin();
        auto [a, wa] = *it++;
        auto [b, wb] = *it;
        wt.unlink(v, a);
        wt.unlink(v, b);
        wt.link(a, b, wa + wb);
        changed = true;
      }
  }

  std::vector<int> renum(wt.adj.size(), -1);
  int next = 0;
  for (int v = 0; v < static_cast<int>(wt.adj.size()); ++v)
    if (!wt.adj[v].empty()) renum[v] = next++;
  std::set<int> leaf_set;
  for (const auto& [a, v] : leaf_vertex) leaf_set.insert(v);
  std::vector<Edge> edges;
  for (int u = 0; u < static_cast<int>(wt.adj.size()); ++u)
    for (const auto& [v, w] : wt.adj[u])
      if (u < v) {
        Rational len = w;
        if (leaf_set.count(u) || leaf_set.count(v)) len -= C / 2;
        edges.push_back({renum[u], renum[v], len});
      }
  std::map<Label, int> leaves;
  for (const auto& [a, v] : leaf_vertex) leaves[a] = renum[v];
  LeafLabeledTree t(d.n(), next, std::move(edges), std::move(leaves));
  if (!(distances(t) == d)) throw std::logic_error("reconstruct: realized distances differ from input");
  return t;
}

inline LeafLabeledTree reconstruct(const WeightVector& w) { return reconstruct(hat(w)); }

// ---- Symmetry ----------------------------------------------------------------------

/// The involution of a tree extending v(a) -> v(abar) on leaves.
struct Symmetry {
  std::vector<int> vertex_image;
  std::vector<int> edge_image;

  bool fixes_vertex(int v) const { return vertex_image[v] == v; }
  bool fixes_edge(int e) const { return edge_image[e] == e; }
};

/// Propagates the leaf involution inward, layer by layer; no search.
inline std::optional<Symmetry> symmetry(const LeafLabeledTree& t) {
  const int V = t.num_vertices();
  std::vector<int> img(V, -1);
  for (const auto& [a, v] : t.leaves()) img[v] = t.leaf(a.bar());
  std::vector<bool> alive(V, true);
  std::vector<int> deg(V);
  for (int v = 0; v < V; ++v) deg[v] = t.degree(v);
  int alive_count = V;
  auto alive_neighbor = [&](int x) {
    for (auto [y, e] : t.neighbors(x))
      if (alive[y]) return y;
    return -1;
  };
  while (alive_count > 2) {
    std::vector<int> layer;
    for (int v = 0; v < V; ++v)
      if (alive[v] && deg[v] == 1) layer.push_back(v);
    for (int x : layer) {
      const int y = img[x];
      if (y < 0 || !alive[y] || deg[y] != 1) return std::nullopt;
      const int p = alive_neighbor(x), q = alive_neighbor(y);
      if (img[p] >= 0 && img[p] != q) return std::nullopt;
      img[p] = q;
    }
    for (int x : layer) {
      alive[x] = false;
      --alive_count;
      for (auto [y, e] : t.neighbors(x))
        if (alive[y]) --deg[y];
    }
  }
  Symmetry s{img, std::vector<int>(t.edges().size(), -1)};
  for (int v = 0; v < V; ++v)
    if (img[v] < 0 || img[img[v]] != v) return std::nullopt;
  for (int e = 0; e < static_cast<int>(t.edges().size()); ++e) {
    const int a = img[t.edges()[e].u], b = img[t.edges()[e].v];
    for (auto [y, f] : t.neighbors(a))
      if (y == b) s.edge_image[e] = f;
    if (s.edge_image[e] < 0) return std::nullopt;
  }
  return s;
}

inline bool weight_preserving(const LeafLabeledTree& t, const Symmetry& s) {
  if (!t.weighted()) return true;
  for (int e = 0; e < static_cast<int>(t.edges().size()); ++e)
    if (*t.edges()[e].weight != *t.edges()[s.edge_image[e]].weight) return false;
  return true;
}

/// Number of sigma-orbits on edges, k(T, v).
inline int edge_orbit_count(const LeafLabeledTree& t) {
  auto s = symmetry(t);
  if (!s) throw PreconditionError("edge_orbit_count: tree has no symmetry");
  int k = 0;
  for (int e = 0; e < static_cast<int>(t.edges().size()); ++e)
    if (s->edge_image[e] >= e) ++k;
  return k;
}

// ---- Axial-symmetry criterion on distances ---------------------------------------------

struct KeylemmaResult {
  bool ok = true;
  int condition = 0;                   ///< 1: d(a,b) != d(abar,bbar); 2: a strict maximum
  std::array<int, 3> triple{0, 0, 0};  ///< (i, j, k) for condition 2
  int quantity = 0;                    ///< 1..4, the strictly largest quantity
  std::pair<Label, Label> pair{};      ///< for condition 1
};

/// The four quantities attached to 1 <= i < j < k <= n.
inline std::array<Rational, 4> keylemma_quantities(const Dissimilarity& d, int i, int j, int k) {
  const Label I(i), J(j), Kk(k);
  return {d(I, J) + d(I, J.bar()) + d(Kk, Kk.bar()), d(I, Kk) + d(I, Kk.bar()) + d(J, J.bar()),
          d(J, Kk) + d(J, Kk.bar()) + d(I, I.bar()), d(I, J.bar()) + d(I, Kk) + d(J, Kk.bar())};
}

/// Checks (i) d(a,b) = d(abar,bbar) and (ii) no strict maximum among the four quantities,
/// for triples drawn from K ∩ [1, n].
inline KeylemmaResult keylemma_check(const Dissimilarity& d) {
  const auto& K = d.labels();
  for (Label a : K)
    for (Label b : K)
      if (a != b && d(a, b) != d(a.bar(), b.bar())) return {false, 1, {0, 0, 0}, 0, {a, b}};
  std::vector<int> pos;
  for (Label a : K)
    if (a.positive()) pos.push_back(a.value());
  std::sort(pos.begin(), pos.end());
  for (std::size_t x = 0; x < pos.size(); ++x)
    for (std::size_t y = x + 1; y < pos.size(); ++y)
      for (std::size_t z = y + 1; z < pos.size(); ++z) {
        auto q = keylemma_quantities(d, pos[x], pos[y], pos[z]);
        for (int m = 0; m < 4; ++m) {
          bool strict = true;
          for (int o = 0; o < 4; ++o)
            if (o != m && !(q[m] > q[o])) strict = false;
          if (strict) return {false, 2, {pos[x], pos[y], pos[z]}, m + 1, {}};
        }
      }
  return {};
}

/// On a WeightVector condition (i) holds structurally.
inline KeylemmaResult keylemma_check(const WeightVector& w) { return keylemma_check(hat(w)); }

/// Weighted tree that is axially symmetric with a symmetric weighting.
inline bool is_aswpt(const LeafLabeledTree& t) {
  auto s = symmetry(t);
  return s && weight_preserving(t, *s) && keylemma_check(distances(t)).ok;
}

/// Topological test: a symmetry exists and the unit weighting passes the criterion.
inline bool is_aspt(const LeafLabeledTree& t) {
  return symmetry(t).has_value() && keylemma_check(distances(t, unit_weights(t))).ok;
}

// ---- Structural edits ------------------------------------------------------------------

namespace detail {

/// Rebuilds a tree after merging the endpoints of the given edges; weights of kept edges survive.
inline LeafLabeledTree contract_edges(const LeafLabeledTree& t, const std::set<int>& contracted) {
  std::vector<int> root(t.num_vertices());
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
  for (int e : contracted) root[find(t.edges()[e].u)] = find(t.edges()[e].v);
  std::map<int, int> renum;
  for (int v = 0; v < t.num_vertices(); ++v) renum.emplace(find(v), static_cast<int>(renum.size()));
  std::vector<Edge> edges;
  for (int e = 0; e < static_cast<int>(t.edges().size()); ++e)
    if (!contracted.count(e))
      edges.push_back({renum.at(find(t.edges()[e].u)), renum.at(find(t.edges()[e].v)), t.edges()[e].weight});
  std::map<Label, int> leaves;
  for (const auto& [a, v] : t.leaves()) leaves[a] = renum.at(find(v));
  return {t.n(), static_cast<int>(renum.size()), std::move(edges), std::move(leaves)};
}

}  // namespace detail

/// Contracts the non-leaf edge e together with sigma(e).
inline LeafLabeledTree symmetric_contract(const LeafLabeledTree& t, int e) {
  auto s = symmetry(t);
  if (!s) throw PreconditionError("symmetric_contract: tree has no symmetry");
  if (e < 0 || e >= static_cast<int>(t.edges().size())) throw PreconditionError("symmetric_contract: no such edge");
  if (t.is_leaf_edge(e)) throw PreconditionError("symmetric_contract: leaf edges cannot be contracted");
  return detail::contract_edges(t, {e, s->edge_image[e]});
}

/// Minimal subtree spanned by the leaves in Kp, with degree-2 vertices smoothed.
inline LeafLabeledTree subtree_restrict(const LeafLabeledTree& t, const std::vector<Label>& Kp) {
  if (Kp.size() < 4) throw PreconditionError("subtree_restrict: need at least 4 labels");
  std::set<Label> keep(Kp.begin(), Kp.end());
  for (Label a : keep) {
    if (!keep.count(a.bar())) throw PreconditionError("subtree_restrict: label set is not symmetric");
    if (!t.leaves().count(a)) throw PreconditionError("subtree_restrict: label not in tree");
  }
  const int V = t.num_vertices();
  std::vector<bool> used_vertex(V, false);
  std::vector<bool> used_edge(t.edges().size(), false);
  std::vector<Label> ks(keep.begin(), keep.end());
  for (std::size_t x = 0; x < ks.size(); ++x)
    for (std::size_t y = x + 1; y < ks.size(); ++y) {
      for (int v : t.path_vertices(t.leaf(ks[x]), t.leaf(ks[y]))) used_vertex[v] = true;
      for (int e : t.path_edges(t.leaf(ks[x]), t.leaf(ks[y]))) used_edge[e] = true;
    }
  // Adjacency restricted to used edges, then smooth degree-2 vertices.
  const bool weighted = t.weighted();
  std::vector<std::map<int, Rational>> adj(V);
  for (int e = 0; e < static_cast<int>(t.edges().size()); ++e)
    if (used_edge[e]) {
      const auto& ed = t.edges()[e];
      Rational w = weighted ? *ed.weight : Rational(0);
      adj[ed.u][ed.v] = w;
      adj[ed.v][ed.u] = w;
    }
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < V; ++v)
      if (adj[v].size() == 2) {
        auto it = adj[v].begin();
        auto [a, wa] = *it++;
        auto [b, wb] = *it;
        adj[a].erase(v);
        adj[b].erase(v);
        adj[v].clear();
        adj[a][b] = wa + wb;
        adj[b][a] = wa + wb;
        used_vertex[v] = false;
        changed = true;
      }
  }
  std::vector<int> renum(V, -1);
  int next = 0;
  for (int v = 0; v < V; ++v)
    if (used_vertex[v] && !adj[v].empty()) renum[v] = next++;
  std::vector<Edge> edges;
  for (int u = 0; u < V; ++u)
    for (const auto& [v, w] : adj[u])
      if (u < v) edges.push_back({renum[u], renum[v], weighted ? std::optional<Rational>(w) : std::nullopt});
  std::map<Label, int> leaves;
  for (Label a : keep) leaves[a] = renum[t.leaf(a)];
  return {t.n(), next, std::move(edges), std::move(leaves)};
}

// ---- Canonical keys ---------------------------------------------------------------------

/// Byte string equal for two trees iff a label- (and weight-) preserving isomorphism exists.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (unsigned char c : bytes_) {
      out.push_back(digits[c >> 4]);
      out.push_back(digits[c & 15]);
    }
    return out;
  }
  static CanonicalKey from_hex(const std::string& hex) {
    if (hex.size() % 2) throw std::invalid_argument("odd-length hex key");
    auto val = [](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      throw std::invalid_argument("bad hex digit");
    };
    std::string bytes;
    for (std::size_t k = 0; k < hex.size(); k += 2) bytes.push_back(static_cast<char>(val(hex[k]) * 16 + val(hex[k + 1])));
    return CanonicalKey(std::move(bytes));
  }

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend std::ostream& operator<<(std::ostream& os, const CanonicalKey& k) { return os << k.bytes_; }

 private:
  std::string bytes_;
};

/// Rooted at the leaf with the smallest label; children encodings sorted.
inline CanonicalKey canonical_key(const LeafLabeledTree& t) {
  const auto K = t.labels();
  const int root = t.leaf(K.front());
  std::function<std::string(int, int)> enc = [&](int v, int parent) -> std::string {
    if (auto a = t.label_of(v); a && parent >= 0) return "L" + std::to_string(a->value());
    std::vector<std::string> kids;
    for (auto [y, e] : t.neighbors(v)) {
      if (y == parent) continue;
      std::string w = t.weighted() ? "w" + to_string(*t.edges()[e].weight) + ":" : "";
      kids.push_back(w + enc(y, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k + ";";
    return s + ")";
  };
  return CanonicalKey("n" + std::to_string(t.n()) + "R" + std::to_string(K.front().value()) + enc(root, -1));
}

// ---- Generators ------------------------------------------------------------------------

/// A random phylogenetic tree on a symmetric label set; optionally with random rational
/// weights (positive on non-leaf edges, arbitrary sign on leaf edges).
template <class Rng>
LeafLabeledTree random_tree(int n, Rng& rng, bool weighted) {
  auto labels = all_labels(n);
  std::shuffle(labels.begin(), labels.end(), rng);
  // Start from a 3-leaf star and insert leaves by subdividing an edge or joining a vertex.
  std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {0, 3}};
  std::map<Label, int> leaves{{labels[0], 1}, {labels[1], 2}, {labels[2], 3}};
  int V = 4;
  std::set<int> leaf_vertices{1, 2, 3};
  for (std::size_t x = 3; x < labels.size(); ++x) {
    std::uniform_int_distribution<int> coin(0, 2);
    std::vector<int> internal;
    for (int v = 0; v < V; ++v)
      if (!leaf_vertices.count(v)) internal.push_back(v);
    if (coin(rng) == 0) {
      std::uniform_int_distribution<std::size_t> pick(0, internal.size() - 1);
      edges.push_back({internal[pick(rng)], V});
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
      const std::size_t e = pick(rng);
      const auto [u, v] = edges[e];
      const int m = V++;
      edges[e] = {u, m};
      edges.push_back({m, v});
      edges.push_back({m, V});
    }
    leaves[labels[x]] = V;
    leaf_vertices.insert(V);
    ++V;
  }
  std::vector<Edge> out;
  std::uniform_int_distribution<int> num(1, 40), den(1, 7), sgn(0, 3);
  for (auto [u, v] : edges) {
    Edge e{u, v, std::nullopt};
    if (weighted) {
      Rational w(num(rng), den(rng));
      w.canonicalize();
      if ((leaf_vertices.count(u) || leaf_vertices.count(v)) && sgn(rng) == 0) w = -w;
      e.weight = w;
    }
    out.push_back(e);
  }
  return {n, V, std::move(out), std::move(leaves)};
}

/// A random symmetric weighting of a tree with a symmetry (positive on non-leaf edges).
template <class Rng>
LeafLabeledTree random_symmetric_weighting(const LeafLabeledTree& t, Rng& rng) {
  auto s = symmetry(t);
  if (!s) throw PreconditionError("random_symmetric_weighting: no symmetry");
  std::uniform_int_distribution<int> num(1, 30), den(1, 5), sgn(0, 2);
  std::vector<Rational> w(t.edges().size());
  for (int e = 0; e < static_cast<int>(t.edges().size()); ++e) {
    if (s->edge_image[e] < e) continue;
    Rational x(num(rng), den(rng));
    x.canonicalize();
    if (t.is_leaf_edge(e) && sgn(rng) == 0) x = -x;
    w[e] = x;
    w[s->edge_image[e]] = x;
  }
  return t.with_weights(w);
}

/// Star tree on N with the given (or zero) leaf weights; label a at vertex prec_rank(a)+1.
inline LeafLabeledTree star_tree(int n, std::optional<std::vector<Rational>> leaf_weights = std::nullopt) {
  std::vector<Edge> edges;
  std::map<Label, int> leaves;
  for (Label a : all_labels(n)) {
    const int v = prec_rank(a, n) + 1;
    leaves[a] = v;
    std::optional<Rational> w;
    if (leaf_weights) w = (*leaf_weights)[prec_rank(a, n)];
    edges.push_back({0, v, w});
  }
  return {n, 2 * n + 1, std::move(edges), std::move(leaves)};
}

}  // namespace ctrop
