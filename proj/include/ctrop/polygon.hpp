#pragma once

// Subdivisions and side labelings of the regular 2n-gon (vertices 0..2n-1, axis {0, n}).

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctrop/core.hpp"
#include "ctrop/trees.hpp"

namespace ctrop {

struct Diagonal {
  int p = 0;
  int q = 0;

  friend bool operator==(const Diagonal&, const Diagonal&) = default;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

inline Diagonal make_diagonal(int p, int q) { return p < q ? Diagonal{p, q} : Diagonal{q, p}; }

/// Strict interleaving of endpoints; a shared endpoint is not a crossing.
inline bool crosses(const Diagonal& a, const Diagonal& b) {
  auto inside = [&](int v) { return a.p < v && v < a.q; };
  if (a.p == b.p || a.p == b.q || a.q == b.p || a.q == b.q) return false;
  return inside(b.p) != inside(b.q);
}

inline int reflect_vertex(int v, int n) { return (2 * n - v) % (2 * n); }
inline int rotate_half(int v, int n) { return (v + n) % (2 * n); }
inline Diagonal reflect(const Diagonal& d, int n) { return make_diagonal(reflect_vertex(d.p, n), reflect_vertex(d.q, n)); }
inline Diagonal central_image(const Diagonal& d, int n) { return make_diagonal(rotate_half(d.p, n), rotate_half(d.q, n)); }
inline Diagonal delta0(int n) { return {0, n}; }
/// A diagonal fixed by the reflection other than the axis itself.
inline bool is_perpendicular(const Diagonal& d, int n) { return reflect(d, n) == d && d != delta0(n); }

enum class SymmetryMode { axial, central, none };

/// A set of pairwise non-crossing diagonals of the 2n-gon.
class Subdivision {
 public:
  Subdivision() = default;
  Subdivision(int n, std::set<Diagonal> diagonals) : n_(n), diagonals_(std::move(diagonals)) {
    check_size(n_);
    const int m = 2 * n_;
    for (const auto& d : diagonals_) {
      if (d.p < 0 || d.q >= m || d.p >= d.q) throw PreconditionError("subdivision: bad diagonal endpoints");
      if (d.q - d.p == 1 || d.q - d.p == m - 1) throw PreconditionError("subdivision: a side is not a diagonal");
    }
    for (const auto& a : diagonals_)
      for (const auto& b : diagonals_)
        if (crosses(a, b)) throw PreconditionError("subdivision: crossing diagonals");
  }

  int n() const { return n_; }
  const std::set<Diagonal>& diagonals() const { return diagonals_; }
  bool contains(const Diagonal& d) const { return diagonals_.count(d) > 0; }

  bool is_axial() const {
    return std::all_of(diagonals_.begin(), diagonals_.end(), [&](const Diagonal& d) { return contains(reflect(d, n_)); });
  }
  bool is_central() const {
    return std::all_of(diagonals_.begin(), diagonals_.end(),
                       [&](const Diagonal& d) { return contains(central_image(d, n_)); });
  }
  bool is_triangulation() const { return static_cast<int>(diagonals_.size()) == 2 * n_ - 3; }

  /// Cells as counterclockwise vertex cycles, obtained by splitting along each diagonal.
  std::vector<std::vector<int>> cells() const {
    std::vector<std::vector<int>> out(1);
    for (int v = 0; v < 2 * n_; ++v) out[0].push_back(v);
    for (const auto& d : diagonals_) {
      for (std::size_t c = 0; c < out.size(); ++c) {
        auto& cell = out[c];
        auto ip = std::find(cell.begin(), cell.end(), d.p);
        auto iq = std::find(cell.begin(), cell.end(), d.q);
        if (ip == cell.end() || iq == cell.end()) continue;
        std::size_t a = ip - cell.begin(), b = iq - cell.begin();
        if (a > b) std::swap(a, b);
        std::vector<int> first(cell.begin() + a, cell.begin() + b + 1);
        std::vector<int> second(cell.begin() + b, cell.end());
        second.insert(second.end(), cell.begin(), cell.begin() + a + 1);
        cell = std::move(first);
        out.push_back(std::move(second));
        break;
      }
    }
    return out;
  }

  friend bool operator==(const Subdivision&, const Subdivision&) = default;
  friend auto operator<=>(const Subdivision& a, const Subdivision& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::vector<Diagonal>(a.diagonals_.begin(), a.diagonals_.end()) <=>
           std::vector<Diagonal>(b.diagonals_.begin(), b.diagonals_.end());
  }

 private:
  int n_ = 0;
  std::set<Diagonal> diagonals_;
};

/// Theta0: the fan of diagonals through vertex 0, the axis endpoint shared by phi0(1) and
/// phi0(1bar). Its dual tree under phi0 is the caterpillar with cherries {1, 2} and {1bar, 2bar}.
inline Subdivision theta0(int n) {
  check_size(n);
  std::set<Diagonal> d;
  for (int v = 2; v <= 2 * n - 2; ++v) d.insert({0, v});
  return {n, d};
}

// ---- Labelings ----------------------------------------------------------------------

/// A bijection from N to the sides; side k joins vertices k and k+1 (mod 2n).
class Labeling {
 public:
  Labeling() = default;
  /// side_of[prec_rank(a)] = side of a.
  Labeling(int n, std::vector<int> side_of) : n_(n), side_of_(std::move(side_of)) {
    check_size(n_);
    if (static_cast<int>(side_of_.size()) != 2 * n_) throw PreconditionError("labeling: need 2n sides");
    std::vector<bool> seen(2 * n_, false);
    for (int s : side_of_) {
      if (s < 0 || s >= 2 * n_ || seen[s]) throw PreconditionError("labeling: not a bijection");
      seen[s] = true;
    }
  }

  int n() const { return n_; }
  int side(Label a) const { return side_of_[prec_rank(a, n_)]; }
  Label label_at(int side) const {
    for (int r = 0; r < 2 * n_; ++r)
      if (side_of_[r] == side) return label_at_prec_rank(r, n_);
    throw PreconditionError("labeling: no such side");
  }
  /// Labels read counterclockwise from side 0.
  std::vector<Label> reading() const {
    std::vector<Label> out(2 * n_);
    for (int r = 0; r < 2 * n_; ++r) out[side_of_[r]] = label_at_prec_rank(r, n_);
    return out;
  }

  bool is_axial() const {
    for (int i = 1; i <= n_; ++i)
      if (side(Label(-i)) != 2 * n_ - 1 - side(Label(i))) return false;
    return true;
  }
  bool is_central() const {
    for (int i = 1; i <= n_; ++i)
      if (side(Label(-i)) != (side(Label(i)) + n_) % (2 * n_)) return false;
    return true;
  }

  /// phi o tau^{-1}: the label tau(a) goes where a was.
  Labeling relabeled(const GroupElement& tau) const {
    std::vector<int> s(2 * n_);
    for (Label a : all_labels(n_)) s[prec_rank(tau(a), n_)] = side(a);
    return {n_, s};
  }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  int n_ = 0;
  std::vector<int> side_of_;
};

/// phi0(i) = side i-1, phi0(ibar) = side 2n-i.
inline Labeling phi0(int n) {
  check_size(n);
  std::vector<int> s(2 * n);
  for (int i = 1; i <= n; ++i) {
    s[prec_rank(Label(i), n)] = i - 1;
    s[prec_rank(Label(-i), n)] = 2 * n - i;
  }
  return {n, s};
}

/// Axially (or centrally) symmetric labelings: a signed permutation fills sides 0..n-1.
inline std::vector<Labeling> symmetric_labelings(int n, SymmetryMode mode) {
  if (mode == SymmetryMode::none) throw PreconditionError("symmetric_labelings: pick axial or central");
  std::vector<Labeling> out;
  for (const auto& tau : GroupElement::enumerate(n)) {
    std::vector<int> s(2 * n);
    for (int k = 0; k < n; ++k) {
      const Label a = tau(Label(k + 1));
      s[prec_rank(a, n)] = k;
      s[prec_rank(a.bar(), n)] = mode == SymmetryMode::axial ? 2 * n - 1 - k : k + n;
    }
    out.emplace_back(n, s);
  }
  return out;
}

// ---- Dual trees ------------------------------------------------------------------------

/// One vertex per cell, adjacent across shared diagonals, plus a leaf per side.
inline LeafLabeledTree dual_tree(const Subdivision& theta, const Labeling& phi) {
  const int n = theta.n();
  if (phi.n() != n) throw PreconditionError("dual_tree: size mismatch");
  const auto cells = theta.cells();
  const int C = static_cast<int>(cells.size());
  std::map<Diagonal, std::vector<int>> owners;
  std::vector<int> side_cell(2 * n, -1);
  for (int c = 0; c < C; ++c) {
    const auto& cell = cells[c];
    for (std::size_t k = 0; k < cell.size(); ++k) {
      const int u = cell[k], v = cell[(k + 1) % cell.size()];
      if ((u + 1) % (2 * n) == v)
        side_cell[u] = c;
      else if ((v + 1) % (2 * n) == u)
        side_cell[v] = c;
      else
        owners[make_diagonal(u, v)].push_back(c);
    }
  }
  std::vector<Edge> edges;
  for (const auto& [d, cs] : owners) {
    if (cs.size() != 2) throw std::logic_error("dual_tree: diagonal not shared by two cells");
    edges.push_back({cs[0], cs[1], std::nullopt});
  }
  std::map<Label, int> leaves;
  for (int s = 0; s < 2 * n; ++s) {
    leaves[phi.label_at(s)] = C + s;
    edges.push_back({side_cell[s], C + s, std::nullopt});
  }
  return {n, C + 2 * n, std::move(edges), std::move(leaves)};
}

// ---- Enumeration -------------------------------------------------------------------------

namespace detail {

inline std::vector<Diagonal> all_diagonals(int n) {
  std::vector<Diagonal> out;
  const int m = 2 * n;
  for (int p = 0; p < m; ++p)
    for (int q = p + 2; q < m; ++q)
      if (!(p == 0 && q == m - 1)) out.push_back({p, q});
  return out;
}

/// Orbits of diagonals under the chosen symmetry, dropping orbits that cross themselves.
inline std::vector<std::vector<Diagonal>> diagonal_orbits(int n, SymmetryMode mode) {
  std::vector<std::vector<Diagonal>> out;
  std::set<Diagonal> done;
  for (const auto& d : all_diagonals(n)) {
    if (done.count(d)) continue;
    std::set<Diagonal> orbit{d};
    if (mode == SymmetryMode::axial) orbit.insert(reflect(d, n));
    if (mode == SymmetryMode::central) orbit.insert(central_image(d, n));
    done.insert(orbit.begin(), orbit.end());
    bool ok = true;
    for (const auto& a : orbit)
      for (const auto& b : orbit)
        if (crosses(a, b)) ok = false;
    if (ok) out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

}  // namespace detail

/// All subdivisions closed under the chosen symmetry, in a deterministic order.
/// With maximal_only, keeps those to which no further symmetric orbit can be added.
inline std::vector<Subdivision> enumerate_subdivisions(int n, SymmetryMode mode, bool maximal_only) {
  check_size(n);
  const auto orbits = detail::diagonal_orbits(n, mode);
  const std::size_t m = orbits.size();
  std::vector<std::vector<bool>> compatible(m, std::vector<bool>(m, true));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (const auto& x : orbits[a])
        for (const auto& y : orbits[b])
          if (crosses(x, y)) compatible[a][b] = false;

  std::vector<Subdivision> out;
  std::vector<std::size_t> chosen;
  auto fits = [&](std::size_t o) {
    return std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return compatible[c][o]; });
  };
  auto emit = [&] {
    if (maximal_only)
      for (std::size_t o = 0; o < m; ++o)
        if (std::find(chosen.begin(), chosen.end(), o) == chosen.end() && fits(o)) return;
    std::set<Diagonal> d;
    for (std::size_t c : chosen) d.insert(orbits[c].begin(), orbits[c].end());
    out.emplace_back(n, std::move(d));
  };
  auto rec = [&](auto&& self, std::size_t start) -> void {
    emit();
    for (std::size_t o = start; o < m; ++o)
      if (fits(o)) {
        chosen.push_back(o);
        self(self, o + 1);
        chosen.pop_back();
      }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

enum class MaximalType { I, II };

struct MaximalClassification {
  MaximalType type;
  int perpendicular = 0;     ///< m, number of diagonals perpendicular to the axis
  int quadrilaterals = 0;    ///< number of axially symmetric trapezoid cells
};

/// Type (I): the axis is a diagonal (a triangulation). Type (II): m perpendicular diagonals.
inline MaximalClassification classify_maximal(const Subdivision& theta) {
  const int n = theta.n();
  if (!theta.is_axial()) throw PreconditionError("classify_maximal: not axially symmetric");
  MaximalClassification c{theta.contains(delta0(n)) ? MaximalType::I : MaximalType::II};
  for (const auto& d : theta.diagonals())
    if (is_perpendicular(d, n)) ++c.perpendicular;
  for (const auto& cell : theta.cells())
    if (cell.size() == 4) ++c.quadrilaterals;
  return c;
}

// ---- Symmetric flips ---------------------------------------------------------------------

namespace detail {

/// The other diagonal of the quadrilateral formed by the two triangles adjacent to d.
inline Diagonal flip_partner(const Subdivision& theta, const Diagonal& d) {
  std::vector<int> apex;
  for (const auto& cell : theta.cells()) {
    if (cell.size() != 3) continue;
    if (std::count(cell.begin(), cell.end(), d.p) && std::count(cell.begin(), cell.end(), d.q))
      for (int v : cell)
        if (v != d.p && v != d.q) apex.push_back(v);
  }
  if (apex.size() != 2) throw PreconditionError("symmetric_flip: diagonal is not between two triangles");
  return make_diagonal(apex[0], apex[1]);
}

}  // namespace detail

/// Replaces delta and its mirror image by their flip partners.
inline Subdivision symmetric_flip(const Subdivision& theta, const Diagonal& delta) {
  const int n = theta.n();
  if (!theta.is_axial() || !theta.is_triangulation())
    throw PreconditionError("symmetric_flip: need an axially symmetric triangulation");
  if (!theta.contains(delta)) throw PreconditionError("symmetric_flip: diagonal not in the subdivision");
  const Diagonal d1 = delta, d2 = reflect(delta, n);
  const Diagonal s1 = detail::flip_partner(theta, d1), s2 = detail::flip_partner(theta, d2);
  if (d1 != d2 && crosses(s1, s2)) throw PreconditionError("symmetric_flip: flip partners cross");
  auto diags = theta.diagonals();
  diags.erase(d1);
  diags.erase(d2);
  diags.insert(s1);
  diags.insert(s2);
  return {n, diags};
}

// ---- Dihedral orderings ----------------------------------------------------------------------

/// A cyclic ordering of N up to rotation and reversal, stored as its least representative
/// (labels compared by prec rank).
class DihedralOrdering {
 public:
  DihedralOrdering() = default;
  DihedralOrdering(int n, const std::vector<Label>& cyclic) : n_(n) {
    check_size(n);
    if (static_cast<int>(cyclic.size()) != 2 * n) throw PreconditionError("ordering: need 2n labels");
    std::set<Label> seen;
    for (Label a : cyclic)
      if (!valid_label(a, n) || !seen.insert(a).second) throw PreconditionError("ordering: not a permutation of N");
    std::vector<int> ranks;
    for (Label a : cyclic) ranks.push_back(prec_rank(a, n));
    std::vector<int> best;
    const int m = 2 * n;
    for (int dir = 0; dir < 2; ++dir)
      for (int s = 0; s < m; ++s) {
        std::vector<int> cand(m);
        for (int k = 0; k < m; ++k) cand[k] = ranks[dir == 0 ? (s + k) % m : ((s - k) % m + m) % m];
        if (best.empty() || cand < best) best = cand;
      }
    for (int r : best) labels_.push_back(label_at_prec_rank(r, n));
  }

  int n() const { return n_; }
  const std::vector<Label>& labels() const { return labels_; }
  int position(Label a) const {
    return static_cast<int>(std::find(labels_.begin(), labels_.end(), a) - labels_.begin());
  }

  /// Realized by a centrally symmetric labeling: abar sits opposite a.
  bool is_csdo() const {
    for (Label a : labels_)
      if (position(a.bar()) != (position(a) + n_) % (2 * n_)) return false;
    return true;
  }
  /// Realized by an axially symmetric labeling: pos(a) + pos(abar) is constant and odd.
  bool is_asdo() const {
    const int m = 2 * n_;
    const int c = (position(Label(1)) + position(Label(-1))) % m;
    if (c % 2 == 0) return false;
    for (Label a : labels_)
      if ((position(a) + position(a.bar())) % m != c) return false;
    return true;
  }

  friend bool operator==(const DihedralOrdering&, const DihedralOrdering&) = default;
  friend auto operator<=>(const DihedralOrdering& a, const DihedralOrdering& b) {
    auto ranks = [](const DihedralOrdering& o) {
      std::vector<int> r;
      for (Label x : o.labels_) r.push_back(prec_rank(x, o.n_));
      return r;
    };
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return ranks(a) <=> ranks(b);
  }

 private:
  int n_ = 0;
  std::vector<Label> labels_;
};

inline DihedralOrdering ordering_of(const Labeling& phi) { return {phi.n(), phi.reading()}; }

/// The prec reading 1, ..., n, 1bar, ..., nbar.
inline DihedralOrdering lambda0(int n) { return {n, all_labels(n)}; }
/// The dotprec reading 1, ..., n, nbar, ..., 1bar, equal to ordering_of(phi0(n)).
inline DihedralOrdering mu0(int n) { return ordering_of(phi0(n)); }

namespace detail {

inline std::vector<DihedralOrdering> orderings_of(int n, SymmetryMode mode) {
  std::set<DihedralOrdering> s;
  for (const auto& phi : symmetric_labelings(n, mode)) s.insert(ordering_of(phi));
  return {s.begin(), s.end()};
}

}  // namespace detail

inline std::vector<DihedralOrdering> enumerate_csdo(int n) { return detail::orderings_of(n, SymmetryMode::central); }
inline std::vector<DihedralOrdering> enumerate_asdo(int n) { return detail::orderings_of(n, SymmetryMode::axial); }

/// Every edge splits the leaves into two arcs of the circular order.
inline bool compatible(const LeafLabeledTree& t, const DihedralOrdering& lambda) {
  if (!t.full() || t.n() != lambda.n()) throw PreconditionError("compatible: tree must be labeled by all of N");
  const int m = 2 * t.n();
  for (int e = 0; e < static_cast<int>(t.edges().size()); ++e) {
    // leaves on the u-side of e
    std::vector<bool> side(m, false);
    std::vector<int> stack{t.edges()[e].u};
    std::vector<bool> seen(t.num_vertices(), false);
    seen[t.edges()[e].u] = seen[t.edges()[e].v] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (auto a = t.label_of(x)) side[lambda.position(*a)] = true;
      for (auto [y, f] : t.neighbors(x))
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    int boundaries = 0;
    for (int k = 0; k < m; ++k)
      if (side[k] && !side[(k + 1) % m]) ++boundaries;
    if (boundaries > 1) return false;
  }
  return true;
}

}  // namespace ctrop
