#pragma once

// The tropical variety as the space of axially symmetric phylogenetic trees.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ctrop/core.hpp"
#include "ctrop/ideal.hpp"
#include "ctrop/polygon.hpp"
#include "ctrop/trees.hpp"

namespace ctrop {

struct Witness {
  enum class Kind { r, s, keylemma };
  Kind kind;
  std::vector<Label> labels;  ///< quadruple for r, (i,j,k) for s, offending pair for keylemma
};

inline std::string to_string(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::r: return "r";
    case Witness::Kind::s: return "s";
    case Witness::Kind::keylemma: return "keylemma";
  }
  return "";
}

struct MembershipCertificate {
  bool in = false;
  std::optional<LeafLabeledTree> tree;  ///< weighted ASWPT realizing w
  std::optional<Witness> witness;
};

/// Polynomial named by an "out" witness; its initial form at w is a monomial.
inline Poly witness_polynomial(const Witness& wit, int n) {
  switch (wit.kind) {
    case Witness::Kind::r:
      return r_gen(wit.labels.at(0), wit.labels.at(1), wit.labels.at(2), wit.labels.at(3), n);
    case Witness::Kind::s:
      return s_gen(wit.labels.at(0).value(), wit.labels.at(1).value(), wit.labels.at(2).value(), n);
    case Witness::Kind::keylemma: break;
  }
  throw PreconditionError("witness_polynomial: keylemma witnesses carry no polynomial");
}

/// Four-point test, reconstruction, then the axial-symmetry criterion.
inline MembershipCertificate membership(const WeightVector& w) {
  if (auto fp = four_point_ok(w); !fp.ok) {
    const auto& q = *fp.witness;
    return {false, std::nullopt, Witness{Witness::Kind::r, {q.begin(), q.end()}}};
  }
  auto t = reconstruct(w);
  if (auto kl = keylemma_check(w); !kl.ok) {
    if (kl.condition == 2)
      return {false, std::nullopt,
              Witness{Witness::Kind::s, {Label(kl.triple[0]), Label(kl.triple[1]), Label(kl.triple[2])}}};
    return {false, std::nullopt, Witness{Witness::Kind::keylemma, {kl.pair.first, kl.pair.second}}};
  }
  auto s = symmetry(t);
  if (!s || !weight_preserving(t, *s))
    throw std::logic_error("membership: criterion passed but the tree is not symmetric");
  return {true, t, std::nullopt};
}

inline bool is_monomial(const Poly& p) { return p.size() == 1; }

/// No r and (optionally) no s has a monomial initial form at w.
inline bool membership_basis(const WeightVector& w, bool include_s = true) {
  const int n = w.n();
  for (const auto& r : distinct_relations(n))
    if (is_monomial(initial_form(r.poly, w))) return false;
  if (include_s)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          if (is_monomial(initial_form(s_gen(i, j, k, n), w))) return false;
  return true;
}

/// Canonical key of the unweighted ASPT whose open cone contains w.
inline CanonicalKey cone_of(const WeightVector& w) {
  auto cert = membership(w);
  if (!cert.in) throw PreconditionError("cone_of: weight vector is not in the tropical variety");
  return canonical_key(cert.tree->unweighted());
}

namespace detail {

/// Rank of a list of rational vectors by exact elimination.
inline int rational_rank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

inline int rank_of(const std::vector<WeightVector>& vs) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : vs) rows.push_back(v.coords());
  return detail::rational_rank(std::move(rows));
}

struct ConeRays {
  std::vector<WeightVector> rays;       ///< one per non-leaf edge orbit
  std::vector<WeightVector> lineality;  ///< one per leaf edge orbit
};

/// w(T, v, l_e) for the indicator l_e of every edge orbit.
inline ConeRays cone_rays(const LeafLabeledTree& t) {
  if (!is_aspt(t)) throw PreconditionError("cone_rays: not an ASPT");
  const auto s = *symmetry(t);
  ConeRays out;
  for (int e = 0; e < static_cast<int>(t.edges().size()); ++e) {
    if (s.edge_image[e] < e) continue;
    std::vector<Rational> l(t.edges().size(), Rational(0));
    l[e] = 1;
    l[s.edge_image[e]] = 1;
    auto v = to_weight_vector(distances(t, l));
    (t.is_leaf_edge(e) ? out.lineality : out.rays).push_back(std::move(v));
  }
  return out;
}

/// Combination of the rays with the given coefficients.
inline WeightVector cone_point(const LeafLabeledTree& t, const std::vector<Rational>& ray_coeffs) {
  auto cr = cone_rays(t);
  if (ray_coeffs.size() != cr.rays.size()) throw PreconditionError("cone_point: coefficient count mismatch");
  WeightVector w(t.n());
  for (std::size_t k = 0; k < ray_coeffs.size(); ++k) w += ray_coeffs[k] * cr.rays[k];
  return w;
}

struct FanStatistics {
  int n = 0;
  std::map<int, int> cones_by_dimension;  ///< k(T, v) to count
  int maximal = 0;
  int rays = 0;
  std::vector<LeafLabeledTree> trees;  ///< one unweighted ASPT per cone, sorted by key
};

/// All ASPTs as duals of axial subdivisions under axial labelings, deduplicated by key.
inline FanStatistics enumerate_fan(int n) {
  if (n < 3 || n > 4) throw PreconditionError("enumerate_fan: supported for n = 3, 4");
  std::map<CanonicalKey, LeafLabeledTree> found;
  const auto labelings = symmetric_labelings(n, SymmetryMode::axial);
  for (const auto& theta : enumerate_subdivisions(n, SymmetryMode::axial, false))
    for (const auto& phi : labelings) {
      auto t = dual_tree(theta, phi);
      auto key = canonical_key(t);
      if (found.count(key)) continue;
      if (!is_aspt(t)) continue;
      found.emplace(std::move(key), std::move(t));
    }
  FanStatistics st;
  st.n = n;
  for (auto& [key, t] : found) {
    const int k = edge_orbit_count(t);
    ++st.cones_by_dimension[k];
    if (k == 2 * n - 1) ++st.maximal;
    if (k == n + 1) ++st.rays;
    st.trees.push_back(t);
  }
  return st;
}

/// Keys of all symmetric contractions of t by one edge orbit.
inline std::set<CanonicalKey> facet_keys(const LeafLabeledTree& t) {
  std::set<CanonicalKey> out;
  for (int e = 0; e < static_cast<int>(t.edges().size()); ++e)
    if (!t.is_leaf_edge(e)) out.insert(canonical_key(symmetric_contract(t, e)));
  return out;
}

}  // namespace ctrop
