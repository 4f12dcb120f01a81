#pragma once

// JSON encodings; rationals travel as exact "p/q" strings.

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "ctrop/configspace.hpp"
#include "ctrop/core.hpp"
#include "ctrop/polygon.hpp"
#include "ctrop/trees.hpp"
#include "ctrop/tropical.hpp"

namespace ctrop::json {

using nlohmann::json;

/// Input that does not follow a documented schema.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw MalformedInput(std::string(what) + ": expected an integer");
  return j.get<int>();
}

inline Label as_label(const json& j) { return Label(as_int(j, "label")); }

inline Label parse_label(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw MalformedInput("bad label \"" + s + "\"");
  }
  if (used != s.size() || v == 0) throw MalformedInput("bad label \"" + s + "\"");
  return Label(v);
}

/// "a,b" to a pair of labels, not yet canonicalized.
inline std::pair<Label, Label> parse_pair_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) throw MalformedInput("bad pair key \"" + key + "\"");
  return {parse_label(key.substr(0, comma)), parse_label(key.substr(comma + 1))};
}

inline void check_labels(Label a, Label b, int n) {
  if (!valid_label(a, n) || !valid_label(b, n) || a == b)
    throw MalformedInput("pair " + std::to_string(a.value()) + "," + std::to_string(b.value()) + " outside N");
}

}  // namespace detail

inline json rational_to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw MalformedInput("rational: expected a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(e.what());
  }
}

inline json pair_key(const Pair& p) { return to_string(p); }

// ---- WeightVector ------------------------------------------------------------------------------

inline json weight_to_json(const WeightVector& w) {
  json coords = json::object();
  for (const Pair& p : enumerate_D(w.n())) coords[to_string(p)] = to_string(w.at(p));
  return {{"n", w.n()}, {"coords", coords}};
}

/// Every element of D must be given exactly once; non-canonical keys name their representative.
inline WeightVector weight_from_json(const json& j) {
  const int n = detail::as_int(detail::field(j, "n"), "n");
  if (n < 3) throw MalformedInput("n must be at least 3");
  const json& coords = detail::field(j, "coords");
  if (!coords.is_object()) throw MalformedInput("coords: expected an object");
  WeightVector w(n);
  std::vector<bool> seen(w.size(), false);
  for (const auto& [key, value] : coords.items()) {
    const auto [a, b] = detail::parse_pair_key(key);
    detail::check_labels(a, b, n);
    const int idx = pair_index(a, b, n);
    if (seen[idx]) throw MalformedInput("coordinate " + key + " given twice");
    seen[idx] = true;
    w[idx] = rational_from_json(value);
  }
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (!seen[k]) throw MalformedInput("missing coordinate " + to_string(enumerate_D(n)[k]));
  return w;
}

// ---- Trees -------------------------------------------------------------------------------------

inline json tree_to_json(const LeafLabeledTree& t) {
  json K = json::array();
  for (Label a : t.labels()) K.push_back(a.value());
  json edges = json::array();
  for (const auto& e : t.edges()) {
    json je = {{"u", e.u}, {"v", e.v}};
    if (e.weight) je["w"] = to_string(*e.weight);
    edges.push_back(je);
  }
  json leaves = json::object();
  for (Label a : t.labels()) leaves[std::to_string(a.value())] = t.leaf(a);
  return {{"n", t.n()}, {"K", K}, {"edges", edges}, {"leaves", leaves}};
}

inline LeafLabeledTree tree_from_json(const json& j) {
  const int n = detail::as_int(detail::field(j, "n"), "n");
  const json& jedges = detail::field(j, "edges");
  const json& jleaves = detail::field(j, "leaves");
  if (!jedges.is_array() || !jleaves.is_object()) throw MalformedInput("tree: bad edges or leaves");
  std::vector<Edge> edges;
  int max_vertex = -1;
  for (const auto& je : jedges) {
    Edge e{detail::as_int(detail::field(je, "u"), "u"), detail::as_int(detail::field(je, "v"), "v"), std::nullopt};
    if (e.u < 0 || e.v < 0) throw MalformedInput("tree: negative vertex id");
    if (je.contains("w")) e.weight = rational_from_json(je.at("w"));
    max_vertex = std::max({max_vertex, e.u, e.v});
    edges.push_back(std::move(e));
  }
  std::map<Label, int> leaves;
  for (const auto& [key, vid] : jleaves.items()) leaves[detail::parse_label(key)] = detail::as_int(vid, "leaf vertex");
  if (j.contains("K")) {
    std::set<Label> K;
    for (const auto& a : j.at("K")) K.insert(detail::as_label(a));
    std::set<Label> L;
    for (const auto& [a, v] : leaves) L.insert(a);
    if (K != L) throw MalformedInput("tree: K disagrees with leaves");
  }
  return LeafLabeledTree(n, max_vertex + 1, std::move(edges), std::move(leaves));
}

// ---- Polynomials -------------------------------------------------------------------------------

enum class Vars { D, Dstar };

inline std::vector<Pair> variables(Vars vars, int n) { return vars == Vars::D ? enumerate_D(n) : d_star(n); }

inline json poly_to_json(const Poly& p, Vars vars, int n) {
  const auto names = variables(vars, n);
  if (p.nvars() != names.size()) throw PreconditionError("poly_to_json: ring size mismatch");
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json exp = json::object();
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) exp[to_string(names[k])] = e[k];
    terms.push_back({{"exp", exp}, {"re", to_string(c.re())}, {"im", to_string(c.im())}});
  }
  return {{"vars", vars == Vars::D ? "D" : "Dstar"}, {"terms", terms}};
}

inline Poly poly_from_json(const json& j, int n) {
  const json& jv = detail::field(j, "vars");
  if (!jv.is_string() || (jv != "D" && jv != "Dstar")) throw MalformedInput("vars must be \"D\" or \"Dstar\"");
  const Vars vars = jv == "D" ? Vars::D : Vars::Dstar;
  const std::size_t nv = variables(vars, n).size();
  Poly out(nv);
  for (const auto& jt : detail::field(j, "terms")) {
    Exponent e(nv, 0);
    for (const auto& [key, power] : detail::field(jt, "exp").items()) {
      const auto [a, b] = detail::parse_pair_key(key);
      detail::check_labels(a, b, n);
      const int idx = vars == Vars::D ? pair_index(a, b, n) : d_star_index(a, b, n);
      e[idx] += detail::as_int(power, "exponent");
    }
    const Rational re = rational_from_json(detail::field(jt, "re"));
    const Rational im = jt.contains("im") ? rational_from_json(jt.at("im")) : Rational(0);
    out += Poly::monomial(std::move(e), GaussianRational(re, im));
  }
  return out;
}

// ---- Polygon data ------------------------------------------------------------------------------

inline json ordering_to_json(const DihedralOrdering& o) {
  json out = json::array();
  for (Label a : o.labels()) out.push_back(a.value());
  return out;
}

inline DihedralOrdering ordering_from_json(const json& j) {
  if (!j.is_array()) throw MalformedInput("ordering: expected a label array");
  std::vector<Label> labels;
  for (const auto& a : j) labels.push_back(detail::as_label(a));
  if (labels.size() < 6 || labels.size() % 2) throw MalformedInput("ordering: need 2n labels with n >= 3");
  return DihedralOrdering(static_cast<int>(labels.size() / 2), labels);
}

inline json subdivision_to_json(const Subdivision& s) {
  json d = json::array();
  for (const auto& x : s.diagonals()) d.push_back({x.p, x.q});
  return {{"n", s.n()}, {"diagonals", d}};
}

inline json labeling_to_json(const Labeling& phi) {
  json out = json::object();
  for (Label a : all_labels(phi.n())) out[std::to_string(a.value())] = phi.side(a);
  return out;
}

// ---- Results -----------------------------------------------------------------------------------

inline json witness_to_json(const Witness& w) {
  json labels = json::array();
  for (Label a : w.labels) labels.push_back(a.value());
  return {{"kind", to_string(w.kind)}, {"labels", labels}};
}

inline json certificate_to_json(const MembershipCertificate& c) {
  json out = {{"verdict", c.in ? "in" : "out"}};
  if (c.tree) out["tree"] = tree_to_json(*c.tree);
  if (c.witness) out["witness"] = witness_to_json(*c.witness);
  return out;
}

inline json signed_trop_to_json(const SignedTrop& s) {
  json pattern = json::object();
  const auto ds = d_star(s.ordering.n());
  for (std::size_t k = 0; k < ds.size(); ++k) pattern[to_string(ds[k])] = s.pattern[k];
  json cones = json::object();
  for (const auto& [k, keys] : s.cones) {
    json list = json::array();
    for (const auto& key : keys) list.push_back(key.hex());
    cones[std::to_string(k)] = list;
  }
  return {{"ordering", ordering_to_json(s.ordering)},
          {"kind", s.central ? "CSDO" : "ASDO"},
          {"pattern", pattern},
          {"cones", cones}};
}

}  // namespace ctrop::json
