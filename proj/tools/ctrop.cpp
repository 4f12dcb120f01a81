// Command-line front end. Reads JSON, writes JSON on standard output.
// Exit codes: 0 ok, 1 malformed input, 2 precondition violation, 3 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "ctrop/acceptance.hpp"
#include "ctrop/json.hpp"

namespace {

using namespace ctrop;
namespace cj = ctrop::json;
using Json = nlohmann::json;
using cj::MalformedInput;

constexpr int kMalformed = 1;
constexpr int kPrecondition = 2;
constexpr int kVerification = 3;

Json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

/// "1,2,3,-3,-2,-1", optionally bracketed, or a JSON array.
DihedralOrdering parse_ordering(std::string text) {
  if (!text.empty() && text.front() != '[') text = "[" + text + "]";
  try {
    return cj::ordering_from_json(Json::parse(text));
  } catch (const Json::parse_error&) {
    throw MalformedInput("bad ordering \"" + text + "\"");
  }
}

Json membership_cmd(const std::string& input) {
  return cj::certificate_to_json(membership(cj::weight_from_json(read_input(input))));
}

Json cone_cmd(const std::string& input) {
  const auto w = cj::weight_from_json(read_input(input));
  const auto cert = membership(w);
  if (!cert.in) throw PreconditionError("cone: weight vector is outside the tropical variety");
  const auto t = cert.tree->unweighted();
  const auto cr = cone_rays(t);
  Json rays = Json::array(), lin = Json::array();
  for (const auto& r : cr.rays) rays.push_back(cj::weight_to_json(r));
  for (const auto& l : cr.lineality) lin.push_back(cj::weight_to_json(l));
  return {{"key", canonical_key(t).hex()}, {"k", edge_orbit_count(t)}, {"tree", cj::tree_to_json(t)},
          {"rays", rays}, {"lineality", lin}};
}

Json fan_stats_cmd(int n) {
  const auto f = enumerate_fan(n);
  Json out = Json::object();
  for (const auto& [k, count] : f.cones_by_dimension) out["k" + std::to_string(k)] = count;
  return out;
}

Json initial_ideal_cmd(const std::string& input, bool psi_check) {
  const auto w = cj::weight_from_json(read_input(input));
  const int n = w.n();
  Json forms = Json::array();
  bool monomial_free = true;
  std::vector<Poly> inits;
  for (const auto& rel : distinct_relations(n)) {
    auto init = initial_form(rel.poly, w);
    Json labels = Json::array();
    for (Label a : rel.labels) labels.push_back(a.value());
    const bool mono = is_monomial(init);
    monomial_free &= !mono;
    forms.push_back({{"labels", labels}, {"form", cj::poly_to_json(init, cj::Vars::D, n)},
                     {"monomial", mono}});
    inits.push_back(std::move(init));
  }
  Json out = {{"n", n}, {"initial_forms", forms}, {"monomial_free", monomial_free}};
  if (psi_check) {
    const auto cert = membership(w);
    if (!cert.in) throw PreconditionError("psi check: weight vector is outside the tropical variety");
    const auto t = cert.tree->unweighted();
    if (auto p = psi_precondition(t); p != PsiPrecondition::ok)
      throw PreconditionError("psi check: " + to_string(p));
    const auto psi = psi_map(t);
    bool all = true;
    for (const auto& f : inits) all &= psi_kernel_member(psi, f);
    out["psi_kernel"] = all;
  }
  return out;
}

Json signed_trop_cmd(const std::string& ordering) {
  const auto lambda = parse_ordering(ordering);
  if (lambda.n() > 4) throw PreconditionError("signed-trop: supported for n = 3, 4");
  return cj::signed_trop_to_json(signed_trop(lambda));
}

Json sign_patterns_cmd(int n) {
  if (n < 3 || n > 5) throw PreconditionError("sign-patterns: supported for n = 3, 4, 5");
  const auto counts = count_patterns(n);
  const auto ds = d_star(n);
  Json atlas = Json::array();
  std::set<SignPattern> distinct;
  auto add = [&](const DihedralOrdering& l, const char* kind) {
    const auto p = sign_pattern(l);
    distinct.insert(p);
    Json pattern = Json::object();
    for (std::size_t k = 0; k < ds.size(); ++k) pattern[to_string(ds[k])] = p[k];
    atlas.push_back({{"ordering", cj::ordering_to_json(l)}, {"kind", kind}, {"pattern", pattern}});
  };
  const auto csdo = enumerate_csdo(n), asdo = enumerate_asdo(n);
  for (const auto& l : csdo) add(l, "CSDO");
  for (const auto& l : asdo) add(l, "ASDO");
  return {{"csdo", static_cast<long>(csdo.size())},
          {"asdo", static_cast<long>(asdo.size())},
          {"total", static_cast<long>(distinct.size())},
          {"x_count", counts.x_count},
          {"atlas", atlas}};
}

Json sample_point_cmd(const std::string& ordering, std::uint64_t seed) {
  const auto lambda = parse_ordering(ordering);
  const auto pt = sample_config(lambda, seed);
  Json alpha = Json::object();
  for (const auto& [a, x] : pt.alpha) alpha[std::to_string(a.value())] = {to_string(x.p), to_string(x.q)};
  Json y = Json::object();
  const auto ds = d_star(lambda.n());
  for (std::size_t k = 0; k < ds.size(); ++k) y[to_string(ds[k])] = to_string(pt.y[k]);
  return {{"ordering", cj::ordering_to_json(lambda)},
          {"kind", lambda.is_csdo() ? "CSDO" : "ASDO"},
          {"alpha", alpha},
          {"y", y}};
}

/// Returns the report and whether every check passed.
std::pair<Json, bool> verify_cmd(const std::string& suite) {
  Json out = Json::object();
  bool pass = true;
  if (suite.empty() || suite == "unit") {
    Json list = Json::array();
    for (const auto& c : acceptance::criteria()) {
      const auto r = acceptance::run(c);
      pass &= r.pass;
      list.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    }
    out["criteria"] = list;
  }
  if (suite.empty() || suite == "oracle") {
    Json list = Json::array();
    for (const auto& c : acceptance::oracle_report()) {
      pass &= c.ok();
      list.push_back({{"check", c.name}, {"expected", c.expected}, {"got", c.got}, {"source", c.source}});
    }
    out["oracle"] = list;
  }
  out["pass"] = pass;
  return {out, pass};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type C tropical cluster variety toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));

  std::string input = "-";
  auto add_input = [&](CLI::App* sub) { sub->add_option("--input", input, "Weight vector JSON file, or - for stdin"); };

  auto* mem = app.add_subcommand("membership", "Membership certificate for a weight vector");
  add_input(mem);
  auto* cone = app.add_subcommand("cone", "Cone key and rays for a weight vector");
  add_input(cone);
  int n = 3;
  auto* fan = app.add_subcommand("fan-stats", "Cone counts by dimension");
  fan->add_option("--n", n, "Size n")->required();
  bool psi = false;
  auto* ini = app.add_subcommand("initial-ideal", "Initial forms of all quadratic relations");
  add_input(ini);
  ini->add_flag("--psi-check", psi, "Also check the initial forms lie in the kernel of psi");
  std::string ordering;
  auto* st = app.add_subcommand("signed-trop", "Signed tropicalization of a symmetric ordering");
  st->add_option("--ordering", ordering, "Labels, e.g. 1,2,3,-1,-2,-3")->required();
  auto* sp = app.add_subcommand("sign-patterns", "Sign-pattern counts and atlas");
  sp->add_option("--n", n, "Size n")->required();
  std::uint64_t seed = 1;
  auto* pt = app.add_subcommand("sample-point", "Rational configuration realizing an ordering");
  pt->add_option("--ordering", ordering, "Labels, e.g. 1,2,3,-3,-2,-1")->required();
  pt->add_option("--seed", seed, "Random seed");
  std::string suite;
  auto* ver = app.add_subcommand("verify", "Run acceptance checks");
  ver->add_option("--suite", suite, "unit or oracle")->check(CLI::IsMember({"unit", "oracle"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kMalformed;
  }

  try {
    Json out;
    int code = 0;
    if (*mem) out = membership_cmd(input);
    else if (*cone) out = cone_cmd(input);
    else if (*fan) out = fan_stats_cmd(n);
    else if (*ini) out = initial_ideal_cmd(input, psi);
    else if (*st) out = signed_trop_cmd(ordering);
    else if (*sp) out = sign_patterns_cmd(n);
    else if (*pt) out = sample_point_cmd(ordering, seed);
    else if (*ver) {
      auto [report, pass] = verify_cmd(suite);
      out = std::move(report);
      if (!pass) code = kVerification;
    }
    std::cout << out.dump() << "\n";
    return code;
  } catch (const MalformedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
}
