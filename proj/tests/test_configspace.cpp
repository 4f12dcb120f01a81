#include <gtest/gtest.h>

#include <set>

#include "ctrop/configspace.hpp"
#include "ctrop/named_trees.hpp"

using namespace ctrop;

namespace {

const Label L1(1), L2(2), L3(3), B1(-1), B2(-2), B3(-3);

Exponent y_mono(std::initializer_list<std::pair<std::pair<Label, Label>, int>> factors, int n) {
  Exponent e(d_star_size(n), 0);
  for (const auto& [p, k] : factors) e[d_star_index(p.first, p.second, n)] += k;
  return e;
}

}  // namespace

TEST(DStar, ExampleAndRho) {
  auto ds = d_star(3);
  std::vector<Pair> expect{{L1, L3}, {L1, B1}, {L1, B2}, {L2, B2}, {L2, B3}, {L3, B3}};
  ASSERT_EQ(ds.size(), expect.size());
  std::set<std::pair<int, int>> a, b;
  for (const auto& p : ds) a.insert({p.first.value(), p.second.value()});
  for (const auto& p : expect) b.insert({p.first.value(), p.second.value()});
  EXPECT_EQ(a, b);
  for (int n = 3; n <= 6; ++n) {
    EXPECT_EQ(d_star(n).size(), d_star_size(n));
    for (const auto& l : lineality_basis(n))
      for (const auto& v : rho(l)) EXPECT_EQ(v, 0);
    // kernel is exactly the lineality space: rho has full rank |D*|
    std::vector<std::vector<Rational>> images;
    for (std::size_t k = 0; k < ring_size(n); ++k) {
      WeightVector e(n);
      e[k] = 1;
      images.push_back(rho(e));
    }
    EXPECT_EQ(detail::rational_rank(images), static_cast<int>(d_star_size(n)));
  }
  auto wc = to_weight_vector(distances(caterpillar_tree(3), unit_weights(caterpillar_tree(3))));
  EXPECT_EQ(rho(wc)[d_star_index(L1, L3, 3)], 0);
}

TEST(UEquations, PrintedForms) {
  Poly r1(6), r2(6), s(6);
  r1.add_term(y_mono({{{L1, L3}, 1}}, 3), GaussianRational(1));
  r1.add_term(y_mono({{{L1, B2}, 1}, {{L2, B2}, 1}, {{L2, B3}, 1}}, 3), GaussianRational(1));
  r1.add_term(Exponent(6, 0), GaussianRational(-1));
  EXPECT_EQ(ustar_r(L1, L2, L3, B1, 3), r1);
  r2.add_term(y_mono({{{L1, B1}, 1}}, 3), GaussianRational(1));
  r2.add_term(y_mono({{{L2, B2}, 1}, {{L2, B3}, 2}, {{L3, B3}, 1}}, 3), GaussianRational(1));
  r2.add_term(Exponent(6, 0), GaussianRational(-1));
  EXPECT_EQ(ustar_r(L1, L2, B1, B2, 3), r2);
  s.add_term(y_mono({{{L2, B3}, 1}}, 3), GaussianRational(1));
  s.add_term(y_mono({{{L1, B2}, 1}}, 3), GaussianRational(1));
  s.add_term(y_mono({{{L1, L3}, 1}}, 3), GaussianRational(1));
  s.add_term(Exponent(6, 0), GaussianRational(-2));
  EXPECT_EQ(ustar_s(1, 2, 3, 3), s);
  EXPECT_THROW(ustar_s(3, 2, 1, 3), PreconditionError);
}

TEST(UEquations, LaurentIdentities) {
  for (int n = 3; n <= 4; ++n) {
    for (const auto& rel : distinct_relations(n)) {
      const auto& q = rel.labels;
      EXPECT_TRUE(ustar_r_identity(q[0], q[1], q[2], q[3], n));
      const auto u = ustar_r(q[0], q[1], q[2], q[3], n);
      for (const auto& [e, c] : u.terms())
        for (int x : e) EXPECT_GE(x, 0);
    }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) EXPECT_TRUE(ustar_s_identity(i, j, k, n));
  }
}

TEST(UEquations, ExponentLattice) {
  for (int n = 3; n <= 5; ++n) {
    EXPECT_TRUE(y_exponents_orthogonal_to_lineality(n));
    // full rank but index 2: x_{1,2}/x_{1,2bar} has degree zero and is not an integer y-monomial
    EXPECT_EQ(y_lattice_index(n), 2) << n;
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : d_star(3)) {
    auto e = y_exponent(p, 3);
    rows.emplace_back(e.begin(), e.end());
  }
  auto with = rows;
  std::vector<Rational> target(9, Rational(0));
  target[pair_index(L1, L2, 3)] = 1;
  target[pair_index(L1, B2, 3)] = -1;
  with.push_back(target);
  EXPECT_EQ(detail::rational_rank(with), detail::rational_rank(rows));
  with.back()[pair_index(L1, L2, 3)] = 2;
  with.back()[pair_index(L1, B2, 3)] = -2;
  EXPECT_EQ(detail::rational_rank(with), 6);
}

TEST(UEquations, RhoCompatibility) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 3), pick(0, 1);
  const auto trees = enumerate_fan(3).trees;
  int in = 0;
  for (int trial = 0; trial < 300; ++trial) {
    WeightVector w(3);
    if (pick(rng)) {
      for (std::size_t k = 0; k < w.size(); ++k) w[k] = make_rational(num(rng), den(rng));
    } else {
      const auto& t = trees[std::uniform_int_distribution<std::size_t>(0, trees.size() - 1)(rng)];
      w = to_weight_vector(distances(random_symmetric_weighting(t, rng)));
    }
    const bool verdict = membership(w).in;
    in += verdict;
    EXPECT_EQ(verdict, u_monomial_free(rho(w), 3)) << trial;
  }
  EXPECT_GT(in, 50);
}

TEST(UEquations, ProjectedFan) {
  const auto f = enumerate_fan(3);
  int rays = 0, maximal = 0;
  for (const auto& t : f.trees) {
    auto cr = cone_rays(t);
    for (const auto& l : cr.lineality)
      for (const auto& v : rho(l)) EXPECT_EQ(v, 0);
    std::vector<std::vector<Rational>> proj;
    for (const auto& r : cr.rays) proj.push_back(rho(r));
    EXPECT_EQ(detail::rational_rank(proj), static_cast<int>(cr.rays.size()));
    if (cr.rays.size() == 1) ++rays;
    if (cr.rays.size() == 2) ++maximal;
  }
  EXPECT_EQ(rays, 13);
  EXPECT_EQ(maximal, 21);
}

TEST(CrossRatio, Examples) {
  EXPECT_EQ(cross_ratio({0, 1}, {1, 0}, {1, 1}, {-1, 1}), -1);
  EXPECT_EQ(cross_ratio({0, 1}, {1, 1}, {2, 1}, {3, 1}), make_rational(4, 3));
  EXPECT_THROW(cross_ratio({0, 1}, {0, 2}, {2, 1}, {3, 1}), PreconditionError);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> v(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    Rational a(v(rng)), b(v(rng)), c(v(rng)), d(v(rng));
    if (a * d - b * c == 0) continue;
    std::vector<ProjPoint> pts{{0, 1}, {1, 1}, {5, 2}, {-3, 7}};
    auto img = [&](const ProjPoint& p) { return ProjPoint(a * p.p + b * p.q, c * p.p + d * p.q); };
    EXPECT_EQ(cross_ratio(pts[0], pts[1], pts[2], pts[3]), cross_ratio(img(pts[0]), img(pts[1]), img(pts[2]), img(pts[3])));
  }
}

TEST(SignPatterns, Examples) {
  for (int n = 3; n <= 5; ++n) {
    for (int s : sign_pattern(lambda0(n))) EXPECT_EQ(s, 1);
    auto mu = sign_pattern(mu0(n));
    const int idx = d_star_index(Label(n), Label(-n), n);
    for (int k = 0; k < static_cast<int>(mu.size()); ++k) EXPECT_EQ(mu[k], k == idx ? -1 : 1);
  }
  auto c = count_patterns(3);
  EXPECT_EQ(c.m_count, 16);
  EXPECT_EQ(*c.enumerated, 16);
  EXPECT_EQ(c.csdo, 4);
  EXPECT_EQ(c.asdo, 12);
  // 2^n sign patterns of X over each pattern of M
  EXPECT_EQ(c.x_count, 128);
  EXPECT_EQ(c.x_count, (1L << 3) * c.m_count);
  auto c4 = count_patterns(4);
  EXPECT_EQ(*c4.enumerated, c4.m_count);
  EXPECT_THROW(sign_pattern(DihedralOrdering(3, {L1, L2, B1, L3, B2, B3})), PreconditionError);
}

TEST(SignPatterns, SamplesRealizeOrderings) {
  for (int n = 3; n <= 4; ++n) {
    auto eqs = all_u_equations(n);
    std::vector<DihedralOrdering> all = enumerate_csdo(n);
    for (const auto& l : enumerate_asdo(n)) all.push_back(l);
    for (const auto& l : all)
      for (std::uint64_t seed : {1u, 2u, 99u}) {
        auto pt = sample_config(l, seed);
        auto pattern = sign_pattern(l);
        ASSERT_EQ(pt.y.size(), pattern.size());
        for (std::size_t k = 0; k < pattern.size(); ++k) EXPECT_EQ(sign(pt.y[k]), pattern[k]);
        for (const auto& p : eqs) EXPECT_TRUE(is_zero(evaluate_at(p, pt.y)));
        for (const auto& [a, x] : pt.alpha) {
          const auto& y = pt.alpha.at(a.bar());
          if (l.is_csdo()) EXPECT_TRUE(y == ProjPoint(-x.q, x.p));
          else EXPECT_TRUE(y == ProjPoint(-x.p, x.q));
        }
      }
  }
}

TEST(SignedTrop, Counts) {
  for (const auto& l : enumerate_csdo(3)) EXPECT_EQ(signed_trop(l).maximal(), 6);
  for (const auto& l : enumerate_asdo(3)) EXPECT_EQ(signed_trop(l).maximal(), 5);
  EXPECT_EQ(signed_trop(lambda0(4)).maximal(), 20);
  EXPECT_EQ(signed_trop(mu0(4)).maximal(), 14);
  auto st = signed_trop(lambda0(3));
  for (const auto& t : enumerate_fan(3).trees) {
    auto key = canonical_key(t);
    bool listed = false;
    for (const auto& [k, keys] : st.cones) listed |= std::binary_search(keys.begin(), keys.end(), key);
    if (listed) {
      EXPECT_TRUE(u_monomial_free(rho(interior_point(t)), 3));
    }
  }
}

TEST(SignedTrop, Cspt) {
  for (const Label a : {L1, L2, L3})
    for (const Label b : {L1, L2, L3})
      for (const Label c : {L1, L2, L3}) {
        if (a == b || b == c || a == c) continue;
        EXPECT_TRUE(is_cspt(aspt_form(7, a, b, c)));
        EXPECT_FALSE(is_cspt(aspt_form(4, a, b, c)));
      }
  EXPECT_FALSE(is_cspt(non_aspt_tree()));
}
