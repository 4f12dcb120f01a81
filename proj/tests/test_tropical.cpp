#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ctrop/named_trees.hpp"
#include "ctrop/tropical.hpp"

using namespace ctrop;

namespace {

WeightVector unit_distances(const LeafLabeledTree& t) { return to_weight_vector(distances(t, unit_weights(t))); }

const FanStatistics& fan(int n) {
  static const FanStatistics f3 = enumerate_fan(3);
  static const FanStatistics f4 = enumerate_fan(4);
  return n == 3 ? f3 : f4;
}

template <class Rng>
WeightVector random_point(int n, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 3), num(-20, 20), den(1, 4);
  WeightVector w(n);
  switch (pick(rng)) {
    case 0:
      for (std::size_t k = 0; k < w.size(); ++k) w[k] = make_rational(num(rng), den(rng));
      break;
    case 1: {
      const auto& trees = fan(n).trees;
      const auto& t = trees[std::uniform_int_distribution<std::size_t>(0, trees.size() - 1)(rng)];
      w = to_weight_vector(distances(random_symmetric_weighting(t, rng)));
      break;
    }
    case 2:
      w = to_weight_vector(distances(random_tree(n, rng, true)));
      break;
    default: {
      const auto& trees = fan(n).trees;
      const auto& t = trees[std::uniform_int_distribution<std::size_t>(0, trees.size() - 1)(rng)];
      auto tw = random_symmetric_weighting(t, rng);
      std::vector<Rational> ws;
      for (const auto& e : tw.edges()) ws.push_back(*e.weight);
      ws[std::uniform_int_distribution<std::size_t>(0, ws.size() - 1)(rng)] += 1;
      w = to_weight_vector(distances(tw.unweighted(), ws));
    }
  }
  return w;
}

}  // namespace

TEST(Membership, Examples) {
  auto zero = membership(WeightVector(3));
  ASSERT_TRUE(zero.in);
  EXPECT_EQ(canonical_key(zero.tree->unweighted()), canonical_key(star_tree(3)));
  EXPECT_TRUE(membership_basis(WeightVector(3)));

  auto wc = unit_distances(caterpillar_tree(3));
  auto cat = membership(wc);
  ASSERT_TRUE(cat.in);
  EXPECT_EQ(to_weight_vector(distances(*cat.tree)), wc);
  EXPECT_EQ(canonical_key(cat.tree->unweighted()), canonical_key(caterpillar_tree(3)));
  EXPECT_TRUE(membership_basis(wc));

  auto wn = unit_distances(non_aspt_tree());
  auto bad = membership(wn);
  EXPECT_FALSE(bad.in);
  ASSERT_TRUE(bad.witness);
  EXPECT_EQ(bad.witness->kind, Witness::Kind::s);
  EXPECT_EQ(bad.witness->labels, (std::vector<Label>{Label(1), Label(2), Label(3)}));
  EXPECT_TRUE(is_monomial(initial_form(witness_polynomial(*bad.witness, 3), wn)));
  EXPECT_FALSE(membership_basis(wn));
  EXPECT_TRUE(membership_basis(wn, false));
}

TEST(Membership, AgreesWithBasis) {
  std::mt19937_64 rng(2024);
  int in = 0, out = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + trial % 2;
    auto w = random_point(n, rng);
    auto cert = membership(w);
    ASSERT_EQ(cert.in, membership_basis(w)) << trial;
    if (cert.in) {
      ++in;
      EXPECT_EQ(to_weight_vector(distances(*cert.tree)), w);
      EXPECT_TRUE(is_aswpt(*cert.tree));
    } else {
      ++out;
      ASSERT_TRUE(cert.witness);
      EXPECT_TRUE(is_monomial(initial_form(witness_polynomial(*cert.witness, n), w)));
    }
  }
  EXPECT_GT(in, 100);
  EXPECT_GT(out, 100);
}

TEST(Membership, EquivarianceAndTranslation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 2;
    auto w = random_point(n, rng);
    auto tau = GroupElement::random(n, rng);
    auto cert = membership(w);
    auto moved = membership(act(tau, w));
    EXPECT_EQ(cert.in, moved.in);
    if (cert.in) {
      EXPECT_EQ(canonical_key(moved.tree->unweighted()), canonical_key(cert.tree->unweighted().relabeled(tau)));
    }
    Rational c = make_rational(std::uniform_int_distribution<int>(-9, 9)(rng), 2);
    auto shifted = membership(w + c * WeightVector::all_ones(n));
    EXPECT_EQ(cert.in, shifted.in);
  }
}

TEST(Cones, KeyIsConstantOnCones) {
  std::mt19937_64 rng(5);
  for (int n = 3; n <= 4; ++n)
    for (const auto& t : fan(n).trees) {
      const auto key = canonical_key(t);
      EXPECT_EQ(cone_of(interior_point(t)), key);
      EXPECT_EQ(cone_of(to_weight_vector(distances(random_symmetric_weighting(t, rng)))), key);
      for (const auto& l : lineality_basis(n)) EXPECT_EQ(cone_of(interior_point(t) + make_rational(-7, 3) * l), key);
    }
  EXPECT_EQ(cone_of(WeightVector(3)), canonical_key(star_tree(3)));
  EXPECT_THROW(cone_of(unit_distances(non_aspt_tree())), PreconditionError);
}

TEST(Cones, Rays) {
  auto star = cone_rays(star_tree(3));
  EXPECT_TRUE(star.rays.empty());
  auto lb3 = lineality_basis(3);
  EXPECT_EQ(star.lineality.size(), 3u);
  for (const auto& v : star.lineality) EXPECT_NE(std::find(lb3.begin(), lb3.end(), v), lb3.end());
  for (int n = 3; n <= 4; ++n)
    for (const auto& t : fan(n).trees) {
      const auto lb = lineality_basis(n);
      auto cr = cone_rays(t);
      const int k = edge_orbit_count(t);
      EXPECT_EQ(static_cast<int>(cr.rays.size()), k - n);
      auto all = cr.rays;
      all.insert(all.end(), cr.lineality.begin(), cr.lineality.end());
      EXPECT_EQ(rank_of(all), k);
      std::vector<Rational> coeffs(cr.rays.size(), Rational(1));
      if (!coeffs.empty()) coeffs[0] = make_rational(5, 2);
      auto w = cone_point(t, coeffs) + Rational(3) * lb[0];
      {
        auto cert = membership(w);
        ASSERT_TRUE(cert.in);
        EXPECT_EQ(canonical_key(cert.tree->unweighted()), canonical_key(t));
      }
      EXPECT_EQ(cone_of(cone_point(t, coeffs)), canonical_key(t));
    }
  EXPECT_EQ(cone_rays(caterpillar_tree(4)).rays.size(), 3u);
  EXPECT_THROW(cone_rays(non_aspt_tree()), PreconditionError);
}

TEST(Fan, CountsThree) {
  const auto& f = fan(3);
  EXPECT_EQ(f.cones_by_dimension.at(3), 1);
  EXPECT_EQ(f.cones_by_dimension.at(4), 13);
  EXPECT_EQ(f.cones_by_dimension.at(5), 21);
  EXPECT_EQ(f.maximal, 21);
  EXPECT_EQ(f.rays, 13);
  EXPECT_THROW(enumerate_fan(5), PreconditionError);
}

TEST(Fan, FacesAreContractions) {
  for (int n = 3; n <= 4; ++n) {
    const auto& f = fan(n);
    std::set<CanonicalKey> keys;
    for (const auto& t : f.trees) keys.insert(canonical_key(t));
    std::set<CanonicalKey> covered;
    for (const auto& t : f.trees) {
      if (edge_orbit_count(t) == n) continue;
      for (const auto& k : facet_keys(t)) {
        EXPECT_TRUE(keys.count(k));
        covered.insert(k);
      }
      // boundary points of the cone land in the contracted cones
      auto cr = cone_rays(t);
      for (std::size_t z = 0; z < cr.rays.size(); ++z) {
        std::vector<Rational> c(cr.rays.size(), Rational(1));
        c[z] = 0;
        EXPECT_TRUE(facet_keys(t).count(cone_of(cone_point(t, c))));
      }
    }
    for (const auto& t : f.trees)
      if (edge_orbit_count(t) < 2 * n - 1) {
        EXPECT_TRUE(covered.count(canonical_key(t)));
      }
  }
}

TEST(Fan, PureDimension) {
  for (int n = 3; n <= 4; ++n) {
    const auto& f = fan(n);
    EXPECT_EQ(f.cones_by_dimension.rbegin()->first, 2 * n - 1);
    EXPECT_EQ(f.cones_by_dimension.begin()->first, n);
    for (const auto& t : f.trees) EXPECT_TRUE(is_aspt(t));
  }
}
