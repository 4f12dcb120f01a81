#include <gtest/gtest.h>

#include <random>

#include "ctrop/named_trees.hpp"
#include "ctrop/trees.hpp"

using namespace ctrop;

namespace {

const Label L1(1), L2(2), L3(3), B1(-1), B2(-2), B3(-3);

LeafLabeledTree unit(const LeafLabeledTree& t) { return t.with_weights(unit_weights(t)); }

}  // namespace

TEST(Distances, CaterpillarTable) {
  auto d = distances(unit(caterpillar_tree(3)));
  EXPECT_EQ(d(L1, L2), 2);
  EXPECT_EQ(d(L1, L3), 3);
  EXPECT_EQ(d(L1, B1), 5);
  EXPECT_EQ(d(L1, B2), 5);
  EXPECT_EQ(d(L1, B3), 4);
  EXPECT_EQ(d(L2, L3), 3);
  EXPECT_EQ(d(L2, B2), 5);
  EXPECT_EQ(d(L2, B3), 4);
  EXPECT_EQ(d(L3, B3), 3);
}

TEST(Distances, NonAsptTable) {
  auto d = distances(unit(non_aspt_tree()));
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(d(Label(i), Label(-i)), 2);
  EXPECT_EQ(d(L1, L2), 4);
  EXPECT_EQ(d(L2, B3), 4);
  EXPECT_EQ(d(B1, L3), 4);
}

TEST(Distances, StarZero) {
  auto t = star_tree(3, std::vector<Rational>(6, Rational(0)));
  auto d = distances(t);
  for (Label a : all_labels(3))
    for (Label b : all_labels(3)) EXPECT_EQ(d(a, b), 0);
  EXPECT_THROW(distances(caterpillar_tree(3)), PreconditionError);
}

TEST(Tree, RejectsBadShapes) {
  // degree-2 vertex
  std::vector<Edge> e{{0, 1, {}}, {1, 2, {}}};
  EXPECT_THROW(LeafLabeledTree(1, 3, e, {{Label(1), 0}, {Label(-1), 2}}), PreconditionError);
  // non-symmetric label set
  std::vector<Edge> star{{0, 1, {}}, {0, 2, {}}, {0, 3, {}}};
  EXPECT_THROW(LeafLabeledTree(3, 4, star, {{L1, 1}, {B1, 2}, {L2, 3}}), PreconditionError);
  // non-positive internal weight
  auto t = caterpillar_tree(3);
  auto w = unit_weights(t);
  w[0] = 0;
  EXPECT_THROW(t.with_weights(w), PreconditionError);
}

TEST(FourPoint, Examples) {
  EXPECT_TRUE(four_point_ok(WeightVector(3)).ok);
  EXPECT_TRUE(four_point_ok(distances(unit(non_aspt_tree()))).ok);
  WeightVector w(3);
  w.at({L1, L2}) = 10;
  w.at({L3, B3}) = 10;
  auto r = four_point_ok(w);
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(*r.witness, (std::array<Label, 4>{L1, L2, L3, B3}));
}

TEST(Reconstruct, NamedTrees) {
  for (const auto& t : {unit(caterpillar_tree(3)), unit(non_aspt_tree()), unit(caterpillar_tree(5))}) {
    auto r = reconstruct(distances(t));
    EXPECT_EQ(canonical_key(r), canonical_key(t));
  }
  auto zero = reconstruct(WeightVector(3));
  EXPECT_EQ(canonical_key(zero), canonical_key(star_tree(3, std::vector<Rational>(6, Rational(0)))));
}

TEST(Reconstruct, NegativeLeafEdges) {
  // shift constant must cover leaf edges as negative as -3M/2
  std::vector<Edge> e{{0, 1, Rational(-3)}, {0, 2, Rational(1)}, {0, 3, Rational(1)}, {0, 4, Rational(-3)},
                      {0, 5, Rational(1)},  {0, 6, Rational(1)}};
  LeafLabeledTree t(3, 7, e, {{L1, 1}, {L2, 2}, {L3, 3}, {B1, 4}, {B2, 5}, {B3, 6}});
  EXPECT_EQ(canonical_key(reconstruct(distances(t))), canonical_key(t));
}

TEST(Reconstruct, RejectsNonTreeMetric) {
  WeightVector w(3);
  w.at({L1, L2}) = 10;
  w.at({L3, B3}) = 10;
  EXPECT_THROW(reconstruct(w), ReconstructionError);
}

TEST(Reconstruct, RandomRoundTrip) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + trial % 3;
    auto t = random_tree(n, rng, true);
    auto r = reconstruct(distances(t));
    EXPECT_EQ(canonical_key(r), canonical_key(t));
    for (int v = 0; v < r.num_vertices(); ++v) EXPECT_NE(r.degree(v), 2);
  }
}

TEST(Symmetry, NamedTrees) {
  auto star = star_tree(3, std::vector<Rational>{1, 2, 3, 1, 2, 3});
  ASSERT_TRUE(symmetry(star));
  EXPECT_TRUE(is_aswpt(star));
  auto non = unit(non_aspt_tree());
  EXPECT_TRUE(symmetry(non));
  EXPECT_FALSE(is_aswpt(non));
  auto cat = unit(caterpillar_tree(3));
  EXPECT_TRUE(symmetry(cat));
  EXPECT_TRUE(is_aswpt(cat));
  // asymmetric weights on a symmetric tree
  auto w = unit_weights(cat);
  for (int e = 0; e < static_cast<int>(w.size()); ++e)
    if (cat.is_leaf_edge(e) && cat.edges()[e].v == cat.leaf(L2)) w[e] = 7;
  EXPECT_FALSE(is_aswpt(cat.with_weights(w)));
}

TEST(Symmetry, AbsentForAsymmetricLabeling) {
  // caterpillar with 2 and 2bar placed on the same side
  auto t = caterpillar_tree(3);
  auto swapped = t.leaves();
  std::swap(swapped[L3], swapped[B2]);
  LeafLabeledTree u(3, t.num_vertices(), t.edges(), swapped);
  EXPECT_FALSE(symmetry(u));
}

TEST(Keylemma, Witnesses) {
  auto r = keylemma_check(distances(unit(non_aspt_tree())));
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.condition, 2);
  EXPECT_EQ(r.triple, (std::array<int, 3>{1, 2, 3}));
  EXPECT_EQ(r.quantity, 4);
  auto q = keylemma_quantities(distances(unit(non_aspt_tree())), 1, 2, 3);
  EXPECT_EQ(q, (std::array<Rational, 4>{10, 10, 10, 12}));
  EXPECT_TRUE(keylemma_check(distances(unit(caterpillar_tree(3)))).ok);
  EXPECT_TRUE(keylemma_check(distances(star_tree(3, std::vector<Rational>{1, 2, 3, 1, 2, 3}))).ok);
}

TEST(Restrict, CaterpillarSpine) {
  auto t = unit(caterpillar_tree(3));
  auto r = subtree_restrict(t, {L1, B1, L2, B2});
  EXPECT_EQ(r.labels().size(), 4u);
  auto d = distances(r);
  EXPECT_EQ(d(L1, L2), 2);
  EXPECT_EQ(d(L1, B1), 5);
  EXPECT_EQ(canonical_key(subtree_restrict(t, t.labels())), canonical_key(t));
  EXPECT_THROW(subtree_restrict(t, {L1, B1, L2}), PreconditionError);
  EXPECT_THROW(subtree_restrict(t, {L1, B1, L2, B3}), PreconditionError);
}

TEST(Restrict, CommutesWithDistances) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 3;
    auto t = random_tree(n, rng, true);
    std::vector<Label> K{Label(1), Label(-1), Label(n), Label(-n)};
    if (trial % 2) K.insert(K.end(), {Label(2), Label(-2)});
    auto d = distances(subtree_restrict(t, K));
    auto full = distances(t);
    for (Label a : K)
      for (Label b : K) EXPECT_EQ(d(a, b), full(a, b));
  }
}

TEST(Contract, FormsAndOrbits) {
  auto f7 = aspt_form(7, L1, L2, L3);
  auto s = symmetry(f7);
  ASSERT_TRUE(s);
  int fixed = -1;
  for (int e = 0; e < static_cast<int>(f7.edges().size()); ++e)
    if (!f7.is_leaf_edge(e) && s->fixes_edge(e)) fixed = e;
  ASSERT_GE(fixed, 0);
  EXPECT_EQ(canonical_key(symmetric_contract(f7, fixed)), canonical_key(aspt_form(5, L1, L2, L3)));
  for (int form : {4, 6, 7}) EXPECT_EQ(edge_orbit_count(aspt_form(form, L1, L2, L3)), 5);
  EXPECT_EQ(edge_orbit_count(caterpillar_tree(4)), 7);
  EXPECT_EQ(edge_orbit_count(star_tree(4)), 4);
  EXPECT_THROW(symmetric_contract(f7, 4), PreconditionError);  // leaf edge
}

TEST(Contract, MaximalToStar) {
  for (auto t : {aspt_form(4, L1, L2, L3), aspt_form(6, L2, L1, B3), aspt_form(7, B2, L3, L1), caterpillar_tree(4)}) {
    int k = edge_orbit_count(t);
    for (;;) {
      int e = -1;
      for (int f = 0; f < static_cast<int>(t.edges().size()); ++f)
        if (!t.is_leaf_edge(f)) e = f;
      if (e < 0) break;
      t = symmetric_contract(t, e);
      EXPECT_TRUE(symmetry(t));
      EXPECT_EQ(edge_orbit_count(t), --k);
      EXPECT_TRUE(is_aspt(t));
    }
    EXPECT_EQ(canonical_key(t), canonical_key(star_tree(t.n())));
  }
}

TEST(Aspt, NamedForms) {
  for (int form = 1; form <= 7; ++form) EXPECT_TRUE(is_aspt(aspt_form(form, L1, L2, L3))) << form;
  EXPECT_FALSE(is_aspt(non_aspt_tree()));
  EXPECT_TRUE(is_aspt(caterpillar_tree(5)));
}

TEST(CanonicalKey, HexRoundTripAndWeights) {
  auto t = caterpillar_tree(3);
  auto k = canonical_key(t);
  EXPECT_EQ(CanonicalKey::from_hex(k.hex()), k);
  EXPECT_NE(canonical_key(unit(t)), k);
  auto w = unit_weights(t);
  w[0] = 2;
  EXPECT_NE(canonical_key(t.with_weights(w)), canonical_key(unit(t)));
  EXPECT_NE(canonical_key(aspt_form(5, L1, L2, L3)), canonical_key(aspt_form(5, L1, L2, B3)));
  EXPECT_EQ(canonical_key(aspt_form(5, L1, L2, L3)), canonical_key(aspt_form(5, B1, L3, L2)));
}
