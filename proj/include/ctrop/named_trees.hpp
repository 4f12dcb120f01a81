#pragma once

// Named trees used as fixtures.

#include <map>
#include <stdexcept>
#include <vector>

#include "ctrop/trees.hpp"

namespace ctrop {

namespace detail {

// Builds an unweighted tree from (internal vertex, neighbor) lists. Internal vertices are
// 0..m-1; leaves are appended after them in the order of the label list.
struct TreeBuilder {
  int n;
  int next;
  std::vector<Edge> edges;
  std::map<Label, int> leaves;

  TreeBuilder(int n_, int internal) : n(n_), next(internal) {}
  void join(int u, int v) { edges.push_back({u, v, std::nullopt}); }
  void hang(int u, Label a) {
    leaves[a] = next;
    join(u, next++);
  }
  LeafLabeledTree build() { return {n, next, edges, leaves}; }
};

}  // namespace detail

/// Leaf 1 - p2 - ... - pn - pnbar - ... - p2bar - leaf 1bar, with leaf a hanging off p_a.
inline LeafLabeledTree caterpillar_tree(int n) {
  check_size(n);
  // spine vertex s for label rank in 2..n then nbar..2bar
  const int m = 2 * (n - 1);
  detail::TreeBuilder b(n, m);
  for (int s = 0; s + 1 < m; ++s) b.join(s, s + 1);
  b.hang(0, Label(1));
  b.hang(m - 1, Label(-1));
  for (int i = 2; i <= n; ++i) {
    b.hang(i - 2, Label(i));
    b.hang(m - 1 - (i - 2), Label(-i));
  }
  return b.build();
}

/// p{a, abar, q}, q{r, s}, r{b, bbar}, s{c, cbar}: symmetric but not an ASPT.
inline LeafLabeledTree non_aspt_tree(Label a = Label(1), Label b = Label(2), Label c = Label(3)) {
  detail::TreeBuilder t(3, 4);
  t.join(0, 1);
  t.join(1, 2);
  t.join(1, 3);
  t.hang(0, a);
  t.hang(0, a.bar());
  t.hang(2, b);
  t.hang(2, b.bar());
  t.hang(3, c);
  t.hang(3, c.bar());
  return t.build();
}

/// The seven n = 3 ASPT shapes (1: star; 2, 3, 5: one non-leaf orbit; 4, 6, 7: maximal).
/// Labels a, b, c may be any labels with distinct absolute values.
inline LeafLabeledTree aspt_form(int form, Label a, Label b, Label c) {
  switch (form) {
    case 1: {
      detail::TreeBuilder t(3, 1);
      for (Label x : {a, b, c, a.bar(), b.bar(), c.bar()}) t.hang(0, x);
      return t.build();
    }
    case 2: {  // p{a, abar, q}, q{b, bbar, c, cbar}
      detail::TreeBuilder t(3, 2);
      t.join(0, 1);
      t.hang(0, a);
      t.hang(0, a.bar());
      for (Label x : {b, b.bar(), c, c.bar()}) t.hang(1, x);
      return t.build();
    }
    case 3: {  // p{a, b, c, q}, q{abar, bbar, cbar}
      detail::TreeBuilder t(3, 2);
      t.join(0, 1);
      for (Label x : {a, b, c}) t.hang(0, x);
      for (Label x : {a.bar(), b.bar(), c.bar()}) t.hang(1, x);
      return t.build();
    }
    case 4: {  // p{a, abar, q}, q{b, bbar, r}, r{c, cbar}
      detail::TreeBuilder t(3, 3);
      t.join(0, 1);
      t.join(1, 2);
      t.hang(0, a);
      t.hang(0, a.bar());
      t.hang(1, b);
      t.hang(1, b.bar());
      t.hang(2, c);
      t.hang(2, c.bar());
      return t.build();
    }
    case 5: {  // p{a, abar, q, r}, q{b, c}, r{bbar, cbar}
      detail::TreeBuilder t(3, 3);
      t.join(0, 1);
      t.join(0, 2);
      t.hang(0, a);
      t.hang(0, a.bar());
      t.hang(1, b);
      t.hang(1, c);
      t.hang(2, b.bar());
      t.hang(2, c.bar());
      return t.build();
    }
    case 6: {  // p{a, abar, q}, q{r, s}, r{b, c}, s{bbar, cbar}
      detail::TreeBuilder t(3, 4);
      t.join(0, 1);
      t.join(1, 2);
      t.join(1, 3);
      t.hang(0, a);
      t.hang(0, a.bar());
      t.hang(2, b);
      t.hang(2, c);
      t.hang(3, b.bar());
      t.hang(3, c.bar());
      return t.build();
    }
    case 7: {  // p{a, q, r}, q{abar, s}, r{b, c}, s{bbar, cbar}
      detail::TreeBuilder t(3, 4);
      t.join(0, 1);
      t.join(0, 2);
      t.join(1, 3);
      t.hang(0, a);
      t.hang(1, a.bar());
      t.hang(2, b);
      t.hang(2, c);
      t.hang(3, b.bar());
      t.hang(3, c.bar());
      return t.build();
    }
    default:
      throw PreconditionError("aspt_form: form must be 1..7");
  }
}

}  // namespace ctrop
