// Prints the cone census of the fan for n = 3, 4 and classifies two weight vectors.

#include <iostream>

#include "ctrop/named_trees.hpp"
#include "ctrop/tropical.hpp"

int main() {
  using namespace ctrop;
  for (int n = 3; n <= 4; ++n) {
    const auto fan = enumerate_fan(n);
    std::cout << "n=" << n << ":";
    for (const auto& [k, count] : fan.cones_by_dimension) std::cout << " k" << k << "=" << count;
    std::cout << " (rays " << fan.rays << ", maximal " << fan.maximal << ")\n";
  }
  const auto cat = caterpillar_tree(3);
  const auto inside = membership(to_weight_vector(distances(cat, unit_weights(cat))));
  std::cout << "caterpillar metric: " << (inside.in ? "in" : "out") << ", cone dimension "
            << edge_orbit_count(inside.tree->unweighted()) << "\n";
  const auto bad = non_aspt_tree();
  const auto outside = membership(to_weight_vector(distances(bad, unit_weights(bad))));
  std::cout << "non-ASPT metric: " << (outside.in ? "in" : "out") << ", witness " << to_string(outside.witness->kind)
            << "(";
  for (std::size_t k = 0; k < outside.witness->labels.size(); ++k)
    std::cout << (k ? "," : "") << outside.witness->labels[k].value();
  std::cout << ")\n";
  return 0;
}
