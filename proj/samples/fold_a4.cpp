// Fold A4 along -w_o and check that iota sends longest elements to longest elements.

#include <iostream>

#include "coxinv/coxinv.hpp"

int main() {
  using namespace coxinv;
  const RootSystem R = RootSystem::build(DiagramType::A(4));
  const Folding f = fold(R, neg_longest_parabolic_action(R, NodeSet::all(R.rank())));
  std::cout << render_folding(f, Format::text);
  for (NodeSet I : admissible_subsets(f))
    std::cout << "  " << I.to_string() << ": " << (longest_words_compatible(f, I) ? "compatible" : "NOT compatible") << "\n";
}
