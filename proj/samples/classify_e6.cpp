// Involution classes of W_o(E6) and their pairing under w_o.

#include <iostream>

#include "coxinv/coxinv.hpp"

int main() {
  using namespace coxinv;
  const RootSystem R = RootSystem::build(DiagramType::E(6));
  const SubgroupSpec spec = centralizer_of_w0(R);
  const ClassTable table = classify_with_pairing(R, spec);
  std::cout << render_classes(table, Format::text) << "\n" << render_pairing(table, Format::text);
}
