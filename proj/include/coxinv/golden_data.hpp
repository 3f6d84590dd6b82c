#pragma once

// Copy of data/golden.txt; a test keeps the two identical.

namespace coxinv {

inline constexpr const char* kGoldenText = R"golden(# Expected w_o pairings for the exceptional types.
#
# type | subgroup | line | left subsets | right subsets or SELF | provenance
#
# Subsets use Bourbaki node labels and are separated by ';'. A side lists some
# members of one conjugacy class, not necessarily all of them. Subgroup is W
# (the whole Weyl group) or Wo (the centralizer of w_o). Provenance is
# table(TYPE,LINE) for entries read off the printed result tables and
# derived(REASON) for entries computed here.
#
# Classical families (A, BC, D) and the dihedral types G2(n) are generated,
# not stored.

E6 | Wo | 1 | {} | {1,2,3,4,5,6} | table(E6,1)
E6 | Wo | 2 | {2};{4} | {1,3,4,5,6} | table(E6,2)
E6 | Wo | 3 | {1,6};{3,5} | {2,3,4,5} | table(E6,3)
E6 | Wo | 4 | {1,4,6};{1,2,6} | SELF | table(E6,4)
E6 | Wo | 5 | {3,4,5} | SELF | table(E6,5)

E7 | W | 1 | {} | {1,2,3,4,5,6,7} | table(E7,1)
E7 | W | 2 | {1};{3} | {2,3,4,5,6,7} | table(E7,2)
E7 | W | 3 | {1,4};{1,5} | {2,3,4,5,7} | table(E7,3)
E7 | W | 4 | {1,4,6};{1,2,7} | {1,2,5,7};{2,3,5,7} | table(E7,4)
E7 | W | 5 | {2,5,7} | {2,3,4,5} | table(E7,5)

E8 | W | 1 | {} | {1,2,3,4,5,6,7,8} | table(E8,1)
E8 | W | 2 | {1};{3} | {1,2,3,4,5,6,7} | table(E8,2)
E8 | W | 3 | {1,4};{1,5} | {2,3,4,5,6,7} | table(E8,3)
E8 | W | 4 | {1,4,6};{1,2,8} | {2,3,4,5,7};{2,3,4,5,8} | derived(printed right-hand diagrams have 7 nodes; subsets from the orbit classification)
E8 | W | 5 | {1,4,6,8};{1,2,6,8} | SELF | table(E8,5)
E8 | W | 6 | {2,3,4,5} | SELF | table(E8,6)

F4 | W | 1 | {} | {1,2,3,4} | table(F4,1)
F4 | W | 2 | {1};{2} | {2,3,4} | table(F4,2)
F4 | W | 3 | {3};{4} | {1,2,3} | table(F4,3)
F4 | W | 4 | {1,3};{1,4} | SELF | table(F4,4)
F4 | W | 5 | {2,3} | SELF | table(F4,5)

H3 | W | 1 | {} | {1,2,3} | table(H3,1)
H3 | W | 2 | {1};{2} | {1,3} | table(H3,2)

H4 | W | 1 | {} | {1,2,3,4} | table(H4,1)
H4 | W | 2 | {1};{2} | {1,2,3} | table(H4,2)
H4 | W | 3 | {1,3};{1,4} | SELF | table(H4,3)
)golden";

}  // namespace coxinv
