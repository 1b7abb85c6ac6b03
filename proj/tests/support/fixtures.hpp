#pragma once

#include <cstdint>
#include <vector>

#include "finpres.hpp"

namespace zz::fixtures {

// the walking arrow [1]: two objects, one non-identity morphism
RawCategory walking_arrow_raw();
FinCategory walking_arrow();

// the poset [2] = 0 < 1 < 2
RawCategory poset2_raw();
FinCategory poset2();

// Z/3 as a one-object category
RawCategory z3_monoid_raw();
FinCategory z3_monoid();

// Z/3 with one composition entry perturbed, breaking associativity
RawCategory z3_monoid_broken_raw();

// [1] with comp(idy, f) removed: totality failure
RawCategory walking_arrow_gappy_raw();

// a fixture with two parallel unequal morphisms 0 -> 2 on top of [2]
FinCategory poset2_parallel();

// seeded random thin categories (posets) and cyclic monoids, each with at
// most `max_morphisms` morphisms
std::vector<FinCategory> random_categories(uint64_t seed, int count,
                                           int max_morphisms = 20);

// 2-categorical fixtures
FinTwoCategory terminal_two_category();
// gaunt: x ~ y via mutually inverse f, g; only identity 2-cells
FinTwoCategory adjoint_equivalence();
// same 1-skeleton, but every 1-morphism carries a Z/2 of 2-cells
FinTwoCategory adjoint_equivalence_z2();
// [1] viewed as a 2-category with only identity 2-cells
FinTwoCategory walking_arrow_two_category();

}  // namespace zz::fixtures
