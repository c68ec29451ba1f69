#pragma once

#include <cstddef>
#include <set>
#include <string>

#include "lazyasp/syntax.hpp"

namespace lazyasp {

// Reference semantics by exhaustion, for testing the solver against.
// Grounds the program completely over its own constants, enumerates every
// subset I of the ground atoms, and keeps the stable ones: no constraint
// body holds under I, and I equals the least model of the rules whose bodies
// I satisfies.  Throws std::length_error when the grounding needs more than
// atom_budget atoms (the subsets are walked as bitmasks, so the budget must
// stay below 64).
std::set<std::set<std::string>> brute_force_answer_sets(const Program& program,
                                                        size_t atom_budget = 20);

}  // namespace lazyasp
