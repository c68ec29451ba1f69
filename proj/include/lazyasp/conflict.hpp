#pragma once

#include <functional>

#include "lazyasp/assignment.hpp"
#include "lazyasp/nogood_store.hpp"

namespace lazyasp {

struct ConflictResult {
    NoGood learned;          // violated by the pre-backjump assignment
    uint32_t backjump_level;  // second-highest decision level in learned
    uint32_t lbd;             // distinct decision levels in learned
};

// Number of distinct decision levels among the nogood's literals.  Every
// literal must be assigned; promoted atoms count at the level of their
// original MBT entry.
uint32_t compute_lbd(const NoGood& ng, const Assignment& a);

// Resolves the violated nogood backwards over the trail to the first unique
// implication point of the current decision level.  Literals fixed at level 0
// are dropped.  on_atom_seen fires once per encountered atom (heuristic
// bumps); on_nogood_used fires for the conflicting nogood and every reason
// resolved with (deletion activity).
//
// The conflict must contain at least one literal of the current decision
// level, and the current level must be positive; a conflict at level 0 means
// unsatisfiability and is handled by the caller.
ConflictResult analyze(uint32_t conflict_id, const Assignment& a, const NoGoodStore& store,
                       const std::function<void(AtomId)>& on_atom_seen,
                       const std::function<void(uint32_t)>& on_nogood_used);

}  // namespace lazyasp
