#include "lazyasp/conflict.hpp"

#include <algorithm>
#include <set>

namespace lazyasp {

uint32_t compute_lbd(const NoGood& ng, const Assignment& a) {
    std::set<uint32_t> levels;
    for (Lit l : ng.lits) levels.insert(a.level(l.atom()));
    return static_cast<uint32_t>(levels.size());
}

ConflictResult analyze(uint32_t conflict_id, const Assignment& a, const NoGoodStore& store,
                       const std::function<void(AtomId)>& on_atom_seen,
                       const std::function<void(uint32_t)>& on_nogood_used) {
    const uint32_t conflict_level = a.decision_level();
    assert(conflict_level >= 1);
    const auto& trail = a.trail();

    std::vector<uint8_t> seen;
    std::vector<int32_t> satisfier;
    auto ensure = [&](AtomId atom) {
        if (seen.size() <= atom) {
            seen.resize(atom + 1, 0);
            satisfier.resize(atom + 1, -1);
        }
    };

    std::vector<Lit> lower;
    size_t path = 0;
    auto mark = [&](Lit l) {
        AtomId atom = l.atom();
        ensure(atom);
        if (seen[atom]) return;
        int32_t si = a.satisfier_index(l);
        uint32_t level = trail[si].level;
        if (level == 0) return;  // globally fixed, contributes nothing
        seen[atom] = 1;
        satisfier[atom] = si;
        if (on_atom_seen) on_atom_seen(atom);
        if (level == conflict_level)
            ++path;
        else
            lower.push_back(l);
    };

    if (on_nogood_used) on_nogood_used(conflict_id);
    for (Lit l : store.nogood(conflict_id).lits) mark(l);
    assert(path >= 1);

    int32_t idx = static_cast<int32_t>(trail.size()) - 1;
    Lit uip;
    while (true) {
        while (!(trail[idx].atom < seen.size() && seen[trail[idx].atom] &&
                 satisfier[trail[idx].atom] == idx)) {
            --idx;
            assert(idx >= 0);
        }
        const TrailEntry& e = trail[idx];
        assert(e.level == conflict_level);
        if (path == 1) {
            uip = Lit(e.atom, is_positive(e.value));
            break;
        }
        assert(e.reason != kReasonChoice);
        if (on_nogood_used) on_nogood_used(e.reason);
        for (Lit l : store.nogood(e.reason).lits)
            if (l.atom() != e.atom) mark(l);
        --path;
        --idx;
    }

    ConflictResult result;
    result.learned.lits.push_back(uip);
    for (Lit l : lower) result.learned.lits.push_back(l);
    result.learned.learned = true;
    result.backjump_level = 0;
    for (Lit l : lower)
        result.backjump_level = std::max(result.backjump_level, a.level(l.atom()));
    result.lbd = compute_lbd(result.learned, a);
    result.learned.lbd = result.lbd;
    return result;
}

}  // namespace lazyasp
