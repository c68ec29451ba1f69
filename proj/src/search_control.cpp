#include "lazyasp/search_control.hpp"

namespace lazyasp {

uint64_t reluctant_next(RestartState& rs) {
    uint64_t out = rs.reluctant_v;
    if ((rs.reluctant_u & (~rs.reluctant_u + 1)) == rs.reluctant_v) {
        rs.reluctant_u += 1;
        rs.reluctant_v = 1;
    } else {
        rs.reluctant_v *= 2;
    }
    return out;
}

void on_conflict_lbd(RestartState& rs, uint32_t lbd) {
    rs.ema_fast += kEmaFastAlpha * (static_cast<double>(lbd) - rs.ema_fast);
    rs.ema_slow += kEmaSlowAlpha * (static_cast<double>(lbd) - rs.ema_slow);
    rs.total_conflicts += 1;
    rs.conflicts_since_restart += 1;
}

bool should_restart(const RestartState& rs) {
    if (rs.total_conflicts <= rs.warmup_conflicts) return false;
    if (rs.ema_fast <= kRestartMargin * rs.ema_slow) return false;
    return rs.conflicts_since_restart >=
           static_cast<uint64_t>(rs.luby_unit) * rs.reluctant_v;
}

void PhaseTable::on_new_atom(AtomId id) {
    if (phase_.size() <= id) phase_.resize(id + 1, 0);
    switch (policy_) {
        case PhasePolicy::AllTrue: phase_[id] = 1; break;
        case PhasePolicy::AllFalse: phase_[id] = 0; break;
        case PhasePolicy::Random: phase_[id] = static_cast<uint8_t>(rng_() & 1); break;
    }
}

void PhaseTable::save(AtomId id, TruthValue last_value) {
    if (phase_.size() <= id) on_new_atom(id);
    phase_[id] = is_positive(last_value) ? 1 : 0;
}

size_t clean_store(NoGoodStore& store, const Assignment& a, DeletionState& ds) {
    std::vector<uint32_t> eligible;
    double total_activity = 0.0;
    for (uint32_t id : store.learned_ids()) {
        const NoGood& ng = store.nogood(id);
        if (ng.deleted || ng.lbd <= 2) continue;
        eligible.push_back(id);
        total_activity += ng.activity;
    }
    double avg = eligible.empty() ? 0.0 : total_activity / eligible.size();
    double threshold = 1.5 * avg;
    size_t cap = (eligible.size() + 1) / 2;
    size_t removed = 0;
    for (uint32_t id : eligible) {
        if (removed >= cap) break;
        if (a.is_locked(id)) continue;
        if (store.nogood(id).activity < threshold) {
            store.remove(id);
            removed += 1;
        }
    }
    ds.cycles_done += 1;
    ds.conflicts_since_cleanup = 0;
    return removed;
}

}  // namespace lazyasp
