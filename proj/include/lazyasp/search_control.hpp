#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lazyasp/assignment.hpp"
#include "lazyasp/nogood_store.hpp"

namespace lazyasp {

// Restart policy: two exponential moving averages of learned-nogood LBD pick
// the moment (fast average drifting above the slow one), and the reluctant
// doubling sequence scales a minimum number of conflicts per run.
struct RestartState {
    uint64_t reluctant_u = 1;
    uint64_t reluctant_v = 1;
    uint32_t luby_unit = 32;
    uint64_t conflicts_since_restart = 0;
    uint64_t total_conflicts = 0;
    uint64_t warmup_conflicts = 50;
    double ema_fast = 0.0;  // smoothing 2^-5
    double ema_slow = 0.0;  // smoothing 2^-14
};

inline constexpr double kEmaFastAlpha = 1.0 / 32.0;
inline constexpr double kEmaSlowAlpha = 1.0 / 16384.0;
inline constexpr double kRestartMargin = 1.25;

// Returns v of the current (u, v) pair, then advances it:
// (u, v) -> (u+1, 1) if (u & -u) == v, else (u, 2v).  The returned values
// form the Luby sequence 1, 1, 2, 1, 1, 2, 4, ...
uint64_t reluctant_next(RestartState& rs);

// Records one conflict's LBD into both averages and the counters.
void on_conflict_lbd(RestartState& rs, uint32_t lbd);

// True once past warmup, the fast average exceeds 1.25x the slow one, and the
// current run has lasted at least luby_unit times the current Luby value.
bool should_restart(const RestartState& rs);

enum class PhasePolicy { AllTrue, AllFalse, Random };

// Saved phase per atom, grown in lockstep with the atom table.  Stores the
// last value each atom held; choices reuse it as the sign.
class PhaseTable {
public:
    PhaseTable(PhasePolicy policy, uint64_t seed) : policy_(policy), rng_(seed) {}

    void on_new_atom(AtomId id);
    // Records the atom's current value when it is unassigned or overwritten.
    void save(AtomId id, TruthValue last_value);
    bool saved(AtomId id) const { return phase_[id] != 0; }
    size_t size() const { return phase_.size(); }

private:
    PhasePolicy policy_;
    std::mt19937_64 rng_;
    std::vector<uint8_t> phase_;
};

// Cleanup schedule: a cycle runs after 2000 + 100 * (cycles_done mod 20)
// conflicts since the previous one, so the spacing walks 2000, 2100, ... 3900
// and then wraps.
struct DeletionState {
    uint64_t cycles_done = 0;
    uint64_t conflicts_since_cleanup = 0;

    uint64_t cycle_interval() const { return 2000 + 100 * (cycles_done % 20); }
    bool due() const { return conflicts_since_cleanup >= cycle_interval(); }
};

// Removes learned nogoods with activity below 1.5x the average, sweeping in
// insertion order.  Nogoods that are locked (reason of a trail entry) or have
// lbd <= 2 are kept; the lbd <= 2 ones do not enter the average either.  The
// sweep stops once half of the considered nogoods are gone.  Returns the
// number removed and advances the schedule.
size_t clean_store(NoGoodStore& store, const Assignment& a, DeletionState& ds);

}  // namespace lazyasp
