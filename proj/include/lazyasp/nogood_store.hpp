#pragma once

#include <optional>
#include <vector>

#include "lazyasp/assignment.hpp"
#include "lazyasp/nogood.hpp"

namespace lazyasp {

// Nogood database with two-watched-literal propagation.  Watches sit on
// literals not yet satisfied; a nogood moves towards violation only when a
// watched literal becomes satisfied, which is the event that re-examines it.
//
// Nogoods arrive at arbitrary decision levels (the grounder and conflict
// analysis both add mid-search), so a freshly added nogood is examined from
// scratch.  Nogoods that are unit, violated, or down to a single unsatisfied
// literal at examination time are "fragile": a backjump can silently make
// them unit again without touching a watch, so they stay on a pending list
// that is re-examined after every backjump.  Once a nogood is seen with two
// unsatisfied literals it is watch-stable and leaves the list.
class NoGoodStore {
public:
    uint32_t add(NoGood ng);

    // Runs unit propagation to fixpoint.  Returns the id of a violated
    // nogood, or nullopt.  Propagation may promote MBT atoms to TRUE through
    // head-marked nogoods whose positive literals are all TRUE.
    std::optional<uint32_t> propagate(Assignment& a);

    // Must be called after every Assignment::backjump.
    void on_backjump();

    const NoGood& nogood(uint32_t id) const { return nogoods_[id]; }
    NoGood& nogood(uint32_t id) { return nogoods_[id]; }
    size_t size() const { return nogoods_.size(); }

    const std::vector<uint32_t>& learned_ids() const { return learned_ids_; }
    size_t learned_live_count() const;

    void bump_activity(uint32_t id, double amount) { nogoods_[id].activity += amount; }

    // Deletes a learned nogood.  The caller checks locks.
    void remove(uint32_t id);

    // Occurrence counts of the atom in short (size <= 3) live nogoods.
    uint32_t short_pos_count(AtomId a) const {
        return a < short_pos_.size() ? short_pos_[a] : 0;
    }
    uint32_t short_neg_count(AtomId a) const {
        return a < short_neg_.size() ? short_neg_[a] : 0;
    }

    uint32_t max_satisfier_level(uint32_t id, const Assignment& a) const;

private:
    std::optional<uint32_t> examine(uint32_t id, Assignment& a);
    std::optional<uint32_t> process_watches(Lit satisfied, Assignment& a);
    void promo_scan(AtomId became_true, Assignment& a);
    void force(uint32_t id, size_t position, Assignment& a);
    void promote_if_ready_unit(uint32_t id, size_t position, Assignment& a);
    bool all_positive_true(const NoGood& ng, const Assignment& a) const;
    void set_watch(uint32_t id, int which, int32_t position);
    void ensure_atom_capacity(AtomId a);

    std::vector<NoGood> nogoods_;
    std::vector<int32_t> watch0_, watch1_;
    std::vector<uint8_t> stable_;
    std::vector<std::vector<uint32_t>> watches_;      // by literal index
    std::vector<std::vector<uint32_t>> promo_watch_;  // by atom: head-marked nogoods with (atom, pos)
    std::vector<uint32_t> pending_;
    size_t pending_qhead_ = 0;
    std::vector<uint32_t> learned_ids_;
    std::vector<uint32_t> short_pos_, short_neg_;
};

}  // namespace lazyasp
