#include "lazyasp/nogood_store.hpp"

#include <algorithm>

namespace lazyasp {

void NoGoodStore::ensure_atom_capacity(AtomId a) {
    if (watches_.size() < 2 * (a + 1)) watches_.resize(2 * (a + 1));
    if (promo_watch_.size() < a + 1) promo_watch_.resize(a + 1);
    if (short_pos_.size() < a + 1) {
        short_pos_.resize(a + 1, 0);
        short_neg_.resize(a + 1, 0);
    }
}

uint32_t NoGoodStore::add(NoGood ng) {
#ifndef NDEBUG
    for (size_t i = 0; i < ng.lits.size(); ++i)
        for (size_t j = i + 1; j < ng.lits.size(); ++j)
            assert(ng.lits[i].atom() != ng.lits[j].atom());
#endif
    uint32_t id = static_cast<uint32_t>(nogoods_.size());
    for (Lit l : ng.lits) ensure_atom_capacity(l.atom());
    if (ng.size() <= 3)
        for (Lit l : ng.lits) ++(l.positive() ? short_pos_ : short_neg_)[l.atom()];
    if (ng.has_head())
        for (Lit l : ng.lits)
            if (l.positive()) promo_watch_[l.atom()].push_back(id);
    if (ng.learned) learned_ids_.push_back(id);
    nogoods_.push_back(std::move(ng));
    watch0_.push_back(-1);
    watch1_.push_back(-1);
    stable_.push_back(0);
    pending_.push_back(id);
    return id;
}

void NoGoodStore::remove(uint32_t id) {
    NoGood& ng = nogoods_[id];
    assert(ng.learned && !ng.deleted);
    ng.deleted = true;
    if (ng.size() <= 3)
        for (Lit l : ng.lits) --(l.positive() ? short_pos_ : short_neg_)[l.atom()];
    // Watch and promo lists drop the id lazily.
}

size_t NoGoodStore::learned_live_count() const {
    size_t n = 0;
    for (uint32_t id : learned_ids_)
        if (!nogoods_[id].deleted) ++n;
    return n;
}

bool NoGoodStore::all_positive_true(const NoGood& ng, const Assignment& a) const {
    for (Lit l : ng.lits)
        if (l.positive() && a.value(l.atom()) != TruthValue::True) return false;
    return true;
}

void NoGoodStore::force(uint32_t id, size_t position, Assignment& a) {
    const NoGood& ng = nogoods_[id];
    Lit l = ng.lits[position];
    if (l.positive()) {
        a.assign(l.atom(), TruthValue::False, id);
    } else {
        bool strong = ng.has_head() && ng.head_index == static_cast<int32_t>(position) &&
                      all_positive_true(ng, a);
        a.assign(l.atom(), strong ? TruthValue::True : TruthValue::Mbt, id);
    }
}

void NoGoodStore::promote_if_ready_unit(uint32_t id, size_t position, Assignment& a) {
    const NoGood& ng = nogoods_[id];
    if (!ng.has_head() || ng.head_index != static_cast<int32_t>(position)) return;
    Lit l = ng.lits[position];
    if (a.value(l.atom()) != TruthValue::Mbt) return;
    if (all_positive_true(ng, a)) a.assign(l.atom(), TruthValue::True, id);
}

void NoGoodStore::set_watch(uint32_t id, int which, int32_t position) {
    int32_t& slot = which == 0 ? watch0_[id] : watch1_[id];
    if (slot == position) return;
    if (slot >= 0) {
        auto& wl = watches_[nogoods_[id].lits[slot].index()];
        wl.erase(std::find(wl.begin(), wl.end(), id));
    }
    slot = position;
    if (position >= 0) watches_[nogoods_[id].lits[position].index()].push_back(id);
}

std::optional<uint32_t> NoGoodStore::examine(uint32_t id, Assignment& a) {
    const NoGood& ng = nogoods_[id];
    if (ng.deleted) {
        stable_[id] = 1;  // let the pending compaction drop it
        return std::nullopt;
    }
    int32_t unsat_a = -1, unsat_b = -1;
    size_t unsat_count = 0;
    int32_t latest_sat = -1, latest_sat_idx = -1;
    for (size_t i = 0; i < ng.size(); ++i) {
        if (!a.satisfied(ng.lits[i])) {
            ++unsat_count;
            if (unsat_a < 0)
                unsat_a = static_cast<int32_t>(i);
            else if (unsat_b < 0)
                unsat_b = static_cast<int32_t>(i);
        } else {
            int32_t idx = a.satisfier_index(ng.lits[i]);
            if (idx > latest_sat_idx) {
                latest_sat_idx = idx;
                latest_sat = static_cast<int32_t>(i);
            }
        }
    }

    if (unsat_count == 0) return id;  // violated (covers the empty nogood)

    if (unsat_count == 1) {
        // Keep one watch on the open literal so its satisfaction is seen.
        if (ng.size() >= 2 && watch0_[id] != unsat_a && watch1_[id] != unsat_a) {
            bool unplaced = watch0_[id] < 0;
            set_watch(id, 0, unsat_a);
            if (unplaced) set_watch(id, 1, latest_sat);
        }
        Lit l = ng.lits[unsat_a];
        if (!a.assigned(l.atom()))
            force(id, unsat_a, a);
        else
            promote_if_ready_unit(id, unsat_a, a);
        return std::nullopt;  // stays fragile
    }

    // Two or more unsatisfied literals: watch two of them and leave pending.
    if (watch0_[id] == unsat_b || watch1_[id] == unsat_a) std::swap(unsat_a, unsat_b);
    if (watch1_[id] == unsat_b) set_watch(id, 0, unsat_a);
    else if (watch0_[id] == unsat_a) set_watch(id, 1, unsat_b);
    else {
        set_watch(id, 0, unsat_a);
        set_watch(id, 1, unsat_b);
    }
    stable_[id] = 1;
    return std::nullopt;
}

std::optional<uint32_t> NoGoodStore::process_watches(Lit satisfied, Assignment& a) {
    if (satisfied.index() >= watches_.size()) return std::nullopt;
    auto& wl = watches_[satisfied.index()];
    size_t i = 0, kept = 0;
    std::optional<uint32_t> conflict;
    while (i < wl.size()) {
        uint32_t id = wl[i];
        NoGood& ng = nogoods_[id];
        if (ng.deleted) {
            ++i;  // drop
            continue;
        }
        int this_watch = (watch0_[id] >= 0 && ng.lits[watch0_[id]] == satisfied) ? 0 : 1;
        assert(this_watch == 0 ||
               (watch1_[id] >= 0 && ng.lits[watch1_[id]] == satisfied));
        int32_t other = this_watch == 0 ? watch1_[id] : watch0_[id];

        // Try to move this watch to an unwatched, unsatisfied literal.
        int32_t target = -1;
        for (size_t k = 0; k < ng.size(); ++k) {
            if (static_cast<int32_t>(k) == watch0_[id] || static_cast<int32_t>(k) == watch1_[id])
                continue;
            if (!a.satisfied(ng.lits[k])) {
                target = static_cast<int32_t>(k);
                break;
            }
        }
        if (target >= 0) {
            int32_t& slot = this_watch == 0 ? watch0_[id] : watch1_[id];
            slot = target;
            watches_[ng.lits[target].index()].push_back(id);
            ++i;  // moved away from this list
            continue;
        }

        wl[kept++] = wl[i++];
        Lit lo = ng.lits[other];
        if (a.satisfied(lo)) {
            conflict = id;
            break;
        }
        if (!a.assigned(lo.atom()))
            force(id, other, a);
        else
            promote_if_ready_unit(id, other, a);
    }
    while (i < wl.size()) wl[kept++] = wl[i++];
    wl.resize(kept);
    return conflict;
}

void NoGoodStore::promo_scan(AtomId became_true, Assignment& a) {
    if (became_true >= promo_watch_.size()) return;
    auto& pl = promo_watch_[became_true];
    size_t kept = 0;
    for (size_t i = 0; i < pl.size(); ++i) {
        uint32_t id = pl[i];
        const NoGood& ng = nogoods_[id];
        if (ng.deleted) continue;
        pl[kept++] = pl[i];
        Lit hl = ng.head_literal();
        if (a.value(hl.atom()) != TruthValue::Mbt) continue;
        bool ready = true;
        for (size_t k = 0; k < ng.size() && ready; ++k) {
            if (static_cast<int32_t>(k) == ng.head_index) continue;
            Lit l = ng.lits[k];
            ready = l.positive() ? a.value(l.atom()) == TruthValue::True
                                 : a.value(l.atom()) == TruthValue::False;
        }
        if (ready) a.assign(hl.atom(), TruthValue::True, id);
    }
    pl.resize(kept);
}

std::optional<uint32_t> NoGoodStore::propagate(Assignment& a) {
    while (true) {
        if (pending_qhead_ < pending_.size()) {
            uint32_t id = pending_[pending_qhead_++];
            if (stable_[id]) continue;
            if (auto c = examine(id, a)) return c;
            continue;
        }
        if (a.qhead < a.trail().size()) {
            const TrailEntry e = a.trail()[a.qhead++];
            if (e.prev >= 0) {
                promo_scan(e.atom, a);  // promotion: a TRUE-strength event only
                continue;
            }
            Lit sat = Lit(e.atom, e.value != TruthValue::False);
            if (auto c = process_watches(sat, a)) return c;
            if (e.value == TruthValue::True) promo_scan(e.atom, a);
            continue;
        }
        return std::nullopt;
    }
}

void NoGoodStore::on_backjump() {
    size_t kept = 0;
    for (uint32_t id : pending_)
        if (!stable_[id]) pending_[kept++] = id;
    pending_.resize(kept);
    pending_qhead_ = 0;
}

uint32_t NoGoodStore::max_satisfier_level(uint32_t id, const Assignment& a) const {
    uint32_t level = 0;
    for (Lit l : nogoods_[id].lits) level = std::max(level, a.satisfier_level(l));
    return level;
}

}  // namespace lazyasp
