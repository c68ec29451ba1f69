#include "lazyasp/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>

#include "lazyasp/conflict.hpp"

namespace lazyasp {

Solver::Solver(Program program, SolverConfig config)
    : program_(std::move(program)),
      config_(config),
      grounder_(program_, table_, config_.grounding),
      phases_(config_.phase_policy, config_.seed) {
    restarts_.luby_unit = config_.luby_unit;
    table_.on_grow([this](AtomId id) {
        phases_.on_new_atom(id);
        assign_.ensure_capacity(id + 1);
        grounder_.notify_interned(id);
    });
    assign_.phase_hook = [this](AtomId id, TruthValue last) { phases_.save(id, last); };
    assign_.positive_hook = [this](AtomId id) { grounder_.notify_positive(id); };
    if (config_.heuristic == HeuristicKind::Vsids) {
        heuristic_ = std::make_unique<DepVsidsHeuristic>();
    } else {
        heuristic_ = std::make_unique<NaiveHeuristic>();
    }
}

void Solver::do_backjump(uint32_t level) {
    assign_.backjump(level);
    store_.on_backjump();
}

void Solver::do_restart() {
    do_backjump(0);
    reluctant_next(restarts_);
    restarts_.conflicts_since_restart = 0;
    stats_.restarts += 1;
}

std::optional<uint32_t> Solver::ground_propagate_fixpoint() {
    for (;;) {
        if (auto conflict = store_.propagate(assign_)) return conflict;
        std::vector<GroundRule> fresh = grounder_.ground_step(assign_);
        if (fresh.empty()) return std::nullopt;
        for (const GroundRule& gr : fresh) {
            stats_.ground_rules += 1;
            if (gr.body_atom != kNoAtom) registry_.add(gr);
            heuristic_->on_ground_rule(gr);
            for (NoGood& ng : rule_to_nogoods(gr)) {
                uint32_t id = store_.add(std::move(ng));
                heuristic_->on_static_nogood(store_, id);
            }
        }
    }
}

bool Solver::handle_conflict(uint32_t conflict_id) {
    // Nogoods added mid-search can be violated entirely below the current
    // level; analysis runs at the level the violation was completed.
    uint32_t conflict_level = store_.max_satisfier_level(conflict_id, assign_);
    if (conflict_level == 0) return false;
    if (conflict_level < assign_.decision_level()) do_backjump(conflict_level);
    ConflictResult res =
        analyze(conflict_id, assign_, store_,
                [this](AtomId a) { heuristic_->on_atom_seen(a); },
                [this](uint32_t id) { store_.bump_activity(id, 1.0); });
    heuristic_->on_conflict();
    on_conflict_lbd(restarts_, res.lbd);
    deletion_.conflicts_since_cleanup += 1;
    stats_.conflicts += 1;
    do_backjump(res.backjump_level);
    store_.add(std::move(res.learned));
    stats_.learned += 1;
    return true;
}

bool Solver::fail_branch() {
    std::vector<Lit> decisions = assign_.decision_literals();
    if (decisions.empty()) return false;
    do_backjump(assign_.decision_level() - 1);
    NoGood exclusion;
    exclusion.lits = std::move(decisions);
    store_.add(std::move(exclusion));
    return true;
}

bool Solver::closed_world_violation() const {
    // The branch is total: whatever stayed unassigned is false by
    // closed-world completion.  Constraints kept dormant by two unassigned
    // negative literals become violated exactly here.
    for (uint32_t id = 0; id < store_.size(); ++id) {
        const NoGood& ng = store_.nogood(id);
        if (ng.deleted) continue;
        bool violated = true;
        for (const Lit& lit : ng.lits) {
            TruthValue v = assign_.value(lit.atom());
            bool sat = lit.positive() ? is_positive(v)
                                      : v == TruthValue::False || v == TruthValue::Unassigned;
            if (!sat) {
                violated = false;
                break;
            }
        }
        if (violated) return true;
    }
    return false;
}

SolveStatus Solver::run(std::vector<AnswerSet>& out) {
    using Clock = std::chrono::steady_clock;
    std::optional<Clock::time_point> deadline;
    if (config_.time_limit_ms) {
        deadline = Clock::now() + std::chrono::milliseconds(*config_.time_limit_ms);
    }
    auto finish = [&](SolveStatus status) {
        stats_.answer_sets = out.size();
        stats_.atoms = table_.size();
        return status;
    };
    for (;;) {
        if (deadline && Clock::now() >= *deadline) return finish(SolveStatus::Timeout);
        if (auto conflict = ground_propagate_fixpoint()) {
            if (!handle_conflict(*conflict)) {
                return finish(out.empty() ? SolveStatus::Unsat : SolveStatus::Exhausted);
            }
            continue;
        }
        if (config_.restarts && should_restart(restarts_)) {
            do_restart();
            continue;
        }
        if (config_.deletion && deletion_.due()) {
            stats_.deleted += clean_store(store_, assign_, deletion_);
        }
        AtomId choice = heuristic_->pick(assign_, registry_);
        if (choice != kNoAtom) {
            bool sign = choose_sign(choice, assign_, phases_);
            if (decision_listener) decision_listener(choice, sign);
            assign_.new_decision_level();
            AssignResult res = assign_.assign(
                choice, sign ? TruthValue::True : TruthValue::False, kReasonChoice);
            assert(res == AssignResult::Ok);
            (void)res;
            stats_.decisions += 1;
            continue;
        }
        if (assign_.mbt_count() > 0 || closed_world_violation()) {
            if (assign_.mbt_count() > 0) {
                stats_.mbt_failures += 1;
            } else {
                stats_.model_check_failures += 1;
            }
            if (branch_fail_listener) branch_fail_listener(assign_);
            if (!fail_branch()) {
                return finish(out.empty() ? SolveStatus::Unsat : SolveStatus::Exhausted);
            }
            continue;
        }
        AnswerSet as;
        for (AtomId id = 0; id < table_.size(); ++id) {
            if (!table_.is_body_atom(id) && assign_.value(id) == TruthValue::True) {
                as.atoms.push_back(table_.name(id));
            }
        }
        std::sort(as.atoms.begin(), as.atoms.end());
        out.push_back(std::move(as));
        if (out.size() >= config_.n_answers) return finish(SolveStatus::LimitReached);
        std::vector<Lit> decisions = assign_.decision_literals();
        if (decisions.empty()) return finish(SolveStatus::Exhausted);
        do_backjump(0);
        NoGood enumeration;
        enumeration.lits = std::move(decisions);
        store_.add(std::move(enumeration));
    }
}

}  // namespace lazyasp
