#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lazyasp/assignment.hpp"
#include "lazyasp/atom_table.hpp"
#include "lazyasp/grounding.hpp"
#include "lazyasp/heuristics.hpp"
#include "lazyasp/nogood_store.hpp"
#include "lazyasp/search_control.hpp"
#include "lazyasp/syntax.hpp"

namespace lazyasp {

inline constexpr uint64_t kAllAnswers = UINT64_MAX;

enum class HeuristicKind { Vsids, Naive };

struct SolverConfig {
    uint64_t n_answers = 10;  // kAllAnswers enumerates everything
    PhasePolicy phase_policy = PhasePolicy::AllTrue;
    uint64_t seed = 1;
    bool restarts = true;
    bool deletion = true;
    HeuristicKind heuristic = HeuristicKind::Vsids;
    GroundingMode grounding;
    uint32_t luby_unit = 32;
    std::optional<uint64_t> time_limit_ms;
};

struct AnswerSet {
    std::vector<std::string> atoms;  // sorted lexicographically
};

struct SolverStats {
    uint64_t decisions = 0;
    uint64_t conflicts = 0;
    uint64_t restarts = 0;
    uint64_t learned = 0;
    uint64_t deleted = 0;
    uint64_t ground_rules = 0;
    uint64_t answer_sets = 0;
    uint64_t atoms = 0;
    // Total branches abandoned at a full fixpoint: atoms stuck at
    // must-be-true without a supporting derivation, and totals whose
    // closed-world completion violates a dormant nogood.
    uint64_t mbt_failures = 0;
    uint64_t model_check_failures = 0;
};

enum class SolveStatus {
    Exhausted,     // search space fully explored, every answer set emitted
    LimitReached,  // requested number of answer sets collected
    Unsat,         // fully explored without finding any answer set
    Timeout,
};

// One search run over one program.  Grounding and propagation interleave:
// rule instances are produced lazily once their positive bodies become
// derivable, their nogoods join the store mid-search, and the loop guesses
// only on body-representing atoms of applicable instances.  A branch where
// every choice point is decided either fails (leftover must-be-true atoms or
// a nogood violated under the branch's closed-world completion) or yields an
// answer set; both outcomes are sealed with a permanent exclusion nogood over
// the decision literals, so enumeration never repeats a branch.
class Solver {
public:
    Solver(Program program, SolverConfig config);

    // Call once per instance.
    SolveStatus run(std::vector<AnswerSet>& out);

    const SolverStats& stats() const { return stats_; }
    const AtomTable& table() const { return table_; }
    const Assignment& assignment() const { return assign_; }
    const ChoiceRegistry& choices() const { return registry_; }
    const PhaseTable& phases() const { return phases_; }

    // Test hook, fired with (atom, sign) before each decision is applied.
    std::function<void(AtomId, bool)> decision_listener;
    // Invoked when a total branch is abandoned, before backtracking undoes
    // it; the assignment still holds the failing state for inspection.
    std::function<void(const Assignment&)> branch_fail_listener;

private:
    std::optional<uint32_t> ground_propagate_fixpoint();
    bool handle_conflict(uint32_t conflict_id);  // false: contradiction at level 0
    bool fail_branch();                          // false: no decision left to flip
    bool closed_world_violation() const;
    void do_backjump(uint32_t level);
    void do_restart();

    Program program_;
    SolverConfig config_;
    AtomTable table_;
    Assignment assign_;
    NoGoodStore store_;
    Grounder grounder_;
    ChoiceRegistry registry_;
    PhaseTable phases_;
    RestartState restarts_;
    DeletionState deletion_;
    std::unique_ptr<DecisionHeuristic> heuristic_;
    SolverStats stats_;
};

}  // namespace lazyasp
