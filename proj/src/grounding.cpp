#include "lazyasp/grounding.hpp"

#include <algorithm>
#include <cassert>

namespace lazyasp {

namespace {

// Unifies a body pattern with a ground atom, extending subst on success.
bool match(const Atom& pattern, const Atom& ground, std::map<std::string, std::string>& subst) {
    assert(pattern.predicate == ground.predicate);
    assert(pattern.arity() == ground.arity());
    std::vector<std::pair<std::string, std::string>> added;
    for (size_t i = 0; i < pattern.terms.size(); ++i) {
        const Term& t = pattern.terms[i];
        const std::string& value = ground.terms[i].name;
        if (t.is_constant()) {
            if (t.name != value) goto fail;
        } else {
            auto it = subst.find(t.name);
            if (it == subst.end()) {
                subst.emplace(t.name, value);
                added.emplace_back(t.name, value);
            } else if (it->second != value) {
                goto fail;
            }
        }
    }
    return true;
fail:
    for (auto& [var, _] : added) subst.erase(var);
    return false;
}

Atom substitute(const Atom& atom, const std::map<std::string, std::string>& subst) {
    Atom out;
    out.predicate = atom.predicate;
    for (const Term& t : atom.terms) {
        if (t.is_constant()) {
            out.terms.push_back(t);
        } else {
            auto it = subst.find(t.name);
            assert(it != subst.end());  // guaranteed by safety
            out.terms.push_back(constant(it->second));
        }
    }
    return out;
}

std::string subst_text(const std::map<std::string, std::string>& subst) {
    std::string s;
    for (const auto& [var, value] : subst) {
        if (!s.empty()) s += ",";
        s += var + "=" + value;
    }
    return s;
}

}  // namespace

Grounder::Grounder(const Program& program, AtomTable& table, GroundingMode mode)
    : program_(program), table_(table), mode_(mode) {}

void Grounder::notify_positive(AtomId a) {
    if (!table_.is_body_atom(a)) queued_positive_.push_back(a);
}

void Grounder::notify_interned(AtomId a) {
    if (!table_.is_body_atom(a)) queued_interned_.push_back(a);
}

bool Grounder::blocked(const Candidate& cand, const Assignment& a) const {
    for (AtomId id : cand.positive_body)
        if (a.value(id) == TruthValue::False) return true;
    return false;
}

void Grounder::emit(Candidate cand, std::vector<GroundRule>& out) {
    GroundRule gr;
    gr.rule_index = cand.rule_index;
    gr.subst_key = cand.subst_key;
    gr.positive_body = std::move(cand.positive_body);
    if (cand.head) gr.head = table_.intern(*cand.head);
    for (const Atom& n : cand.negative_body) {
        AtomId id = table_.intern(n);
        if (std::find(gr.negative_body.begin(), gr.negative_body.end(), id) ==
            gr.negative_body.end())
            gr.negative_body.push_back(id);
    }
    // Constraints compile to a single nogood and are never guessed on, so
    // only proper rules with negation get a body-representing atom.
    if (gr.head != kNoAtom && !gr.negative_body.empty())
        gr.body_atom = table_.intern_body_atom(gr.rule_index, gr.subst_key);
    emitted_.insert(cand.key);
    out.push_back(std::move(gr));
}

void Grounder::complete(uint32_t rule_index, Strictness mode,
                        const std::map<std::string, std::string>& subst,
                        const std::vector<AtomId>& pos_ids, const Assignment& a,
                        std::vector<GroundRule>& out) {
    const Rule& rule = program_.rules[rule_index];
    Candidate cand;
    cand.rule_index = rule_index;
    cand.subst_key = subst_text(subst);
    cand.key = std::to_string(rule_index) + "|" + cand.subst_key;
    if (emitted_.count(cand.key) || blocked_keys_.count(cand.key)) return;
    for (AtomId id : pos_ids)
        if (std::find(cand.positive_body.begin(), cand.positive_body.end(), id) ==
            cand.positive_body.end())
            cand.positive_body.push_back(id);
    if (rule.head) cand.head = substitute(*rule.head, subst);
    for (const Atom& n : rule.negative_body) cand.negative_body.push_back(substitute(n, subst));

    if (mode == Strictness::Permissive && blocked(cand, a)) {
        blocked_keys_.insert(cand.key);
        blocked_.push_back(std::move(cand));
        return;
    }
    emit(std::move(cand), out);
}

void Grounder::extend(uint32_t rule_index, Strictness mode,
                      std::map<std::string, std::string>& subst, std::vector<AtomId>& pos_ids,
                      size_t next, size_t delta_pos, const Assignment& a,
                      std::vector<GroundRule>& out) {
    const Rule& rule = program_.rules[rule_index];
    if (next == rule.positive_body.size()) {
        complete(rule_index, mode, subst, pos_ids, a, out);
        return;
    }
    if (next == delta_pos) {  // already bound to the delta atom
        extend(rule_index, mode, subst, pos_ids, next + 1, delta_pos, a, out);
        return;
    }
    const Atom& pattern = rule.positive_body[next];
    const std::vector<AtomId>* candidates = &table_.atoms_of(pattern.predicate);
    if (!pattern.terms.empty()) {
        const Term& first = pattern.terms[0];
        if (first.is_constant()) {
            candidates = &table_.atoms_of_with_first(pattern.predicate, first.name);
        } else {
            auto it = subst.find(first.name);
            if (it != subst.end())
                candidates = &table_.atoms_of_with_first(pattern.predicate, it->second);
        }
    }
    // The candidate list can grow while we emit (interning appends); index loop
    // plus the size snapshot keeps iteration stable.
    size_t n = candidates->size();
    for (size_t ci = 0; ci < n; ++ci) {
        AtomId id = (*candidates)[ci];
        if (mode == Strictness::Strict && !is_positive(a.value(id))) continue;
        std::map<std::string, std::string> saved = subst;
        if (!match(pattern, table_.atom(id), subst)) continue;
        pos_ids[next] = id;
        extend(rule_index, mode, subst, pos_ids, next + 1, delta_pos, a, out);
        subst = std::move(saved);
    }
}

std::vector<GroundRule> Grounder::ground_step(const Assignment& a) {
    std::vector<GroundRule> out;

    if (!started_) {
        started_ = true;
        // Rules with an empty positive body are ground by safety and fire at
        // the first step under either mode.
        for (uint32_t ri = 0; ri < program_.rules.size(); ++ri) {
            if (!program_.rules[ri].positive_body.empty()) continue;
            std::map<std::string, std::string> subst;
            std::vector<AtomId> pos_ids;
            complete(ri, program_.rules[ri].is_constraint() ? mode_.constraints : mode_.rules,
                     subst, pos_ids, a, out);
        }
    }

    auto drain = [](std::vector<AtomId>& queue, auto eligible) {
        std::vector<AtomId> delta;
        for (AtomId id : queue)
            if (eligible(id) && std::find(delta.begin(), delta.end(), id) == delta.end())
                delta.push_back(id);
        queue.clear();
        return delta;
    };
    std::vector<AtomId> delta_pos =
        drain(queued_positive_, [&](AtomId id) { return is_positive(a.value(id)); });
    std::vector<AtomId> delta_int = drain(queued_interned_, [](AtomId) { return true; });

    for (uint32_t ri = 0; ri < program_.rules.size(); ++ri) {
        const Rule& rule = program_.rules[ri];
        if (rule.positive_body.empty()) continue;
        Strictness mode = rule.is_constraint() ? mode_.constraints : mode_.rules;
        const std::vector<AtomId>& delta =
            mode == Strictness::Strict ? delta_pos : delta_int;
        for (AtomId d : delta) {
            // Copy: extend() interns new atoms, which can reallocate the
            // table's storage and would leave a reference dangling.
            const Atom datom = table_.atom(d);
            for (size_t j = 0; j < rule.positive_body.size(); ++j) {
                const Atom& pattern = rule.positive_body[j];
                if (pattern.predicate != datom.predicate || pattern.arity() != datom.arity())
                    continue;
                std::map<std::string, std::string> subst;
                if (!match(pattern, datom, subst)) continue;
                std::vector<AtomId> pos_ids(rule.positive_body.size(), kNoAtom);
                pos_ids[j] = d;
                extend(ri, mode, subst, pos_ids, 0, j, a, out);
            }
        }
    }

    // Instances held back by a FALSE positive body atom re-enter once the atom
    // is no longer FALSE.
    std::vector<Candidate> kept;
    for (Candidate& cand : blocked_) {
        if (blocked(cand, a)) {
            kept.push_back(std::move(cand));
        } else {
            blocked_keys_.erase(cand.key);
            emit(std::move(cand), out);
        }
    }
    blocked_ = std::move(kept);

    return out;
}

std::vector<NoGood> rule_to_nogoods(const GroundRule& gr) {
    std::vector<NoGood> out;
    // Builds a nogood unless it is tautological; marks head_atom's negative
    // literal when given.
    auto build = [&](const std::vector<Lit>& lits, AtomId head_atom) {
        NoGood ng;
        for (Lit l : lits) {
            bool drop = false;
            for (Lit seen : ng.lits) {
                if (seen.atom() != l.atom()) continue;
                if (seen == l) drop = true;      // duplicate literal
                else return;                     // both signs: tautology
            }
            if (!drop) ng.lits.push_back(l);
        }
        if (head_atom != kNoAtom) {
            for (size_t i = 0; i < ng.lits.size(); ++i)
                if (ng.lits[i] == neg(head_atom)) ng.head_index = static_cast<int32_t>(i);
            assert(ng.head_index >= 0);
        }
        out.push_back(std::move(ng));
    };

    std::vector<Lit> lits;
    if (gr.head == kNoAtom) {  // constraint
        for (AtomId b : gr.positive_body) lits.push_back(pos(b));
        for (AtomId b : gr.negative_body) lits.push_back(neg(b));
        build(lits, kNoAtom);
        return out;
    }
    if (gr.negative_body.empty()) {
        for (AtomId b : gr.positive_body) lits.push_back(pos(b));
        lits.push_back(neg(gr.head));
        build(lits, gr.head);
        return out;
    }
    AtomId beta = gr.body_atom;
    assert(beta != kNoAtom);
    for (AtomId b : gr.positive_body) lits.push_back(pos(b));
    for (AtomId b : gr.negative_body) lits.push_back(neg(b));
    lits.push_back(neg(beta));
    build(lits, beta);
    for (AtomId b : gr.positive_body) build({pos(beta), neg(b)}, kNoAtom);
    for (AtomId b : gr.negative_body) build({pos(beta), pos(b)}, kNoAtom);
    // The head-derivation nogood repeats the positive body so the head can
    // reach TRUE (not just MBT) only once its support is TRUE in the strict
    // sense.  A head occurring in its own positive body drops the nogood as a
    // tautology: such an instance never founds its head.
    lits = {pos(beta)};
    for (AtomId b : gr.positive_body) lits.push_back(pos(b));
    lits.push_back(neg(gr.head));
    build(lits, gr.head);
    return out;
}

void ChoiceRegistry::add(const GroundRule& gr) {
    assert(gr.body_atom != kNoAtom);
    if (info_.count(gr.body_atom)) return;
    order_.push_back(gr.body_atom);
    info_.emplace(gr.body_atom, ChoiceInfo{gr.body_atom, gr.head, gr.positive_body,
                                           gr.negative_body});
}

bool ChoiceRegistry::applicable(AtomId a, const Assignment& assignment) const {
    for (AtomId b : info_.at(a).positive_body)
        if (!is_positive(assignment.value(b))) return false;
    return true;
}

}  // namespace lazyasp
