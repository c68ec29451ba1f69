#include "lazyasp/oracle.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace lazyasp {

namespace {

struct MaskRule {
    bool constraint;
    uint64_t head = 0;
    uint64_t pos = 0;
    uint64_t neg = 0;
};

Atom substitute(const Atom& atom, const std::map<std::string, std::string>& subst) {
    Atom out;
    out.predicate = atom.predicate;
    out.terms.reserve(atom.terms.size());
    for (const Term& t : atom.terms) {
        if (t.kind == TermKind::Variable) {
            out.terms.push_back(constant(subst.at(t.name)));
        } else {
            out.terms.push_back(t);
        }
    }
    return out;
}

}  // namespace

std::set<std::set<std::string>> brute_force_answer_sets(const Program& program,
                                                        size_t atom_budget) {
    if (atom_budget > 63) throw std::length_error("atom budget must stay below 64");

    std::set<std::string> constants;
    for (const Rule& rule : program.rules) {
        auto scan = [&](const Atom& atom) {
            for (const Term& t : atom.terms) {
                if (t.kind == TermKind::Constant) constants.insert(t.name);
            }
        };
        if (rule.head) scan(*rule.head);
        for (const Atom& a : rule.positive_body) scan(a);
        for (const Atom& a : rule.negative_body) scan(a);
    }
    std::vector<std::string> universe(constants.begin(), constants.end());

    // Full grounding: every substitution of each rule's variables over the
    // program's constants.
    struct GroundedRule {
        std::optional<std::string> head;
        std::vector<std::string> pos, neg;
    };
    std::vector<GroundedRule> ground;
    std::map<std::string, size_t> atom_index;
    auto index_of = [&](const Atom& atom) {
        std::string name = atom.to_string();
        auto [it, fresh] = atom_index.emplace(name, atom_index.size());
        if (fresh && atom_index.size() > atom_budget) {
            throw std::length_error("full grounding exceeds the atom budget");
        }
        return it->first;
    };
    for (const Rule& rule : program.rules) {
        std::set<std::string> var_set;
        if (rule.head) rule.head->collect_variables(var_set);
        for (const Atom& a : rule.positive_body) a.collect_variables(var_set);
        for (const Atom& a : rule.negative_body) a.collect_variables(var_set);
        std::vector<std::string> vars(var_set.begin(), var_set.end());
        if (!vars.empty() && universe.empty()) continue;

        std::vector<size_t> pick(vars.size(), 0);
        for (;;) {
            std::map<std::string, std::string> subst;
            for (size_t i = 0; i < vars.size(); ++i) subst[vars[i]] = universe[pick[i]];
            GroundedRule gr;
            if (rule.head) gr.head = index_of(substitute(*rule.head, subst));
            for (const Atom& a : rule.positive_body) gr.pos.push_back(index_of(substitute(a, subst)));
            for (const Atom& a : rule.negative_body) gr.neg.push_back(index_of(substitute(a, subst)));
            ground.push_back(std::move(gr));

            size_t i = 0;
            while (i < vars.size()) {
                if (++pick[i] < universe.size()) break;
                pick[i] = 0;
                ++i;
            }
            if (i == vars.size()) break;
        }
    }

    size_t n = atom_index.size();
    std::vector<MaskRule> rules;
    rules.reserve(ground.size());
    for (const GroundedRule& gr : ground) {
        MaskRule mr;
        mr.constraint = !gr.head.has_value();
        if (gr.head) mr.head = uint64_t{1} << atom_index.at(*gr.head);
        for (const std::string& a : gr.pos) mr.pos |= uint64_t{1} << atom_index.at(a);
        for (const std::string& a : gr.neg) mr.neg |= uint64_t{1} << atom_index.at(a);
        rules.push_back(mr);
    }
    std::vector<std::string> names(n);
    for (const auto& [name, idx] : atom_index) names[idx] = name;

    std::set<std::set<std::string>> result;
    for (uint64_t interp = 0; interp < (uint64_t{1} << n); ++interp) {
        bool rejected = false;
        for (const MaskRule& mr : rules) {
            if (mr.constraint && (mr.pos & interp) == mr.pos && (mr.neg & interp) == 0) {
                rejected = true;
                break;
            }
        }
        if (rejected) continue;

        // Least model of the reduct: fire rules whose full body I satisfies.
        uint64_t derived = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const MaskRule& mr : rules) {
                if (mr.constraint) continue;
                if ((mr.pos & interp) != mr.pos || (mr.neg & interp) != 0) continue;
                if ((mr.pos & derived) != mr.pos) continue;
                if ((derived & mr.head) == 0) {
                    derived |= mr.head;
                    changed = true;
                }
            }
        }
        if (derived != interp) continue;

        std::set<std::string> model;
        for (size_t i = 0; i < n; ++i) {
            if (interp & (uint64_t{1} << i)) model.insert(names[i]);
        }
        result.insert(std::move(model));
    }
    return result;
}

}  // namespace lazyasp
