#include "lazyasp/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lazyasp/solver.hpp"

namespace lazyasp {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"lazy-asp: answer-set solver with lazy grounding"};
    std::vector<std::string> files;
    std::string n_answers = "10";
    std::string phase_init = "true";
    std::string restarts = "on";
    std::string deletion = "on";
    std::string heuristic = "vsids";
    std::string grounding_constraints = "permissive";
    std::string grounding_rules = "strict";
    uint32_t luby_unit = 32;
    uint64_t seed = 1;
    bool stats = false;

    app.add_option("files", files, "program file(s)")->required();
    app.add_option("--n-answers", n_answers, "answer sets to search for, or 'all'");
    app.add_option("--phase-init", phase_init, "initial saved phase")
        ->check(CLI::IsMember({"true", "false", "random"}));
    app.add_option("--restarts", restarts, "restart policy")
        ->check(CLI::IsMember({"on", "off"}));
    app.add_option("--deletion", deletion, "learned-nogood deletion")
        ->check(CLI::IsMember({"on", "off"}));
    app.add_option("--heuristic", heuristic, "decision heuristic")
        ->check(CLI::IsMember({"vsids", "naive"}));
    app.add_option("--luby-unit", luby_unit, "conflicts per restart-sequence unit")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for randomized phases");
    app.add_flag("--stats", stats, "print statistics to standard error");
    app.add_option("--grounding-constraints", grounding_constraints,
                   "when constraint instances are grounded")
        ->check(CLI::IsMember({"strict", "permissive"}));
    app.add_option("--grounding-rules", grounding_rules, "when rule instances are grounded")
        ->check(CLI::IsMember({"strict", "permissive"}));

    std::vector<std::string> argv(args);
    try {
        argv.insert(argv.begin(), "lazy-asp");
        std::vector<const char*> ptrs;
        for (const std::string& s : argv) ptrs.push_back(s.c_str());
        app.parse(static_cast<int>(ptrs.size()), ptrs.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    SolverConfig config;
    if (n_answers == "all") {
        config.n_answers = kAllAnswers;
    } else {
        try {
            size_t used = 0;
            config.n_answers = std::stoull(n_answers, &used);
            if (used != n_answers.size() || config.n_answers == 0) throw std::invalid_argument("");
        } catch (const std::exception&) {
            err << "error: --n-answers expects a positive integer or 'all'\n";
            return 1;
        }
    }
    config.phase_policy = phase_init == "true"    ? PhasePolicy::AllTrue
                          : phase_init == "false" ? PhasePolicy::AllFalse
                                                  : PhasePolicy::Random;
    config.restarts = restarts == "on";
    config.deletion = deletion == "on";
    config.heuristic = heuristic == "vsids" ? HeuristicKind::Vsids : HeuristicKind::Naive;
    config.grounding.constraints =
        grounding_constraints == "strict" ? Strictness::Strict : Strictness::Permissive;
    config.grounding.rules = grounding_rules == "strict" ? Strictness::Strict : Strictness::Permissive;
    config.luby_unit = luby_unit;
    config.seed = seed;

    std::string text;
    for (const std::string& file : files) {
        std::ifstream in(file);
        if (!in) {
            err << "error: cannot open file: " << file << "\n";
            return 1;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text += buffer.str();
        text += "\n";
    }

    Program program;
    try {
        program = parse_program(text);
    } catch (const ParseError& e) {
        err << "parse error at " << e.pos().line << ":" << e.pos().column << ": " << e.what()
            << "\n";
        return 1;
    }

    try {
        auto started = std::chrono::steady_clock::now();
        Solver solver(std::move(program), config);
        std::vector<AnswerSet> answers;
        solver.run(answers);
        auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        for (size_t i = 0; i < answers.size(); ++i) {
            out << "Answer set " << i + 1 << ": {";
            if (answers[i].atoms.empty()) {
                out << " ";
            } else {
                out << " ";
                for (size_t j = 0; j < answers[i].atoms.size(); ++j) {
                    if (j > 0) out << ", ";
                    out << answers[i].atoms[j];
                }
                out << " ";
            }
            out << "}\n";
        }
        if (answers.empty()) out << "UNSATISFIABLE\n";
        if (stats) {
            const SolverStats& s = solver.stats();
            err << "conflicts=" << s.conflicts << "\n"
                << "decisions=" << s.decisions << "\n"
                << "restarts=" << s.restarts << "\n"
                << "learned=" << s.learned << "\n"
                << "deleted=" << s.deleted << "\n"
                << "ground_rules=" << s.ground_rules << "\n"
                << "answer_sets=" << s.answer_sets << "\n"
                << "atoms=" << s.atoms << "\n"
                << "mbt_failures=" << s.mbt_failures << "\n"
                << "model_check_failures=" << s.model_check_failures << "\n"
                << "wall_ms=" << wall_ms << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace lazyasp
