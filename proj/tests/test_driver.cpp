#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "lazyasp/cli.hpp"
#include "lazyasp/colouring.hpp"
#include "lazyasp/oracle.hpp"
#include "lazyasp/solver.hpp"
#include "testutil.hpp"

using namespace lazyasp;

namespace {

std::set<std::set<std::string>> solve_all(const std::string& text, SolverConfig config = {}) {
    config.n_answers = kAllAnswers;
    Solver solver(parse_program(text), config);
    std::vector<AnswerSet> out;
    SolveStatus status = solver.run(out);
    REQUIRE((status == SolveStatus::Exhausted || status == SolveStatus::Unsat));
    std::set<std::set<std::string>> sets;
    for (const AnswerSet& as : out)
        sets.insert(std::set<std::string>(as.atoms.begin(), as.atoms.end()));
    REQUIRE(sets.size() == out.size());  // no duplicates
    return sets;
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& text) {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("lazyasp_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
                ".lp");
        std::ofstream(path) << text;
    }
    ~TempFile() { std::filesystem::remove(path); }
    std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("an even loop yields both answer sets") {
    const std::string text = "a :- not b.\nb :- not a.\n";
    CHECK(solve_all(text) == std::set<std::set<std::string>>{{"a"}, {"b"}});

    SolverConfig limited;
    limited.n_answers = 1;
    Solver solver(parse_program(text), limited);
    std::vector<AnswerSet> out;
    CHECK(solver.run(out) == SolveStatus::LimitReached);
    CHECK(out.size() == 1);
}

TEST_CASE("an odd loop is unsatisfiable") {
    Solver solver(parse_program("a :- not a.\n"), SolverConfig{});
    std::vector<AnswerSet> out;
    CHECK(solver.run(out) == SolveStatus::Unsat);
    CHECK(out.empty());
}

TEST_CASE("deterministic programs solve without guessing") {
    CHECK(solve_all("q(1,2). p(X) :- q(X,Y).") ==
          std::set<std::set<std::string>>{{"p(1)", "q(1,2)"}});
    Solver solver(parse_program("q(1,2). p(X) :- q(X,Y)."), SolverConfig{});
    std::vector<AnswerSet> out;
    solver.run(out);
    CHECK(solver.stats().decisions == 0);
}

TEST_CASE("positive loops stay unfounded") {
    CHECK(solve_all("a :- b.\nb :- a.\n") == std::set<std::set<std::string>>{{}});
}

TEST_CASE("solver agrees with exhaustive enumeration on random programs") {
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        CAPTURE(seed);
        std::string text = testutil::random_oracle_program_text(seed);
        CAPTURE(text);
        Program program = parse_program(text);
        auto expected = brute_force_answer_sets(program, 12);
        CHECK(solve_all(text) == expected);
    }
}

TEST_CASE("the triangle has exactly the six proper 3-colourings") {
    ColouringParams params;
    params.vertices = 3;
    params.edge_probability = 1.0;
    params.colours = 3;
    params.seed = 7;
    std::string text = generate_colouring_instance(params);
    auto sets = solve_all(text);
    CHECK(sets.size() == 6);
    for (const auto& as : sets) {
        std::set<std::string> chosen;
        for (const std::string& atom : as)
            if (atom.rfind("chosen(", 0) == 0) chosen.insert(atom);
        CHECK(chosen.size() == 3);  // one colour per node
        std::set<std::string> colours_used;
        for (const std::string& c : chosen)
            colours_used.insert(c.substr(c.find(',') + 1));
        CHECK(colours_used.size() == 3);  // triangle: all distinct
    }
}

TEST_CASE("five mutually adjacent nodes defeat three colours") {
    ColouringParams params;
    params.vertices = 5;
    params.edge_probability = 1.0;
    params.colours = 3;
    params.seed = 1;
    Solver solver(parse_program(generate_colouring_instance(params)), SolverConfig{});
    std::vector<AnswerSet> out;
    CHECK(solver.run(out) == SolveStatus::Unsat);
    CHECK(out.empty());
}

TEST_CASE("answer sets are stable under every switch combination") {
    const std::string text = testutil::random_oracle_program_text(99);
    auto expected = brute_force_answer_sets(parse_program(text), 12);
    for (bool restarts : {false, true}) {
        for (bool deletion : {false, true}) {
            for (HeuristicKind heur : {HeuristicKind::Vsids, HeuristicKind::Naive}) {
                CAPTURE(restarts);
                CAPTURE(deletion);
                CAPTURE(heur == HeuristicKind::Vsids);
                SolverConfig config;
                config.restarts = restarts;
                config.deletion = deletion;
                config.heuristic = heur;
                CHECK(solve_all(text, config) == expected);
            }
        }
    }
}

TEST_CASE("a zero time budget times out") {
    ColouringParams params;
    params.vertices = 6;
    params.edge_probability = 1.0;
    params.colours = 3;
    params.seed = 2;
    SolverConfig config;
    config.time_limit_ms = 0;
    Solver solver(parse_program(generate_colouring_instance(params)), config);
    std::vector<AnswerSet> out;
    CHECK(solver.run(out) == SolveStatus::Timeout);
}

TEST_CASE("generator output is deterministic and validated") {
    ColouringParams params;
    params.vertices = 10;
    params.edge_probability = 0.4;
    params.colours = 3;
    params.seed = 11;
    CHECK(generate_colouring_instance(params) == generate_colouring_instance(params));
    params.seed = 12;
    CHECK(generate_colouring_instance(params) != generate_colouring_instance({10, 0.4, 3, 11}));

    CHECK(hard_band_edge_probability(41) == doctest::Approx(4.2 / 40.0));
    CHECK_THROWS_AS(hard_band_edge_probability(1), std::invalid_argument);
    CHECK_THROWS_AS(generate_colouring_instance({0, 0.5, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate_colouring_instance({5, 0.0, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate_colouring_instance({5, 1.5, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate_colouring_instance({5, 0.5, 1, 1}), std::invalid_argument);
}

TEST_CASE("command line: answer sets and exit codes") {
    TempFile f("a :- not b.\nb :- not a.\n");
    std::ostringstream out, err;
    int rc = run_cli({f.str(), "--n-answers", "all"}, out, err);
    CHECK(rc == 0);
    std::set<std::string> bodies;
    std::istringstream lines(out.str());
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        ++n;
        CAPTURE(line);
        std::string prefix = "Answer set " + std::to_string(n) + ": { ";
        REQUIRE(line.rfind(prefix, 0) == 0);
        REQUIRE(line.back() == '}');
        bodies.insert(line.substr(prefix.size(), line.size() - prefix.size() - 2));
    }
    CHECK(n == 2);
    CHECK(bodies == std::set<std::string>{"a", "b"});
    CHECK(err.str().empty());
}

TEST_CASE("command line: empty answer set renders as { }") {
    TempFile f("a :- b.\nb :- a.\n");
    std::ostringstream out, err;
    CHECK(run_cli({f.str()}, out, err) == 0);
    CHECK(out.str() == "Answer set 1: { }\n");
}

TEST_CASE("command line: unsatisfiable input") {
    TempFile f("a :- not a.\n");
    std::ostringstream out, err;
    CHECK(run_cli({f.str()}, out, err) == 0);
    CHECK(out.str() == "UNSATISFIABLE\n");
}

TEST_CASE("command line: stats go to stderr") {
    TempFile f("a :- not b.\nb :- not a.\n");
    std::ostringstream out, err;
    CHECK(run_cli({f.str(), "--stats"}, out, err) == 0);
    for (const char* key : {"conflicts=", "decisions=", "restarts=", "learned=", "deleted=",
                            "ground_rules=", "answer_sets=", "atoms=", "mbt_failures=",
                            "model_check_failures=", "wall_ms="}) {
        CAPTURE(key);
        CHECK(err.str().find(key) != std::string::npos);
    }
    CHECK(out.str().find("wall_ms") == std::string::npos);
}

TEST_CASE("command line: identical invocations print identical answers") {
    ColouringParams params;
    params.vertices = 8;
    params.edge_probability = 0.5;
    params.colours = 3;
    params.seed = 5;
    TempFile f(generate_colouring_instance(params));
    std::ostringstream out1, out2, err;
    CHECK(run_cli({f.str(), "--n-answers", "3", "--seed", "9"}, out1, err) == 0);
    CHECK(run_cli({f.str(), "--n-answers", "3", "--seed", "9"}, out2, err) == 0);
    CHECK(out1.str() == out2.str());
    CHECK_FALSE(out1.str().empty());
}

TEST_CASE("command line: every switch is accepted") {
    TempFile f("a :- not b.\nb :- not a.\n");
    std::ostringstream out, err;
    int rc = run_cli({f.str(), "--n-answers", "all", "--phase-init", "random", "--restarts",
                      "off", "--deletion", "off", "--heuristic", "naive", "--luby-unit", "16",
                      "--seed", "3", "--grounding-constraints", "permissive",
                      "--grounding-rules", "strict"},
                     out, err);
    CHECK(rc == 0);
    CHECK(out.str().find("Answer set 2:") != std::string::npos);
}

TEST_CASE("command line: errors") {
    std::ostringstream out, err;
    CHECK(run_cli({"/nonexistent/path.lp"}, out, err) == 1);
    CHECK(err.str().find("cannot open") != std::string::npos);

    std::ostringstream out2, err2;
    TempFile bad("p(X) :- q(Y).\n");
    CHECK(run_cli({bad.str()}, out2, err2) == 1);
    CHECK(err2.str().find("parse error at") != std::string::npos);

    std::ostringstream out3, err3;
    TempFile ok("a.\n");
    CHECK(run_cli({ok.str(), "--heuristic", "bogus"}, out3, err3) == 1);

    std::ostringstream out4, err4;
    CHECK(run_cli({"--help"}, out4, err4) == 0);
    CHECK(out4.str().find("--n-answers") != std::string::npos);
}
