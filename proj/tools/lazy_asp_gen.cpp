#include <iostream>

#include "CLI11.hpp"
#include "lazyasp/colouring.hpp"

// Emits a random graph-colouring instance for the solver, as program text on
// standard output.  Without --edge-probability the hard-band preset for the
// requested vertex count is used.
int main(int argc, char** argv) {
    CLI::App app{"lazy-asp-gen: seeded graph-colouring instance generator"};
    lazyasp::ColouringParams params;
    double edge_probability = -1.0;
    app.add_option("--vertices", params.vertices, "number of vertices")
        ->required()
        ->check(CLI::PositiveNumber);
    app.add_option("--colours", params.colours, "number of colours (default 3)");
    app.add_option("--seed", params.seed, "graph seed (default 1)");
    app.add_option("--edge-probability", edge_probability,
                   "edge probability in (0, 1]; default: hard-band preset");
    CLI11_PARSE(app, argc, argv);

    try {
        params.edge_probability = edge_probability >= 0.0
                                      ? edge_probability
                                      : lazyasp::hard_band_edge_probability(params.vertices);
        std::cout << lazyasp::generate_colouring_instance(params);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
