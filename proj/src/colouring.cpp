#include "lazyasp/colouring.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace lazyasp {

double hard_band_edge_probability(uint32_t vertices) {
    if (vertices < 2) throw std::invalid_argument("hard band needs at least 2 vertices");
    // Average degree 4.2 sits on the 3-colourability transition for graphs of
    // a few dozen vertices: roughly half the samples are colourable, and both
    // the witnesses and the refutations stop being one-dive trivial.
    return 4.2 / (vertices - 1);
}

// Degrees above this all land in the top stratum; it bounds rule body size.
constexpr uint32_t kMaxDegreeStratum = 10;

std::string generate_colouring_instance(const ColouringParams& params) {
    if (params.vertices < 1) throw std::invalid_argument("vertices must be >= 1");
    if (!(params.edge_probability > 0.0) || params.edge_probability > 1.0) {
        throw std::invalid_argument("edge probability must lie in (0, 1]");
    }
    if (params.colours < 2) throw std::invalid_argument("colours must be >= 2");

    std::mt19937_64 rng(params.seed);
    // 53-bit uniform draw in [0, 1); spelled out so every platform samples
    // the same graph from the same seed.
    auto uniform = [&rng]() {
        return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
    };

    std::vector<std::pair<uint32_t, uint32_t>> edges;
    std::vector<uint32_t> degree(params.vertices + 1, 0);
    for (uint32_t i = 1; i <= params.vertices; ++i) {
        for (uint32_t j = i + 1; j <= params.vertices; ++j) {
            if (uniform() < params.edge_probability) {
                edges.emplace_back(i, j);
                ++degree[i];
                ++degree[j];
            }
        }
    }
    auto stratum = [&](uint32_t v) { return std::min(degree[v], kMaxDegreeStratum); };

    std::ostringstream out;
    out << "% random graph: " << params.vertices << " vertices, edge probability "
        << params.edge_probability << ", " << params.colours << " colours, seed "
        << params.seed << "\n";
    for (uint32_t v = 1; v <= params.vertices; ++v) out << "node(" << v << ").\n";
    for (auto [i, j] : edges) out << "edge(" << i << "," << j << ").\n";
    for (uint32_t c = 1; c <= params.colours; ++c) out << "colour(" << c << ").\n";
    for (uint32_t c = 1; c <= params.colours; ++c) {
        for (uint32_t d = c + 1; d <= params.colours; ++d) {
            out << "diffc(" << c << "," << d << ").\n";
        }
    }
    // Vertices are stratified by (capped) degree and the guess rule for
    // stratum k carries k always-true pad atoms.  The pads leave the stable
    // models untouched but make a vertex's constrainedness visible to
    // occurrence-counting heuristics through the rule body size, so informed
    // search colours tightly connected vertices first while position-ordered
    // search sweeps strata from the sparse end.
    uint32_t top = 0;
    for (uint32_t v = 1; v <= params.vertices; ++v) top = std::max(top, stratum(v));
    for (uint32_t v = 1; v <= params.vertices; ++v) {
        out << "degree(" << v << "," << stratum(v) << ").\n";
    }
    for (uint32_t k = 1; k <= top; ++k) out << "pad(" << k << ").\n";
    std::vector<bool> present(top + 1, false);
    for (uint32_t v = 1; v <= params.vertices; ++v) present[stratum(v)] = true;
    // The choice is a pairwise even loop: taking and refusing a colour are
    // both positive guesses, so either branch feeds the propagator (refusal
    // makes chosen(N,C) false outright instead of merely unsupported).
    for (uint32_t k = 0; k <= top; ++k) {
        if (!present[k]) continue;
        out << "chosen(N,C) :- degree(N," << k << "), colour(C)";
        for (uint32_t g = 1; g <= k; ++g) out << ", pad(" << g << ")";
        out << ", not not_chosen(N,C).\n";
    }
    out << "not_chosen(N,C) :- node(N), colour(C), not chosen(N,C).\n";
    // At-least-one-colour is spelled out over the colour constants instead of
    // routed through a helper atom: running out of colours then violates a
    // nogood the propagator watches, so it is caught in-branch as a conflict
    // rather than at the end of an exhausted branch.
    out << ":- node(N)";
    for (uint32_t c = 1; c <= params.colours; ++c) out << ", not chosen(N," << c << ")";
    out << ".\n";
    out << ":- chosen(N,C), chosen(N,D), diffc(C,D).\n";
    out << ":- edge(X,Y), chosen(X,C), chosen(Y,C).\n";
    return out.str();
}

}  // namespace lazyasp
