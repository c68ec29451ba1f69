#pragma once

#include <cstdint>
#include <string>

namespace lazyasp {

struct ColouringParams {
    uint32_t vertices = 0;
    double edge_probability = 0.5;
    uint32_t colours = 3;
    uint64_t seed = 1;
};

// Edge probability putting seeded 3-colouring instances near the
// solvable/unsolvable boundary, where search effort peaks: average degree
// held just under the 3-colourability threshold.
double hard_band_edge_probability(uint32_t vertices);

// Renders a seeded random graph plus a fixed colouring encoding as program
// text.  Same parameters give byte-identical text.  Vertices must be >= 1,
// the edge probability in (0, 1], and colours >= 2.
std::string generate_colouring_instance(const ColouringParams& params);

}  // namespace lazyasp
