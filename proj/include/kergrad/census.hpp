#pragma once

#include "kergrad/tgraph.hpp"

namespace kergrad {

// One fully resolved component: its vertex cylinders, pinned exactly on the
// coordinates the exploration consulted.
struct CensusInstance {
    std::vector<CylinderFunction> verts;
    Dyadic measure;  // vertex count / 2^(pinned bits per vertex)
    bool interior = false;
};

// Instances sharing a move graph, keyed by its canonical encoding.
struct CensusTypeRow {
    std::string key;
    bool interior = false;
    int vertex_count = 0;
    int64_t instances = 0;
    Dyadic measure;
    size_t representative = 0;  // index into CensusResult::instances
};

struct CensusResult {
    std::vector<CensusInstance> instances;
    std::vector<CensusTypeRow> types;
    Dyadic interior_measure;
    Dyadic boundary_measure;  // 1 - interior_measure, the unresolved mass
    int64_t seeds = 0;
    int64_t incomplete_seeds = 0;
};

// Resolve components of the move graph by brute force over a window: seed
// every configuration of the sites [0, width) on each track together with the
// whole finite block, then slide the frame along determined moves until the
// component closes up.  A seed is abandoned when a move consults a site
// outside the window, or when the frame drifts further than the window is
// wide; its mass stays in the boundary bucket.  A resolved component is
// flagged interior only when no consulted site is the last one of its track's
// window, so the same component is still found after shrinking the window by
// one site.  Boundary mass is exact: 1 minus the interior total.
CensusResult component_census(const TDecomposition& dec, int width);

}  // namespace kergrad
