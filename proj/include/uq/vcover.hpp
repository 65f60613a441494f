#ifndef UQ_VCOVER_HPP
#define UQ_VCOVER_HPP

#include <vector>

#include "uq/structure.hpp"

namespace uq {

struct CoverResult {
    std::vector<VertexId> cover;  // sorted
    bool exact = true;
};

// Minimum vertex cover by deterministic branch and bound: isolated-vertex
// and degree-1 reductions, then include/exclude branching on a max-degree
// vertex (ties by lowest id). Guarded to `size_bound` vertices; past the
// bound it throws with a hint towards the approximate backend.
CoverResult min_vertex_cover_exact(const VertexCoverGraph& graph, int size_bound = 40);

// Both endpoints of a greedily built maximal matching; at most twice the
// optimum, never exact-flagged.
CoverResult min_vertex_cover_approx(const VertexCoverGraph& graph);

bool is_vertex_cover(const VertexCoverGraph& graph, const std::vector<VertexId>& cover);

}  // namespace uq

#endif
