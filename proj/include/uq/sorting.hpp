#ifndef UQ_SORTING_HPP
#define UQ_SORTING_HPP

#include <map>
#include <optional>
#include <vector>

#include "uq/orient.hpp"

namespace uq {

// Rooted out-forest over the queried prediction-mandatory vertices: an arc
// (parent(v), v) records that the parent's predicted weight lies inside I_v.
struct ArborescenceForest {
    std::map<VertexId, VertexId> parent_choice;               // pi(v) for v in I_P \ M
    std::vector<std::pair<VertexId, VertexId>> arcs;          // accepted, in insertion order
    std::vector<VertexId> nodes;                              // sorted, all arc endpoints
};

ArborescenceForest build_arborescence_forest(const QuerySession& session,
                                             const std::vector<VertexId>& pred_mandatory,
                                             const std::vector<VertexId>& known_mandatory);

struct Clique {
    std::vector<VertexId> members;        // sorted
    bool in_mandatory = false;            // singleton whose member is known mandatory
    std::optional<VertexId> partner;      // singleton's distinct unqueried partner
};

struct CliquePartition {
    std::vector<Clique> cliques;
};

// Partitions I_P union M into cliques of pairwise-intersecting original
// intervals such that every remaining singleton is either known mandatory or
// annotated with a distinct unqueried partner that is the endpoint of a path
// component. Requires the session state right after the first phase: the set
// queried, closure exhausted.
CliquePartition clique_partition(const QuerySession& session,
                                 const std::vector<VertexId>& pred_mandatory,
                                 const std::vector<VertexId>& known_mandatory);

// Standalone recursive re-partition of one arborescence whose root is itself
// prediction mandatory (its parent arc was rejected as a cycle). Returns a
// partition of the tree's vertices into cliques of size at least two.
struct TreeView {
    VertexId root = -1;
    std::map<VertexId, std::vector<VertexId>> children;
};

std::vector<std::vector<VertexId>> repartition_tree(const QuerySession& session,
                                                    const TreeView& tree);

struct PathComponent {
    std::vector<VertexId> ordered;  // by non-increasing lower limit, ties by id
};

// Connected components of the current interval graph over unqueried
// vertices. Preconditions checked at runtime: no prediction-mandatory and no
// known-mandatory unqueried vertex; every component must be a path or a
// single vertex, otherwise this throws.
std::vector<PathComponent> path_components(const QuerySession& session);

struct SortLoopStep {
    std::vector<VertexId> component;  // ordered as processed
    std::vector<VertexId> queried;    // cover queried within the component
    std::vector<VertexId> closure;    // forced queries right after
};

struct SortRunDetail {
    std::vector<VertexId> trace;
    std::vector<VertexId> pred_mandatory;  // I_P of the initial instance
    std::vector<VertexId> closure_first;   // M1
    std::vector<VertexId> closure_second;  // M2
    ArborescenceForest forest;
    CliquePartition partition;
    std::vector<SortLoopStep> steps;
};

// 1-consistent 2-robust sorting: query the prediction-mandatory set with
// closures, build the clique partition, then resolve each remaining path
// component with the minimum vertex cover chosen by the partner rule.
SortRunDetail sorting_session_run(QuerySession& session);

RunResult alg_sorting(const Instance& instance, const AlgOptions& options = {});

}  // namespace uq

#endif
