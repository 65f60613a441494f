#ifndef UQ_STRUCTURE_HPP
#define UQ_STRUCTURE_HPP

#include <optional>
#include <vector>

#include "uq/model.hpp"

namespace uq {

// True iff some member provably precedes all others under the current
// intervals, i.e. the orientation of this hyperedge is known.
bool hyperedge_solved(const QuerySession& session, const std::vector<VertexId>& hyperedge);

// Member of the hyperedge with minimum lower limit under the current
// intervals (trivial intervals contribute their value); ties by lowest id.
VertexId leftmost(const QuerySession& session, const std::vector<VertexId>& hyperedge);

// Witness pair: some hyperedge contains both, their current intervals
// intersect, and one of the two is leftmost in that hyperedge. Every
// feasible query set must contain at least one member of such a pair.
bool is_witness_pair(const QuerySession& session, VertexId v, VertexId u);

// Two-case mandatory characterization of v under a full weight assignment
// consistent with the current intervals: either v carries the minimum weight
// of some hyperedge and another member's weight lies inside I_v, or it does
// not and the minimum weight of that hyperedge lies inside I_v. Minima
// tie-break by lowest id. Requires a non-trivial current interval for v.
bool is_mandatory_given_weights(const QuerySession& session, VertexId v,
                                const std::vector<Rational>& weights);

// Counterfactual oracle for the same predicate: v is mandatory iff querying
// every other vertex (weights taken from the assignment) leaves the instance
// unsolved. Used as an independent cross-check in tests.
bool is_mandatory_by_simulation(const QuerySession& session, VertexId v,
                                const std::vector<Rational>& weights);

// Unqueried vertices that are mandatory when every unqueried vertex takes
// its predicted weight (queried and trivial ones take their known values).
std::vector<VertexId> prediction_mandatory_set(const QuerySession& session);

// Weight assignment used by prediction_mandatory_set: known value where the
// current interval is trivial, predicted weight otherwise.
std::vector<Rational> predicted_completion(const QuerySession& session);

// First vertex currently known to be mandatory, if any: a leftmost vertex of
// a not-yet-solved hyperedge whose current interval contains the current
// interval of another member (a revealed weight or a nested open interval).
// Deterministic scan: lowest hyperedge index first.
std::optional<VertexId> next_known_mandatory(const QuerySession& session);

// Exhaustively queries known-mandatory vertices until none remains. Returns
// the queried ids in order.
std::vector<VertexId> known_mandatory_closure(QuerySession& session);

// True iff the predicted weight of u certifies v mandatory when it is
// correct: both current intervals non-trivial, predicted(u) inside I_v, and
// some hyperedge contains both with v leftmost, or u leftmost and v leftmost
// among the rest.
bool enforces(const QuerySession& session, VertexId u, VertexId v);

struct VertexCoverGraph {
    std::vector<VertexId> vertices;                    // sorted unqueried ids
    std::vector<std::pair<VertexId, VertexId>> edges;  // sorted pairs, u < v
};

// Auxiliary graph whose minimum vertex cover is the optimal second-stage
// query set: one edge per (leftmost, intersecting member) pair of each
// unsolved hyperedge, restricted to unqueried vertices.
VertexCoverGraph vertex_cover_instance(const QuerySession& session);

}  // namespace uq

#endif
