#ifndef UQ_ERRORS_HPP
#define UQ_ERRORS_HPP

#include <vector>

#include "uq/model.hpp"

namespace uq {

struct ErrorReport {
    int k_number = 0;                      // vertices with a wrong prediction
    int k_hop = 0;                         // limit-crossing count, all ordered pairs
    std::vector<int> k_hop_per_vertex;     // jo(v)
    int k_mandatory = 0;                   // |I_P symmetric-difference I_R|
    std::vector<VertexId> pred_mandatory;  // I_P, sorted
    std::vector<VertexId> real_mandatory;  // I_R, sorted
};

int k_number(const Instance& instance);

// 1 iff the relation of v's weight to u's original interval differs between
// the true and predicted weight: one of the values passes over L_u or U_u.
int hop_indicator(const Instance& instance, VertexId v, VertexId u);

// jo(v) = sum over all u != v of hop_indicator(v, u); k_h sums jo over V.
int hop_distance_of_vertex(const Instance& instance, VertexId v);
int k_hop(const Instance& instance);

// Diagnostic variant restricted to hyperedge co-members of v. Strictly
// tighter in general; reported alongside k_hop but never substituted for it.
int hop_distance_edge_restricted(const Instance& instance, VertexId v);
int k_hop_edge_restricted(const Instance& instance);

// Mandatory vertices of the initial instance under the given weights.
std::vector<VertexId> mandatory_set_under(const Instance& instance,
                                          const std::vector<Rational>& weights);

// I_P (predicted weights), I_R (true weights) and |I_P symdiff I_R|.
int k_mandatory(const Instance& instance, std::vector<VertexId>* pred_mandatory = nullptr,
                std::vector<VertexId>* real_mandatory = nullptr);

ErrorReport error_report(const Instance& instance);

}  // namespace uq

#endif
