#include "uq/errors.hpp"

#include <algorithm>

#include "uq/structure.hpp"

namespace uq {

int k_number(const Instance& instance) {
    int count = 0;
    for (VertexId v = 0; v < instance.vertex_count(); ++v)
        if (instance.true_weight(v) != instance.predicted_weight(v)) ++count;
    return count;
}

int hop_indicator(const Instance& instance, VertexId v, VertexId u) {
    if (v == u) throw std::invalid_argument("hop indicator of a vertex against itself");
    const Rational& w = instance.true_weight(v);
    const Rational& p = instance.predicted_weight(v);
    const Interval& iu = instance.interval(u);
    const Rational& l = iu.lower();
    const Rational& r = iu.upper();
    if ((p <= l && l < w) || (w <= l && l < p)) return 1;
    if ((w < r && r <= p) || (p < r && r <= w)) return 1;
    return 0;
}

int hop_distance_of_vertex(const Instance& instance, VertexId v) {
    int total = 0;
    for (VertexId u = 0; u < instance.vertex_count(); ++u)
        if (u != v) total += hop_indicator(instance, v, u);
    return total;
}

int k_hop(const Instance& instance) {
    int total = 0;
    for (VertexId v = 0; v < instance.vertex_count(); ++v)
        total += hop_distance_of_vertex(instance, v);
    return total;
}

int hop_distance_edge_restricted(const Instance& instance, VertexId v) {
    std::vector<char> comember(instance.vertex_count(), 0);
    for (const auto& edge : instance.hyperedges()) {
        if (std::find(edge.begin(), edge.end(), v) == edge.end()) continue;
        for (VertexId u : edge) comember[u] = 1;
    }
    int total = 0;
    for (VertexId u = 0; u < instance.vertex_count(); ++u)
        if (u != v && comember[u]) total += hop_indicator(instance, v, u);
    return total;
}

int k_hop_edge_restricted(const Instance& instance) {
    int total = 0;
    for (VertexId v = 0; v < instance.vertex_count(); ++v)
        total += hop_distance_edge_restricted(instance, v);
    return total;
}

std::vector<VertexId> mandatory_set_under(const Instance& instance,
                                          const std::vector<Rational>& weights) {
    QuerySession session(instance);
    std::vector<VertexId> result;
    for (VertexId v = 0; v < instance.vertex_count(); ++v) {
        if (instance.interval(v).trivial()) continue;
        if (is_mandatory_given_weights(session, v, weights)) result.push_back(v);
    }
    return result;
}

int k_mandatory(const Instance& instance, std::vector<VertexId>* pred_mandatory,
                std::vector<VertexId>* real_mandatory) {
    std::vector<VertexId> ip = mandatory_set_under(instance, instance.predicted_weights());
    std::vector<VertexId> ir = mandatory_set_under(instance, instance.true_weights());
    std::vector<VertexId> sym;
    std::set_symmetric_difference(ip.begin(), ip.end(), ir.begin(), ir.end(),
                                  std::back_inserter(sym));
    if (pred_mandatory) *pred_mandatory = std::move(ip);
    if (real_mandatory) *real_mandatory = std::move(ir);
    return static_cast<int>(sym.size());
}

ErrorReport error_report(const Instance& instance) {
    ErrorReport report;
    report.k_number = k_number(instance);
    report.k_hop_per_vertex.reserve(instance.vertex_count());
    for (VertexId v = 0; v < instance.vertex_count(); ++v)
        report.k_hop_per_vertex.push_back(hop_distance_of_vertex(instance, v));
    report.k_hop = 0;
    for (int jo : report.k_hop_per_vertex) report.k_hop += jo;
    report.k_mandatory = k_mandatory(instance, &report.pred_mandatory, &report.real_mandatory);
    return report;
}

}  // namespace uq
