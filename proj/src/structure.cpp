#include "uq/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace uq {

namespace {

Rational lower_limit(const QuerySession& session, VertexId v) {
    const Interval& iv = session.current_interval(v);
    return iv.trivial() ? iv.value() : iv.lower();
}

// Minimum-weight member under the assignment, ties by lowest id.
VertexId minimum_member(const std::vector<VertexId>& edge, const std::vector<Rational>& weights) {
    VertexId best = edge.front();
    for (VertexId v : edge)
        if (weights[v] < weights[best] || (weights[v] == weights[best] && v < best)) best = v;
    return best;
}

}  // namespace

bool hyperedge_solved(const QuerySession& session, const std::vector<VertexId>& hyperedge) {
    for (VertexId v : hyperedge) {
        bool precedes_all = true;
        for (VertexId u : hyperedge) {
            if (u == v) continue;
            if (!provably_precedes(session, v, u)) {
                precedes_all = false;
                break;
            }
        }
        if (precedes_all) return true;
    }
    return false;
}

VertexId leftmost(const QuerySession& session, const std::vector<VertexId>& hyperedge) {
    if (hyperedge.empty()) throw std::invalid_argument("leftmost of an empty hyperedge");
    VertexId best = hyperedge.front();
    Rational best_l = lower_limit(session, best);
    for (VertexId v : hyperedge) {
        Rational l = lower_limit(session, v);
        if (l < best_l || (l == best_l && v < best)) {
            best = v;
            best_l = l;
        }
    }
    return best;
}

bool is_witness_pair(const QuerySession& session, VertexId v, VertexId u) {
    if (v == u) throw std::invalid_argument("witness pair of a vertex with itself");
    if (!session.current_interval(v).intersects(session.current_interval(u))) return false;
    for (const auto& edge : session.hyperedges()) {
        bool has_v = std::find(edge.begin(), edge.end(), v) != edge.end();
        bool has_u = std::find(edge.begin(), edge.end(), u) != edge.end();
        if (!has_v || !has_u) continue;
        VertexId l = leftmost(session, edge);
        if (l == v || l == u) return true;
    }
    return false;
}

bool is_mandatory_given_weights(const QuerySession& session, VertexId v,
                                const std::vector<Rational>& weights) {
    if (static_cast<int>(weights.size()) != session.vertex_count())
        throw std::invalid_argument("weight assignment size mismatch");
    const Interval& iv = session.current_interval(v);
    if (iv.trivial()) return false;
    for (VertexId u = 0; u < session.vertex_count(); ++u)
        if (!session.current_interval(u).contains(weights[u]))
            throw std::invalid_argument("weight assignment inconsistent with current intervals");

    for (const auto& edge : session.hyperedges()) {
        if (std::find(edge.begin(), edge.end(), v) == edge.end()) continue;
        VertexId m = minimum_member(edge, weights);
        if (m == v) {
            for (VertexId u : edge)
                if (u != v && iv.contains(weights[u])) return true;
        } else {
            if (iv.contains(weights[m])) return true;
        }
    }
    return false;
}

bool is_mandatory_by_simulation(const QuerySession& session, VertexId v,
                                const std::vector<Rational>& weights) {
    if (session.current_interval(v).trivial()) return false;
    // Query everything except v under the hypothesized weights; v is
    // mandatory iff that leaves some hyperedge unsolved (feasibility is
    // monotone, so no feasible set can then avoid v).
    std::vector<Interval> final_intervals;
    final_intervals.reserve(session.vertex_count());
    for (VertexId u = 0; u < session.vertex_count(); ++u) {
        if (u == v)
            final_intervals.push_back(session.current_interval(u));
        else
            final_intervals.push_back(Interval::point(weights[u]));
    }
    auto precedes = [&](VertexId a, VertexId b) {
        const Interval& ia = final_intervals[a];
        const Interval& ib = final_intervals[b];
        if (ia.trivial() && ib.trivial()) {
            if (ia.value() != ib.value()) return ia.value() < ib.value();
            return a < b;
        }
        return ia.upper() <= ib.lower();
    };
    for (const auto& edge : session.hyperedges()) {
        bool solved = false;
        for (VertexId a : edge) {
            bool all = true;
            for (VertexId b : edge) {
                if (a == b) continue;
                if (!precedes(a, b)) {
                    all = false;
                    break;
                }
            }
            if (all) {
                solved = true;
                break;
            }
        }
        if (!solved) return true;
    }
    return false;
}

std::vector<Rational> predicted_completion(const QuerySession& session) {
    std::vector<Rational> weights;
    weights.reserve(session.vertex_count());
    for (VertexId v = 0; v < session.vertex_count(); ++v) {
        const Interval& iv = session.current_interval(v);
        weights.push_back(iv.trivial() ? iv.value() : session.predicted_weight(v));
    }
    return weights;
}

std::vector<VertexId> prediction_mandatory_set(const QuerySession& session) {
    std::vector<Rational> weights = predicted_completion(session);
    std::vector<VertexId> result;
    for (VertexId v = 0; v < session.vertex_count(); ++v) {
        if (session.current_interval(v).trivial()) continue;
        if (is_mandatory_given_weights(session, v, weights)) result.push_back(v);
    }
    return result;
}

std::optional<VertexId> next_known_mandatory(const QuerySession& session) {
    for (const auto& edge : session.hyperedges()) {
        if (hyperedge_solved(session, edge)) continue;
        VertexId v = leftmost(session, edge);
        const Interval& iv = session.current_interval(v);
        if (iv.trivial()) continue;
        for (VertexId u : edge) {
            if (u == v) continue;
            if (session.current_interval(u).subset_of(iv)) return v;
        }
    }
    return std::nullopt;
}

std::vector<VertexId> known_mandatory_closure(QuerySession& session) {
    std::vector<VertexId> queried;
    while (auto v = next_known_mandatory(session)) {
        session.query(*v);
        queried.push_back(*v);
    }
    return queried;
}

bool enforces(const QuerySession& session, VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("a vertex cannot enforce itself");
    if (session.current_interval(u).trivial() || session.current_interval(v).trivial())
        return false;
    if (!session.current_interval(v).contains(session.predicted_weight(u))) return false;
    for (const auto& edge : session.hyperedges()) {
        bool has_v = std::find(edge.begin(), edge.end(), v) != edge.end();
        bool has_u = std::find(edge.begin(), edge.end(), u) != edge.end();
        if (!has_v || !has_u) continue;
        VertexId l = leftmost(session, edge);
        if (l == v) return true;
        if (l == u) {
            std::vector<VertexId> rest;
            for (VertexId x : edge)
                if (x != u) rest.push_back(x);
            if (!rest.empty() && leftmost(session, rest) == v) return true;
        }
    }
    return false;
}

VertexCoverGraph vertex_cover_instance(const QuerySession& session) {
    std::set<VertexId> nodes;
    std::set<std::pair<VertexId, VertexId>> edges;
    for (const auto& edge : session.hyperedges()) {
        if (hyperedge_solved(session, edge)) continue;
        VertexId v = leftmost(session, edge);
        if (session.is_queried(v) || session.current_interval(v).trivial()) continue;
        for (VertexId u : edge) {
            if (u == v) continue;
            if (session.is_queried(u) || session.current_interval(u).trivial()) continue;
            if (!session.current_interval(v).intersects(session.current_interval(u))) continue;
            nodes.insert(v);
            nodes.insert(u);
            edges.insert({std::min(v, u), std::max(v, u)});
        }
    }
    VertexCoverGraph graph;
    graph.vertices.assign(nodes.begin(), nodes.end());
    graph.edges.assign(edges.begin(), edges.end());
    return graph;
}

}  // namespace uq
