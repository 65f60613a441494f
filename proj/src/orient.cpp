#include "uq/orient.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "uq/rng.hpp"
#include "uq/structure.hpp"

namespace uq {

namespace {

CoverResult solve_cover(const VertexCoverGraph& graph, const AlgOptions& options) {
    if (options.backend == VcBackend::exact)
        return min_vertex_cover_exact(graph, options.vc_size_bound);
    return min_vertex_cover_approx(graph);
}

void append(std::vector<VertexId>& trace, const std::vector<VertexId>& tail) {
    trace.insert(trace.end(), tail.begin(), tail.end());
}

// First (u, v) in (id_u, id_v) order whose prediction enforces v.
std::optional<std::pair<VertexId, VertexId>> first_enforcing_pair(const QuerySession& session) {
    for (VertexId u = 0; u < session.vertex_count(); ++u) {
        if (session.current_interval(u).trivial()) continue;
        for (VertexId v = 0; v < session.vertex_count(); ++v) {
            if (u == v || session.current_interval(v).trivial()) continue;
            if (enforces(session, u, v)) return std::make_pair(u, v);
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<VertexId> offline_trace(const Instance& instance, const AlgOptions& options) {
    QuerySession session(instance);
    std::vector<VertexId> trace;
    const std::vector<Rational> weights = instance.true_weights();

    // Stage one: with full knowledge, exhaust the mandatory vertices.
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (VertexId v = 0; v < session.vertex_count(); ++v) {
            if (session.current_interval(v).trivial()) continue;
            if (is_mandatory_given_weights(session, v, weights)) {
                session.query(v);
                trace.push_back(v);
                progressed = true;
                break;
            }
        }
    }

    // Stage two: minimum vertex cover of the auxiliary graph.
    CoverResult cover = min_vertex_cover_exact(vertex_cover_instance(session),
                                               options.vc_size_bound);
    for (VertexId v : cover.cover) {
        session.query(v);
        trace.push_back(v);
    }

    // Stage three: close out anything the cover queries revealed.
    append(trace, known_mandatory_closure(session));
    if (!is_solved(session))
        throw std::logic_error("offline optimum terminated on an unsolved instance");
    return trace;
}

std::vector<VertexId> witness_session_run(QuerySession& session) {
    std::vector<VertexId> trace;
    append(trace, known_mandatory_closure(session));
    while (!is_solved(session)) {
        bool queried = false;
        for (const auto& edge : session.hyperedges()) {
            if (hyperedge_solved(session, edge)) continue;
            VertexId v = leftmost(session, edge);
            VertexId partner = -1;
            for (VertexId u : edge) {
                if (u == v || session.current_interval(u).trivial()) continue;
                if (session.current_interval(v).intersects(session.current_interval(u))) {
                    partner = u;
                    break;
                }
            }
            if (partner < 0)
                throw std::logic_error("unsolved hyperedge without a witness partner");
            session.query(v);
            trace.push_back(v);
            session.query(partner);
            trace.push_back(partner);
            append(trace, known_mandatory_closure(session));
            queried = true;
            break;
        }
        if (!queried)
            throw std::logic_error("no unsolved hyperedge found although unsolved");
    }
    return trace;
}

HopRunDetail hop_session_run(QuerySession& session, int gamma, const AlgOptions& options) {
    if (gamma < 2) throw std::invalid_argument("gamma must be an integer >= 2");
    HopRunDetail detail;
    detail.used_exact_cover = options.backend == VcBackend::exact;
    auto& trace = detail.trace;

    append(trace, known_mandatory_closure(session));

    while (true) {
        HopIterationStats stats;
        std::size_t queries_before = trace.size();

        std::vector<VertexId> pred_mandatory = prediction_mandatory_set(session);
        while (!pred_mandatory.empty() && stats.mandatory_queries < gamma - 2) {
            VertexId u = pred_mandatory.front();
            session.query(u);
            trace.push_back(u);
            ++stats.mandatory_queries;
            append(trace, known_mandatory_closure(session));
            pred_mandatory = prediction_mandatory_set(session);
        }

        // Enforcement step: prefer a triple (u, v, w) with predicted(u)
        // enforcing v and {u, w} a current witness pair; otherwise a lone
        // enforced vertex.
        bool triple_done = false;
        for (VertexId u = 0; u < session.vertex_count() && !triple_done; ++u) {
            if (session.current_interval(u).trivial()) continue;
            for (VertexId v = 0; v < session.vertex_count() && !triple_done; ++v) {
                if (u == v || session.current_interval(v).trivial()) continue;
                if (!enforces(session, u, v)) continue;
                for (VertexId w = 0; w < session.vertex_count(); ++w) {
                    if (w == u || w == v || session.current_interval(w).trivial()) continue;
                    if (!is_witness_pair(session, u, w)) continue;
                    Rational revealed = session.query(u);
                    trace.push_back(u);
                    session.query(w);
                    trace.push_back(w);
                    stats.witness_queries += 2;
                    if (!session.is_queried(v) && session.current_interval(v).contains(revealed)) {
                        session.query(v);
                        trace.push_back(v);
                        ++stats.witness_queries;
                    }
                    triple_done = true;
                    break;
                }
            }
        }
        if (!triple_done) {
            if (auto pair = first_enforcing_pair(session)) {
                session.query(pair->second);
                trace.push_back(pair->second);
                ++stats.witness_queries;
            }
        }

        append(trace, known_mandatory_closure(session));
        detail.iterations.push_back(stats);

        if (prediction_mandatory_set(session).empty()) break;
        if (trace.size() == queries_before)
            throw std::logic_error(
                "no progress in a round although prediction-mandatory vertices remain");
    }

    CoverResult cover = solve_cover(vertex_cover_instance(session), options);
    for (VertexId v : cover.cover) {
        session.query(v);
        trace.push_back(v);
    }
    append(trace, known_mandatory_closure(session));
    if (!is_solved(session))
        throw std::logic_error("hop-guided run terminated on an unsolved instance");
    return detail;
}

KmRunDetail km_session_run(QuerySession& session, int gamma,
                           const std::optional<std::vector<VertexId>>& learned_set,
                           const AlgOptions& options) {
    if (gamma < 2) throw std::invalid_argument("gamma must be an integer >= 2");
    KmRunDetail detail;
    detail.used_exact_cover = options.backend == VcBackend::exact;
    auto& trace = detail.trace;

    std::vector<VertexId> pool =
        learned_set ? *learned_set : prediction_mandatory_set(session);
    for (VertexId v : pool)
        if (v < 0 || v >= session.vertex_count())
            throw std::invalid_argument("learned mandatory set names an unknown vertex");
    std::sort(pool.begin(), pool.end());
    detail.initial_pred_mandatory = pool;

    auto remove_from_pool = [&pool](VertexId v) {
        pool.erase(std::remove(pool.begin(), pool.end(), v), pool.end());
    };

    while (!pool.empty()) {
        // Lowest p in the pool, then lowest unqueried partner b forming a
        // witness pair under the current intervals.
        VertexId chosen_p = -1, chosen_b = -1;
        for (VertexId p : pool) {
            if (session.is_queried(p) || session.current_interval(p).trivial()) continue;
            for (VertexId b = 0; b < session.vertex_count(); ++b) {
                if (b == p || session.is_queried(b) || session.current_interval(b).trivial())
                    continue;
                if (is_witness_pair(session, p, b)) {
                    chosen_p = p;
                    chosen_b = b;
                    break;
                }
            }
            if (chosen_p >= 0) break;
        }
        if (chosen_p < 0) break;

        if (static_cast<int>(pool.size()) >= gamma - 1) {
            std::vector<VertexId> batch = {chosen_p};
            for (VertexId v : pool) {
                if (static_cast<int>(batch.size()) == gamma - 1) break;
                if (v != chosen_p) batch.push_back(v);
            }
            if (std::find(batch.begin(), batch.end(), chosen_b) == batch.end())
                batch.push_back(chosen_b);
            std::sort(batch.begin(), batch.end());
            for (VertexId v : batch) {
                session.query(v);
                trace.push_back(v);
                remove_from_pool(v);
            }
            std::vector<VertexId> closed = known_mandatory_closure(session);
            for (VertexId v : closed) remove_from_pool(v);
            append(trace, closed);
        } else {
            std::vector<VertexId> batch = pool;
            for (VertexId v : batch) {
                if (!session.is_queried(v)) {
                    session.query(v);
                    trace.push_back(v);
                }
            }
            pool.clear();
        }
    }

    CoverResult cover = solve_cover(vertex_cover_instance(session), options);
    for (VertexId v : cover.cover) {
        session.query(v);
        trace.push_back(v);
    }
    detail.final_closure = known_mandatory_closure(session);
    append(trace, detail.final_closure);
    if (!is_solved(session))
        throw std::logic_error("mandatory-guided run terminated on an unsolved instance");
    return detail;
}

RunResult finalize_run(const Instance& instance, std::string algorithm,
                       std::vector<VertexId> trace, std::optional<Rational> gamma,
                       std::optional<int> gamma_drawn, std::optional<std::uint64_t> seed,
                       bool guarantee_exact, const AlgOptions& options,
                       std::optional<int> opt_override) {
    RunResult result;
    result.algorithm = std::move(algorithm);
    result.gamma = std::move(gamma);
    result.gamma_drawn = gamma_drawn;
    result.seed = seed;
    result.cost = static_cast<int>(trace.size());
    result.trace = std::move(trace);
    result.opt_size = opt_override ? *opt_override
                                   : static_cast<int>(offline_trace(instance, options).size());
    result.errors = error_report(instance);
    result.ratio = result.opt_size == 0
                       ? Rational(1)
                       : Rational(result.cost) / Rational(result.opt_size);
    result.guarantee_exact = guarantee_exact;
    return result;
}

RunResult offline_optimal(const Instance& instance, const AlgOptions& options) {
    std::vector<VertexId> trace = offline_trace(instance, options);
    int opt = static_cast<int>(trace.size());
    return finalize_run(instance, "offline", std::move(trace), std::nullopt, std::nullopt,
                        std::nullopt, true, options, opt);
}

RunResult witness_baseline(const Instance& instance, const AlgOptions& options) {
    QuerySession session(instance);
    std::vector<VertexId> trace = witness_session_run(session);
    return finalize_run(instance, "witness", std::move(trace), std::nullopt, std::nullopt,
                        std::nullopt, true, options);
}

RunResult alg_hop(const Instance& instance, int gamma, const AlgOptions& options) {
    QuerySession session(instance);
    HopRunDetail detail = hop_session_run(session, gamma, options);
    return finalize_run(instance, "alg1", std::move(detail.trace), Rational(gamma),
                        std::nullopt, std::nullopt, detail.used_exact_cover, options);
}

RunResult alg_km(const Instance& instance, int gamma,
                 const std::optional<std::vector<VertexId>>& learned_set,
                 const AlgOptions& options) {
    QuerySession session(instance);
    KmRunDetail detail = km_session_run(session, gamma, learned_set, options);
    return finalize_run(instance, "alg2", std::move(detail.trace), Rational(gamma),
                        std::nullopt, std::nullopt, detail.used_exact_cover, options);
}

RunResult alg_randomized(const Instance& instance, const Rational& gamma,
                         RandomizedFlavor flavor, std::uint64_t seed,
                         const AlgOptions& options) {
    if (gamma < Rational(2)) throw std::invalid_argument("gamma must be >= 2");
    std::int64_t floor_gamma = gamma.num() / gamma.den();  // gamma > 0
    Rational fractional = gamma - Rational(floor_gamma);
    int drawn = static_cast<int>(floor_gamma);
    Rng rng(seed);
    if (fractional.num() != 0 && rng.bernoulli(fractional)) ++drawn;

    QuerySession session(instance);
    bool exact = options.backend == VcBackend::exact;
    std::vector<VertexId> trace;
    std::string name;
    if (flavor == RandomizedFlavor::hop) {
        trace = hop_session_run(session, drawn, options).trace;
        name = "alg1r";
    } else {
        trace = km_session_run(session, drawn, std::nullopt, options).trace;
        name = "alg2r";
    }
    return finalize_run(instance, std::move(name), std::move(trace), gamma, drawn, seed,
                        exact, options);
}

}  // namespace uq
