#ifndef UQ_ORIENT_HPP
#define UQ_ORIENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uq/errors.hpp"
#include "uq/model.hpp"
#include "uq/vcover.hpp"

namespace uq {

enum class VcBackend { exact, approx };

struct AlgOptions {
    VcBackend backend = VcBackend::exact;
    int vc_size_bound = 40;
};

struct RunResult {
    std::string algorithm;
    std::optional<Rational> gamma;       // tradeoff parameter when applicable
    std::optional<int> gamma_drawn;      // realized draw of the randomized wrapper
    std::optional<std::uint64_t> seed;
    std::vector<VertexId> trace;
    int cost = 0;
    int opt_size = 0;
    ErrorReport errors;
    Rational ratio = Rational(1);        // cost/opt, 1 when opt == 0
    bool guarantee_exact = true;         // false once the approx cover backend ran
};

// --- session-level cores (used directly for adversary-driven runs) ---

// Offline two-stage optimum: exhaust mandatory vertices under full knowledge
// of the true weights, then query an exact minimum vertex cover of the
// auxiliary graph, then close. Needs the instance, not just a session.
std::vector<VertexId> offline_trace(const Instance& instance, const AlgOptions& options = {});

// Prediction-free 2-competitive baseline: close, then repeatedly query the
// witness pair (leftmost vertex, first intersecting co-member) of the first
// unsolved hyperedge.
std::vector<VertexId> witness_session_run(QuerySession& session);

struct HopIterationStats {
    int mandatory_queries = 0;  // queries to prediction-mandatory vertices
    int witness_queries = 0;    // queries in the enforcement branches
};

struct HopRunDetail {
    std::vector<VertexId> trace;
    std::vector<HopIterationStats> iterations;
    bool used_exact_cover = true;
};

// Hop-error-sensitive algorithm, integral gamma >= 2: per round, up to
// gamma-2 prediction-mandatory queries (closing and recomputing after each),
// then one enforcement step — either a witness pair {u,w} where predicted(u)
// enforces v (querying v only if the revealed weight of u lands in I_v) or a
// single enforced vertex — then closure; finally minimum vertex cover plus
// closure. All picks lowest-id/lowest-index.
HopRunDetail hop_session_run(QuerySession& session, int gamma, const AlgOptions& options = {});

struct KmRunDetail {
    std::vector<VertexId> trace;
    std::vector<VertexId> initial_pred_mandatory;
    std::vector<VertexId> final_closure;  // vertices of the closure after the cover stage
    bool used_exact_cover = true;
};

// Mandatory-distance-sensitive algorithm, integral gamma >= 2. Computes the
// prediction-mandatory set once (or consumes a learned set), then while some
// member still forms a witness pair with an unqueried partner, queries
// gamma-1 of the set plus the partner (or the whole remainder when smaller),
// closing in between; finally minimum vertex cover plus closure.
KmRunDetail km_session_run(QuerySession& session, int gamma,
                           const std::optional<std::vector<VertexId>>& learned_set = std::nullopt,
                           const AlgOptions& options = {});

// --- instance-level wrappers producing full reports ---

RunResult offline_optimal(const Instance& instance, const AlgOptions& options = {});
RunResult witness_baseline(const Instance& instance, const AlgOptions& options = {});
RunResult alg_hop(const Instance& instance, int gamma, const AlgOptions& options = {});
RunResult alg_km(const Instance& instance, int gamma,
                 const std::optional<std::vector<VertexId>>& learned_set = std::nullopt,
                 const AlgOptions& options = {});

enum class RandomizedFlavor { hop, km };

// Draws gamma' = ceil(gamma) with probability equal to the fractional part
// of gamma (floor otherwise) and runs the matching algorithm; integral gamma
// bypasses the randomness.
RunResult alg_randomized(const Instance& instance, const Rational& gamma,
                         RandomizedFlavor flavor, std::uint64_t seed,
                         const AlgOptions& options = {});

// Fills cost/opt/errors/ratio for a finished trace. opt_override skips the
// internal offline computation (used when the caller already knows |OPT|).
RunResult finalize_run(const Instance& instance, std::string algorithm,
                       std::vector<VertexId> trace, std::optional<Rational> gamma,
                       std::optional<int> gamma_drawn, std::optional<std::uint64_t> seed,
                       bool guarantee_exact, const AlgOptions& options = {},
                       std::optional<int> opt_override = std::nullopt);

}  // namespace uq

#endif
