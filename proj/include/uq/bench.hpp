#ifndef UQ_BENCH_HPP
#define UQ_BENCH_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "uq/orient.hpp"
#include "uq/rng.hpp"
#include "uq/sorting.hpp"

namespace uq {

enum class CorruptionModel { none, flip_fraction, adversarial };

struct GeneratorConfig {
    std::string family = "random-orient";  // random-orient | random-sort
    int n = 8;
    int edge_count = 4;        // ignored for sorting
    int max_edge_size = 4;     // ignored for sorting
    CorruptionModel corruption = CorruptionModel::none;
    Rational flip_fraction = Rational(0);
    std::uint64_t seed = 1;
};

// Reproducible random instance: same config, same bytes. With corruption set
// to none the true weights equal the predictions; flip-fraction moves the
// selected share of eligible weights across a foreign interval limit (at
// least one hop each); adversarial pushes every eligible weight across as
// many limits as possible.
Instance gen_random(const GeneratorConfig& config);

// Scripted adaptive adversary: commits a weight the moment a vertex is
// queried, consistent with its interval and all previous answers.
class AdversaryScript {
public:
    virtual ~AdversaryScript() = default;
    virtual Rational reveal(VertexId v) = 0;
    // Full realization after a run: committed weights, predictions elsewhere.
    virtual std::vector<Rational> committed_realization() const = 0;
};

struct Fixture {
    Instance instance;                          // static realization
    std::function<std::unique_ptr<AdversaryScript>()> adversary;  // may be null
};

// Named instances and lower-bound families:
//   fig3l, fig3r          four-interval single-hyperedge error-measure fixtures
//   fig4                  five-interval sorting fixture with a misleading cover
//   fig2                  two-interval sorting fixture + adaptive adversary
//   lb1(beta)             single hyperedge consistency/robustness family
//   lb2(n)                wrong-prediction family on 2n vertices
//   lb_fig5(a, b)         mandatory-distance tradeoff family, a >= 2b > 0
Fixture gen_paper_fixture(const std::string& name,
                          const std::map<std::string, int>& params = {});

// Orientation instance whose optimal query set equals a minimum vertex cover
// of the 2-subdivision of the given simple graph: subdivision vertices get
// overlapping intervals along each original edge, weights sit outside every
// neighbouring interval, predictions are exact.
Instance gen_subdivision_reduction(int vertex_count,
                                   const std::vector<std::pair<int, int>>& edges);

// The 2-subdivision itself, for cross-checking against the cover solver.
VertexCoverGraph two_subdivision(int vertex_count,
                                 const std::vector<std::pair<int, int>>& edges);

struct SuiteJob {
    std::string instance_id;
    std::string family;
    Instance instance;
    std::string algorithm;                  // offline|witness|alg1|alg2|alg1r|alg2r|alg3
    std::optional<Rational> gamma;
    std::uint64_t seed = 0;                 // randomized wrapper only
};

struct ResultRow {
    std::string instance_id;
    std::string family;
    int n = 0;
    std::string algorithm;
    std::string gamma;      // empty when not applicable
    std::string seed;       // empty when not applicable
    int cost = 0;
    int opt = 0;
    Rational ratio = Rational(1);
    int k_num = 0;
    int k_hop = 0;
    int k_mand = 0;
    Rational bound_rhs = Rational(0);
    bool bound_ok = true;
    std::string error;      // nonempty when the run failed
};

struct ResultTable {
    std::vector<ResultRow> rows;
};

struct SuiteOptions {
    VcBackend backend = VcBackend::exact;
    bool opt_by_enumeration = false;  // brute-force |OPT| instead of the offline algorithm
    bool assert_bounds = false;       // throw on a violated bound instead of recording it
    int threads = 1;
};

// Per-algorithm guarantee right-hand side in exact rationals:
//   offline: opt; witness: 2*opt; alg1: min{(1+1/g)(opt+k_h), g*opt};
//   alg2: min{(1+1/(g-1))(opt+k_M), g*opt}; alg3: min{opt+k, 2*opt}.
Rational guarantee_rhs(const std::string& algorithm, int gamma, int opt,
                       const ErrorReport& errors);

// Runs an adaptive algorithm (witness, alg1, alg2, alg3) against the
// fixture's adversary; the optimum and error measures are computed on the
// realization the adversary committed.
RunResult run_against_adversary(const Fixture& fixture, const std::string& algorithm,
                                std::optional<Rational> gamma,
                                const AlgOptions& options = {});

// Static instance carrying the committed realization of a finished
// adversary script (predictions and intervals from the skeleton).
Instance committed_instance(const Instance& skeleton, const AdversaryScript& script);

ResultRow run_job(const SuiteJob& job, const SuiteOptions& options);
ResultTable run_suite(const std::vector<SuiteJob>& jobs, const SuiteOptions& options);

std::string emit_csv(const ResultTable& table);
ResultTable parse_csv(const std::string& text);

// Plot-ready data: one line per (error level, algorithm, gamma) with the
// mean ratio and mean bound over the matching rows. Families encode the
// injected error level in their name suffix ("...@<level>").
std::string emit_plotdata(const ResultTable& table);

}  // namespace uq

#endif
