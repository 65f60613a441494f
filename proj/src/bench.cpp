#include "uq/bench.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace uq {

namespace {

Rational grid_fraction(Rng& rng) {
    // 1/16 .. 15/16: keeps every generated number decimal-exact.
    return Rational(rng.uniform_int(1, 15), 16);
}

struct IntervalDraft {
    Rational lo;
    Rational hi;
    Rational predicted;
    Rational truth;
};

// Foreign limits strictly inside (lo, hi).
std::vector<Rational> limits_inside(const std::vector<IntervalDraft>& drafts, std::size_t v) {
    std::set<Rational, std::less<>> inside;
    for (std::size_t u = 0; u < drafts.size(); ++u) {
        if (u == v) continue;
        for (const Rational& limit : {drafts[u].lo, drafts[u].hi})
            if (drafts[v].lo < limit && limit < drafts[v].hi) inside.insert(limit);
    }
    return {inside.begin(), inside.end()};
}

// Moves the true weight of drafts[v] across at least one foreign limit;
// `maximal` pushes it across as many limits as possible.
bool corrupt_vertex(std::vector<IntervalDraft>& drafts, std::size_t v, bool maximal) {
    std::vector<Rational> limits = limits_inside(drafts, v);
    std::vector<Rational> above, below;
    for (const Rational& b : limits) {
        if (drafts[v].predicted < b) above.push_back(b);
        if (b < drafts[v].predicted) below.push_back(b);
    }
    if (above.empty() && below.empty()) return false;
    bool go_up = above.size() >= below.size();
    if (!maximal && !above.empty()) go_up = true;  // deterministic simple choice
    if (above.empty()) go_up = false;
    if (go_up)
        drafts[v].truth = (above.back() + drafts[v].hi) / Rational(2);
    else
        drafts[v].truth = (drafts[v].lo + below.front()) / Rational(2);
    return true;
}

}  // namespace

Instance gen_random(const GeneratorConfig& config) {
    if (config.n < 2) throw std::invalid_argument("generator needs at least two vertices");
    const bool sorting = config.family == "random-sort";
    if (!sorting && config.family != "random-orient")
        throw std::invalid_argument("unknown generator family: " + config.family);
    if (!sorting && config.edge_count < 1)
        throw std::invalid_argument("orientation generator needs at least one hyperedge");

    Rng rng(config.seed);
    std::vector<IntervalDraft> drafts;
    for (int v = 0; v < config.n; ++v) {
        IntervalDraft d;
        d.lo = Rational(rng.uniform_int(0, 3 * config.n));
        d.hi = d.lo + Rational(rng.uniform_int(2, 8));
        d.predicted = d.lo + (d.hi - d.lo) * grid_fraction(rng);
        d.truth = d.predicted;
        drafts.push_back(d);
    }

    if (config.corruption != CorruptionModel::none) {
        std::vector<std::size_t> eligible;
        for (std::size_t v = 0; v < drafts.size(); ++v)
            if (!limits_inside(drafts, v).empty()) eligible.push_back(v);
        if (config.corruption == CorruptionModel::adversarial) {
            for (std::size_t v : eligible) corrupt_vertex(drafts, v, true);
        } else {
            // Seeded Fisher-Yates, then corrupt the selected share.
            for (std::size_t i = eligible.size(); i > 1; --i)
                std::swap(eligible[i - 1], eligible[rng.below(i)]);
            Rational target = config.flip_fraction * Rational(config.n);
            std::int64_t count = (target.num() + target.den() - 1) / target.den();  // ceil
            count = std::min<std::int64_t>(count, static_cast<std::int64_t>(eligible.size()));
            std::sort(eligible.begin(), eligible.begin() + count);
            for (std::int64_t i = 0; i < count; ++i)
                corrupt_vertex(drafts, eligible[i], false);
        }
    }

    Hypergraph graph;
    graph.vertex_count = config.n;
    if (!sorting) {
        std::set<std::vector<VertexId>> edges;
        int attempts = 0;
        while (static_cast<int>(edges.size()) < config.edge_count &&
               attempts < 20 * config.edge_count) {
            ++attempts;
            int size = rng.uniform_int(2, std::min(config.max_edge_size, config.n));
            std::set<VertexId> edge;
            while (static_cast<int>(edge.size()) < size)
                edge.insert(rng.uniform_int(0, config.n - 1));
            edges.insert(std::vector<VertexId>(edge.begin(), edge.end()));
        }
        graph.edges.assign(edges.begin(), edges.end());
    }

    std::vector<VertexRecord> records;
    for (int v = 0; v < config.n; ++v)
        records.push_back({v, Interval::open(drafts[v].lo, drafts[v].hi), drafts[v].truth,
                           drafts[v].predicted});
    return Instance::build(std::move(graph), std::move(records),
                           sorting ? InstanceKind::sorting : InstanceKind::orientation);
}

namespace {

Instance make_instance(InstanceKind kind, std::vector<std::vector<VertexId>> edges,
                       const std::vector<std::array<Rational, 4>>& rows) {
    Hypergraph graph;
    graph.vertex_count = static_cast<int>(rows.size());
    if (kind != InstanceKind::sorting) graph.edges = std::move(edges);
    std::vector<VertexRecord> records;
    for (int v = 0; v < graph.vertex_count; ++v)
        records.push_back({v, Interval::open(rows[v][0], rows[v][1]), rows[v][3], rows[v][2]});
    return Instance::build(std::move(graph), std::move(records), kind);
}

// Adversary committing scripted answers; unqueried vertices fall back to
// their predictions in the final realization.
class ScriptedAdversary : public AdversaryScript {
public:
    ScriptedAdversary(std::vector<Rational> fallback,
                      std::function<Rational(VertexId, const std::vector<bool>&)> rule)
        : fallback_(std::move(fallback)), rule_(std::move(rule)) {
        committed_ = fallback_;
        seen_.assign(fallback_.size(), false);
    }

    Rational reveal(VertexId v) override {
        Rational w = rule_(v, seen_);
        seen_[v] = true;
        committed_[v] = w;
        return w;
    }

    std::vector<Rational> committed_realization() const override { return committed_; }

private:
    std::vector<Rational> fallback_;
    std::vector<Rational> committed_;
    std::vector<bool> seen_;
    std::function<Rational(VertexId, const std::vector<bool>&)> rule_;
};

}  // namespace

Fixture gen_paper_fixture(const std::string& name, const std::map<std::string, int>& params) {
    auto param = [&params](const std::string& key, std::optional<int> fallback =
                                                       std::nullopt) {
        auto it = params.find(key);
        if (it != params.end()) return it->second;
        if (fallback) return *fallback;
        throw std::invalid_argument("fixture parameter missing: " + key);
    };
    const Rational half(1, 2);

    if (name == "fig3l") {
        Fixture f{make_instance(InstanceKind::orientation, {{0, 1, 2, 3}},
                                {{Rational(0), Rational(4), Rational(1), Rational(11, 4)},
                                 {Rational(3, 2), Rational(6), Rational(9, 2), Rational(2)},
                                 {Rational(5, 2), Rational(6), Rational(9, 2), Rational(11, 2)},
                                 {Rational(31, 10), Rational(6), Rational(13, 4),
                                  Rational(15, 4)}}),
                  nullptr};
        return f;
    }
    if (name == "fig3r") {
        return {make_instance(InstanceKind::orientation, {{0, 1, 2, 3}},
                              {{Rational(0), Rational(4), Rational(1), Rational(1)},
                               {Rational(3, 2), Rational(6), Rational(13, 4), Rational(11, 2)},
                               {Rational(5, 2), Rational(6), Rational(13, 4), Rational(11, 2)},
                               {Rational(3), Rational(6), Rational(13, 4), Rational(11, 2)}}),
                nullptr};
    }
    if (name == "fig4") {
        return {make_instance(InstanceKind::sorting, {},
                              {{Rational(0), Rational(3), half, Rational(1)},
                               {Rational(2), Rational(5), Rational(5, 2), Rational(7, 2)},
                               {Rational(4), Rational(7), Rational(11, 2), Rational(9, 2)},
                               {Rational(6), Rational(9), Rational(15, 2), Rational(15, 2)},
                               {Rational(8), Rational(11), Rational(19, 2), Rational(17, 2)}}),
                nullptr};
    }
    if (name == "fig2") {
        Instance inst = make_instance(
            InstanceKind::sorting, {},
            {{Rational(0), Rational(2), Rational(3, 2), Rational(3, 2)},
             {Rational(1), Rational(3), Rational(3, 2), Rational(5, 2)}});
        std::vector<Rational> preds = inst.predicted_weights();
        auto adversary = [preds]() -> std::unique_ptr<AdversaryScript> {
            return std::make_unique<ScriptedAdversary>(
                preds, [](VertexId v, const std::vector<bool>& seen) {
                    bool first = !seen[0] && !seen[1];
                    if (first) return Rational(3, 2);  // match the prediction
                    return v == 0 ? Rational(1, 2) : Rational(5, 2);
                });
        };
        return {std::move(inst), adversary};
    }
    if (name == "lb1") {
        int beta = param("beta");
        if (beta < 2) throw std::invalid_argument("lb1 needs beta >= 2");
        std::vector<std::array<Rational, 4>> rows;
        rows.push_back({Rational(0), Rational(2), Rational(3, 2), Rational(3, 2)});
        for (int i = 1; i <= beta; ++i)
            rows.push_back({Rational(1), Rational(3), Rational(5, 2), Rational(5, 2)});
        std::vector<VertexId> edge(beta + 1);
        for (int i = 0; i <= beta; ++i) edge[i] = i;
        Instance inst = make_instance(InstanceKind::orientation, {edge}, rows);
        std::vector<Rational> preds = inst.predicted_weights();
        int n = beta + 1;
        auto adversary = [preds, n]() -> std::unique_ptr<AdversaryScript> {
            return std::make_unique<ScriptedAdversary>(
                preds, [n](VertexId v, const std::vector<bool>& seen) {
                    if (v == 0) return Rational(1, 2);  // outside every other interval
                    int queried_right = 0;
                    for (int i = 1; i < n; ++i)
                        if (seen[i]) ++queried_right;
                    // The last of the right group lands inside I_0.
                    if (queried_right == n - 2) return Rational(3, 2);
                    return Rational(5, 2);
                });
        };
        return {std::move(inst), adversary};
    }
    if (name == "lb2") {
        int n = param("n");
        if (n < 1) throw std::invalid_argument("lb2 needs n >= 1");
        std::vector<std::array<Rational, 4>> rows;
        for (int i = 0; i < n; ++i)
            rows.push_back({Rational(0), Rational(2), half,
                            i == n - 1 ? Rational(3, 2) : half});
        for (int i = 0; i < n; ++i)
            rows.push_back({Rational(1), Rational(3), Rational(5, 2), Rational(5, 2)});
        std::vector<std::vector<VertexId>> edges;
        for (int i = 0; i < n; ++i) {
            std::vector<VertexId> edge = {i};
            for (int j = n; j < 2 * n; ++j) edge.push_back(j);
            edges.push_back(edge);
        }
        Instance inst = make_instance(InstanceKind::orientation, edges, rows);
        std::vector<Rational> preds = inst.predicted_weights();
        auto adversary = [preds, n]() -> std::unique_ptr<AdversaryScript> {
            return std::make_unique<ScriptedAdversary>(
                preds, [n, preds](VertexId v, const std::vector<bool>& seen) {
                    bool left = v < n;
                    int own_unqueried = 0, other_unqueried = 0;
                    for (int i = 0; i < 2 * n; ++i) {
                        if (seen[i]) continue;
                        bool in_own = (i < n) == left;
                        (in_own ? own_unqueried : other_unqueried) += 1;
                    }
                    // The last member of the first finished group lands inside
                    // all intervals of the other group, forcing every one of
                    // them; the forced group then answers its predictions.
                    if (own_unqueried == 1 && other_unqueried > 0) return Rational(3, 2);
                    return preds[v];
                });
        };
        return {std::move(inst), adversary};
    }
    if (name == "lb_fig5") {
        int a = param("a");
        int b = param("b");
        if (!(a >= 2 * b && b > 0)) throw std::invalid_argument("lb_fig5 needs a >= 2b > 0");
        std::vector<std::array<Rational, 4>> rows;
        for (int i = 0; i < b; ++i)
            rows.push_back({Rational(0), Rational(2), Rational(3, 2), half});
        for (int i = b; i < a; ++i)
            rows.push_back({Rational(1), Rational(3), Rational(5, 2),
                            i == a - 1 ? Rational(3, 2) : Rational(5, 2)});
        std::vector<std::vector<VertexId>> edges;
        for (int i = 0; i < b; ++i) {
            std::vector<VertexId> edge = {i};
            for (int j = b; j < a; ++j) edge.push_back(j);
            edges.push_back(edge);
        }
        Instance inst = make_instance(InstanceKind::orientation, edges, rows);
        std::vector<Rational> preds = inst.predicted_weights();
        auto adversary = [preds, a, b]() -> std::unique_ptr<AdversaryScript> {
            return std::make_unique<ScriptedAdversary>(
                preds, [a, b, preds](VertexId v, const std::vector<bool>& seen) {
                    if (v < b - 1) return Rational(1, 2);
                    if (v == a - 1) {
                        // Queried before the last left vertex: land inside the
                        // left intervals; afterwards match the prediction.
                        return seen[b - 1] ? Rational(5, 2) : Rational(3, 2);
                    }
                    if (v == b - 1) return seen[a - 1] ? Rational(1, 2) : Rational(3, 2);
                    return preds[v];
                });
        };
        return {std::move(inst), adversary};
    }
    throw std::invalid_argument("unknown fixture family: " + name);
}

VertexCoverGraph two_subdivision(int vertex_count,
                                 const std::vector<std::pair<int, int>>& edges) {
    VertexCoverGraph graph;
    for (int v = 0; v < vertex_count; ++v) graph.vertices.push_back(v);
    int next = vertex_count;
    for (auto [u, v] : edges) {
        if (u == v || u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("bad edge in input graph");
        int a = next++;
        int b = next++;
        graph.vertices.push_back(a);
        graph.vertices.push_back(b);
        graph.edges.push_back({std::min(u, v) == u ? u : v, a});
        graph.edges.push_back({a, b});
        graph.edges.push_back({b, std::max(u, v)});
    }
    // Normalize edge endpoint order.
    for (auto& [x, y] : graph.edges)
        if (x > y) std::swap(x, y);
    std::sort(graph.edges.begin(), graph.edges.end());
    return graph;
}

Instance gen_subdivision_reduction(int vertex_count,
                                   const std::vector<std::pair<int, int>>& edges) {
    const Rational half(1, 2);
    std::vector<VertexRecord> records;
    for (int v = 0; v < vertex_count; ++v) {
        Rational base(6 * v);
        Rational w = base + Rational(3, 2);
        records.push_back({v, Interval::open(base, base + Rational(3)), w, w});
    }
    Hypergraph graph;
    int next = vertex_count;
    std::vector<std::vector<VertexId>> hyperedges;
    for (auto [u, v] : edges) {
        if (u == v || u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("bad edge in input graph");
        int left = std::min(u, v), right = std::max(u, v);
        Rational x(6 * left), y(6 * right);
        Rational mid = (x + y + Rational(3)) / Rational(2);
        int a = next++;
        int b = next++;
        Rational wa = (Rational(3) * x + y + Rational(8)) / Rational(4);
        Rational wb = (x + Rational(3) * y + Rational(4)) / Rational(4);
        records.push_back({a, Interval::open(x + Rational(2), mid + half), wa, wa});
        records.push_back({b, Interval::open(mid - half, y + Rational(1)), wb, wb});
        hyperedges.push_back({left, a});
        hyperedges.push_back({a, b});
        hyperedges.push_back({b, right});
    }
    graph.vertex_count = next;
    graph.edges = std::move(hyperedges);
    return Instance::build(std::move(graph), std::move(records), InstanceKind::orientation);
}

Rational guarantee_rhs(const std::string& algorithm, int gamma, int opt,
                       const ErrorReport& errors) {
    Rational opt_r(opt);
    if (algorithm == "offline") return opt_r;
    if (algorithm == "witness") return Rational(2) * opt_r;
    if (algorithm == "alg1" || algorithm == "alg1r") {
        Rational g(gamma);
        Rational sensitive = (Rational(1) + Rational(1) / g) * (opt_r + Rational(errors.k_hop));
        return min(sensitive, g * opt_r);
    }
    if (algorithm == "alg2" || algorithm == "alg2r") {
        Rational g(gamma);
        Rational sensitive = (Rational(1) + Rational(1) / (g - Rational(1))) *
                             (opt_r + Rational(errors.k_mandatory));
        return min(sensitive, g * opt_r);
    }
    if (algorithm == "alg3") {
        int k = std::min(errors.k_number, std::min(errors.k_mandatory, errors.k_hop));
        return min(opt_r + Rational(k), Rational(2) * opt_r);
    }
    throw std::invalid_argument("unknown algorithm: " + algorithm);
}

Instance committed_instance(const Instance& skeleton, const AdversaryScript& script) {
    std::vector<Rational> weights = script.committed_realization();
    std::vector<VertexRecord> records;
    for (VertexId v = 0; v < skeleton.vertex_count(); ++v)
        records.push_back({v, skeleton.interval(v), weights[v], skeleton.predicted_weight(v)});
    Hypergraph graph = skeleton.hypergraph();
    if (skeleton.kind() == InstanceKind::sorting) graph.edges.clear();
    return Instance::build(std::move(graph), std::move(records), skeleton.kind());
}

RunResult run_against_adversary(const Fixture& fixture, const std::string& algorithm,
                                std::optional<Rational> gamma, const AlgOptions& options) {
    if (!fixture.adversary)
        throw std::invalid_argument("fixture carries no adversary script");
    auto script = fixture.adversary();
    QuerySession session(fixture.instance,
                         [&script](VertexId v) { return script->reveal(v); });
    std::vector<VertexId> trace;
    if (algorithm == "witness") {
        trace = witness_session_run(session);
    } else if (algorithm == "alg1") {
        if (!gamma || !gamma->is_integer())
            throw std::invalid_argument("alg1 needs an integral gamma");
        trace = hop_session_run(session, static_cast<int>(gamma->num()), options).trace;
    } else if (algorithm == "alg2") {
        if (!gamma || !gamma->is_integer())
            throw std::invalid_argument("alg2 needs an integral gamma");
        trace = km_session_run(session, static_cast<int>(gamma->num()), std::nullopt,
                               options).trace;
    } else if (algorithm == "alg3") {
        trace = sorting_session_run(session).trace;
    } else {
        throw std::invalid_argument("adaptive adversary runs support witness, alg1, alg2, alg3");
    }
    Instance realized = committed_instance(fixture.instance, *script);
    return finalize_run(realized, algorithm, std::move(trace), gamma, std::nullopt,
                        std::nullopt, options.backend == VcBackend::exact, options);
}

ResultRow run_job(const SuiteJob& job, const SuiteOptions& options) {
    ResultRow row;
    row.instance_id = job.instance_id;
    row.family = job.family;
    row.n = job.instance.vertex_count();
    row.algorithm = job.algorithm;
    if (job.gamma) row.gamma = job.gamma->to_string();
    if (job.algorithm == "alg1r" || job.algorithm == "alg2r")
        row.seed = std::to_string(job.seed);
    try {
        AlgOptions alg_options{options.backend, 40};
        RunResult result;
        if (job.algorithm == "offline") {
            result = offline_optimal(job.instance, alg_options);
        } else if (job.algorithm == "witness") {
            result = witness_baseline(job.instance, alg_options);
        } else if (job.algorithm == "alg1") {
            if (!job.gamma || !job.gamma->is_integer())
                throw std::invalid_argument("alg1 needs an integral gamma");
            result = alg_hop(job.instance, static_cast<int>(job.gamma->num()), alg_options);
        } else if (job.algorithm == "alg2") {
            if (!job.gamma || !job.gamma->is_integer())
                throw std::invalid_argument("alg2 needs an integral gamma");
            result = alg_km(job.instance, static_cast<int>(job.gamma->num()), std::nullopt,
                            alg_options);
        } else if (job.algorithm == "alg1r" || job.algorithm == "alg2r") {
            if (!job.gamma) throw std::invalid_argument("randomized run needs gamma");
            result = alg_randomized(job.instance, *job.gamma,
                                    job.algorithm == "alg1r" ? RandomizedFlavor::hop
                                                             : RandomizedFlavor::km,
                                    job.seed, alg_options);
        } else if (job.algorithm == "alg3") {
            result = alg_sorting(job.instance, alg_options);
        } else {
            throw std::invalid_argument("unknown algorithm: " + job.algorithm);
        }

        if (options.opt_by_enumeration) {
            result.opt_size = min_feasible_size(job.instance);
            result.ratio = result.opt_size == 0 ? Rational(1)
                                                : Rational(result.cost) /
                                                      Rational(result.opt_size);
        }

        row.cost = result.cost;
        row.opt = result.opt_size;
        row.ratio = result.ratio;
        row.k_num = result.errors.k_number;
        row.k_hop = result.errors.k_hop;
        row.k_mand = result.errors.k_mandatory;
        int effective_gamma = result.gamma_drawn
                                  ? *result.gamma_drawn
                                  : (result.gamma && result.gamma->is_integer()
                                         ? static_cast<int>(result.gamma->num())
                                         : 0);
        row.bound_rhs = guarantee_rhs(job.algorithm, effective_gamma, row.opt, result.errors);
        row.bound_ok = Rational(row.cost) <= row.bound_rhs;
        if (options.assert_bounds && result.guarantee_exact && !row.bound_ok)
            throw std::logic_error("guarantee violated: cost " + std::to_string(row.cost) +
                                   " > bound " + row.bound_rhs.to_string());
    } catch (const std::exception& e) {
        std::string message = e.what();
        std::replace(message.begin(), message.end(), ',', ';');
        std::replace(message.begin(), message.end(), '\n', ' ');
        row.error = message;
        if (options.assert_bounds) throw;
    }
    return row;
}

ResultTable run_suite(const std::vector<SuiteJob>& jobs, const SuiteOptions& options) {
    ResultTable table;
    table.rows.resize(jobs.size());
    int threads = std::max(1, options.threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) table.rows[i] = run_job(jobs[i], options);
        return table;
    }
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&]() {
            while (true) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= jobs.size()) return;
                table.rows[i] = run_job(jobs[i], options);
            }
        });
    for (auto& worker : pool) worker.join();
    return table;
}

namespace {

// Fixed-point decimal with six places, round half up; deterministic.
std::string ratio_decimal(const Rational& r) {
    __int128 scaled = static_cast<__int128>(r.num()) * 1000000;
    __int128 den = r.den();
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    __int128 q = scaled / den;
    __int128 rem = scaled % den;
    if (2 * rem >= den) ++q;
    std::string digits;
    if (q == 0) digits = "0";
    while (q > 0) {
        digits.insert(digits.begin(), static_cast<char>('0' + int(q % 10)));
        q /= 10;
    }
    while (digits.size() <= 6) digits.insert(digits.begin(), '0');
    digits.insert(digits.size() - 6, ".");
    if (neg) digits.insert(digits.begin(), '-');
    return digits;
}

}  // namespace

std::string emit_csv(const ResultTable& table) {
    std::ostringstream out;
    out << "instance,family,n,algorithm,gamma,seed,cost,opt,ratio,k_num,k_hop,k_mand,"
           "bound_rhs,bound_ok,error\n";
    for (const ResultRow& row : table.rows) {
        out << row.instance_id << ',' << row.family << ',' << row.n << ',' << row.algorithm
            << ',' << row.gamma << ',' << row.seed << ',' << row.cost << ',' << row.opt << ','
            << ratio_decimal(row.ratio) << ',' << row.k_num << ',' << row.k_hop << ','
            << row.k_mand << ',' << row.bound_rhs.to_string() << ',' << (row.bound_ok ? 1 : 0)
            << ',' << row.error << '\n';
    }
    return out.str();
}

ResultTable parse_csv(const std::string& text) {
    ResultTable table;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        while (fields.size() < 15) fields.push_back("");
        ResultRow row;
        row.instance_id = fields[0];
        row.family = fields[1];
        row.n = std::stoi(fields[2]);
        row.algorithm = fields[3];
        row.gamma = fields[4];
        row.seed = fields[5];
        row.cost = std::stoi(fields[6]);
        row.opt = std::stoi(fields[7]);
        row.ratio = row.opt == 0 ? Rational(1) : Rational(row.cost) / Rational(row.opt);
        row.k_num = std::stoi(fields[9]);
        row.k_hop = std::stoi(fields[10]);
        row.k_mand = std::stoi(fields[11]);
        row.bound_rhs = Rational::parse(fields[12]);
        row.bound_ok = fields[13] == "1";
        row.error = fields[14];
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string emit_plotdata(const ResultTable& table) {
    struct Key {
        std::string level;
        std::string algorithm;
        std::string gamma;
        bool operator<(const Key& o) const {
            if (level != o.level) return level < o.level;
            if (algorithm != o.algorithm) return algorithm < o.algorithm;
            return gamma < o.gamma;
        }
    };
    struct Acc {
        int runs = 0;
        Rational ratio_sum = Rational(0);
        Rational bound_sum = Rational(0);
    };
    std::map<Key, Acc> groups;
    for (const ResultRow& row : table.rows) {
        if (!row.error.empty()) continue;
        std::string level = "0";
        auto at = row.family.find('@');
        if (at != std::string::npos) level = row.family.substr(at + 1);
        Acc& acc = groups[{level, row.algorithm, row.gamma}];
        ++acc.runs;
        acc.ratio_sum += row.ratio;
        acc.bound_sum += row.bound_rhs;
    }
    std::ostringstream out;
    out << "error_level,algorithm,gamma,runs,mean_ratio,mean_bound_rhs\n";
    for (const auto& [key, acc] : groups) {
        Rational runs(acc.runs);
        out << key.level << ',' << key.algorithm << ',' << key.gamma << ',' << acc.runs << ','
            << ratio_decimal(acc.ratio_sum / runs) << ','
            << ratio_decimal(acc.bound_sum / runs) << '\n';
    }
    return out.str();
}

}  // namespace uq
