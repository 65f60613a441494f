// Command-line harness: instance generation, single runs, benchmark sweeps,
// the hardness reduction and the mandatory-set learner.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "uq/bench.hpp"
#include "uq/io.hpp"
#include "uq/learn.hpp"
#include "uq/orient.hpp"
#include "uq/sorting.hpp"

using namespace uq;
using nlohmann::json;

namespace {

CorruptionModel corruption_from(const std::string& text) {
    if (text == "none") return CorruptionModel::none;
    if (text == "flip" || text == "flip-fraction") return CorruptionModel::flip_fraction;
    if (text == "adversarial") return CorruptionModel::adversarial;
    throw CLI::ValidationError("--corruption", "expected none|flip|adversarial");
}

VcBackend backend_from(const std::string& text) {
    if (text == "exact") return VcBackend::exact;
    if (text == "approx") return VcBackend::approx;
    throw CLI::ValidationError("--vc", "expected exact|approx");
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

Instance make_family_instance(const std::string& family, const GeneratorConfig& config,
                              const std::map<std::string, int>& params) {
    if (family == "random-orient" || family == "random-sort") return gen_random(config);
    return gen_paper_fixture(family, params).instance;
}

ResultTable run_bench_config(const json& config) {
    SuiteOptions options;
    options.backend = backend_from(config.value("vc", "exact"));
    options.opt_by_enumeration = config.value("opt", "offline") == std::string("brute");
    options.assert_bounds = config.value("assert_bounds", false);
    options.threads = config.value("threads", 1);

    std::vector<SuiteJob> jobs;
    for (const auto& spec : config.at("instances")) {
        std::string family = spec.at("family");
        int count = spec.value("count", 1);
        std::map<std::string, int> params;
        for (const char* key : {"beta", "n", "a", "b"})
            if (spec.contains(key)) params[key] = spec.at(key);

        for (int index = 0; index < count; ++index) {
            GeneratorConfig gen;
            gen.family = family;
            gen.n = spec.value("n", 8);
            gen.edge_count = spec.value("edges", 4);
            gen.max_edge_size = spec.value("max_edge_size", 4);
            gen.corruption = corruption_from(spec.value("corruption", "none"));
            gen.flip_fraction = Rational::parse(spec.value("flip_fraction", "0"));
            gen.seed = spec.value("seed", 1) + static_cast<std::uint64_t>(index);

            std::string label = family;
            if (spec.contains("corruption") && spec.at("corruption") != "none")
                label += "@" + spec.value("flip_fraction", "0");
            std::string id = label + "#" + std::to_string(index);
            Instance inst = make_family_instance(family, gen, params);

            for (const auto& alg : config.at("algorithms")) {
                SuiteJob job;
                job.instance_id = id;
                job.family = label;
                job.instance = inst;
                job.algorithm = alg.at("name");
                if (alg.contains("gamma"))
                    job.gamma = Rational::parse(alg.at("gamma").get<std::string>());
                if (alg.contains("seeds")) {
                    for (const auto& seed : alg.at("seeds")) {
                        job.seed = seed;
                        jobs.push_back(job);
                    }
                } else {
                    jobs.push_back(job);
                }
            }
        }
    }
    return run_suite(jobs, options);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adaptive query algorithms for hypergraph orientation and sorting "
                 "under explorable uncertainty"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen_cmd = app.add_subcommand("gen", "generate an instance file");
    std::string gen_family = "random-orient";
    GeneratorConfig gen_config;
    std::string gen_corruption = "none", gen_fraction = "0", gen_out;
    int gen_beta = 2, gen_a = 2, gen_b = 1;
    gen_cmd->add_option("--family", gen_family,
                        "random-orient|random-sort|fig3l|fig3r|fig4|fig2|lb1|lb2|lb_fig5");
    gen_cmd->add_option("--n", gen_config.n, "vertex count (random families, lb2)");
    gen_cmd->add_option("--edges", gen_config.edge_count, "hyperedge count");
    gen_cmd->add_option("--max-edge-size", gen_config.max_edge_size, "largest hyperedge");
    gen_cmd->add_option("--corruption", gen_corruption, "none|flip|adversarial");
    gen_cmd->add_option("--flip-fraction", gen_fraction, "share of corrupted predictions");
    gen_cmd->add_option("--seed", gen_config.seed, "generator seed");
    gen_cmd->add_option("--beta", gen_beta, "lb1 parameter");
    gen_cmd->add_option("--a", gen_a, "lb_fig5 parameter a");
    gen_cmd->add_option("--b", gen_b, "lb_fig5 parameter b");
    gen_cmd->add_option("--out", gen_out, "output file ('-' for stdout)");

    // ---- run ----
    auto* run_cmd = app.add_subcommand("run", "run one algorithm on an instance file");
    std::string run_instance, run_algorithm = "offline", run_gamma, run_vc = "exact";
    std::string run_pset, run_opt = "offline", run_out;
    std::uint64_t run_seed = 1;
    run_cmd->add_option("--instance", run_instance, "instance file")->required();
    run_cmd->add_option("--algorithm", run_algorithm,
                        "offline|witness|alg1|alg2|alg1r|alg2r|alg3");
    run_cmd->add_option("--gamma", run_gamma, "tradeoff parameter (rational)");
    run_cmd->add_option("--seed", run_seed, "seed for the randomized wrappers");
    run_cmd->add_option("--vc", run_vc, "exact|approx cover backend");
    run_cmd->add_option("--pset", run_pset, "learned mandatory-set file (alg2 only)");
    run_cmd->add_option("--opt", run_opt, "offline|brute optimum computation");
    run_cmd->add_option("--out", run_out, "output file ('-' for stdout)");

    // ---- bench ----
    auto* bench_cmd = app.add_subcommand("bench", "run a sweep described by a config file");
    std::string bench_config, bench_out, bench_format;
    bench_cmd->add_option("--config", bench_config, "JSON sweep description")->required();
    bench_cmd->add_option("--format", bench_format, "csv|plotdata (overrides the config)");
    bench_cmd->add_option("--out", bench_out, "output file ('-' for stdout)");

    // ---- reduce ----
    auto* reduce_cmd = app.add_subcommand(
        "reduce", "hardness reduction: edge-list graph to orientation instance");
    std::string reduce_edges, reduce_out;
    reduce_cmd->add_option("--edges", reduce_edges, "text file: 'n m' then one 'u v' per line")
        ->required();
    reduce_cmd->add_option("--out", reduce_out, "output file ('-' for stdout)");

    // ---- learn ----
    auto* learn_cmd = app.add_subcommand("learn", "learn a mandatory set from samples");
    std::string learn_samples, learn_out;
    learn_cmd->add_option("--samples", learn_samples, "sample-set file")->required();
    learn_cmd->add_option("--out", learn_out, "output file ('-' for stdout)");

    // ---- samples ----
    auto* samples_cmd =
        app.add_subcommand("samples", "draw a training sample set from an instance");
    std::string samples_instance, samples_model = "grid", samples_out;
    int samples_count = 10;
    std::uint64_t samples_seed = 1;
    samples_cmd->add_option("--instance", samples_instance, "instance file")->required();
    samples_cmd->add_option("--count", samples_count, "number of realizations");
    samples_cmd->add_option("--model", samples_model, "grid|point|twopoint");
    samples_cmd->add_option("--seed", samples_seed, "sampler seed");
    samples_cmd->add_option("--out", samples_out, "output file ('-' for stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen_cmd) {
            gen_config.family = gen_family;
            gen_config.corruption = corruption_from(gen_corruption);
            gen_config.flip_fraction = Rational::parse(gen_fraction);
            std::map<std::string, int> params = {
                {"beta", gen_beta}, {"a", gen_a}, {"b", gen_b}, {"n", gen_config.n}};
            Instance inst = make_family_instance(gen_family, gen_config, params);
            write_text(gen_out, serialize_instance(inst));
        } else if (*run_cmd) {
            SuiteJob job;
            job.instance_id = run_instance;
            job.family = "file";
            job.instance = read_instance_file(run_instance);
            job.algorithm = run_algorithm;
            if (!run_gamma.empty()) job.gamma = Rational::parse(run_gamma);
            job.seed = run_seed;
            SuiteOptions options;
            options.backend = backend_from(run_vc);
            options.opt_by_enumeration = run_opt == "brute";
            ResultTable table;
            if (!run_pset.empty()) {
                if (run_algorithm != "alg2")
                    throw std::runtime_error(
                        "a learned mandatory set can only drive alg2; the sorting "
                        "algorithm needs full predicted weights");
                std::ifstream in(run_pset);
                if (!in) throw std::runtime_error("cannot open " + run_pset);
                std::ostringstream buffer;
                buffer << in.rdbuf();
                std::vector<VertexId> learned = parse_vertex_set(buffer.str());
                if (!job.gamma || !job.gamma->is_integer())
                    throw std::runtime_error("alg2 needs an integral gamma");
                AlgOptions alg_options{options.backend, 40};
                RunResult result = alg_km(job.instance, static_cast<int>(job.gamma->num()),
                                          learned, alg_options);
                ResultRow row;
                row.instance_id = job.instance_id;
                row.family = job.family;
                row.n = job.instance.vertex_count();
                row.algorithm = "alg2";
                row.gamma = job.gamma->to_string();
                row.cost = result.cost;
                row.opt = result.opt_size;
                row.ratio = result.ratio;
                row.k_num = result.errors.k_number;
                row.k_hop = result.errors.k_hop;
                row.k_mand = result.errors.k_mandatory;
                row.bound_rhs = guarantee_rhs("alg2", static_cast<int>(job.gamma->num()),
                                              row.opt, result.errors);
                row.bound_ok = Rational(row.cost) <= row.bound_rhs;
                table.rows.push_back(row);
            } else {
                table.rows.push_back(run_job(job, options));
            }
            write_text(run_out, emit_csv(table));
        } else if (*bench_cmd) {
            std::ifstream in(bench_config);
            if (!in) throw std::runtime_error("cannot open " + bench_config);
            json config = json::parse(in);
            ResultTable table = run_bench_config(config);
            std::string format = bench_format.empty() ? config.value("format", "csv")
                                                      : bench_format;
            std::string out = bench_out.empty() ? config.value("out", "") : bench_out;
            write_text(out, format == "plotdata" ? emit_plotdata(table) : emit_csv(table));
        } else if (*reduce_cmd) {
            std::ifstream in(reduce_edges);
            if (!in) throw std::runtime_error("cannot open " + reduce_edges);
            int n = 0, m = 0;
            in >> n >> m;
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < m; ++i) {
                int u, v;
                in >> u >> v;
                edges.push_back({u, v});
            }
            write_text(reduce_out, serialize_instance(gen_subdivision_reduction(n, edges)));
        } else if (*learn_cmd) {
            WeightSampleSet samples = read_sample_set_file(learn_samples);
            write_text(learn_out, serialize_vertex_set(erm_mandatory_set(samples)));
        } else if (*samples_cmd) {
            Instance inst = read_instance_file(samples_instance);
            SampleModel model = samples_model == "point" ? SampleModel::point_mass_predicted
                                : samples_model == "twopoint"
                                    ? SampleModel::two_point_adversarial
                                    : SampleModel::grid_uniform;
            Rng rng(samples_seed);
            WeightSampleSet set = sample_set_from_instance(inst);
            set.samples = draw_samples(inst, samples_count, model, rng);
            write_text(samples_out, serialize_sample_set(set));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
