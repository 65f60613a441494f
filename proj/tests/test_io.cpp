#include <doctest.h>

#include <cstdio>

#include "test_util.hpp"
#include "uq/bench.hpp"
#include "uq/io.hpp"
#include "uq/rng.hpp"

using namespace uq;
using uqtest::fixture;

TEST_CASE("instance serialization round-trips bit-exactly") {
    for (const char* name : {"fig3l", "fig3r", "fig4", "fig2"}) {
        Instance inst = fixture(name);
        std::string text = serialize_instance(inst);
        Instance parsed = parse_instance(text);
        CHECK(parsed == inst);
        CHECK(serialize_instance(parsed) == text);
    }
}

TEST_CASE("round-trip over random instances including fractions") {
    Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        GeneratorConfig config;
        config.family = trial % 2 ? "random-sort" : "random-orient";
        config.n = rng.uniform_int(2, 9);
        config.edge_count = rng.uniform_int(1, 5);
        config.corruption = CorruptionModel::adversarial;
        config.seed = rng.next_u64();
        Instance inst = gen_random(config);
        CHECK(parse_instance(serialize_instance(inst)) == inst);
    }
}

TEST_CASE("trivial intervals serialize as single values") {
    Hypergraph graph;
    graph.vertex_count = 2;
    graph.edges = {{0, 1}};
    std::vector<VertexRecord> records = {
        {0, Interval::point(Rational(5)), Rational(5), Rational(5)},
        {1, Interval::open(Rational(4), Rational(6)), Rational(5), Rational(5)}};
    Instance inst = Instance::build(graph, records, InstanceKind::orientation);
    Instance parsed = parse_instance(serialize_instance(inst));
    CHECK(parsed == inst);
    CHECK(parsed.interval(0).trivial());
}

TEST_CASE("malformed instance files are rejected") {
    CHECK_THROWS(parse_instance("{}"));
    CHECK_THROWS(parse_instance("not json"));
    // sorting instances may not carry an explicit edge list
    Instance fig4 = fixture("fig4");
    std::string text = serialize_instance(fig4);
    CHECK(text.find("hyperedges") == std::string::npos);
    std::string tampered = text;
    tampered.insert(tampered.rfind('}'), ",\"hyperedges\": [[0,1]]");
    CHECK_THROWS(parse_instance(tampered));
}

TEST_CASE("sample sets round-trip with their realizations") {
    Instance inst = fixture("fig4");
    WeightSampleSet set = sample_set_from_instance(inst);
    Rng rng(9);
    set.samples = draw_samples(inst, 4, SampleModel::grid_uniform, rng);
    std::string text = serialize_sample_set(set);
    WeightSampleSet parsed = parse_sample_set(text);
    CHECK(parsed.samples == set.samples);
    CHECK(parsed.intervals == set.intervals);
    CHECK(parsed.hypergraph.edges == set.hypergraph.edges);
    CHECK(serialize_sample_set(parsed) == text);
}

TEST_CASE("vertex set files") {
    std::vector<VertexId> set = {0, 3, 7};
    CHECK(parse_vertex_set(serialize_vertex_set(set)) == set);
}

TEST_CASE("file round-trip through the filesystem") {
    Instance inst = fixture("fig3l");
    std::string path = "io_test_instance.json";
    write_instance_file(inst, path);
    Instance back = read_instance_file(path);
    CHECK(back == inst);
    std::remove(path.c_str());
    CHECK_THROWS(read_instance_file("does-not-exist.json"));
}
