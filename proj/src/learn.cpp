#include "uq/learn.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "uq/structure.hpp"

namespace uq {

void WeightSampleSet::validate() const {
    if (static_cast<int>(intervals.size()) != hypergraph.vertex_count)
        throw std::invalid_argument("sample set interval count mismatch");
    hypergraph.validate();
    if (samples.empty()) throw std::invalid_argument("empty sample set");
    for (const auto& assignment : samples) {
        if (assignment.size() != intervals.size())
            throw std::invalid_argument("sample with wrong arity");
        for (std::size_t v = 0; v < assignment.size(); ++v)
            if (!intervals[v].contains(assignment[v]))
                throw std::invalid_argument("sampled weight outside its interval");
    }
}

WeightSampleSet sample_set_from_instance(const Instance& instance) {
    WeightSampleSet set;
    set.hypergraph = instance.hypergraph();
    set.kind = instance.kind();
    for (VertexId v = 0; v < instance.vertex_count(); ++v)
        set.intervals.push_back(instance.interval(v));
    return set;
}

namespace {

// Skeleton + one realization as a throwaway instance (predictions reuse the
// sampled weights; the mandatory computation ignores them).
Instance realize(const WeightSampleSet& set, const std::vector<Rational>& weights) {
    std::vector<VertexRecord> records;
    for (VertexId v = 0; v < set.hypergraph.vertex_count; ++v)
        records.push_back({v, set.intervals[v], weights[v], weights[v]});
    Hypergraph graph = set.hypergraph;
    if (set.kind == InstanceKind::sorting) graph.edges.clear();
    return Instance::build(std::move(graph), std::move(records), set.kind);
}

}  // namespace

std::vector<VertexId> sample_mandatory_set(const WeightSampleSet& samples, std::size_t index) {
    if (index >= samples.samples.size())
        throw std::invalid_argument("sample index out of range");
    Instance inst = realize(samples, samples.samples[index]);
    QuerySession session(inst);
    std::vector<VertexId> result;
    for (VertexId v = 0; v < inst.vertex_count(); ++v) {
        if (inst.interval(v).trivial()) continue;
        if (is_mandatory_given_weights(session, v, samples.samples[index])) result.push_back(v);
    }
    return result;
}

std::vector<VertexId> erm_mandatory_set(const WeightSampleSet& samples) {
    samples.validate();
    const int m = static_cast<int>(samples.samples.size());
    std::vector<int> mandatory_votes(samples.hypergraph.vertex_count, 0);
    for (std::size_t j = 0; j < samples.samples.size(); ++j)
        for (VertexId v : sample_mandatory_set(samples, j)) ++mandatory_votes[v];
    std::vector<VertexId> result;
    for (VertexId v = 0; v < samples.hypergraph.vertex_count; ++v) {
        int p = mandatory_votes[v];
        int q = m - p;
        if (q <= p) result.push_back(v);
    }
    return result;
}

Rational empirical_km(const std::vector<VertexId>& candidate, const WeightSampleSet& samples) {
    samples.validate();
    std::vector<VertexId> sorted = candidate;
    std::sort(sorted.begin(), sorted.end());
    Rational total(0);
    for (std::size_t j = 0; j < samples.samples.size(); ++j) {
        std::vector<VertexId> mand = sample_mandatory_set(samples, j);
        std::vector<VertexId> sym;
        std::set_symmetric_difference(sorted.begin(), sorted.end(), mand.begin(), mand.end(),
                                      std::back_inserter(sym));
        total += Rational(static_cast<std::int64_t>(sym.size()));
    }
    return total / Rational(static_cast<std::int64_t>(samples.samples.size()));
}

CandidateSet discretize_candidates(const Instance& instance) {
    CandidateSet set;
    set.per_vertex.resize(instance.vertex_count());
    for (VertexId v = 0; v < instance.vertex_count(); ++v) {
        const Interval& iv = instance.interval(v);
        if (iv.trivial()) {
            set.per_vertex[v] = {iv.value()};
            continue;
        }
        std::set<Rational, std::less<>> limits;
        for (VertexId u = 0; u < instance.vertex_count(); ++u) {
            if (u == v) continue;
            const Interval& iu = instance.interval(u);
            if (iv.contains(iu.lower())) limits.insert(iu.lower());
            if (iv.contains(iu.upper())) limits.insert(iu.upper());
        }
        std::vector<Rational> grid(limits.begin(), limits.end());
        std::vector<Rational> fenceposts;
        fenceposts.push_back(iv.lower());
        fenceposts.insert(fenceposts.end(), grid.begin(), grid.end());
        fenceposts.push_back(iv.upper());
        std::vector<Rational> candidates = grid;
        for (std::size_t j = 0; j + 1 < fenceposts.size(); ++j)
            candidates.push_back((fenceposts[j] + fenceposts[j + 1]) / Rational(2));
        std::sort(candidates.begin(), candidates.end());
        set.per_vertex[v] = std::move(candidates);
    }
    return set;
}

std::vector<std::vector<Rational>> draw_samples(const Instance& instance, int count,
                                                SampleModel model, Rng& rng) {
    if (count < 1) throw std::invalid_argument("sample count must be positive");
    std::vector<std::vector<Rational>> samples;
    CandidateSet grid = discretize_candidates(instance);
    for (int j = 0; j < count; ++j) {
        std::vector<Rational> weights;
        for (VertexId v = 0; v < instance.vertex_count(); ++v) {
            const Interval& iv = instance.interval(v);
            if (iv.trivial()) {
                weights.push_back(iv.value());
                continue;
            }
            switch (model) {
                case SampleModel::point_mass_predicted:
                    weights.push_back(instance.predicted_weight(v));
                    break;
                case SampleModel::two_point_adversarial: {
                    const auto& cands = grid.per_vertex[v];
                    weights.push_back(rng.bernoulli(Rational(1, 2)) ? cands.front()
                                                                    : cands.back());
                    break;
                }
                case SampleModel::grid_uniform: {
                    const auto& cands = grid.per_vertex[v];
                    weights.push_back(cands[rng.below(cands.size())]);
                    break;
                }
            }
        }
        samples.push_back(std::move(weights));
    }
    return samples;
}

}  // namespace uq
