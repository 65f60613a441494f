#ifndef UQ_LEARN_HPP
#define UQ_LEARN_HPP

#include <vector>

#include "uq/model.hpp"
#include "uq/rng.hpp"

namespace uq {

// Training data for the mandatory-set learner: the instance skeleton plus m
// sampled weight realizations, each strictly inside its interval.
struct WeightSampleSet {
    Hypergraph hypergraph;
    std::vector<Interval> intervals;
    InstanceKind kind = InstanceKind::orientation;
    std::vector<std::vector<Rational>> samples;

    void validate() const;  // throws on weights outside intervals
};

WeightSampleSet sample_set_from_instance(const Instance& instance);

// Mandatory vertices of the skeleton under one sampled realization.
std::vector<VertexId> sample_mandatory_set(const WeightSampleSet& samples, std::size_t index);

// Empirical risk minimizer over subsets: votes each vertex in or out by
// whether it is mandatory in at least half the samples (ties in).
std::vector<VertexId> erm_mandatory_set(const WeightSampleSet& samples);

// Mean symmetric-difference error of a candidate set over the samples.
Rational empirical_km(const std::vector<VertexId>& candidate, const WeightSampleSet& samples);

struct CandidateSet {
    std::vector<std::vector<Rational>> per_vertex;  // sorted candidate weights
};

// Finite prediction grid per vertex: every limit of another interval that
// falls strictly inside, plus the midpoint of each gap between consecutive
// limits (interval endpoints as sentinels). Snapping a prediction to its gap
// representative never changes the prediction-mandatory set.
CandidateSet discretize_candidates(const Instance& instance);

// Per-vertex sampling models for tests and the CLI.
enum class SampleModel { grid_uniform, point_mass_predicted, two_point_adversarial };

std::vector<std::vector<Rational>> draw_samples(const Instance& instance, int count,
                                                SampleModel model, Rng& rng);

}  // namespace uq

#endif
