#ifndef UQ_MODEL_HPP
#define UQ_MODEL_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "uq/rational.hpp"

namespace uq {

using VertexId = int;

// Uncertainty interval: either an open range (lower, upper) or the trivial
// point interval [value] that remains after a query.
class Interval {
public:
    static Interval open(Rational lower, Rational upper);
    static Interval point(Rational value);

    bool trivial() const { return trivial_; }
    const Rational& lower() const { return lower_; }
    const Rational& upper() const { return upper_; }
    const Rational& value() const;  // trivial intervals only

    // Membership: open intervals exclude their endpoints.
    bool contains(const Rational& x) const;
    bool intersects(const Interval& other) const;
    // [w] is a subset of (L,U) iff L < w < U; open-in-open compares limits.
    bool subset_of(const Interval& outer) const;

    friend bool operator==(const Interval& a, const Interval& b) = default;

private:
    Interval(Rational lo, Rational hi, bool trivial)
        : lower_(std::move(lo)), upper_(std::move(hi)), trivial_(trivial) {}
    Rational lower_;
    Rational upper_;
    bool trivial_;
};

struct VertexRecord {
    VertexId id;
    Interval interval;
    Rational true_weight;
    Rational predicted_weight;
};

struct Hypergraph {
    int vertex_count = 0;
    std::vector<std::vector<VertexId>> edges;  // each sorted, distinct, size >= 2

    void validate() const;  // throws std::invalid_argument
};

enum class InstanceKind { orientation, sorting };

std::string to_string(InstanceKind kind);
InstanceKind instance_kind_from_string(const std::string& text);

// Immutable problem instance. True weights are private; adaptive algorithm
// code reaches them only through QuerySession::query. Offline analysis
// (error measures, the offline optimum, serialization) uses true_weight().
class Instance {
public:
    Instance() = default;  // empty placeholder; build() makes real instances

    // Validates all invariants; for sorting kind the hyperedges are derived
    // from pairwise interval intersections and a supplied edge list is
    // rejected.
    static Instance build(Hypergraph graph, std::vector<VertexRecord> records,
                          InstanceKind kind);

    InstanceKind kind() const { return kind_; }
    int vertex_count() const { return graph_.vertex_count; }
    const Hypergraph& hypergraph() const { return graph_; }
    const std::vector<std::vector<VertexId>>& hyperedges() const { return graph_.edges; }
    const Interval& interval(VertexId v) const { return intervals_.at(v); }
    const Rational& predicted_weight(VertexId v) const { return predicted_.at(v); }
    const Rational& true_weight(VertexId v) const { return true_.at(v); }

    std::vector<Rational> true_weights() const { return true_; }
    std::vector<Rational> predicted_weights() const { return predicted_; }

    friend bool operator==(const Instance& a, const Instance& b);

private:
    Hypergraph graph_;
    std::vector<Interval> intervals_;
    std::vector<Rational> true_;
    std::vector<Rational> predicted_;
    InstanceKind kind_ = InstanceKind::orientation;
};

// Computes the interval graph edges {u,v} with I_u and I_v intersecting.
std::vector<std::vector<VertexId>> derive_sorting_edges(const std::vector<Interval>& intervals);

// Orientation: the provably minimum-weight vertex of each hyperedge.
struct Orientation {
    std::vector<VertexId> minimum;  // minimum[i] for hyperedge i
};

// Mutable adaptive state of one algorithm run: which vertices are queried,
// the resulting intervals and the ordered query trace. A session optionally
// draws the revealed weight from an external source (an adaptive adversary);
// the default source is the instance's hidden realization.
class QuerySession {
public:
    using WeightSource = std::function<Rational(VertexId)>;

    explicit QuerySession(const Instance& instance);
    QuerySession(const Instance& instance, WeightSource source);

    InstanceKind kind() const { return inst_->kind(); }
    int vertex_count() const { return inst_->vertex_count(); }
    const std::vector<std::vector<VertexId>>& hyperedges() const { return inst_->hyperedges(); }
    const Interval& original_interval(VertexId v) const { return inst_->interval(v); }
    const Interval& current_interval(VertexId v) const { return current_.at(v); }
    const Rational& predicted_weight(VertexId v) const { return inst_->predicted_weight(v); }
    bool is_queried(VertexId v) const { return queried_.at(v); }
    const std::vector<VertexId>& trace() const { return trace_; }
    int query_count() const { return static_cast<int>(trace_.size()); }

    // Reveals the precise weight of v; errors on a repeated query so that
    // algorithm cost is never miscounted.
    Rational query(VertexId v);

private:
    const Instance* inst_;
    WeightSource source_;
    std::vector<Interval> current_;
    std::vector<bool> queried_;
    std::vector<VertexId> trace_;
};

// True iff every realization consistent with the current intervals has
// weight(v) <= weight(u). Endpoint comparisons use <=, sound because open
// intervals exclude their endpoints; equal revealed weights tie-break by id.
bool provably_precedes(const QuerySession& session, VertexId v, VertexId u);

// Returns the orientation iff every hyperedge has a member that provably
// precedes all others, otherwise nullopt.
std::optional<Orientation> is_solved(const QuerySession& session);

// Simulates querying exactly Q on a fresh session and reports solvedness.
bool feasible_oracle(const Instance& instance, const std::vector<VertexId>& query_set);

// Brute-force |OPT|: smallest cardinality of a feasible query set, found by
// subset enumeration in increasing size. Guarded to vertex_count <= 22.
int min_feasible_size(const Instance& instance);

}  // namespace uq

#endif
