#include "uq/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace uq {

Interval Interval::open(Rational lower, Rational upper) {
    if (!(lower < upper))
        throw std::invalid_argument("degenerate open interval: lower >= upper");
    return Interval(std::move(lower), std::move(upper), false);
}

Interval Interval::point(Rational value) {
    Rational copy = value;
    return Interval(std::move(value), std::move(copy), true);
}

const Rational& Interval::value() const {
    if (!trivial_) throw std::logic_error("value() on a non-trivial interval");
    return lower_;
}

bool Interval::contains(const Rational& x) const {
    if (trivial_) return x == lower_;
    return lower_ < x && x < upper_;
}

bool Interval::intersects(const Interval& other) const {
    if (trivial_ && other.trivial_) return lower_ == other.lower_;
    if (trivial_) return other.contains(lower_);
    if (other.trivial_) return contains(other.lower_);
    return max(lower_, other.lower_) < min(upper_, other.upper_);
}

bool Interval::subset_of(const Interval& outer) const {
    if (trivial_) return outer.contains(lower_);
    if (outer.trivial_) return false;
    return outer.lower_ <= lower_ && upper_ <= outer.upper_;
}

void Hypergraph::validate() const {
    for (const auto& edge : edges) {
        if (edge.size() < 2)
            throw std::invalid_argument("hyperedge with fewer than two vertices");
        std::set<VertexId> distinct(edge.begin(), edge.end());
        if (distinct.size() != edge.size())
            throw std::invalid_argument("hyperedge with repeated vertex");
        for (VertexId v : edge)
            if (v < 0 || v >= vertex_count)
                throw std::invalid_argument("hyperedge vertex id out of range");
    }
}

std::string to_string(InstanceKind kind) {
    return kind == InstanceKind::sorting ? "sorting" : "hypergraph-orientation";
}

InstanceKind instance_kind_from_string(const std::string& text) {
    if (text == "sorting") return InstanceKind::sorting;
    if (text == "hypergraph-orientation" || text == "orientation")
        return InstanceKind::orientation;
    throw std::invalid_argument("unknown instance kind: " + text);
}

std::vector<std::vector<VertexId>> derive_sorting_edges(const std::vector<Interval>& intervals) {
    std::vector<std::vector<VertexId>> edges;
    const int n = static_cast<int>(intervals.size());
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (intervals[u].intersects(intervals[v])) edges.push_back({u, v});
    return edges;
}

Instance Instance::build(Hypergraph graph, std::vector<VertexRecord> records,
                         InstanceKind kind) {
    if (static_cast<int>(records.size()) != graph.vertex_count)
        throw std::invalid_argument("vertex record count does not match vertex_count");

    std::sort(records.begin(), records.end(),
              [](const VertexRecord& a, const VertexRecord& b) { return a.id < b.id; });
    for (int i = 0; i < static_cast<int>(records.size()); ++i)
        if (records[i].id != i)
            throw std::invalid_argument("vertex ids must be the dense range 0..n-1");

    Instance inst;
    inst.kind_ = kind;
    for (const VertexRecord& rec : records) {
        const Interval& iv = rec.interval;
        if (iv.trivial()) {
            if (rec.true_weight != iv.value() || rec.predicted_weight != iv.value())
                throw std::invalid_argument(
                    "trivial interval requires true and predicted weight equal to its value");
        } else {
            if (!iv.contains(rec.true_weight))
                throw std::invalid_argument("true weight outside its open interval");
            if (!iv.contains(rec.predicted_weight))
                throw std::invalid_argument("predicted weight outside its open interval");
        }
        inst.intervals_.push_back(iv);
        inst.true_.push_back(rec.true_weight);
        inst.predicted_.push_back(rec.predicted_weight);
    }

    if (kind == InstanceKind::sorting) {
        if (!graph.edges.empty())
            throw std::invalid_argument(
                "sorting instances derive their edges; supplied edge list rejected");
        graph.edges = derive_sorting_edges(inst.intervals_);
    } else {
        for (auto& edge : graph.edges) std::sort(edge.begin(), edge.end());
    }
    graph.validate();
    inst.graph_ = std::move(graph);
    return inst;
}

bool operator==(const Instance& a, const Instance& b) {
    return a.kind_ == b.kind_ && a.graph_.vertex_count == b.graph_.vertex_count &&
           a.graph_.edges == b.graph_.edges && a.intervals_ == b.intervals_ &&
           a.true_ == b.true_ && a.predicted_ == b.predicted_;
}

QuerySession::QuerySession(const Instance& instance)
    : QuerySession(instance, [&instance](VertexId v) { return instance.true_weight(v); }) {}

QuerySession::QuerySession(const Instance& instance, WeightSource source)
    : inst_(&instance), source_(std::move(source)) {
    current_.reserve(instance.vertex_count());
    for (VertexId v = 0; v < instance.vertex_count(); ++v)
        current_.push_back(instance.interval(v));
    queried_.assign(instance.vertex_count(), false);
}

Rational QuerySession::query(VertexId v) {
    if (v < 0 || v >= vertex_count()) throw std::invalid_argument("query: vertex id out of range");
    if (queried_[v]) throw std::logic_error("vertex queried twice");
    Rational w = source_(v);
    if (!inst_->interval(v).contains(w) && !(inst_->interval(v).trivial() && inst_->interval(v).value() == w))
        throw std::logic_error("revealed weight outside the uncertainty interval");
    current_[v] = Interval::point(w);
    queried_[v] = true;
    trace_.push_back(v);
    return w;
}

bool provably_precedes(const QuerySession& session, VertexId v, VertexId u) {
    const Interval& a = session.current_interval(v);
    const Interval& b = session.current_interval(u);
    if (a.trivial() && b.trivial()) {
        if (a.value() != b.value()) return a.value() < b.value();
        return v < u;  // deterministic tie-break on equal revealed weights
    }
    // sup of v's candidates vs inf of u's candidates; <= at the comparison is
    // sound because at least one side is an open interval excluding the endpoint.
    return a.upper() <= b.lower();
}

std::optional<Orientation> is_solved(const QuerySession& session) {
    Orientation result;
    for (const auto& edge : session.hyperedges()) {
        VertexId found = -1;
        for (VertexId v : edge) {
            bool precedes_all = true;
            for (VertexId u : edge) {
                if (u == v) continue;
                if (!provably_precedes(session, v, u)) {
                    precedes_all = false;
                    break;
                }
            }
            if (precedes_all) {
                found = v;
                break;
            }
        }
        if (found < 0) return std::nullopt;
        result.minimum.push_back(found);
    }
    return result;
}

bool feasible_oracle(const Instance& instance, const std::vector<VertexId>& query_set) {
    QuerySession session(instance);
    for (VertexId v : query_set) session.query(v);
    return is_solved(session).has_value();
}

int min_feasible_size(const Instance& instance) {
    const int n = instance.vertex_count();
    if (n > 22)
        throw std::invalid_argument("min_feasible_size: instance too large for subset enumeration");

    auto feasible_mask = [&](std::uint32_t mask) {
        QuerySession session(instance);
        for (VertexId v = 0; v < n; ++v)
            if (mask & (1u << v)) session.query(v);
        return is_solved(session).has_value();
    };

    for (int k = 0; k <= n; ++k) {
        if (k == 0) {
            if (feasible_mask(0)) return 0;
            continue;
        }
        // Gosper's hack over all n-bit masks of popcount k.
        std::uint64_t mask = (std::uint64_t(1) << k) - 1;
        const std::uint64_t limit = std::uint64_t(1) << n;
        while (mask < limit) {
            if (feasible_mask(static_cast<std::uint32_t>(mask))) return k;
            std::uint64_t c = mask & -mask;
            std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    throw std::logic_error("querying all vertices must be feasible");
}

}  // namespace uq
