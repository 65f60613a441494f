#include "uq/vcover.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace uq {

namespace {

// Compact adjacency view with stable local indices (sorted by vertex id).
struct Adjacency {
    std::vector<VertexId> ids;                 // local -> global
    std::vector<std::vector<int>> neighbors;   // local index lists, sorted

    explicit Adjacency(const VertexCoverGraph& graph) {
        ids = graph.vertices;
        std::map<VertexId, int> local;
        for (int i = 0; i < static_cast<int>(ids.size()); ++i) local[ids[i]] = i;
        neighbors.assign(ids.size(), {});
        for (auto [u, v] : graph.edges) {
            auto iu = local.find(u);
            auto iv = local.find(v);
            if (iu == local.end() || iv == local.end())
                throw std::invalid_argument("cover graph edge endpoint missing from vertex list");
            neighbors[iu->second].push_back(iv->second);
            neighbors[iv->second].push_back(iu->second);
        }
        for (auto& list : neighbors) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
    }
};

struct Searcher {
    const Adjacency& adj;
    std::vector<char> removed;   // vertex deleted from the residual graph
    std::vector<char> in_cover;
    int cover_size = 0;
    std::vector<int> best;       // local indices
    int best_size;

    explicit Searcher(const Adjacency& a) : adj(a) {
        removed.assign(adj.ids.size(), 0);
        in_cover.assign(adj.ids.size(), 0);
        best_size = static_cast<int>(adj.ids.size()) + 1;
    }

    int degree(int v) const {
        int d = 0;
        for (int u : adj.neighbors[v])
            if (!removed[u]) ++d;
        return d;
    }

    void take(int v, std::vector<int>& log) {
        in_cover[v] = 1;
        removed[v] = 1;
        ++cover_size;
        log.push_back(v);
    }

    void drop(int v, std::vector<int>& log) {
        removed[v] = 1;
        log.push_back(~v);  // flag: removed without covering
    }

    void undo(std::vector<int>& log, std::size_t mark) {
        while (log.size() > mark) {
            int e = log.back();
            log.pop_back();
            if (e >= 0) {
                in_cover[e] = 0;
                removed[e] = 0;
                --cover_size;
            } else {
                removed[~e] = 0;
            }
        }
    }

    // Greedy maximal matching on the residual graph, a lower bound on the
    // residual optimum.
    int matching_bound() const {
        std::vector<char> used(adj.ids.size(), 0);
        int count = 0;
        for (int v = 0; v < static_cast<int>(adj.ids.size()); ++v) {
            if (removed[v] || used[v]) continue;
            for (int u : adj.neighbors[v]) {
                if (removed[u] || used[u]) continue;
                used[v] = used[u] = 1;
                ++count;
                break;
            }
        }
        return count;
    }

    void reduce(std::vector<int>& log) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < static_cast<int>(adj.ids.size()); ++v) {
                if (removed[v]) continue;
                int d = degree(v);
                if (d == 0) {
                    drop(v, log);
                    changed = true;
                } else if (d == 1) {
                    int partner = -1;
                    for (int u : adj.neighbors[v])
                        if (!removed[u]) partner = u;
                    take(partner, log);
                    drop(v, log);
                    changed = true;
                }
            }
        }
    }

    void search() {
        std::vector<int> log;
        reduce(log);

        if (cover_size + matching_bound() >= best_size) {
            undo(log, 0);
            return;
        }

        int pivot = -1, pivot_degree = -1;
        for (int v = 0; v < static_cast<int>(adj.ids.size()); ++v) {
            if (removed[v]) continue;
            int d = degree(v);
            if (d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }
        if (pivot < 0) {
            if (cover_size < best_size) {
                best_size = cover_size;
                best.clear();
                for (int v = 0; v < static_cast<int>(adj.ids.size()); ++v)
                    if (in_cover[v]) best.push_back(v);
            }
            undo(log, 0);
            return;
        }

        {
            std::vector<int> branch;
            take(pivot, branch);
            search();
            undo(branch, 0);
        }
        {
            // Excluding the pivot forces every residual neighbor into the cover.
            std::vector<int> branch;
            drop(pivot, branch);
            for (int u : adj.neighbors[pivot])
                if (!removed[u]) take(u, branch);
            search();
            undo(branch, 0);
        }
        undo(log, 0);
    }
};

}  // namespace

CoverResult min_vertex_cover_exact(const VertexCoverGraph& graph, int size_bound) {
    if (static_cast<int>(graph.vertices.size()) > size_bound)
        throw std::invalid_argument(
            "vertex cover instance exceeds the exact-solver bound; use the approximate backend");
    Adjacency adj(graph);
    Searcher searcher(adj);
    searcher.search();
    CoverResult result;
    result.exact = true;
    for (int v : searcher.best) result.cover.push_back(adj.ids[v]);
    std::sort(result.cover.begin(), result.cover.end());
    return result;
}

CoverResult min_vertex_cover_approx(const VertexCoverGraph& graph) {
    std::vector<char> used;
    std::map<VertexId, int> local;
    for (int i = 0; i < static_cast<int>(graph.vertices.size()); ++i)
        local[graph.vertices[i]] = i;
    used.assign(graph.vertices.size(), 0);
    CoverResult result;
    result.exact = false;
    for (auto [u, v] : graph.edges) {
        int lu = local.at(u), lv = local.at(v);
        if (used[lu] || used[lv]) continue;
        used[lu] = used[lv] = 1;
        result.cover.push_back(u);
        result.cover.push_back(v);
    }
    std::sort(result.cover.begin(), result.cover.end());
    return result;
}

bool is_vertex_cover(const VertexCoverGraph& graph, const std::vector<VertexId>& cover) {
    for (auto [u, v] : graph.edges) {
        bool hit = std::find(cover.begin(), cover.end(), u) != cover.end() ||
                   std::find(cover.begin(), cover.end(), v) != cover.end();
        if (!hit) return false;
    }
    return true;
}

}  // namespace uq
