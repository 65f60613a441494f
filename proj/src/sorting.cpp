#include "uq/sorting.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "uq/structure.hpp"

namespace uq {

namespace {

struct UnionFind {
    std::map<VertexId, VertexId> parent;
    VertexId find(VertexId v) {
        auto it = parent.find(v);
        if (it == parent.end()) {
            parent[v] = v;
            return v;
        }
        if (it->second == v) return v;
        VertexId root = find(it->second);
        parent[v] = root;
        return root;
    }
    bool unite(VertexId a, VertexId b) {
        VertexId ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
        return true;
    }
};

std::vector<VertexId> sorted_union(const std::vector<VertexId>& a,
                                   const std::vector<VertexId>& b) {
    std::set<VertexId> s(a.begin(), a.end());
    s.insert(b.begin(), b.end());
    return {s.begin(), s.end()};
}

// Depths of every node of a parent-pointer forest (roots at depth 0).
std::map<VertexId, int> forest_depths(const std::map<VertexId, VertexId>& parent_of,
                                      const std::vector<VertexId>& nodes) {
    std::map<VertexId, int> depth;
    std::function<int(VertexId)> depth_of = [&](VertexId v) -> int {
        auto found = depth.find(v);
        if (found != depth.end()) return found->second;
        auto p = parent_of.find(v);
        int d = (p == parent_of.end()) ? 0 : depth_of(p->second) + 1;
        depth[v] = d;
        return d;
    };
    for (VertexId v : nodes) depth_of(v);
    return depth;
}

// Deepest-first grouping of `domain` along accepted parent arcs: all
// unassigned siblings of the deepest vertex form one group with their common
// parent (the parent joins when it is itself in the domain).
std::vector<std::vector<VertexId>> group_by_parents(
    const std::map<VertexId, VertexId>& accepted_parent,  // v -> parent, accepted arcs only
    const std::vector<VertexId>& domain) {
    std::vector<VertexId> all_nodes = domain;
    for (const auto& [v, p] : accepted_parent) {
        all_nodes.push_back(v);
        all_nodes.push_back(p);
    }
    std::sort(all_nodes.begin(), all_nodes.end());
    all_nodes.erase(std::unique(all_nodes.begin(), all_nodes.end()), all_nodes.end());
    std::map<VertexId, int> depth = forest_depths(accepted_parent, all_nodes);

    std::set<VertexId> pending(domain.begin(), domain.end());
    std::vector<std::vector<VertexId>> groups;
    while (!pending.empty()) {
        VertexId v = *pending.begin();
        for (VertexId u : pending)
            if (depth[u] > depth[v]) v = u;  // max depth, ties by lowest id
        auto arc = accepted_parent.find(v);
        if (arc == accepted_parent.end()) {
            groups.push_back({v});
            pending.erase(v);
            continue;
        }
        VertexId parent = arc->second;
        std::vector<VertexId> group;
        for (VertexId u : pending) {
            auto a = accepted_parent.find(u);
            if (a != accepted_parent.end() && a->second == parent) group.push_back(u);
        }
        if (pending.count(parent)) group.push_back(parent);
        std::sort(group.begin(), group.end());
        for (VertexId u : group) pending.erase(u);
        groups.push_back(std::move(group));
    }
    return groups;
}

std::vector<VertexId> tree_nodes(const TreeView& tree) {
    std::vector<VertexId> nodes;
    std::function<void(VertexId)> walk = [&](VertexId v) {
        nodes.push_back(v);
        auto it = tree.children.find(v);
        if (it == tree.children.end()) return;
        for (VertexId c : it->second) walk(c);
    };
    walk(tree.root);
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

TreeView subtree_view(const TreeView& tree, VertexId new_root) {
    TreeView sub;
    sub.root = new_root;
    std::function<void(VertexId)> walk = [&](VertexId v) {
        auto it = tree.children.find(v);
        if (it == tree.children.end()) return;
        sub.children[v] = it->second;
        for (VertexId c : it->second) walk(c);
    };
    walk(new_root);
    return sub;
}

std::map<VertexId, VertexId> parents_of(const TreeView& tree) {
    std::map<VertexId, VertexId> parent;
    for (const auto& [p, kids] : tree.children)
        for (VertexId c : kids) parent[c] = p;
    return parent;
}

void detach(TreeView& tree, VertexId v) {
    for (auto& [p, kids] : tree.children)
        kids.erase(std::remove(kids.begin(), kids.end(), v), kids.end());
}

// Runs the deepest-first grouping on one subtree; reports the clique that
// contains the subtree's root separately.
struct SubPartition {
    std::vector<std::vector<VertexId>> cliques;  // excluding the root clique
    std::vector<VertexId> root_clique;
};

SubPartition partition_subtree(const TreeView& sub) {
    std::map<VertexId, VertexId> parent = parents_of(sub);
    std::vector<VertexId> domain = tree_nodes(sub);
    SubPartition out;
    for (auto& group : group_by_parents(parent, domain)) {
        if (std::find(group.begin(), group.end(), sub.root) != group.end())
            out.root_clique = group;
        else
            out.cliques.push_back(group);
    }
    return out;
}

}  // namespace

ArborescenceForest build_arborescence_forest(const QuerySession& session,
                                             const std::vector<VertexId>& pred_mandatory,
                                             const std::vector<VertexId>& known_mandatory) {
    std::set<VertexId> mandatory(known_mandatory.begin(), known_mandatory.end());
    ArborescenceForest forest;
    std::vector<VertexId> members;
    for (VertexId v : pred_mandatory)
        if (!mandatory.count(v)) members.push_back(v);
    std::sort(members.begin(), members.end());

    for (VertexId v : members) {
        VertexId parent = -1;
        for (VertexId u = 0; u < session.vertex_count(); ++u) {
            if (u == v) continue;
            if (session.original_interval(v).contains(session.predicted_weight(u))) {
                parent = u;
                break;
            }
        }
        if (parent < 0)
            throw std::logic_error(
                "prediction-mandatory vertex without a predicted weight inside its interval");
        forest.parent_choice[v] = parent;
    }

    UnionFind uf;
    std::set<VertexId> node_set;
    for (VertexId v : members) {
        VertexId p = forest.parent_choice[v];
        if (uf.find(p) == uf.find(v)) continue;  // would close a cycle
        uf.unite(p, v);
        forest.arcs.emplace_back(p, v);
        node_set.insert(p);
        node_set.insert(v);
    }
    forest.nodes.assign(node_set.begin(), node_set.end());
    return forest;
}

std::vector<std::vector<VertexId>> repartition_tree(const QuerySession& session,
                                                    const TreeView& tree) {
    TreeView work = tree;
    const VertexId root = tree.root;
    const Rational root_pred = session.predicted_weight(root);
    auto interval_of = [&](VertexId v) -> const Interval& {
        return session.original_interval(v);
    };

    std::vector<VertexId> nodes = tree_nodes(work);
    if (nodes.size() < 2)
        throw std::invalid_argument("re-partition needs a tree of at least two vertices");

    // Pull every subtree whose root's interval contains the root's predicted
    // weight directly below the root.
    {
        std::map<VertexId, VertexId> parent = parents_of(work);
        std::vector<VertexId> to_move;
        for (VertexId v : nodes) {
            if (v == root) continue;
            if (parent[v] == root) continue;
            if (interval_of(v).contains(root_pred)) to_move.push_back(v);
        }
        for (VertexId v : to_move) {
            detach(work, v);
            work.children[root].push_back(v);
        }
        for (auto& [p, kids] : work.children) std::sort(kids.begin(), kids.end());
    }

    std::vector<VertexId> root_children = work.children.count(root) ? work.children[root]
                                                                    : std::vector<VertexId>{};
    if (root_children.empty())
        throw std::logic_error("cyclic-parent tree left the root childless");

    std::vector<SubPartition> parts;
    for (VertexId c : root_children) parts.push_back(partition_subtree(subtree_view(work, c)));

    std::vector<std::vector<VertexId>> result;
    auto flush_others = [&](std::size_t skip_a, std::size_t skip_b) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (auto& c : parts[i].cliques) result.push_back(c);
            if (i != skip_a && i != skip_b) result.push_back(parts[i].root_clique);
        }
    };

    // Size-1 root cliques join the root directly.
    std::vector<std::size_t> singleton_roots;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].root_clique.size() == 1) singleton_roots.push_back(i);
    if (!singleton_roots.empty()) {
        std::vector<VertexId> merged = {root};
        for (std::size_t i : singleton_roots) merged.push_back(parts[i].root_clique.front());
        std::sort(merged.begin(), merged.end());
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (auto& c : parts[i].cliques) result.push_back(c);
            if (std::find(singleton_roots.begin(), singleton_roots.end(), i) ==
                singleton_roots.end())
                result.push_back(parts[i].root_clique);
        }
        result.push_back(merged);
        return result;
    }

    // Some root clique of size >= 3: peel its subtree root off for the root.
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].root_clique.size() < 3) continue;
        VertexId s = root_children[i];
        std::vector<VertexId> rest;
        for (VertexId v : parts[i].root_clique)
            if (v != s) rest.push_back(v);
        flush_others(i, i);
        result.push_back(rest);
        result.push_back({std::min(root, s), std::max(root, s)});
        return result;
    }

    // All root cliques have size exactly two. A child whose predicted weight
    // falls back inside the root's interval absorbs the root.
    for (std::size_t i = 0; i < parts.size(); ++i) {
        VertexId c = root_children[i];
        if (!interval_of(root).contains(session.predicted_weight(c))) continue;
        std::vector<VertexId> grown = parts[i].root_clique;
        grown.push_back(root);
        std::sort(grown.begin(), grown.end());
        flush_others(i, i);
        result.push_back(grown);
        return result;
    }

    // Split the subtree holding the witness of the root's own containment.
    VertexId witness = -1;
    for (VertexId v : tree_nodes(work)) {
        if (v == root) continue;
        if (interval_of(root).contains(session.predicted_weight(v))) {
            witness = v;
            break;
        }
    }
    if (witness < 0)
        throw std::logic_error("re-partition root is not prediction mandatory within its tree");

    std::size_t host = parts.size();
    {
        std::map<VertexId, VertexId> parent = parents_of(work);
        VertexId walk = witness;
        while (parent.count(walk) && parent[walk] != root) walk = parent[walk];
        for (std::size_t i = 0; i < root_children.size(); ++i)
            if (root_children[i] == walk) host = i;
    }
    if (host == parts.size()) throw std::logic_error("witness subtree not found");

    TreeView t_m = subtree_view(work, witness);
    TreeView t_rest = subtree_view(work, root_children[host]);
    {
        // Remove the witness subtree from its host.
        std::vector<VertexId> m_nodes = tree_nodes(t_m);
        std::set<VertexId> drop(m_nodes.begin(), m_nodes.end());
        TreeView pruned;
        pruned.root = t_rest.root;
        for (auto& [p, kids] : t_rest.children) {
            if (drop.count(p)) continue;
            std::vector<VertexId> keep;
            for (VertexId k : kids)
                if (!drop.count(k)) keep.push_back(k);
            pruned.children[p] = keep;
        }
        t_rest = pruned;
    }

    SubPartition part_m = partition_subtree(t_m);
    SubPartition part_rest = partition_subtree(t_rest);

    flush_others(host, host);
    for (auto& c : part_m.cliques) result.push_back(c);
    for (auto& c : part_rest.cliques) result.push_back(c);

    bool m_single = part_m.root_clique.size() == 1;
    bool rest_single = part_rest.root_clique.size() == 1;
    if (m_single || rest_single) {
        std::vector<VertexId> merged = {root};
        if (m_single)
            merged.push_back(part_m.root_clique.front());
        else
            result.push_back(part_m.root_clique);
        if (rest_single)
            merged.push_back(part_rest.root_clique.front());
        else
            result.push_back(part_rest.root_clique);
        std::sort(merged.begin(), merged.end());
        result.push_back(merged);
    } else {
        std::vector<VertexId> grown = part_m.root_clique;
        grown.push_back(root);
        std::sort(grown.begin(), grown.end());
        result.push_back(grown);
        result.push_back(part_rest.root_clique);
    }
    return result;
}

std::vector<PathComponent> path_components(const QuerySession& session) {
    if (!prediction_mandatory_set(session).empty())
        throw std::invalid_argument("path components requested while prediction-mandatory "
                                    "vertices remain");
    if (next_known_mandatory(session).has_value())
        throw std::invalid_argument("path components requested while known-mandatory vertices "
                                    "remain");

    std::vector<VertexId> alive;
    for (VertexId v = 0; v < session.vertex_count(); ++v)
        if (!session.is_queried(v) && !session.current_interval(v).trivial())
            alive.push_back(v);

    UnionFind uf;
    for (std::size_t i = 0; i < alive.size(); ++i)
        for (std::size_t j = i + 1; j < alive.size(); ++j)
            if (session.current_interval(alive[i]).intersects(session.current_interval(alive[j])))
                uf.unite(alive[i], alive[j]);

    std::map<VertexId, std::vector<VertexId>> buckets;
    for (VertexId v : alive) buckets[uf.find(v)].push_back(v);

    std::vector<PathComponent> components;
    for (auto& [key, members] : buckets) {
        PathComponent comp;
        comp.ordered = members;
        std::sort(comp.ordered.begin(), comp.ordered.end(), [&](VertexId a, VertexId b) {
            const Rational& la = session.current_interval(a).lower();
            const Rational& lb = session.current_interval(b).lower();
            if (la != lb) return lb < la;  // non-increasing lower limits
            return a < b;
        });
        for (std::size_t i = 0; i < comp.ordered.size(); ++i) {
            for (std::size_t j = i + 1; j < comp.ordered.size(); ++j) {
                bool touch = session.current_interval(comp.ordered[i])
                                 .intersects(session.current_interval(comp.ordered[j]));
                bool expected = j == i + 1;
                if (touch != expected)
                    throw std::logic_error("interval component is not a path");
            }
        }
        components.push_back(std::move(comp));
    }
    std::sort(components.begin(), components.end(),
              [](const PathComponent& a, const PathComponent& b) {
                  return *std::min_element(a.ordered.begin(), a.ordered.end()) <
                         *std::min_element(b.ordered.begin(), b.ordered.end());
              });
    return components;
}

CliquePartition clique_partition(const QuerySession& session,
                                 const std::vector<VertexId>& pred_mandatory,
                                 const std::vector<VertexId>& known_mandatory) {
    if (session.kind() != InstanceKind::sorting)
        throw std::invalid_argument("clique partition applies to sorting instances");
    if (next_known_mandatory(session).has_value())
        throw std::invalid_argument("clique partition requires an exhausted closure");
    std::vector<VertexId> domain = sorted_union(pred_mandatory, known_mandatory);
    for (VertexId v : domain)
        if (!session.is_queried(v))
            throw std::invalid_argument("clique partition requires the first phase queried");

    std::set<VertexId> mandatory(known_mandatory.begin(), known_mandatory.end());
    ArborescenceForest forest =
        build_arborescence_forest(session, pred_mandatory, known_mandatory);

    std::map<VertexId, VertexId> accepted_parent;
    for (auto [p, v] : forest.arcs) accepted_parent[v] = p;

    std::vector<std::vector<VertexId>> groups = group_by_parents(accepted_parent, domain);

    // Endpoints of current path components, used for singleton partners.
    std::vector<PathComponent> comps = path_components(session);
    std::set<VertexId> endpoints;
    for (const auto& comp : comps) {
        endpoints.insert(comp.ordered.front());
        endpoints.insert(comp.ordered.back());
    }

    CliquePartition partition;
    std::map<VertexId, std::vector<std::size_t>> partner_claims;
    std::set<VertexId> repartitioned;

    for (auto& group : groups) {
        if (group.size() >= 2) {
            partition.cliques.push_back({group, false, std::nullopt});
            continue;
        }
        VertexId v = group.front();
        if (repartitioned.count(v)) continue;
        if (mandatory.count(v)) {
            partition.cliques.push_back({group, true, std::nullopt});
            continue;
        }
        if (accepted_parent.count(v)) {
            // Lone child of a root outside the queried set: pick an unqueried
            // partner whose predicted weight certifies v, preferring the
            // component endpoint that must exist.
            VertexId partner = -1;
            for (VertexId u = 0; u < session.vertex_count(); ++u) {
                if (u == v || session.is_queried(u)) continue;
                if (session.current_interval(u).trivial()) continue;
                if (!session.original_interval(v).contains(session.predicted_weight(u)))
                    continue;
                if (!endpoints.count(u)) continue;
                partner = u;
                break;
            }
            if (partner < 0)
                throw std::logic_error("critical isolated vertex without a partner endpoint");
            partner_claims[partner].push_back(partition.cliques.size());
            partition.cliques.push_back({group, false, partner});
            continue;
        }
        // Root that is itself prediction mandatory: its parent arc closed a
        // cycle. Re-partition the whole tree it roots.
        TreeView tree;
        tree.root = v;
        for (auto [p, c] : forest.arcs) tree.children[p].push_back(c);
        // Restrict to the component reachable from v.
        tree = subtree_view(tree, v);
        tree.root = v;
        std::vector<VertexId> members = tree_nodes(tree);
        if (members.size() < 2)
            throw std::logic_error("prediction-mandatory root without a tree to re-partition");
        // Remove the groups already emitted for this tree and re-add.
        std::set<VertexId> member_set(members.begin(), members.end());
        std::vector<Clique> kept;
        for (auto& clique : partition.cliques) {
            bool inside = true;
            for (VertexId m : clique.members)
                if (!member_set.count(m)) inside = false;
            if (!inside) kept.push_back(clique);
        }
        partition.cliques = std::move(kept);
        partner_claims.clear();
        for (std::size_t i = 0; i < partition.cliques.size(); ++i)
            if (partition.cliques[i].partner)
                partner_claims[*partition.cliques[i].partner].push_back(i);
        for (auto& clique : repartition_tree(session, tree))
            partition.cliques.push_back({clique, false, std::nullopt});
        for (VertexId m : members) repartitioned.insert(m);
    }

    // Singletons sharing a partner merge into one clique around it.
    std::vector<Clique> merged;
    std::set<std::size_t> consumed;
    for (auto& [partner, holders] : partner_claims) {
        if (holders.size() < 2) continue;
        Clique big;
        for (std::size_t idx : holders) {
            consumed.insert(idx);
            big.members.push_back(partition.cliques[idx].members.front());
        }
        std::sort(big.members.begin(), big.members.end());
        merged.push_back(std::move(big));
    }
    if (!consumed.empty()) {
        std::vector<Clique> rest;
        for (std::size_t i = 0; i < partition.cliques.size(); ++i)
            if (!consumed.count(i)) rest.push_back(partition.cliques[i]);
        partition.cliques = std::move(rest);
    }
    for (auto& clique : merged) partition.cliques.push_back(std::move(clique));

    std::sort(partition.cliques.begin(), partition.cliques.end(),
              [](const Clique& a, const Clique& b) { return a.members < b.members; });
    return partition;
}

SortRunDetail sorting_session_run(QuerySession& session) {
    if (session.kind() != InstanceKind::sorting)
        throw std::invalid_argument("sorting algorithm requires a sorting instance");
    SortRunDetail detail;
    auto& trace = detail.trace;

    detail.pred_mandatory = prediction_mandatory_set(session);
    detail.closure_first = known_mandatory_closure(session);
    trace.insert(trace.end(), detail.closure_first.begin(), detail.closure_first.end());

    std::set<VertexId> m1(detail.closure_first.begin(), detail.closure_first.end());
    for (VertexId v : detail.pred_mandatory) {
        if (m1.count(v) || session.is_queried(v)) continue;
        session.query(v);
        trace.push_back(v);
    }
    detail.closure_second = known_mandatory_closure(session);
    trace.insert(trace.end(), detail.closure_second.begin(), detail.closure_second.end());

    std::vector<VertexId> mandatory =
        sorted_union(detail.closure_first, detail.closure_second);
    detail.forest = build_arborescence_forest(session, detail.pred_mandatory, mandatory);
    detail.partition = clique_partition(session, detail.pred_mandatory, mandatory);

    // Unqueried partners of the critical isolated singletons.
    std::set<VertexId> critical_partners;
    for (const auto& clique : detail.partition.cliques)
        if (clique.members.size() == 1 && !clique.in_mandatory && clique.partner)
            critical_partners.insert(*clique.partner);

    while (!is_solved(session)) {
        std::vector<PathComponent> comps = path_components(session);
        const PathComponent* chosen = nullptr;
        for (const auto& comp : comps)
            if (comp.ordered.size() >= 2) {
                chosen = &comp;
                break;
            }
        if (!chosen)
            throw std::logic_error("unsolved sorting instance with only singleton components");

        const std::vector<VertexId>& xs = chosen->ordered;
        const int p = static_cast<int>(xs.size());
        std::vector<int> positions;  // 1-based
        if (p % 2 == 1) {
            for (int i = 2; i <= p - 1; i += 2) positions.push_back(i);
        } else if (critical_partners.count(xs.front())) {
            for (int i = 1; i <= p - 1; i += 2) positions.push_back(i);
        } else {
            for (int i = 2; i <= p; i += 2) positions.push_back(i);
        }

        SortLoopStep step;
        step.component = xs;
        for (int pos : positions) {
            VertexId v = xs[pos - 1];
            session.query(v);
            trace.push_back(v);
            step.queried.push_back(v);
        }
        step.closure = known_mandatory_closure(session);
        trace.insert(trace.end(), step.closure.begin(), step.closure.end());
        detail.steps.push_back(std::move(step));
    }
    return detail;
}

RunResult alg_sorting(const Instance& instance, const AlgOptions& options) {
    QuerySession session(instance);
    SortRunDetail detail = sorting_session_run(session);
    return finalize_run(instance, "alg3", std::move(detail.trace), std::nullopt, std::nullopt,
                        std::nullopt, true, options);
}

}  // namespace uq
