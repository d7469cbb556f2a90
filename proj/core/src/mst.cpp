#include "exgraph/mst.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace exgraph {

UnionFind::UnionFind(int n) : parent_(n), rank_(n, 0), classes_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
}

bool UnionFind::unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --classes_;
    return true;
}

namespace {

std::vector<int> edges_by_weight(const WeightedGraph& g) {
    std::vector<int> order(g.graph.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.weights[a] != g.weights[b]) return g.weights[a] < g.weights[b];
        return a < b;
    });
    return order;
}

SpanningForest finish(const WeightedGraph& g, std::vector<int> edges) {
    std::sort(edges.begin(), edges.end());
    SpanningForest out;
    out.weight = g.weight_of(edges);
    out.spanning_tree = static_cast<int>(edges.size()) == g.graph.vertex_count() - 1;
    out.edges = std::move(edges);
    return out;
}

void require_connected(const WeightedGraph& g, const char* algo) {
    if (!is_connected(g.graph))
        throw std::domain_error(std::string(algo) + " requires a connected graph");
}

}  // namespace

SpanningForest kruskal(const WeightedGraph& g) {
    UnionFind sets(g.graph.vertex_count());
    std::vector<int> picked;
    for (int e : edges_by_weight(g)) {
        const Edge ed = g.graph.edge(e);
        if (ed.a == ed.b) continue;
        if (sets.unite(ed.a, ed.b)) picked.push_back(e);
    }
    return finish(g, std::move(picked));
}

SpanningForest prim(const WeightedGraph& g, int start) {
    require_connected(g, "prim");
    const int p = g.graph.vertex_count();
    if (start < 0 || start >= p) throw std::out_of_range("start vertex out of range");
    std::vector<bool> in_tree(p, false);
    in_tree[start] = true;
    std::vector<int> picked;
    while (static_cast<int>(picked.size()) < p - 1) {
        int best = -1;
        for (int e = 0; e < g.graph.edge_count(); ++e) {
            const Edge ed = g.graph.edge(e);
            if (ed.a == ed.b || in_tree[ed.a] == in_tree[ed.b]) continue;
            if (best == -1 || g.weights[e] < g.weights[best] ||
                (g.weights[e] == g.weights[best] && e < best))
                best = e;
        }
        const Edge ed = g.graph.edge(best);
        in_tree[ed.a] = in_tree[ed.b] = true;
        picked.push_back(best);
    }
    return finish(g, std::move(picked));
}

SpanningForest boruvka(const WeightedGraph& g) {
    require_connected(g, "boruvka");
    const int p = g.graph.vertex_count();
    UnionFind sets(p);
    std::vector<int> picked;
    while (sets.classes() > 1) {
        // Minimum outgoing edge per component, keyed by the component root.
        std::vector<int> best(p, -1);
        for (int e = 0; e < g.graph.edge_count(); ++e) {
            const Edge ed = g.graph.edge(e);
            if (ed.a == ed.b) continue;
            const int ra = sets.find(ed.a);
            const int rb = sets.find(ed.b);
            if (ra == rb) continue;
            for (int root : {ra, rb}) {
                if (best[root] == -1 || g.weights[e] < g.weights[best[root]] ||
                    (g.weights[e] == g.weights[best[root]] && e < best[root]))
                    best[root] = e;
            }
        }
        // Merge in ascending root order for a deterministic result.
        for (int root = 0; root < p; ++root) {
            if (best[root] == -1 || sets.find(root) != root) continue;
            const Edge ed = g.graph.edge(best[root]);
            if (sets.unite(ed.a, ed.b)) picked.push_back(best[root]);
        }
    }
    return finish(g, std::move(picked));
}

SpanningForest reverse_delete(const WeightedGraph& g) {
    require_connected(g, "reverse_delete");
    std::vector<int> order = edges_by_weight(g);
    std::reverse(order.begin(), order.end());
    std::vector<bool> kept(g.graph.edge_count(), true);
    auto connected_without = [&](int skip) {
        UnionFind sets(g.graph.vertex_count());
        for (int e = 0; e < g.graph.edge_count(); ++e) {
            if (!kept[e] || e == skip) continue;
            const Edge ed = g.graph.edge(e);
            if (ed.a != ed.b) sets.unite(ed.a, ed.b);
        }
        return sets.classes() == 1;
    };
    for (int e : order) {
        if (g.graph.is_loop(e)) {
            kept[e] = false;
            continue;
        }
        if (connected_without(e)) kept[e] = false;
    }
    std::vector<int> picked;
    for (int e = 0; e < g.graph.edge_count(); ++e)
        if (kept[e]) picked.push_back(e);
    return finish(g, std::move(picked));
}

bool is_spanning_tree_of(const Pseudograph& g, const std::vector<int>& edges) {
    if (static_cast<int>(edges.size()) != g.vertex_count() - 1) return false;
    UnionFind sets(g.vertex_count());
    for (int e : edges) {
        const Edge ed = g.edge(e);
        if (ed.a == ed.b || !sets.unite(ed.a, ed.b)) return false;
    }
    return sets.classes() == 1;
}

namespace {

// Edges of `tree` on the path between u and v.
std::vector<int> tree_path_edges(const Pseudograph& g, const std::vector<int>& tree, int u,
                                 int v) {
    const int p = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(p);  // (neighbor, edge)
    for (int e : tree) {
        const Edge ed = g.edge(e);
        adj[ed.a].push_back({ed.b, e});
        adj[ed.b].push_back({ed.a, e});
    }
    std::vector<int> parent_edge(p, -1), parent(p, -1);
    std::vector<bool> seen(p, false);
    seen[u] = true;
    std::vector<int> stack{u};
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (auto [y, e] : adj[x])
            if (!seen[y]) {
                seen[y] = true;
                parent[y] = x;
                parent_edge[y] = e;
                stack.push_back(y);
            }
    }
    std::vector<int> path;
    for (int x = v; x != u; x = parent[x]) {
        if (x == -1 || parent_edge[x] == -1)
            throw std::logic_error("endpoints not joined in the tree");
        path.push_back(parent_edge[x]);
    }
    return path;
}

}  // namespace

LocalOptimality is_locally_minimal(const WeightedGraph& g, const std::vector<int>& tree) {
    if (!is_spanning_tree_of(g.graph, tree))
        throw std::invalid_argument("not a spanning tree of the graph");
    LocalOptimality out;
    std::vector<bool> in_tree(g.graph.edge_count(), false);
    for (int e : tree) in_tree[e] = true;
    Rat best_gain(0);
    for (int incoming = 0; incoming < g.graph.edge_count(); ++incoming) {
        if (in_tree[incoming] || g.graph.is_loop(incoming)) continue;
        const Edge ed = g.graph.edge(incoming);
        if (ed.a == ed.b) continue;
        // Swapping `incoming` against any edge on the cycle it closes.
        for (int outgoing : tree_path_edges(g.graph, tree, ed.a, ed.b)) {
            const Rat gain = g.weights[outgoing] - g.weights[incoming];
            if (gain > best_gain) {
                best_gain = gain;
                out.improving_swap = {outgoing, incoming};
            }
        }
    }
    out.locally_minimal = !out.improving_swap.has_value();
    return out;
}

int exchange_witness(const WeightedGraph& g, const std::vector<int>& s_tree,
                     const std::vector<int>& t_tree, int s_e) {
    if (!is_spanning_tree_of(g.graph, s_tree) || !is_spanning_tree_of(g.graph, t_tree))
        throw std::invalid_argument("both inputs must be spanning trees");
    if (std::find(s_tree.begin(), s_tree.end(), s_e) == s_tree.end())
        throw std::invalid_argument("edge must belong to S");
    if (std::find(t_tree.begin(), t_tree.end(), s_e) != t_tree.end())
        throw std::invalid_argument("edge must avoid T");

    // S - s_e has two banks; the T-path between s_e's ends must cross once.
    std::vector<int> s_rest;
    for (int e : s_tree)
        if (e != s_e) s_rest.push_back(e);
    UnionFind banks(g.graph.vertex_count());
    for (int e : s_rest) banks.unite(g.graph.edge(e).a, g.graph.edge(e).b);

    const Edge se = g.graph.edge(s_e);
    for (int t_e : tree_path_edges(g.graph, t_tree, se.a, se.b)) {
        const Edge te = g.graph.edge(t_e);
        if (banks.find(te.a) == banks.find(te.b)) continue;  // stays in one bank
        if (std::find(s_tree.begin(), s_tree.end(), t_e) != s_tree.end()) continue;
        std::vector<int> s_swapped = s_rest;
        s_swapped.push_back(t_e);
        std::vector<int> t_swapped;
        for (int e : t_tree)
            if (e != t_e) t_swapped.push_back(e);
        t_swapped.push_back(s_e);
        if (is_spanning_tree_of(g.graph, s_swapped) && is_spanning_tree_of(g.graph, t_swapped))
            return t_e;
    }
    throw std::logic_error("exchange lemma witness not found");
}

TourResult nearest_neighbor_cycle(const WeightedGraph& g, int start) {
    const int p = g.graph.vertex_count();
    if (start < 0 || start >= p) throw std::out_of_range("start vertex out of range");
    // Cheapest edge between each pair; every pair must be present.
    std::vector<std::vector<int>> cheapest(p, std::vector<int>(p, -1));
    for (int e = 0; e < g.graph.edge_count(); ++e) {
        const Edge ed = g.graph.edge(e);
        if (ed.a == ed.b) continue;
        int& slot = cheapest[ed.a][ed.b];
        if (slot == -1 || g.weights[e] < g.weights[slot]) slot = e;
        int& mirror = cheapest[ed.b][ed.a];
        if (mirror == -1 || g.weights[e] < g.weights[mirror]) mirror = e;
    }
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (i != j && cheapest[i][j] == -1)
                throw std::invalid_argument("nearest neighbor needs a complete graph");

    TourResult out;
    out.weight = Rat(0);
    std::vector<bool> visited(p, false);
    int current = start;
    visited[current] = true;
    out.vertices.push_back(current);
    for (int step = 1; step < p; ++step) {
        int next = -1;
        for (int w = 0; w < p; ++w) {
            if (visited[w]) continue;
            if (next == -1 || g.weights[cheapest[current][w]] < g.weights[cheapest[current][next]])
                next = w;
        }
        out.weight += g.weights[cheapest[current][next]];
        visited[next] = true;
        out.vertices.push_back(next);
        current = next;
    }
    out.weight += g.weights[cheapest[current][start]];
    return out;
}

TransformCheck monotone_transform_check(const WeightedGraph& g,
                                        const std::function<Rat(const Rat&)>& f) {
    std::vector<Rat> mapped;
    mapped.reserve(g.weights.size());
    for (const Rat& w : g.weights) mapped.push_back(f(w));
    TransformCheck out;
    out.before = kruskal(g).edges;
    out.after = kruskal(WeightedGraph(g.graph, std::move(mapped))).edges;
    out.same_edge_set = out.before == out.after;
    return out;
}

TransformCheck pow2_transform_check(const WeightedGraph& g) {
    return monotone_transform_check(g, [](const Rat& w) {
        if (w.get_den() != 1) throw std::invalid_argument("2^w needs integer weights");
        const Int& e = w.get_num();
        if (!e.fits_slong_p()) throw std::invalid_argument("weight exponent too large");
        const long exp = e.get_si();
        if (exp >= 0) return Rat(pow2(static_cast<unsigned long>(exp)), 1);
        return make_rat(1, pow2(static_cast<unsigned long>(-exp)));
    });
}

}  // namespace exgraph
