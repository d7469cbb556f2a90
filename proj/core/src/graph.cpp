#include "exgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace exgraph {

Pseudograph::Pseudograph(int vertex_count) : p_(vertex_count) {
    if (p_ < 1) throw std::invalid_argument("pseudograph needs a nonempty vertex set");
}

Pseudograph::Pseudograph(int vertex_count, std::vector<Edge> edges)
    : p_(vertex_count), edges_(std::move(edges)) {
    if (p_ < 1) throw std::invalid_argument("pseudograph needs a nonempty vertex set");
    for (const Edge& e : edges_) {
        if (e.a < 0 || e.a >= p_ || e.b < 0 || e.b >= p_)
            throw std::out_of_range("edge endpoint out of range");
    }
}

const Edge& Pseudograph::edge(int e) const {
    check_edge_index(e);
    return edges_[e];
}

bool Pseudograph::is_loop(int e) const {
    check_edge_index(e);
    return edges_[e].a == edges_[e].b;
}

void Pseudograph::add_edge(int a, int b) {
    if (a < 0 || a >= p_ || b < 0 || b >= p_)
        throw std::out_of_range("edge endpoint out of range");
    edges_.push_back({a, b});
}

int Pseudograph::degree(int v) const {
    check_vertex_index(v);
    int d = 0;
    for (const Edge& e : edges_) {
        if (e.a == v) ++d;
        if (e.b == v) ++d;
    }
    return d;
}

std::vector<int> Pseudograph::degrees() const {
    std::vector<int> d(p_, 0);
    for (const Edge& e : edges_) {
        ++d[e.a];
        ++d[e.b];
    }
    return d;
}

int Pseudograph::loop_count(int v) const {
    check_vertex_index(v);
    int c = 0;
    for (const Edge& e : edges_)
        if (e.a == v && e.b == v) ++c;
    return c;
}

int Pseudograph::multiplicity(int u, int v) const {
    check_vertex_index(u);
    check_vertex_index(v);
    int c = 0;
    for (const Edge& e : edges_)
        if ((e.a == u && e.b == v) || (e.a == v && e.b == u)) ++c;
    if (u == v) c = loop_count(u);
    return c;
}

std::vector<int> Pseudograph::incident_edges(int v) const {
    check_vertex_index(v);
    std::vector<int> out;
    for (int e = 0; e < edge_count(); ++e)
        if (edges_[e].a == v || edges_[e].b == v) out.push_back(e);
    return out;
}

std::vector<int> Pseudograph::neighbors(int v) const {
    check_vertex_index(v);
    std::vector<int> out;
    for (const Edge& e : edges_) {
        if (e.a == v && e.b != v) out.push_back(e.b);
        if (e.b == v && e.a != v) out.push_back(e.a);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Pseudograph Pseudograph::delete_edge(int e) const {
    check_edge_index(e);
    std::vector<Edge> next = edges_;
    next.erase(next.begin() + e);
    return Pseudograph(p_, std::move(next));
}

Pseudograph Pseudograph::contract_edge(int e) const {
    check_edge_index(e);
    if (is_loop(e)) throw std::invalid_argument("cannot contract a loop");
    const int keep = std::min(edges_[e].a, edges_[e].b);
    const int gone = std::max(edges_[e].a, edges_[e].b);
    const int last = p_ - 1;
    std::vector<Edge> next;
    next.reserve(edges_.size() - 1);
    auto relabel = [&](int v) {
        if (v == gone) return keep;
        if (v == last) return gone;  // move last vertex into the freed slot
        return v;
    };
    for (int i = 0; i < edge_count(); ++i) {
        if (i == e) continue;
        next.push_back({relabel(edges_[i].a), relabel(edges_[i].b)});
    }
    return Pseudograph(p_ - 1, std::move(next));
}

Pseudograph Pseudograph::delete_vertex(int v) const {
    check_vertex_index(v);
    if (p_ == 1) throw std::invalid_argument("cannot delete the only vertex");
    const int last = p_ - 1;
    std::vector<Edge> next;
    for (const Edge& e : edges_) {
        if (e.a == v || e.b == v) continue;
        auto relabel = [&](int w) { return w == last ? v : w; };
        next.push_back({relabel(e.a), relabel(e.b)});
    }
    return Pseudograph(p_ - 1, std::move(next));
}

Pseudograph Pseudograph::without_loops() const {
    std::vector<Edge> next;
    for (const Edge& e : edges_)
        if (e.a != e.b) next.push_back(e);
    return Pseudograph(p_, std::move(next));
}

void Pseudograph::check_edge_index(int e) const {
    if (e < 0 || e >= edge_count()) throw std::out_of_range("edge index out of range");
}

void Pseudograph::check_vertex_index(int v) const {
    if (v < 0 || v >= p_) throw std::out_of_range("vertex index out of range");
}

Digraph::Digraph(int p, std::vector<Edge> arcs_in) : vertex_count(p), arcs(std::move(arcs_in)) {
    if (p < 1) throw std::invalid_argument("digraph needs a nonempty vertex set");
    for (const Edge& a : arcs)
        if (a.a < 0 || a.a >= p || a.b < 0 || a.b >= p)
            throw std::out_of_range("arc endpoint out of range");
}

WeightedGraph::WeightedGraph(Pseudograph g, std::vector<Rat> w)
    : graph(std::move(g)), weights(std::move(w)) {
    if (static_cast<int>(weights.size()) != graph.edge_count())
        throw std::invalid_argument("one weight per edge required");
}

Rat WeightedGraph::weight_of(const std::vector<int>& edge_set) const {
    Rat total(0);
    for (int e : edge_set) total += weights.at(e);
    return total;
}

AdjacencyMatrix adjacency_matrix(const Pseudograph& g) {
    const int p = g.vertex_count();
    AdjacencyMatrix m;
    m.p = p;
    m.entries.assign(static_cast<size_t>(p) * p, Int(0));
    for (const Edge& e : g.edges()) {
        if (e.a == e.b) {
            m.at(e.a, e.a) += 2;
        } else {
            m.at(e.a, e.b) += 1;
            m.at(e.b, e.a) += 1;
        }
    }
    return m;
}

namespace {

std::vector<Int> mat_mul(const std::vector<Int>& x, const std::vector<Int>& y, int p) {
    std::vector<Int> z(static_cast<size_t>(p) * p, Int(0));
    for (int i = 0; i < p; ++i)
        for (int k = 0; k < p; ++k) {
            const Int& xv = x[static_cast<size_t>(i) * p + k];
            if (xv == 0) continue;
            for (int j = 0; j < p; ++j)
                z[static_cast<size_t>(i) * p + j] += xv * y[static_cast<size_t>(k) * p + j];
        }
    return z;
}

}  // namespace

Int walk_count(const Pseudograph& g, int n, int i, int j) {
    if (n < 0) throw std::invalid_argument("walk length must be nonnegative");
    const int p = g.vertex_count();
    if (i < 0 || i >= p || j < 0 || j >= p) throw std::out_of_range("vertex index out of range");
    AdjacencyMatrix a = adjacency_matrix(g);
    std::vector<Int> acc(static_cast<size_t>(p) * p, Int(0));
    for (int v = 0; v < p; ++v) acc[static_cast<size_t>(v) * p + v] = 1;
    for (int step = 0; step < n; ++step) acc = mat_mul(acc, a.entries, p);
    return acc[static_cast<size_t>(i) * p + j];
}

std::vector<int> component_labels(const Pseudograph& g) {
    const int p = g.vertex_count();
    std::vector<std::vector<int>> adj(p);
    for (const Edge& e : g.edges()) {
        if (e.a == e.b) continue;
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<int> label(p, -1);
    int next = 0;
    for (int s = 0; s < p; ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adj[v])
                if (label[w] == -1) {
                    label[w] = next;
                    queue.push_back(w);
                }
        }
        ++next;
    }
    return label;
}

int component_count(const Pseudograph& g) {
    const std::vector<int> label = component_labels(g);
    return *std::max_element(label.begin(), label.end()) + 1;
}

bool is_connected(const Pseudograph& g) { return component_count(g) == 1; }

bool is_simple(const Pseudograph& g) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e)) return false;
    std::vector<std::pair<int, int>> seen;
    for (const Edge& e : g.edges())
        seen.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool is_tree(const Pseudograph& g) {
    return g.edge_count() == g.vertex_count() - 1 && is_connected(g) &&
           g.without_loops().edge_count() == g.edge_count();
}

std::vector<int> bfs_distances(const Pseudograph& g, int source) {
    const int p = g.vertex_count();
    if (source < 0 || source >= p) throw std::out_of_range("vertex index out of range");
    std::vector<std::vector<int>> adj(p);
    for (const Edge& e : g.edges()) {
        if (e.a == e.b) continue;
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<int> dist(p, -1);
    dist[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj[v])
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

int distance(const Pseudograph& g, int u, int v) {
    int d = bfs_distances(g, u)[v];
    if (d < 0) throw std::domain_error("vertices lie in different components");
    return d;
}

int diameter(const Pseudograph& g) {
    if (!is_connected(g)) throw std::domain_error("diameter of a disconnected graph");
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const std::vector<int> dist = bfs_distances(g, v);
        best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    }
    return best;
}

std::optional<int> girth(const Pseudograph& g) {
    // Shortest cycle through edge e is 1 + dist_{G-e}(a, b).
    std::optional<int> best;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge ed = g.edge(e);
        const int d = bfs_distances(g.delete_edge(e), ed.a)[ed.b];
        if (d < 0) continue;
        const int len = d + 1;
        if (!best || len < *best) best = len;
    }
    return best;
}

Bipartition bipartition(const Pseudograph& g) {
    const int p = g.vertex_count();
    Bipartition out;
    out.side.assign(p, -1);
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e)) return out;  // a loop kills bipartiteness
    std::vector<std::vector<int>> adj(p);
    for (const Edge& e : g.edges()) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    for (int s = 0; s < p; ++s) {
        if (out.side[s] != -1) continue;
        out.side[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adj[v]) {
                if (out.side[w] == -1) {
                    out.side[w] = 1 - out.side[v];
                    queue.push_back(w);
                } else if (out.side[w] == out.side[v]) {
                    out.side.assign(p, -1);
                    return out;
                }
            }
        }
    }
    out.bipartite = true;
    return out;
}

std::vector<int> bridges(const Pseudograph& g) {
    std::vector<int> out;
    const int base = component_count(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.is_loop(e)) continue;
        if (component_count(g.delete_edge(e)) > base) out.push_back(e);
    }
    return out;
}

ComponentSplit split_components(const Pseudograph& g) {
    const std::vector<int> label = component_labels(g);
    const int n = *std::max_element(label.begin(), label.end()) + 1;
    ComponentSplit out;
    out.vertex_map.assign(n, {});
    std::vector<int> local(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        local[v] = static_cast<int>(out.vertex_map[label[v]].size());
        out.vertex_map[label[v]].push_back(v);
    }
    std::vector<std::vector<Edge>> edges(n);
    for (const Edge& e : g.edges())
        edges[label[e.a]].push_back({local[e.a], local[e.b]});
    for (int c = 0; c < n; ++c)
        out.components.emplace_back(static_cast<int>(out.vertex_map[c].size()), std::move(edges[c]));
    return out;
}

namespace {

void require_positive(int n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + " needs a positive parameter");
}

}  // namespace

Pseudograph null_graph(int p) {
    require_positive(p, "null graph");
    return Pseudograph(p);
}

Pseudograph complete_graph(int p) {
    require_positive(p, "complete graph");
    Pseudograph g(p);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) g.add_edge(i, j);
    return g;
}

Pseudograph complete_bipartite(int m, int n) {
    require_positive(m, "complete bipartite");
    require_positive(n, "complete bipartite");
    Pseudograph g(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

Pseudograph path_graph(int n) {
    require_positive(n, "path");
    Pseudograph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Pseudograph cycle_graph(int n) {
    require_positive(n, "cycle");
    if (n == 1) return Pseudograph(1, {{0, 0}});
    Pseudograph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Pseudograph fan_graph(int n) {
    require_positive(n, "fan");
    Pseudograph g(n + 1);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    for (int i = 0; i < n; ++i) g.add_edge(i, n);
    return g;
}

Pseudograph ladder_graph(int n) {
    require_positive(n, "ladder");
    Pseudograph g(2 * n);
    for (int i = 0; i + 1 < n; ++i) {
        g.add_edge(i, i + 1);
        g.add_edge(n + i, n + i + 1);
    }
    for (int i = 0; i < n; ++i) g.add_edge(i, n + i);
    return g;
}

Pseudograph zigzag_graph(int n) {
    require_positive(n, "zigzag");
    Pseudograph g(n + 1);
    for (int i = 0; i + 1 <= n; ++i) g.add_edge(i, i + 1);
    for (int i = 0; i + 2 <= n; ++i) g.add_edge(i, i + 2);
    return g;
}

Pseudograph wheel_graph(int n) {
    require_positive(n, "wheel");
    Pseudograph rim = cycle_graph(n);
    Pseudograph g(n + 1, rim.edges());
    for (int i = 0; i < n; ++i) g.add_edge(i, n);
    return g;
}

Pseudograph cube_graph(int n) {
    require_positive(n, "cube");
    if (n > 20) throw std::invalid_argument("cube dimension too large");
    const int p = 1 << n;
    Pseudograph g(p);
    for (int v = 0; v < p; ++v)
        for (int bit = 0; bit < n; ++bit) {
            const int w = v ^ (1 << bit);
            if (v < w) g.add_edge(v, w);
        }
    return g;
}

Pseudograph star_graph(int k) {
    require_positive(k, "star");
    Pseudograph g(k + 1);
    for (int i = 1; i <= k; ++i) g.add_edge(0, i);
    return g;
}

Pseudograph make_family(const std::string& name, const std::vector<int>& params) {
    auto arity = [&](size_t n) {
        if (params.size() != n)
            throw std::invalid_argument("family '" + name + "' expects " + std::to_string(n) +
                                        " parameter(s)");
    };
    if (name == "complete") { arity(1); return complete_graph(params[0]); }
    if (name == "complete_bipartite") { arity(2); return complete_bipartite(params[0], params[1]); }
    if (name == "cycle") { arity(1); return cycle_graph(params[0]); }
    if (name == "path") { arity(1); return path_graph(params[0]); }
    if (name == "fan") { arity(1); return fan_graph(params[0]); }
    if (name == "ladder") { arity(1); return ladder_graph(params[0]); }
    if (name == "zigzag") { arity(1); return zigzag_graph(params[0]); }
    if (name == "wheel") { arity(1); return wheel_graph(params[0]); }
    if (name == "cube") { arity(1); return cube_graph(params[0]); }
    if (name == "null") { arity(1); return null_graph(params[0]); }
    if (name == "star") { arity(1); return star_graph(params[0]); }
    throw std::invalid_argument("unknown graph family '" + name + "'");
}

}  // namespace exgraph
