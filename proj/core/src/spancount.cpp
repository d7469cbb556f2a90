#include "exgraph/spancount.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace exgraph {

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

void for_each_spanning_tree(const Pseudograph& g,
                            const std::function<void(const std::vector<int>&)>& visit,
                            int max_edges) {
    const int p = g.vertex_count();
    std::vector<int> pool;  // non-loop edge indices
    for (int e = 0; e < g.edge_count(); ++e)
        if (!g.is_loop(e)) pool.push_back(e);
    const int q = static_cast<int>(pool.size());
    if (q > max_edges)
        throw std::domain_error("spanning-tree enumeration guard exceeded (" + std::to_string(q) +
                                " > " + std::to_string(max_edges) + " edges)");
    if (p == 1) {
        visit({});
        return;
    }
    const int k = p - 1;
    if (k > q) return;

    // Gosper's hack walks the k-subsets of the edge pool in increasing mask order.
    std::vector<int> chosen(k);
    for (uint32_t mask = (uint32_t(1) << k) - 1; mask < (uint32_t(1) << q);) {
        DisjointSets sets(p);
        bool acyclic = true;
        int idx = 0;
        for (int i = 0; i < q && acyclic; ++i) {
            if (mask & (uint32_t(1) << i)) {
                const Edge e = g.edge(pool[i]);
                if (!sets.unite(e.a, e.b)) acyclic = false;
                chosen[idx++] = pool[i];
            }
        }
        // p-1 acyclic edges on p vertices span automatically.
        if (acyclic) visit(chosen);

        const uint32_t c = mask & -mask;
        const uint32_t r = mask + c;
        if (r >= (uint32_t(1) << q) || c == 0) break;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

Int count_trees_bruteforce(const Pseudograph& g, int max_edges) {
    Int total = 0;
    for_each_spanning_tree(g, [&](const std::vector<int>&) { ++total; }, max_edges);
    return total;
}

namespace {

// Deterministic relabeling by (degree, sorted neighbor degrees); identical
// keys imply isomorphic graphs, so the memo can never conflate distinct
// counts. Isomorphic graphs may still miss the cache, which is harmless.
std::string canonical_key(const Pseudograph& g) {
    const int p = g.vertex_count();
    const std::vector<int> deg = g.degrees();
    std::vector<std::vector<int>> profile(p);
    for (const Edge& e : g.edges()) {
        profile[e.a].push_back(deg[e.b]);
        profile[e.b].push_back(deg[e.a]);
    }
    for (auto& pr : profile) std::sort(pr.begin(), pr.end());
    std::vector<int> order(p);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (deg[a] != deg[b]) return deg[a] < deg[b];
        if (profile[a] != profile[b]) return profile[a] < profile[b];
        return a < b;
    });
    std::vector<int> rank(p);
    for (int i = 0; i < p; ++i) rank[order[i]] = i;
    std::vector<std::pair<int, int>> relabeled;
    relabeled.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        relabeled.emplace_back(std::min(rank[e.a], rank[e.b]), std::max(rank[e.a], rank[e.b]));
    std::sort(relabeled.begin(), relabeled.end());
    std::ostringstream key;
    key << p << ';';
    for (const auto& [a, b] : relabeled) key << a << ',' << b << ';';
    return key.str();
}

Int dpc_impl(Pseudograph g, std::unordered_map<std::string, Int>& memo) {
    // Loops never enter a spanning tree.
    g = g.without_loops();

    if (g.vertex_count() == 1) return 1;
    if (!is_connected(g)) return 0;

    // Stripping an end vertex keeps s(G) unchanged.
    for (bool stripped = true; stripped;) {
        stripped = false;
        const std::vector<int> deg = g.degrees();
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (deg[v] == 1) {
                g = g.delete_vertex(v);
                stripped = true;
                break;
            }
        }
        if (g.vertex_count() == 1) return 1;
    }
    if (g.vertex_count() == 2) return g.edge_count();

    const std::string key = canonical_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Int result;
    const std::vector<int> cut = bridges(g);
    if (!cut.empty()) {
        // A bridge lies in every spanning tree: s(G) = s(H_1) * s(H_2).
        const ComponentSplit split = split_components(g.delete_edge(cut.front()));
        result = 1;
        for (const Pseudograph& part : split.components) result *= dpc_impl(part, memo);
    } else {
        // Pivot on a non-loop edge at a maximum-degree vertex.
        const std::vector<int> deg = g.degrees();
        const int v = static_cast<int>(
            std::max_element(deg.begin(), deg.end()) - deg.begin());
        int pivot = -1;
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge ed = g.edge(e);
            if ((ed.a == v || ed.b == v) && ed.a != ed.b) {
                pivot = e;
                break;
            }
        }
        result = dpc_impl(g.delete_edge(pivot), memo) + dpc_impl(g.contract_edge(pivot), memo);
    }
    memo.emplace(key, result);
    return result;
}

}  // namespace

Int count_trees_dpc(const Pseudograph& g) {
    std::unordered_map<std::string, Int> memo;
    return dpc_impl(g, memo);
}

std::vector<std::vector<Int>> kirchhoff_matrix(const Pseudograph& g) {
    const Pseudograph h = g.without_loops();
    const int p = h.vertex_count();
    std::vector<std::vector<Int>> a(p, std::vector<Int>(p, Int(0)));
    const std::vector<int> deg = h.degrees();
    for (int i = 0; i < p; ++i) a[i][i] = deg[i];
    for (const Edge& e : h.edges()) {
        a[e.a][e.b] -= 1;
        a[e.b][e.a] -= 1;
    }
    return a;
}

KirchhoffMinor kirchhoff_minor(const Pseudograph& g) {
    if (g.vertex_count() < 2)
        throw std::domain_error("Kirchhoff minor needs at least two vertices");
    std::vector<std::vector<Int>> a = kirchhoff_matrix(g);
    KirchhoffMinor m;
    m.n = g.vertex_count() - 1;
    m.entries.assign(m.n, std::vector<Int>(m.n));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) m.entries[i][j] = a[i][j];
    return m;
}

Int det_exact(std::vector<std::vector<Int>> m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix must be square");
    if (n == 0) return 1;

    int sign = 1;
    Int prev_pivot = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row == -1) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                // Bareiss update: the division is exact.
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev_pivot;
            }
            m[i][k] = 0;
        }
        prev_pivot = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

Int count_trees_matrix(const Pseudograph& g) {
    if (g.vertex_count() == 1) return 1;  // the empty tree spans it
    return det_exact(kirchhoff_minor(g).entries);
}

Int cayley_trees(int p) {
    if (p < 1) throw std::invalid_argument("cayley_trees needs p >= 1");
    if (p <= 2) return 1;
    return pow_int(Int(p), static_cast<unsigned long>(p - 2));
}

Int complete_minus_edge_trees(int p) {
    if (p < 3) throw std::invalid_argument("complete_minus_edge_trees needs p >= 3");
    return Int(p - 2) * pow_int(Int(p), static_cast<unsigned long>(p - 3));
}

Int fan_trees(int n) {
    if (n < 1) throw std::invalid_argument("fan_trees needs n >= 1");
    return fibonacci(2ul * n);
}

Int zigzag_trees(int n) {
    if (n < 1) throw std::invalid_argument("zigzag_trees needs n >= 1");
    return fibonacci(2ul * n);
}

Int ladder_trees(int n) {
    if (n < 1) throw std::invalid_argument("ladder_trees needs n >= 1");
    Int prev = 1, cur = 4;  // b_1, b_2
    if (n == 1) return prev;
    for (int i = 2; i < n; ++i) {
        Int next = 4 * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Int wheel_trees(int n) {
    if (n < 1) throw std::invalid_argument("wheel_trees needs n >= 1");
    return lucas(2ul * n) - 2;
}

}  // namespace exgraph
