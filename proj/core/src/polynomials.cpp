#include "exgraph/polynomials.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "exgraph/spancount.hpp"

namespace exgraph {

IntPolynomial::IntPolynomial(std::vector<Int> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

IntPolynomial IntPolynomial::constant(Int c) { return IntPolynomial({std::move(c)}); }

IntPolynomial IntPolynomial::x_power(int n) {
    if (n < 0) throw std::invalid_argument("negative power");
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    return IntPolynomial(std::move(c));
}

Int IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::shifted_arg(const Int& c) const {
    // P(x+c) by Horner over polynomial coefficients.
    IntPolynomial acc;
    const IntPolynomial x_plus_c({c, Int(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x_plus_c + IntPolynomial::constant(*it);
    return acc;
}

IntPolynomial operator+(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    std::vector<Int> c(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), Int(0));
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) c[i] += lhs.coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] += rhs.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    std::vector<Int> c(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), Int(0));
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) c[i] += lhs.coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] -= rhs.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Int> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ' ';
        out << coeffs_[i].get_str();
    }
    return out.str();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

MultiPolynomial::MultiPolynomial(int variables) : vars_(variables) {
    if (vars_ < 1) throw std::invalid_argument("multipolynomial needs at least one variable");
}

void MultiPolynomial::add_term(const std::vector<int>& exponents, const Int& c) {
    if (static_cast<int>(exponents.size()) != vars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int MultiPolynomial::coefficient(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Int(0) : it->second;
}

bool MultiPolynomial::is_homogeneous(int total_degree) const {
    for (const auto& [exps, c] : terms_)
        if (std::accumulate(exps.begin(), exps.end(), 0) != total_degree) return false;
    return true;
}

Int MultiPolynomial::evaluate(const std::vector<Int>& values) const {
    if (static_cast<int>(values.size()) != vars_)
        throw std::invalid_argument("value vector length mismatch");
    Int acc = 0;
    for (const auto& [exps, c] : terms_) {
        Int term = c;
        for (int v = 0; v < vars_; ++v)
            if (exps[v] > 0) term *= pow_int(values[v], static_cast<unsigned long>(exps[v]));
        acc += term;
    }
    return acc;
}

Int MultiPolynomial::evaluate_at(int var, const Int& x, const Int& others) const {
    std::vector<Int> values(vars_, others);
    values.at(var) = x;
    return evaluate(values);
}

Int MultiPolynomial::sum_with_var_exponent(int var, int exponent) const {
    Int acc = 0;
    for (const auto& [exps, c] : terms_)
        if (exps.at(var) == exponent) acc += c;
    return acc;
}

MultiPolynomial MultiPolynomial::permuted(const std::vector<int>& new_of_old) const {
    if (static_cast<int>(new_of_old.size()) != vars_)
        throw std::invalid_argument("permutation length mismatch");
    MultiPolynomial out(vars_);
    for (const auto& [exps, c] : terms_) {
        std::vector<int> moved(vars_, 0);
        for (int v = 0; v < vars_; ++v) moved[new_of_old[v]] = exps[v];
        out.add_term(moved, c);
    }
    return out;
}

MultiPolynomial operator+(const MultiPolynomial& lhs, const MultiPolynomial& rhs) {
    if (lhs.vars_ != rhs.vars_) throw std::invalid_argument("variable count mismatch");
    MultiPolynomial out = lhs;
    for (const auto& [exps, c] : rhs.terms_) out.add_term(exps, c);
    return out;
}

MultiPolynomial operator*(const MultiPolynomial& lhs, const MultiPolynomial& rhs) {
    if (lhs.vars_ != rhs.vars_) throw std::invalid_argument("variable count mismatch");
    MultiPolynomial out(lhs.vars_);
    for (const auto& [le, lc] : lhs.terms_)
        for (const auto& [re, rc] : rhs.terms_) {
            std::vector<int> exps(lhs.vars_);
            for (int v = 0; v < lhs.vars_; ++v) exps[v] = le[v] + re[v];
            out.add_term(exps, lc * rc);
        }
    return out;
}

std::string MultiPolynomial::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [exps, c] : terms_) {
        if (!first) out << '\n';
        first = false;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (i) out << ',';
            out << exps[i];
        }
        out << ':' << c.get_str();
    }
    return out.str();
}

namespace {

// Parallel edges do not change P_G; collapse to a simple graph.
Pseudograph collapse_parallels(const Pseudograph& g) {
    std::vector<Edge> kept;
    std::vector<std::pair<int, int>> seen;
    for (const Edge& e : g.edges()) {
        const std::pair<int, int> key{std::min(e.a, e.b), std::max(e.a, e.b)};
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
            seen.push_back(key);
            kept.push_back(e);
        }
    }
    return Pseudograph(g.vertex_count(), std::move(kept));
}

std::string chroma_key(const Pseudograph& g);

// Deletion-minus-contraction on a simple graph (connectivity not assumed).
IntPolynomial chromatic_simple(Pseudograph g,
                               std::unordered_map<std::string, IntPolynomial>& memo) {
    const int p = g.vertex_count();
    if (g.edge_count() == 0) return IntPolynomial::x_power(p);
    if (is_tree(g)) {
        // x (x-1)^q for any tree with q edges.
        IntPolynomial acc = IntPolynomial::x_power(1);
        const IntPolynomial x_minus_1({Int(-1), Int(1)});
        for (int i = 0; i < g.edge_count(); ++i) acc = acc * x_minus_1;
        return acc;
    }
    const std::string key = chroma_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const Pseudograph minus = collapse_parallels(g.delete_edge(0));
    const Pseudograph contracted = collapse_parallels(g.contract_edge(0));
    IntPolynomial result = chromatic_simple(minus, memo) - chromatic_simple(contracted, memo);
    auto it = memo.emplace(key, std::move(result)).first;
    return it->second;
}

std::string chroma_key(const Pseudograph& g) {
    // Same degree-refined key scheme as the spanning-tree memo.
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
    for (const Edge& e : g.edges())
        relabeled.emplace_back(std::min(rank[e.a], rank[e.b]), std::max(rank[e.a], rank[e.b]));
    std::sort(relabeled.begin(), relabeled.end());
    std::ostringstream key;
    key << p << ';';
    for (const auto& [a, b] : relabeled) key << a << ',' << b << ';';
    return key.str();
}

}  // namespace

IntPolynomial chromatic_polynomial(const Pseudograph& g) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e)) return {};  // the ends of a loop can never differ
    const Pseudograph simple = collapse_parallels(g);
    std::unordered_map<std::string, IntPolynomial> memo;
    IntPolynomial acc = IntPolynomial::constant(1);
    for (const Pseudograph& part : split_components(simple).components)
        acc = acc * chromatic_simple(part, memo);
    return acc;
}

IntPolynomial chromatic_family(const std::string& family, int n) {
    if (n < 1) throw std::invalid_argument("chromatic_family needs n >= 1");
    const IntPolynomial x = IntPolynomial::x_power(1);
    const IntPolynomial x_minus_1({Int(-1), Int(1)});
    auto power = [](const IntPolynomial& base, int e) {
        IntPolynomial acc = IntPolynomial::constant(1);
        for (int i = 0; i < e; ++i) acc = acc * base;
        return acc;
    };
    if (family == "complete") {
        IntPolynomial acc = IntPolynomial::constant(1);
        for (int i = 0; i < n; ++i) acc = acc * IntPolynomial({Int(-i), Int(1)});
        return acc;
    }
    if (family == "cycle") {
        if (n < 3) throw std::invalid_argument("chromatic cycle needs n >= 3");
        // (x-1)^n + (-1)^n (x-1)
        const IntPolynomial sign = IntPolynomial::constant(n % 2 == 0 ? 1 : -1);
        return power(x_minus_1, n) + sign * x_minus_1;
    }
    if (family == "path" || family == "tree") return x * power(x_minus_1, n - 1);
    if (family == "fan") return x * x_minus_1 * power(IntPolynomial({Int(-2), Int(1)}), n - 1);
    if (family == "ladder")
        return x * x_minus_1 * power(IntPolynomial({Int(3), Int(-3), Int(1)}), n - 1);
    if (family == "wheel") {
        if (n < 3) throw std::invalid_argument("chromatic wheel needs n >= 3");
        // P_{W_n}(x) = x * P_{C_n}(x-1) from P_{W_n}(x+1) = (x+1) P_{C_n}(x).
        return x * chromatic_family("cycle", n).shifted_arg(Int(-1));
    }
    throw std::invalid_argument("unknown chromatic family '" + family + "'");
}

namespace {

IntPolynomial matching_impl(const Pseudograph& g,
                            std::unordered_map<std::string, IntPolynomial>& memo) {
    if (g.edge_count() == 0) return IntPolynomial::constant(1);
    const std::string key = chroma_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int e = g.edge_count() - 1;
    const Edge ed = g.edge(e);
    // M_G = M_{G-e} + x * M_{G-[e]}; G-[e] drops both endpoints.
    Pseudograph both = g.delete_vertex(std::max(ed.a, ed.b));
    if (both.vertex_count() > 1 && std::min(ed.a, ed.b) < both.vertex_count())
        both = both.delete_vertex(std::min(ed.a, ed.b));
    IntPolynomial result = matching_impl(g.delete_edge(e), memo);
    if (g.vertex_count() > 2) {
        result = result + IntPolynomial({Int(0), Int(1)}) * matching_impl(both, memo);
    } else {
        // Removing both endpoints empties the graph: the lone matching is {e}.
        result = result + IntPolynomial({Int(0), Int(1)});
    }
    memo.emplace(key, result);
    return result;
}

}  // namespace

IntPolynomial matching_polynomial(const Pseudograph& g) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e))
            throw std::invalid_argument("matching polynomial rejects loops");
    std::unordered_map<std::string, IntPolynomial> memo;
    return matching_impl(g, memo);
}

MatchingStats matching_stats(const Pseudograph& g) {
    const IntPolynomial m = matching_polynomial(g);
    const Int at1 = m.evaluate(1);
    const Int atm1 = m.evaluate(-1);
    MatchingStats out;
    out.total = at1;
    out.even_count = (at1 + atm1) / 2;
    out.odd_count = (at1 - atm1) / 2;
    out.matching_number = std::max(m.degree(), 0);
    return out;
}

MultiPolynomial spanning_tree_polynomial(const Pseudograph& g, int max_edges) {
    if (g.vertex_count() < 2)
        throw std::domain_error("spanning-tree polynomial needs p >= 2");
    if (!is_connected(g)) throw std::domain_error("spanning-tree polynomial needs a connected graph");
    const int p = g.vertex_count();
    MultiPolynomial s(p);
    for_each_spanning_tree(
        g,
        [&](const std::vector<int>& tree) {
            std::vector<int> exps(p, 0);
            for (int e : tree) {
                ++exps[g.edge(e).a];
                ++exps[g.edge(e).b];
            }
            for (int v = 0; v < p; ++v) --exps[v];  // x_i^{d_i - 1}
            s.add_term(exps, 1);
        },
        max_edges);
    return s;
}

SpanningTreeQueries spanning_tree_queries(const Pseudograph& g, int max_edges) {
    const MultiPolynomial s = spanning_tree_polynomial(g, max_edges);
    SpanningTreeQueries out;
    out.leaf_at_v1 = s.evaluate_at(0, 0, 1);
    const Int at1 = s.evaluate_at(0, 1, 1);
    const Int atm1 = s.evaluate_at(0, -1, 1);
    out.odd_degree_at_v1 = (at1 + atm1) / 2;
    out.even_degree_at_v1 = (at1 - atm1) / 2;
    return out;
}

Int degree_k_trees_at_v1(const Pseudograph& g, int k, int max_edges) {
    if (k < 1) throw std::invalid_argument("tree degrees are at least 1");
    return spanning_tree_polynomial(g, max_edges).sum_with_var_exponent(0, k - 1);
}

}  // namespace exgraph
