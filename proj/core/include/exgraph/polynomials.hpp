#pragma once

#include <map>
#include <string>
#include <vector>

#include "exgraph/graph.hpp"
#include "exgraph/numeric.hpp"

namespace exgraph {

// Dense univariate polynomial over exact integers; index = power of x,
// trailing zeros trimmed.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coefficients);
    static IntPolynomial constant(Int c);
    static IntPolynomial x_power(int n);  // x^n

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    Int coeff(int i) const;
    const std::vector<Int>& coefficients() const { return coeffs_; }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    Int evaluate(const Int& x) const;
    IntPolynomial shifted_arg(const Int& c) const;  // P(x + c)

    friend IntPolynomial operator+(const IntPolynomial&, const IntPolynomial&);
    friend IntPolynomial operator-(const IntPolynomial&, const IntPolynomial&);
    friend IntPolynomial operator*(const IntPolynomial&, const IntPolynomial&);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    std::string str() const;  // "c0 c1 c2 ..."

private:
    void trim();
    std::vector<Int> coeffs_;
};

// Sparse multivariate polynomial: exponent vector (one slot per vertex) to
// coefficient; zero coefficients are never stored.
class MultiPolynomial {
public:
    explicit MultiPolynomial(int variables);

    int variables() const { return vars_; }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }
    void add_term(const std::vector<int>& exponents, const Int& c);
    Int coefficient(const std::vector<int>& exponents) const;
    bool is_homogeneous(int total_degree) const;

    Int evaluate(const std::vector<Int>& values) const;
    // All variables at `others`, variable `var` at `x`.
    Int evaluate_at(int var, const Int& x, const Int& others) const;
    // Sum of coefficients of the monomials with the given exponent on `var`
    // (everything else evaluated at 1).
    Int sum_with_var_exponent(int var, int exponent) const;
    MultiPolynomial permuted(const std::vector<int>& new_of_old) const;

    friend MultiPolynomial operator+(const MultiPolynomial&, const MultiPolynomial&);
    friend MultiPolynomial operator*(const MultiPolynomial&, const MultiPolynomial&);
    friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

    std::string str() const;  // "e1,...,ep:c" lines in term order

private:
    int vars_;
    std::map<std::vector<int>, Int> terms_;
};

// P_G(x): proper colorings of G in x colors. Deletion-minus-contraction with
// null-graph base case; a loop forces the zero polynomial; parallel edges
// collapse.
IntPolynomial chromatic_polynomial(const Pseudograph& g);

// Closed forms: complete, cycle, path/tree, fan, ladder, wheel.
IntPolynomial chromatic_family(const std::string& family, int n);

// M_G(x) = sum m_n x^n, m_n = number of n-edge matchings. Loops rejected;
// parallel edges count as distinct matching edges.
IntPolynomial matching_polynomial(const Pseudograph& g);

struct MatchingStats {
    Int total;        // M(1)
    Int even_count;   // (M(1) + M(-1)) / 2
    Int odd_count;    // (M(1) - M(-1)) / 2
    int matching_number;
};
MatchingStats matching_stats(const Pseudograph& g);

// S_G = sum over spanning trees of x_1^{d_1-1} ... x_p^{d_p-1}; homogeneous of
// total degree p-2, and S_G(1,...,1) = s(G). Enumerates trees (guard on q).
MultiPolynomial spanning_tree_polynomial(const Pseudograph& g, int max_edges = 20);

struct SpanningTreeQueries {
    Int leaf_at_v1;          // S at x_1 = 0
    Int odd_degree_at_v1;    // (S(1,..) + S(-1,1,..)) / 2
    Int even_degree_at_v1;   // (S(1,..) - S(-1,1,..)) / 2
};
SpanningTreeQueries spanning_tree_queries(const Pseudograph& g, int max_edges = 20);
// Trees with degree k at the first vertex; for K_p this is C(p-2,k-1) (p-1)^{p-k-1}.
Int degree_k_trees_at_v1(const Pseudograph& g, int k, int max_edges = 20);

}  // namespace exgraph
