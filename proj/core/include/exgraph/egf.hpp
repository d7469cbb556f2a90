#pragma once

#include <string>
#include <vector>

#include "exgraph/numeric.hpp"

namespace exgraph {

// Sequence a_0..a_N attached to the exponential generating function
// sum a_n x^n / n!. The terms themselves are stored (always n!-scaled), so
// every operation stays in exact integers via binomial convolutions.
struct BigSeq {
    std::vector<Int> terms;

    BigSeq() = default;
    explicit BigSeq(int horizon) : terms(horizon + 1, Int(0)) {}
    explicit BigSeq(std::vector<Int> t) : terms(std::move(t)) {}

    int horizon() const { return static_cast<int>(terms.size()) - 1; }
    const Int& at(int n) const { return terms.at(n); }
    Int& at(int n) { return terms.at(n); }

    friend bool operator==(const BigSeq&, const BigSeq&) = default;
};

BigSeq seq_add(const BigSeq& a, const BigSeq& b);
// Product formula: p_n = sum_i binom(n,i) a_i b_{n-i}.
BigSeq seq_mul(const BigSeq& a, const BigSeq& b);
// x * A(x): b_n = n * a_{n-1}.
BigSeq seq_shift_mul_x(const BigSeq& a);
// A'(x): drop the zero-term and shift indexes by one (last term padded 0).
BigSeq seq_derivative(const BigSeq& a);

// Exponential formula 1 + A = e^C solved forward: from the connected-class
// counts c (c_0 = 0) to the all-structures counts a via
// a_{n+1} = c_{n+1} + sum_{m=1..n} binom(n,m) a_m c_{n+1-m}  (A' = (1+A) C').
BigSeq exp_formula_forward(const BigSeq& c);
// The same identity solved for c (a_0 = 0):
// c_{n+1} = a_{n+1} - sum_{m=1..n} binom(n,m) a_m c_{n+1-m}.
BigSeq exp_formula_inverse(const BigSeq& a);

// Connected-class sequences for the worked applications, up to `horizon`.
BigSeq connected_class(const std::string& kind, int horizon);

// kind: perfect_matchings | all_matchings | two_factors | spanning_forests |
//       connected_subgraphs | hamiltonian_cycles. Value at K_n.
Int named_count(const std::string& kind, int n);
std::vector<Int> named_count_sequence(const std::string& kind, int n);  // indices 1..n

// Checks f_{n+2} = f_{n+1} + f_n coefficientwise on the Fibonacci EGF
// (F'' = F + F') up to the horizon, and that Binet's formula rounds to f_n
// using rational interval bounds for sqrt(5).
bool fibonacci_egf_check(int horizon);

}  // namespace exgraph
