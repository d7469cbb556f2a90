#include "exgraph/egf.hpp"

#include <stdexcept>

namespace exgraph {

namespace {

void require_same_horizon(const BigSeq& a, const BigSeq& b) {
    if (a.horizon() != b.horizon()) throw std::invalid_argument("horizon mismatch");
}

}  // namespace

BigSeq seq_add(const BigSeq& a, const BigSeq& b) {
    require_same_horizon(a, b);
    BigSeq s(a.horizon());
    for (int n = 0; n <= a.horizon(); ++n) s.at(n) = a.at(n) + b.at(n);
    return s;
}

BigSeq seq_mul(const BigSeq& a, const BigSeq& b) {
    require_same_horizon(a, b);
    BigSeq p(a.horizon());
    for (int n = 0; n <= a.horizon(); ++n) {
        Int acc = 0;
        for (int i = 0; i <= n; ++i) acc += binomial(n, i) * a.at(i) * b.at(n - i);
        p.at(n) = acc;
    }
    return p;
}

BigSeq seq_shift_mul_x(const BigSeq& a) {
    BigSeq b(a.horizon());
    for (int n = 1; n <= a.horizon(); ++n) b.at(n) = Int(n) * a.at(n - 1);
    return b;
}

BigSeq seq_derivative(const BigSeq& a) {
    BigSeq b(a.horizon());
    for (int n = 0; n + 1 <= a.horizon(); ++n) b.at(n) = a.at(n + 1);
    return b;
}

BigSeq exp_formula_forward(const BigSeq& c) {
    if (c.horizon() < 0 || c.at(0) != 0)
        throw std::invalid_argument("connected class must have c_0 = 0");
    BigSeq a(c.horizon());
    for (int n = 0; n + 1 <= c.horizon(); ++n) {
        Int acc = c.at(n + 1);
        for (int m = 1; m <= n; ++m) acc += binomial(n, m) * a.at(m) * c.at(n + 1 - m);
        a.at(n + 1) = acc;
    }
    return a;
}

BigSeq exp_formula_inverse(const BigSeq& a) {
    if (a.horizon() < 0 || a.at(0) != 0)
        throw std::invalid_argument("structure counts must have a_0 = 0");
    BigSeq c(a.horizon());
    for (int n = 0; n + 1 <= a.horizon(); ++n) {
        Int acc = a.at(n + 1);
        for (int m = 1; m <= n; ++m) acc -= binomial(n, m) * a.at(m) * c.at(n + 1 - m);
        c.at(n + 1) = acc;
    }
    return c;
}

BigSeq connected_class(const std::string& kind, int horizon) {
    if (horizon < 0) throw std::invalid_argument("horizon must be nonnegative");
    BigSeq c(horizon);
    if (kind == "perfect_matchings") {
        if (horizon >= 2) c.at(2) = 1;  // the only connected piece is K_2
        return c;
    }
    if (kind == "all_matchings") {
        if (horizon >= 1) c.at(1) = 1;
        if (horizon >= 2) c.at(2) = 1;
        return c;
    }
    if (kind == "two_factors" || kind == "hamiltonian_cycles") {
        // Spanning cycles of K_n: (n-1)!/2 for n >= 3.
        for (int n = 3; n <= horizon; ++n) c.at(n) = factorial(n - 1) / 2;
        return c;
    }
    if (kind == "spanning_forests") {
        // Connected pieces are trees: c_n = n^{n-2} (Cayley).
        for (int n = 1; n <= horizon; ++n)
            c.at(n) = n <= 2 ? Int(1) : pow_int(Int(n), static_cast<unsigned long>(n - 2));
        return c;
    }
    if (kind == "connected_subgraphs") {
        // Derived from a_n = 2^binom(n,2) by the inverse formula.
        BigSeq a(horizon);
        for (int n = 1; n <= horizon; ++n)
            a.at(n) = pow2(static_cast<unsigned long>(n) * (n - 1) / 2);
        return exp_formula_inverse(a);
    }
    throw std::invalid_argument("unknown counting kind '" + kind + "'");
}

Int named_count(const std::string& kind, int n) {
    if (n < 1) throw std::invalid_argument("named_count needs n >= 1");
    if (kind == "hamiltonian_cycles") return n < 3 ? Int(0) : Int(factorial(n - 1) / 2);
    if (kind == "connected_subgraphs") return connected_class(kind, n).at(n);
    return exp_formula_forward(connected_class(kind, n)).at(n);
}

std::vector<Int> named_count_sequence(const std::string& kind, int n) {
    if (n < 1) throw std::invalid_argument("named_count_sequence needs n >= 1");
    std::vector<Int> out;
    if (kind == "hamiltonian_cycles") {
        for (int i = 1; i <= n; ++i) out.push_back(named_count(kind, i));
        return out;
    }
    const BigSeq values = kind == "connected_subgraphs"
                              ? connected_class(kind, n)
                              : exp_formula_forward(connected_class(kind, n));
    for (int i = 1; i <= n; ++i) out.push_back(values.at(i));
    return out;
}

bool fibonacci_egf_check(int horizon) {
    if (horizon < 2) throw std::invalid_argument("horizon must be at least 2");
    BigSeq f(horizon);
    for (int n = 0; n <= horizon; ++n) f.at(n) = fibonacci(static_cast<unsigned long>(n));

    // F'' = F + F' says f_{n+2} = f_n + f_{n+1} coefficientwise.
    const BigSeq second = seq_derivative(seq_derivative(f));
    const BigSeq sum = seq_add(f, seq_derivative(f));
    for (int n = 0; n + 2 <= horizon; ++n)
        if (second.at(n) != sum.at(n)) return false;

    // Binet via rational interval bounds: lo <= sqrt(5) <= hi with
    // hi - lo = 2^-bits. f_n must be the unique integer near phi^n / sqrt(5).
    const unsigned long bits = 256;
    const Int scaled = isqrt(Int(5) * pow2(2 * bits));
    const Rat lo = make_rat(scaled, pow2(bits));
    const Rat hi = make_rat(scaled + 1, pow2(bits));
    const Rat phi_lo = (1 + lo) / 2;
    const Rat phi_hi = (1 + hi) / 2;
    for (int n = 1; n <= horizon; ++n) {
        // phi^n / sqrt5 in [phi_lo^n / hi, phi_hi^n / lo]; |psi^n / sqrt5| < 1/2.
        const Rat half(1, 2);
        const Rat low = pow_rat(phi_lo, n) / hi + half;
        const Rat high = pow_rat(phi_hi, n) / lo + half;
        const Int round_lo = low.get_num() / low.get_den();
        const Int round_hi = high.get_num() / high.get_den();
        if (round_lo != round_hi) return false;  // interval too wide to round
        if (round_lo != f.at(n)) return false;
    }
    return true;
}

}  // namespace exgraph
