#include "exgraph/ramsey.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace exgraph {

EdgeColoring2::EdgeColoring2(int n, EdgeColor fill) : n_(n) {
    if (n < 1) throw std::invalid_argument("coloring needs at least one vertex");
    colors_.assign(static_cast<size_t>(n) * (n - 1) / 2, static_cast<uint8_t>(fill));
}

int EdgeColoring2::pair_index(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::out_of_range("pair index out of range");
    if (i > j) std::swap(i, j);
    // Lexicographic (i<j): pairs (0,1),(0,2),...,(0,n-1),(1,2),...
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

EdgeColor EdgeColoring2::color(int i, int j) const {
    return static_cast<EdgeColor>(colors_[pair_index(i, j)]);
}

void EdgeColoring2::set_color(int i, int j, EdgeColor c) {
    colors_[pair_index(i, j)] = static_cast<uint8_t>(c);
}

EdgeColoring2 EdgeColoring2::swapped() const {
    EdgeColoring2 out = *this;
    for (uint8_t& c : out.colors_) c ^= 1;
    return out;
}

EdgeColoring2 EdgeColoring2::from_mask(int n, uint64_t mask) {
    EdgeColoring2 out(n);
    for (size_t b = 0; b < out.colors_.size(); ++b)
        out.colors_[b] = (mask >> b) & 1 ? static_cast<uint8_t>(EdgeColor::red)
                                         : static_cast<uint8_t>(EdgeColor::blue);
    return out;
}

EdgeColoring2 circulant_coloring(int n, const std::set<int>& red_chords) {
    if (n < 2) throw std::invalid_argument("circulant coloring needs n >= 2");
    for (int chord : red_chords)
        if (chord < 1 || chord > n / 2)
            throw std::invalid_argument("chord lengths must lie in 1..n/2");
    EdgeColoring2 out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int diff = std::min(j - i, n - (j - i));
            out.set_color(i, j, red_chords.count(diff) ? EdgeColor::red : EdgeColor::blue);
        }
    return out;
}

namespace {

bool extend_clique(const EdgeColoring2& c, EdgeColor color, int k, std::vector<int>& chosen,
                   std::vector<int>& candidates) {
    if (static_cast<int>(chosen.size()) == k) return true;
    if (static_cast<int>(chosen.size() + candidates.size()) < k) return false;
    for (size_t idx = 0; idx < candidates.size(); ++idx) {
        const int v = candidates[idx];
        std::vector<int> next;
        for (size_t rest = idx + 1; rest < candidates.size(); ++rest)
            if (c.color(v, candidates[rest]) == color) next.push_back(candidates[rest]);
        chosen.push_back(v);
        if (extend_clique(c, color, k, chosen, next)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

CliqueWitness has_mono_clique(const EdgeColoring2& c, int k, EdgeColor color) {
    if (k < 1 || k > c.n()) throw std::invalid_argument("clique size out of range");
    CliqueWitness out;
    std::vector<int> chosen;
    std::vector<int> candidates(c.n());
    for (int v = 0; v < c.n(); ++v) candidates[v] = v;
    if (extend_clique(c, color, k, chosen, candidates)) {
        out.found = true;
        out.vertices = chosen;
    }
    return out;
}

bool verify_ramsey_value(int m, int n) {
    if (m > n) std::swap(m, n);
    if (m == 1) return true;  // K_1 has no edges at all
    if (m == 2) {
        // Lower side: the all-blue K_{n-1} has no red K_2, and a blue K_n
        // does not fit in n-1 vertices. Upper side is forced: a coloring of
        // K_n without a red edge is all blue.
        if (n > 2) {
            const EdgeColoring2 below(n - 1, EdgeColor::blue);
            if (has_mono_clique(below, 2, EdgeColor::red).found) return false;
        }
        return true;
    }
    if (m == 3 && n == 3) {
        const EdgeColoring2 pentagon = circulant_coloring(5, {1});
        if (has_mono_clique(pentagon, 3, EdgeColor::red).found) return false;
        if (has_mono_clique(pentagon, 3, EdgeColor::blue).found) return false;
        for (uint64_t mask = 0; mask < (uint64_t(1) << 15); ++mask) {
            const EdgeColoring2 c = EdgeColoring2::from_mask(6, mask);
            if (!has_mono_clique(c, 3, EdgeColor::red).found &&
                !has_mono_clique(c, 3, EdgeColor::blue).found)
                return false;
        }
        return true;
    }
    if (m == 3 && n == 4) {
        // Lower side only: K_8 split into chords {1,4} vs {2,3}.
        const EdgeColoring2 c = circulant_coloring(8, {1, 4});
        return !has_mono_clique(c, 3, EdgeColor::red).found &&
               !has_mono_clique(c, 4, EdgeColor::blue).found;
    }
    if (m == 4 && n == 4) {
        // Lower side only: the rationally symmetric K_17 decomposition.
        const EdgeColoring2 c = circulant_coloring(17, {1, 2, 4, 8});
        return !has_mono_clique(c, 4, EdgeColor::red).found &&
               !has_mono_clique(c, 4, EdgeColor::blue).found;
    }
    throw std::domain_error("no feasible verification for this Ramsey pair");
}

Int ramsey_s(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("s(m,n) needs positive arguments");
    // s(m,n) = s(m-1,n) + s(m,n-1) with s(1,n) = s(n,1) = 1.
    std::vector<std::vector<Int>> table(m + 1, std::vector<Int>(n + 1, Int(1)));
    for (int i = 2; i <= m; ++i)
        for (int j = 2; j <= n; ++j) table[i][j] = table[i - 1][j] + table[i][j - 1];
    return table[m][n];
}

std::optional<int> ramsey_r_known(int m, int n) {
    if (m > n) std::swap(m, n);
    if (m < 1 || n < 1 || n > 9) return std::nullopt;
    if (m == 1) return 1;
    if (m == 2) return n;
    static const int row3[] = {6, 9, 14, 18, 23, 28, 36};   // n = 3..9
    static const int row4[] = {18, 25};                      // n = 4..5
    if (m == 3) return row3[n - 3];
    if (m == 4 && n <= 5) return row4[n - 4];
    return std::nullopt;
}

RamseyBoundValues bound_values(int R, int n) {
    if (R < 1 || n < 1) throw std::invalid_argument("bound_values needs positive arguments");
    RamseyBoundValues out;
    out.s = ramsey_s(R, n);
    out.upper_4n = pow_int(Int(4), n) / 4;
    out.lower_2n2_floor = isqrt(pow2(static_cast<unsigned long>(n))) / 8;
    const unsigned long choose2 = static_cast<unsigned long>(n) * (n - 1) / 2;
    const Int binRn = R >= n ? binomial(R, n) : Int(0);
    out.lower_condition = choose2 >= 1 && binRn < pow2(choose2 - 1);
    out.expected_mono = make_rat(2 * binRn, pow2(choose2));
    out.counting_omega = pow2(static_cast<unsigned long>(R) * (R - 1) / 2);
    const Rat m_exact = make_rat(binRn * out.counting_omega * 2, pow2(choose2));
    if (m_exact.get_den() != 1)
        throw std::logic_error("counting M is integral whenever R >= n");
    out.counting_m = m_exact.get_num();
    return out;
}

Rat expected_mono_hamiltonian(int n) {
    if (n < 1) throw std::invalid_argument("needs n >= 1");
    // (n-1)!/2 cycles, each monochromatic with probability 2 * 2^-n.
    return make_rat(factorial(n - 1), pow2(static_cast<unsigned long>(n)));
}

Rat coin_tail(int n) {
    if (n < 1) throw std::invalid_argument("coin_tail needs n >= 1");
    Int sum = 0;
    for (int k = 0; 3 * k <= n; ++k) sum += binomial(n, k);
    return make_rat(sum, pow2(static_cast<unsigned long>(n)));
}

bool markov_bound_check(int n) {
    const Rat p = coin_tail(n);
    const Rat claim = pow_rat(Rat(19, 20), n);
    if (!(p < claim)) return false;
    // Markov gives P_n * 2^{-n/3} <= (3/4)^n; cubed to stay rational:
    // P_n^3 <= (3/4)^{3n} * 2^n.
    const Rat lhs = pow_rat(p, 3);
    const Rat rhs = pow_rat(Rat(3, 4), 3ul * n) * Rat(pow2(n), 1);
    return lhs <= rhs;
}

int hamming_distance(uint64_t a, uint64_t b) { return std::popcount(a ^ b); }

FarSetResult qn_far_set_search(int n, int k, int trials, uint64_t seed) {
    if (n < 3 || n > 63) throw std::invalid_argument("dimension must lie in 3..63");
    if (k < 1) throw std::invalid_argument("target size must be positive");
    std::mt19937_64 rng(seed);
    FarSetResult out;
    for (int t = 0; t < trials && static_cast<int>(out.vertices.size()) < k; ++t) {
        const uint64_t v = rng() & ((uint64_t(1) << n) - 1);
        bool far = true;
        for (uint64_t kept : out.vertices)
            if (3 * hamming_distance(kept, v) <= n) {  // distance > n/3 required
                far = false;
                break;
            }
        if (far) out.vertices.push_back(v);
    }
    out.reached_target = static_cast<int>(out.vertices.size()) >= k;
    if (out.vertices.size() >= 2) {
        int best = n + 1;
        for (size_t i = 0; i < out.vertices.size(); ++i)
            for (size_t j = i + 1; j < out.vertices.size(); ++j)
                best = std::min(best, hamming_distance(out.vertices[i], out.vertices[j]));
        out.min_pairwise_distance = best;
    }
    return out;
}

}  // namespace exgraph
