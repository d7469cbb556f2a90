#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "exgraph/numeric.hpp"

namespace exgraph {

enum class EdgeColor : uint8_t { red = 0, blue = 1 };

// Complete red/blue assignment on the edges of K_n.
class EdgeColoring2 {
public:
    explicit EdgeColoring2(int n, EdgeColor fill = EdgeColor::blue);

    int n() const { return n_; }
    EdgeColor color(int i, int j) const;
    void set_color(int i, int j, EdgeColor c);
    EdgeColoring2 swapped() const;  // red <-> blue

    // Colors pair {i,j} by the 15-bit mask convention used for K_6 sweeps:
    // bit index = pair index in lexicographic (i<j) order, set = red.
    static EdgeColoring2 from_mask(int n, uint64_t mask);

private:
    int pair_index(int i, int j) const;
    int n_;
    std::vector<uint8_t> colors_;
};

// Pair {i,j} red iff min(|i-j|, n-|i-j|) is a listed chord length.
EdgeColoring2 circulant_coloring(int n, const std::set<int>& red_chords);

struct CliqueWitness {
    bool found = false;
    std::vector<int> vertices;  // a monochromatic k-clique when found
};
// Exhaustive search over k-subsets with pruning.
CliqueWitness has_mono_clique(const EdgeColoring2& c, int k, EdgeColor color);

// Lower-side witnesses and the exhaustive r(3,3) upper side. Supported pairs:
// (2,n) for any n, (3,3) both sides, (3,4) and (4,4) lower side.
bool verify_ramsey_value(int m, int n);

// s(m,n) = binom(m+n-2, m-1) computed by its recurrence.
Int ramsey_s(int m, int n);
// The table of known Ramsey numbers r(m,n) for m <= 4, n <= 9 (symmetric).
std::optional<int> ramsey_r_known(int m, int n);

struct RamseyBoundValues {
    Int s;                       // s(m,n)
    Int upper_4n;                // 4^n / 4, for r(n,n)
    Int lower_2n2_floor;         // floor(2^{n/2} / 8), the corollary's R
    bool lower_condition;        // binom(R,n) < 2^{binom(n,2)-1}
    Rat expected_mono;           // W = 2 binom(R,n) 2^{-binom(n,2)}
    Int counting_omega;          // Omega = 2^{binom(R,2)}
    Int counting_m;              // M = binom(R,n) * Omega * 2 / 2^{binom(n,2)}
};
// Bound quantities for the pair (R, n); `s` is ramsey_s(R, n).
RamseyBoundValues bound_values(int R, int n);

// Expected monochromatic Hamiltonian cycles in a random coloring of K_n:
// (n-1)! / 2^n.
Rat expected_mono_hamiltonian(int n);

// P_n = 2^-n * sum_{k <= n/3} binom(n,k): probability of at most n/3 heads.
Rat coin_tail(int n);
// P_n < (19/20)^n and the cubed Markov bound P_n^3 <= (3/4)^{3n} * 2^n.
bool markov_bound_check(int n);

struct FarSetResult {
    std::vector<uint64_t> vertices;  // bit-string labels in Q_n
    int min_pairwise_distance = 0;   // 0 when fewer than two vertices
    bool reached_target = false;
};
// Randomized greedy: sample vertices of Q_n, keep those at Hamming distance
// > n/3 from all kept so far. Reports what it found; never asserts success.
FarSetResult qn_far_set_search(int n, int k, int trials, uint64_t seed);

int hamming_distance(uint64_t a, uint64_t b);

}  // namespace exgraph
