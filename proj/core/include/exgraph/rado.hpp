#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "exgraph/graph.hpp"
#include "exgraph/numeric.hpp"

namespace exgraph {

// Adjacency oracle over arbitrary-precision labels together with a witness
// operation and an enumeration of its label universe; the back-and-forth
// construction consumes all three.
class RadoOracle {
public:
    virtual ~RadoOracle() = default;
    virtual bool adjacent(const Int& i, const Int& j) const = 0;
    // The index-th label of the oracle's universe, in its canonical order.
    virtual Int label_at(unsigned long index) const = 0;
    // A fresh vertex adjacent to everything in V and nothing in W; throws if
    // the oracle cannot deliver one (signalling a non-Rado oracle).
    virtual Int witness(const std::vector<Int>& v_set, const std::vector<Int>& w_set) const = 0;
};

// r_i ~ r_j (i < j) iff bit i of j is set.
bool bit_adjacent(const Int& i, const Int& j);

// Canonical witness sum_{i in V} 2^i + 2^h, h = 1 + max(V cup W cup {0}).
// Provably correct without search; labels must be modest enough to serve as
// bit positions (guarded).
Int rado_witness(const std::vector<Int>& v_set, const std::vector<Int>& w_set);

// Optional search mode: the least universe label among the first `limit`
// with the prescribed adjacencies, if any. Chained constructions prefer this
// because iterated canonical witnesses grow double-exponentially.
std::optional<Int> rado_witness_search(const RadoOracle& oracle, const std::vector<Int>& v_set,
                                       const std::vector<Int>& w_set, unsigned long limit);

// The BIT-predicate Rado graph. witness() returns the least witness when one
// lives below the search limit and falls back to the canonical formula.
class BitGraph : public RadoOracle {
public:
    explicit BitGraph(unsigned long search_limit = 1ul << 20) : limit_(search_limit) {}
    bool adjacent(const Int& i, const Int& j) const override { return bit_adjacent(i, j); }
    Int label_at(unsigned long index) const override { return Int(index); }
    Int witness(const std::vector<Int>& v, const std::vector<Int>& w) const override;

private:
    unsigned long limit_;
};

// BIT graph with labels shifted by a fixed offset; a different presentation
// of the same graph for back-and-forth tests.
class OffsetBitGraph : public RadoOracle {
public:
    explicit OffsetBitGraph(Int offset, unsigned long search_limit = 1ul << 20)
        : base_(search_limit), offset_(std::move(offset)) {}
    bool adjacent(const Int& i, const Int& j) const override;
    Int label_at(unsigned long index) const override { return offset_ + Int(index); }
    Int witness(const std::vector<Int>& v, const std::vector<Int>& w) const override;

private:
    BitGraph base_;
    Int offset_;
};

// BIT graph with one pair's adjacency flipped. Witnesses avoid the toggled
// pair, so the construction still goes through.
class EdgeToggledBitGraph : public RadoOracle {
public:
    EdgeToggledBitGraph(Int u, Int v, unsigned long search_limit = 1ul << 16);
    bool adjacent(const Int& i, const Int& j) const override;
    Int label_at(unsigned long index) const override { return Int(index); }
    Int witness(const std::vector<Int>& v, const std::vector<Int>& w) const override;

private:
    Int u_, v_;
    unsigned long limit_;
};

// Greedy embedding of a finite simple graph as an induced subgraph of the BIT
// graph: place vertices in index order, each via the oracle's witness.
std::vector<Int> embed_induced(const Pseudograph& g);

// Alternating back-and-forth extension of a partial isomorphism: even steps
// map the least unmapped label of A, odd steps pull back the least unmapped
// label of B. Returns the extended pairs (a, b).
std::vector<std::pair<Int, Int>> back_and_forth(const RadoOracle& a, const RadoOracle& b,
                                                int fuel,
                                                std::vector<std::pair<Int, Int>> start = {});

struct GnpSample {
    int n = 0;
    Rat p;
    uint64_t seed = 0;
    Pseudograph graph{1};
};
// Each pair decided independently by the seeded generator.
GnpSample gnp_sample(int n, const Rat& p, uint64_t seed);

// Probability that no Rado witness for fixed disjoint sets of sizes v and w
// exists among the other n - v - w vertices: (1 - p^v (1-p)^w)^(n-v-w).
Rat witness_absence_probability(int n, const Rat& p, int v_size, int w_size);

struct TypicalityReport {
    int samples = 0;
    int diameter_two = 0;            // samples that are connected with diameter 2
    int witness_found = 0;           // samples holding a witness for the fixed V, W
    Rat witness_presence_expected;   // 1 - witness_absence_probability per sample
};
// Runs the typical-property experiments over a fixed-seed sample set: the
// diameter-2 fraction and the in-sample Rado-witness frequency for the first
// v_size vertices against the next w_size, with its exact expectation.
TypicalityReport typicality_experiments(const std::vector<GnpSample>& samples, int v_size,
                                        int w_size);

// Exact isomorphism probability alpha for G(n, 1/2) against a fixed graph H
// (exhaustive over all labelings; n <= 4), with the sandwich bounds
// 1/2^binom(n,2) <= alpha <= n!/2^binom(n,2).
struct AlphaResult {
    Rat alpha;
    Rat lower;
    Rat upper;
};
AlphaResult isomorphism_alpha(const Pseudograph& h);

}  // namespace exgraph
