#include "exgraph/rado.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace exgraph {

namespace {

// Labels used as bit positions must stay small enough to materialize 2^label.
constexpr unsigned long kMaxBitLabel = 1ul << 22;

unsigned long bit_position(const Int& label) {
    if (label < 0) throw std::invalid_argument("labels are nonnegative");
    if (!label.fits_ulong_p() || label.get_ui() > kMaxBitLabel)
        throw std::domain_error("label too large to use as a bit position");
    return label.get_ui();
}

}  // namespace

bool bit_adjacent(const Int& i, const Int& j) {
    if (i < 0 || j < 0) throw std::invalid_argument("labels are nonnegative");
    if (i == j) throw std::invalid_argument("no loops: labels must differ");
    const Int& low = std::min(i, j);
    const Int& high = std::max(i, j);
    return mpz_tstbit(high.get_mpz_t(), bit_position(low)) != 0;
}

Int rado_witness(const std::vector<Int>& v_set, const std::vector<Int>& w_set) {
    for (const Int& v : v_set)
        for (const Int& w : w_set)
            if (v == w) throw std::invalid_argument("V and W must be disjoint");
    Int h = 0;
    for (const Int& x : v_set) h = std::max(h, x);
    for (const Int& x : w_set) h = std::max(h, x);
    h += 1;
    Int out = 0;
    for (const Int& x : v_set) mpz_setbit(out.get_mpz_t(), bit_position(x));
    mpz_setbit(out.get_mpz_t(), bit_position(h));
    return out;
}

std::optional<Int> rado_witness_search(const RadoOracle& oracle, const std::vector<Int>& v_set,
                                       const std::vector<Int>& w_set, unsigned long limit) {
    for (unsigned long index = 0; index < limit; ++index) {
        const Int cand = oracle.label_at(index);
        bool ok = std::find(v_set.begin(), v_set.end(), cand) == v_set.end() &&
                  std::find(w_set.begin(), w_set.end(), cand) == w_set.end();
        for (const Int& v : v_set)
            if (ok && !oracle.adjacent(cand, v)) ok = false;
        for (const Int& w : w_set)
            if (ok && oracle.adjacent(cand, w)) ok = false;
        if (ok) return cand;
    }
    return std::nullopt;
}

Int BitGraph::witness(const std::vector<Int>& v, const std::vector<Int>& w) const {
    if (const auto least = rado_witness_search(*this, v, w, limit_)) return *least;
    return rado_witness(v, w);
}

bool OffsetBitGraph::adjacent(const Int& i, const Int& j) const {
    if (i < offset_ || j < offset_) throw std::invalid_argument("label below the offset");
    return bit_adjacent(i - offset_, j - offset_);
}

Int OffsetBitGraph::witness(const std::vector<Int>& v, const std::vector<Int>& w) const {
    std::vector<Int> v0, w0;
    for (const Int& x : v) v0.push_back(x - offset_);
    for (const Int& x : w) w0.push_back(x - offset_);
    return base_.witness(v0, w0) + offset_;
}

EdgeToggledBitGraph::EdgeToggledBitGraph(Int u, Int v, unsigned long search_limit)
    : u_(std::move(u)), v_(std::move(v)), limit_(search_limit) {
    if (u_ == v_) throw std::invalid_argument("toggled pair must be two labels");
}

bool EdgeToggledBitGraph::adjacent(const Int& i, const Int& j) const {
    const bool base = bit_adjacent(i, j);
    if ((i == u_ && j == v_) || (i == v_ && j == u_)) return !base;
    return base;
}

Int EdgeToggledBitGraph::witness(const std::vector<Int>& v, const std::vector<Int>& w) const {
    if (const auto least = rado_witness_search(*this, v, w, limit_)) return *least;
    // The canonical witness is fresh (larger than every input), so it can only
    // clash with the toggled pair by being u or v itself; bump it past them.
    std::vector<Int> v_ext = v;
    Int cand = rado_witness(v_ext, w);
    while (cand == u_ || cand == v_) {
        v_ext.push_back(cand);  // raises h, keeps all required adjacencies
        cand = rado_witness(v_ext, w);
    }
    for (const Int& x : v)
        if (!adjacent(cand, x)) throw std::domain_error("toggled witness construction failed");
    for (const Int& x : w)
        if (adjacent(cand, x)) throw std::domain_error("toggled witness construction failed");
    return cand;
}

std::vector<Int> embed_induced(const Pseudograph& g) {
    if (!is_simple(g)) throw std::invalid_argument("induced embedding needs a simple graph");
    std::vector<Int> labels;
    const BitGraph bit;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == 0) {
            labels.push_back(0);
            continue;
        }
        std::vector<Int> adj, nonadj;
        for (int u = 0; u < v; ++u) {
            if (g.multiplicity(u, v) > 0)
                adj.push_back(labels[u]);
            else
                nonadj.push_back(labels[u]);
        }
        labels.push_back(bit.witness(adj, nonadj));
    }
    // The construction promises an induced copy; check it.
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (bit_adjacent(labels[u], labels[v]) != (g.multiplicity(u, v) > 0))
                throw std::logic_error("embedding failed to be induced");
    return labels;
}

namespace {

bool mapped_in(const std::vector<std::pair<Int, Int>>& map, const Int& x, bool first_side) {
    for (const auto& [a, b] : map)
        if ((first_side ? a : b) == x) return true;
    return false;
}

Int least_unmapped(const RadoOracle& side, const std::vector<std::pair<Int, Int>>& map,
                   bool first_side) {
    for (unsigned long index = 0;; ++index) {
        const Int cand = side.label_at(index);
        if (!mapped_in(map, cand, first_side)) return cand;
    }
}

}  // namespace

std::vector<std::pair<Int, Int>> back_and_forth(const RadoOracle& a, const RadoOracle& b,
                                                int fuel, std::vector<std::pair<Int, Int>> start) {
    std::vector<std::pair<Int, Int>> map = std::move(start);
    for (int step = 0; step < fuel; ++step) {
        if (step % 2 == 0) {
            const Int next = least_unmapped(a, map, true);
            std::vector<Int> v_set, w_set;
            for (const auto& [x, y] : map)
                (a.adjacent(next, x) ? v_set : w_set).push_back(y);
            map.emplace_back(next, b.witness(v_set, w_set));
        } else {
            const Int next = least_unmapped(b, map, false);
            std::vector<Int> v_set, w_set;
            for (const auto& [x, y] : map)
                (b.adjacent(next, y) ? v_set : w_set).push_back(x);
            map.emplace_back(a.witness(v_set, w_set), next);
        }
    }
    return map;
}

namespace {

// Deterministic uniform draw below m via rejection on raw 64-bit words.
uint64_t uniform_below(std::mt19937_64& rng, uint64_t m) {
    const uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % m;
    for (;;) {
        const uint64_t word = rng();
        if (word < limit) return word % m;
    }
}

}  // namespace

GnpSample gnp_sample(int n, const Rat& p, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("G(n,p) needs n >= 1");
    if (!(p > 0) || !(p < 1)) throw std::invalid_argument("probability must satisfy 0 < p < 1");
    if (!p.get_num().fits_ulong_p() || !p.get_den().fits_ulong_p())
        throw std::invalid_argument("probability terms too large");
    const uint64_t num = p.get_num().get_ui();
    const uint64_t den = p.get_den().get_ui();
    std::mt19937_64 rng(seed);
    Pseudograph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (uniform_below(rng, den) < num) g.add_edge(i, j);
    return {n, p, seed, std::move(g)};
}

Rat witness_absence_probability(int n, const Rat& p, int v_size, int w_size) {
    if (v_size < 0 || w_size < 0 || v_size + w_size > n)
        throw std::invalid_argument("set sizes out of range");
    const Rat one(1);
    const Rat hit = pow_rat(p, v_size) * pow_rat(one - p, w_size);
    return pow_rat(one - hit, n - v_size - w_size);
}

TypicalityReport typicality_experiments(const std::vector<GnpSample>& samples, int v_size,
                                        int w_size) {
    if (samples.empty()) throw std::invalid_argument("no samples");
    for (const GnpSample& s : samples)
        if (s.n > 2000) throw std::domain_error("diameter experiments guard: n <= 2000");
    TypicalityReport report;
    report.samples = static_cast<int>(samples.size());
    for (const GnpSample& s : samples) {
        if (v_size + w_size > s.n) throw std::invalid_argument("set sizes exceed sample size");
        if (is_connected(s.graph) && diameter(s.graph) == 2) ++report.diameter_two;
        bool found = false;
        for (int cand = v_size + w_size; cand < s.n && !found; ++cand) {
            bool ok = true;
            for (int v = 0; v < v_size && ok; ++v)
                if (s.graph.multiplicity(cand, v) == 0) ok = false;
            for (int w = v_size; w < v_size + w_size && ok; ++w)
                if (s.graph.multiplicity(cand, w) > 0) ok = false;
            found = ok;
        }
        if (found) ++report.witness_found;
    }
    report.witness_presence_expected =
        Rat(1) - witness_absence_probability(samples.front().n, samples.front().p, v_size, w_size);
    return report;
}

namespace {

bool isomorphic_by_permutation(const Pseudograph& a, const Pseudograph& b) {
    const int n = a.vertex_count();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool match = true;
        for (int i = 0; i < n && match; ++i)
            for (int j = i + 1; j < n && match; ++j)
                if ((a.multiplicity(i, j) > 0) != (b.multiplicity(perm[i], perm[j]) > 0))
                    match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

AlphaResult isomorphism_alpha(const Pseudograph& h) {
    const int n = h.vertex_count();
    if (n > 4) throw std::domain_error("exhaustive alpha limited to n <= 4");
    if (!is_simple(h)) throw std::invalid_argument("alpha needs a simple graph");
    const int pairs = n * (n - 1) / 2;
    Int hits = 0;
    for (uint32_t mask = 0; mask < (uint32_t(1) << pairs); ++mask) {
        Pseudograph g(n);
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (mask & (uint32_t(1) << bit)) g.add_edge(i, j);
        if (isomorphic_by_permutation(g, h)) ++hits;
    }
    AlphaResult out;
    out.alpha = make_rat(hits, pow2(pairs));
    out.lower = make_rat(1, pow2(pairs));
    out.upper = make_rat(factorial(n), pow2(pairs));
    return out;
}

}  // namespace exgraph
