#include "exgraph/puzzles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace exgraph {

namespace {

// Generic reachable-state exploration. States carry a name; moves carry a
// cargo label. Crossings are symmetric, so each undirected edge is stored once.
template <typename State, typename MovesFn, typename NameFn>
PuzzleGraph explore(const State& start, const State& goal, MovesFn&& moves, NameFn&& name) {
    std::map<State, int> index;
    std::vector<State> states{start};
    index[start] = 0;
    std::deque<int> queue{0};
    std::vector<std::tuple<int, int, std::string>> edges;
    while (!queue.empty()) {
        const int at = queue.front();
        queue.pop_front();
        for (const auto& [next, label] : moves(states[at])) {
            auto it = index.find(next);
            int to;
            if (it == index.end()) {
                to = static_cast<int>(states.size());
                index[next] = to;
                states.push_back(next);
                queue.push_back(to);
            } else {
                to = it->second;
            }
            if (at < to) edges.emplace_back(at, to, label);
        }
    }
    PuzzleGraph out;
    out.graph = Pseudograph(static_cast<int>(states.size()));
    for (const auto& [a, b, label] : edges) {
        out.graph.add_edge(a, b);
        out.edge_labels.push_back(label);
    }
    for (const State& s : states) out.state_names.push_back(name(s));
    out.start = 0;
    auto it = index.find(goal);
    out.goal = it == index.end() ? -1 : it->second;
    return out;
}

// Wolf/goat/cabbage state: side of each item and of the farmer (0 left, 1 right).
struct WgcState {
    int wolf, goat, cabbage, farmer;
    auto operator<=>(const WgcState&) const = default;
};

bool wgc_legal(const WgcState& s) {
    // Unattended wolf eats goat; unattended goat eats cabbage.
    if (s.wolf == s.goat && s.farmer != s.goat) return false;
    if (s.goat == s.cabbage && s.farmer != s.goat) return false;
    return true;
}

std::string wgc_name(const WgcState& s) {
    std::string left, right;
    auto place = [&](int side, char c) { (side == 0 ? left : right) += c; };
    place(s.wolf, 'w');
    place(s.goat, 'g');
    place(s.cabbage, 'c');
    if (s.farmer == 0) left += '*';
    std::string out = left + "||";
    if (s.farmer == 1) out += '*';
    return out + right;
}

// Missionaries state: counts on the left bank plus the boat side.
struct McState {
    int cannibals_left, missionaries_left, boat;
    auto operator<=>(const McState&) const = default;
};

}  // namespace

PuzzleGraph wolf_goat_cabbage() {
    const WgcState start{0, 0, 0, 0};
    const WgcState goal{1, 1, 1, 1};
    auto moves = [](const WgcState& s) {
        std::vector<std::pair<WgcState, std::string>> out;
        const int from = s.farmer;
        const int to = 1 - from;
        auto try_move = [&](WgcState next, const std::string& label) {
            next.farmer = to;
            if (wgc_legal(next)) out.emplace_back(next, label);
        };
        try_move(s, "-");
        if (s.wolf == from) {
            WgcState n = s;
            n.wolf = to;
            try_move(n, "w");
        }
        if (s.goat == from) {
            WgcState n = s;
            n.goat = to;
            try_move(n, "g");
        }
        if (s.cabbage == from) {
            WgcState n = s;
            n.cabbage = to;
            try_move(n, "c");
        }
        return out;
    };
    return explore(start, goal, moves, wgc_name);
}

PuzzleGraph missionaries(int m, int c, int cap) {
    if (m < 1 || c < 1 || cap < 1) throw std::invalid_argument("parameters must be positive");
    auto legal = [&](const McState& s) {
        if (s.cannibals_left < 0 || s.cannibals_left > c) return false;
        if (s.missionaries_left < 0 || s.missionaries_left > m) return false;
        const int ml = s.missionaries_left, cl = s.cannibals_left;
        const int mr = m - ml, cr = c - cl;
        // Missionaries present on a bank cannot be outnumbered there.
        if (ml > 0 && cl > ml) return false;
        if (mr > 0 && cr > mr) return false;
        return true;
    };
    auto name = [&](const McState& s) {
        std::string out = std::to_string(s.cannibals_left) + "_" +
                          std::to_string(s.missionaries_left);
        if (s.boat == 0) out += '*';
        out += "||" + std::to_string(c - s.cannibals_left) + "_" +
               std::to_string(m - s.missionaries_left);
        if (s.boat == 1) out += '*';
        return out;
    };
    auto moves = [&](const McState& s) {
        std::vector<std::pair<McState, std::string>> out;
        const int dir = s.boat == 0 ? -1 : 1;  // leaving the left bank removes people
        for (int dc = 0; dc <= cap; ++dc) {
            for (int dm = 0; dm + dc <= cap; ++dm) {
                if (dc + dm == 0) continue;  // the boat cannot cross by itself
                // Travellers must be on the boat's bank.
                const int avail_c = s.boat == 0 ? s.cannibals_left : c - s.cannibals_left;
                const int avail_m = s.boat == 0 ? s.missionaries_left : m - s.missionaries_left;
                if (dc > avail_c || dm > avail_m) continue;
                McState next{s.cannibals_left + dir * dc, s.missionaries_left + dir * dm,
                             1 - s.boat};
                if (!legal(next)) continue;
                out.emplace_back(next, std::to_string(dc) + "c" + std::to_string(dm) + "m");
            }
        }
        return out;
    };
    const McState start{c, m, 0};
    const McState goal{0, 0, 1};
    return explore(start, goal, moves, name);
}

PuzzleSolutions puzzle_solutions(const PuzzleGraph& g) {
    PuzzleSolutions out;
    out.simple_path_count = 0;
    if (g.goal < 0) return out;
    const std::vector<int> dist = bfs_distances(g.graph, g.start);
    if (dist[g.goal] < 0) return out;
    out.reachable = true;
    out.shortest = dist[g.goal];

    // Simple start -> goal paths by depth-first search.
    std::vector<std::vector<int>> adj(g.graph.vertex_count());
    for (const Edge& e : g.graph.edges()) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<bool> on_path(g.graph.vertex_count(), false);
    Int count = 0;
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == g.goal) {
            ++count;
            return;
        }
        on_path[v] = true;
        for (int w : adj[v])
            if (!on_path[w]) self(self, w);
        on_path[v] = false;
    };
    dfs(dfs, g.start);
    out.simple_path_count = count;
    return out;
}

}  // namespace exgraph
