/**
 * Shared fixtures and independent oracles for the test suites. Everything
 * here recomputes expectations by brute force, away from the library's own
 * code paths.
 */

#ifndef EMH_TESTS_HELPERS_HPP
#define EMH_TESTS_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "emh/graph.hpp"
#include "emh/integer_matrix.hpp"

namespace emh_test {

// The five-vertex, six-edge graph used throughout the worked examples:
// a triangle 0-1-2 glued to a triangle 2-3-4 at vertex 2.
inline emh::Graph figure1_graph() {
    return emh::Graph::from_edge_list(
        5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// Shortest path length by exhaustive enumeration of simple paths.
inline std::optional<int> bruteforce_distance(const emh::Graph& g, int from, int to) {
    if (from == to) return 0;
    const int n = g.vertex_count();
    std::optional<int> best;
    std::vector<int> path{from};
    std::vector<bool> used(n, false);
    used[from] = true;
    auto dfs = [&](auto&& self, int at) -> void {
        for (int v : g.neighbors(at)) {
            if (used[v]) continue;
            if (v == to) {
                int len = static_cast<int>(path.size());
                if (!best || len < *best) best = len;
                continue;
            }
            used[v] = true;
            path.push_back(v);
            self(self, v);
            path.pop_back();
            used[v] = false;
        }
    };
    dfs(dfs, from);
    return best;
}

// All (k+1)-tuples over V^{k+1}, filtered by the definition directly.
inline std::vector<std::vector<int>> bruteforce_trails(
    const emh::Graph& g, const emh::DistanceMatrix& dm, int k, int ell,
    std::optional<std::pair<int, int>> endpoints = std::nullopt) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    std::vector<int> tuple(k + 1, 0);
    const std::int64_t total = [&] {
        std::int64_t t = 1;
        for (int i = 0; i <= k; ++i) t *= n;
        return t;
    }();
    for (std::int64_t code = 0; code < total; ++code) {
        std::int64_t c = code;
        for (int i = 0; i <= k; ++i) {
            tuple[i] = static_cast<int>(c % n);
            c /= n;
        }
        bool distinct = true;
        for (int i = 0; i <= k && distinct; ++i)
            for (int j = i + 1; j <= k; ++j)
                if (tuple[i] == tuple[j]) {
                    distinct = false;
                    break;
                }
        if (!distinct) continue;
        emh::ExtInt len(0);
        bool ok = true;
        for (int i = 0; i < k; ++i) {
            emh::ExtInt d = dm(tuple[i], tuple[i + 1]);
            if (!d.is_finite()) {
                ok = false;
                break;
            }
            len += d;
        }
        if (!ok || !(len == emh::ExtInt(ell))) continue;
        if (endpoints && (tuple.front() != endpoints->first || tuple.back() != endpoints->second))
            continue;
        out.push_back(tuple);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Rank of an integer matrix over the field with `p` elements, by plain
// Gaussian elimination. Independent of the Smith normal form path.
inline int rank_mod_p(const emh::IntegerMatrix& m, int p) {
    std::vector<std::vector<long long>> a(m.rows(), std::vector<long long>(m.cols(), 0));
    for (const auto& [rc, v] : m.entries()) {
        long long r = static_cast<long long>(v % p);
        a[rc.first][rc.second] = ((r % p) + p) % p;
    }
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        // modular inverse by exponentiation (p is prime)
        long long inv = 1, base = a[rank][col], e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int c = 0; c < m.cols(); ++c) a[rank][c] = a[rank][c] * inv % p;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][col] == 0) continue;
            long long f = a[r][col];
            for (int c = 0; c < m.cols(); ++c)
                a[r][c] = ((a[r][c] - f * a[rank][c]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// Deterministic random graph stream for property sweeps.
inline emh::Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
    emh::detail::SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    const std::uint64_t threshold =
        static_cast<std::uint64_t>(edge_prob * static_cast<double>(1ULL << 53));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((rng.next() >> 11) < threshold) edges.emplace_back(u, v);
    return emh::Graph::from_edge_list(n, edges);
}

inline bool is_connected(const emh::Graph& g) {
    if (g.vertex_count() == 0) return true;
    const emh::DistanceMatrix dm = emh::path_metric(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!dm(0, v).is_finite()) return false;
    return true;
}

inline emh::Graph random_connected_graph(int n, double edge_prob, std::uint64_t& seed) {
    for (;;) {
        emh::Graph g = random_graph(n, edge_prob, seed++);
        if (is_connected(g)) return g;
    }
}

}  // namespace emh_test

#endif
