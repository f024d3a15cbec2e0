/**
 * Simple undirected graphs: construction, edge-list text I/O, path metric
 * via per-vertex BFS, and seeded Erdos-Renyi sampling.
 */

#ifndef EMH_GRAPH_HPP
#define EMH_GRAPH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "emh/extended_int.hpp"

namespace emh {

class Graph {
public:
    Graph() : n_(0) {}

    // Builds a simple graph from (possibly duplicated) vertex pairs.
    // Rejects self-loops and out-of-range endpoints, naming the offender.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
        if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
        std::set<std::pair<int, int>> normalized;
        for (auto [u, v] : pairs) {
            if (u == v)
                throw std::invalid_argument("self-loop (" + std::to_string(u) + "," +
                                            std::to_string(v) + ") is not allowed");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                            std::to_string(v) + ") has an endpoint outside 0.." +
                                            std::to_string(n - 1));
            normalized.emplace(std::min(u, v), std::max(u, v));
        }
        Graph g;
        g.n_ = n;
        g.edges_.assign(normalized.begin(), normalized.end());
        g.adjacency_.assign(n, {});
        for (auto [u, v] : g.edges_) {
            g.adjacency_[u].push_back(v);
            g.adjacency_[v].push_back(u);
        }
        for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
        return g;
    }

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }

    bool has_edge(int u, int v) const {
        const auto& nbrs = adjacency_.at(u);
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

// Symmetric matrix of hop distances, with infinity between components.
class DistanceMatrix {
public:
    DistanceMatrix() : n_(0) {}
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n, ExtInt::infinity()) {}

    int size() const { return n_; }
    ExtInt operator()(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
    void set(int u, int v, ExtInt val) { d_[static_cast<size_t>(u) * n_ + v] = val; }

private:
    int n_;
    std::vector<ExtInt> d_;
};

// All-pairs shortest hop counts by BFS from each vertex.
inline DistanceMatrix path_metric(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix dm(n);
    std::vector<std::int64_t> dist(n);
    for (int src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        std::deque<int> queue{src};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (int v = 0; v < n; ++v)
            dm.set(src, v, dist[v] < 0 ? ExtInt::infinity() : ExtInt(dist[v]));
    }
    return dm;
}

struct ErParams {
    int n = 0;
    double alpha = 0.0;       // edge probability is n^(-alpha)
    std::uint64_t seed = 0;
};

inline double er_edge_probability(const ErParams& p) {
    if (p.n < 1) throw std::invalid_argument("sample_er requires n >= 1");
    if (p.alpha < 0) throw std::invalid_argument("alpha must be non-negative");
    return std::pow(static_cast<double>(p.n), -p.alpha);
}

namespace detail {

// splitmix64; used both as a stream mixer and as the edge-draw generator.
// Fully specified arithmetic, so identical seeds reproduce identical draws
// on every platform.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    SplitMix64 s(a ^ (0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2)));
    s.next();
    return s.next() ^ b;
}

}  // namespace detail

// G(n, n^{-alpha}) with edge draws in lexicographic pair order. The draw
// threshold is an exact integer in [0, 2^53], so the sampled edge set is a
// pure function of (n, alpha, seed).
inline Graph sample_er(const ErParams& params) {
    const double p = er_edge_probability(params);
    const std::uint64_t kOne = 1ULL << 53;
    const std::uint64_t threshold =
        p >= 1.0 ? kOne : static_cast<std::uint64_t>(p * static_cast<double>(kOne));
    detail::SplitMix64 rng(params.seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < params.n; ++u)
        for (int v = u + 1; v < params.n; ++v)
            if ((rng.next() >> 11) < threshold) edges.emplace_back(u, v);
    return Graph::from_edge_list(params.n, edges);
}

// Edge-list text format: first non-comment line is n, then `u v` lines.
// Lines starting with '#' (and blank lines) are ignored.
inline Graph parse_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> pairs;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n) {
                if (n < 0) throw std::invalid_argument("negative vertex count");
            }
            continue;
        }
        int u, v;
        if (ls >> u) {
            if (!(ls >> v))
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": expected `u v`");
            pairs.emplace_back(u, v);
        }
    }
    if (n < 0) throw std::invalid_argument("missing vertex count line");
    return Graph::from_edge_list(n, pairs);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace emh

#endif
