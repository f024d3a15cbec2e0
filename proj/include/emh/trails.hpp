/**
 * Eulerian trail enumeration and the length-graded chain complex they
 * generate, with the landmark-dropping differential.
 */

#ifndef EMH_TRAILS_HPP
#define EMH_TRAILS_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "emh/graph.hpp"
#include "emh/integer_matrix.hpp"

namespace emh {

struct Trail {
    std::vector<int> vertices;  // pairwise distinct
    ExtInt length;              // sum of consecutive path-metric distances
};

inline ExtInt trail_length(const std::vector<int>& vertices, const DistanceMatrix& dm) {
    ExtInt len(0);
    for (size_t i = 0; i + 1 < vertices.size(); ++i) len += dm(vertices[i], vertices[i + 1]);
    return len;
}

// Graded basis of the degree-k, length-ell chain group: all (k+1)-tuples of
// pairwise-distinct vertices of total length exactly ell, lexicographically
// sorted.
struct EmcBasis {
    int k = 0;
    int ell = 0;
    std::vector<std::vector<int>> generators;

    int index_of(const std::vector<int>& trail) const {
        auto it = std::lower_bound(generators.begin(), generators.end(), trail);
        if (it == generators.end() || *it != trail) return -1;
        return static_cast<int>(it - generators.begin());
    }

    int size() const { return static_cast<int>(generators.size()); }
};

namespace detail {

inline void extend_trail(const DistanceMatrix& dm, int k, int ell,
                         const std::optional<std::pair<int, int>>& endpoints,
                         std::vector<int>& current, std::vector<bool>& visited,
                         std::int64_t length_so_far, std::vector<std::vector<int>>& out) {
    const int depth = static_cast<int>(current.size());
    if (depth == k + 1) {
        if (length_so_far == ell) out.push_back(current);
        return;
    }
    const int n = dm.size();
    const int steps_left = k + 1 - depth - 1;  // edges still to place after adding one vertex
    for (int v = 0; v < n; ++v) {
        if (visited[v]) continue;
        std::int64_t len = length_so_far;
        if (depth > 0) {
            ExtInt d = dm(current.back(), v);
            if (!d.is_finite() || d.value() < 1) continue;
            len += d.value();
        } else if (endpoints && v != endpoints->first) {
            continue;
        }
        // Each remaining step costs at least 1; a fixed endpoint costs at
        // least its distance from v (triangle inequality).
        std::int64_t lower = len + steps_left;
        if (endpoints && steps_left > 0) {
            ExtInt rest = dm(v, endpoints->second);
            if (!rest.is_finite()) continue;
            lower = std::max(lower, len + rest.value());
        }
        if (lower > ell) continue;
        if (endpoints && steps_left == 0 && v != endpoints->second) continue;
        current.push_back(v);
        visited[v] = true;
        extend_trail(dm, k, ell, endpoints, current, visited, len, out);
        visited[v] = false;
        current.pop_back();
    }
}

}  // namespace detail

// All eulerian k-trails of length exactly ell, optionally pinned to run
// from endpoints.first to endpoints.second. Sorted lexicographically.
inline std::vector<std::vector<int>> enumerate_trails(
    const Graph& g, const DistanceMatrix& dm, int k, int ell,
    std::optional<std::pair<int, int>> endpoints = std::nullopt) {
    if (k < 0 || ell < 0) throw std::invalid_argument("enumerate_trails requires k, ell >= 0");
    std::vector<std::vector<int>> out;
    if (k > ell) return out;  // too few edges to reach the length
    if (k + 1 > g.vertex_count()) return out;
    if (endpoints) {
        auto [a, b] = *endpoints;
        if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count())
            throw std::invalid_argument("endpoint out of range");
        if (k == 0 && a != b) return out;
    }
    std::vector<int> current;
    std::vector<bool> visited(g.vertex_count(), false);
    detail::extend_trail(dm, k, ell, endpoints, current, visited, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

inline EmcBasis make_basis(const Graph& g, const DistanceMatrix& dm, int k, int ell,
                           std::optional<std::pair<int, int>> endpoints = std::nullopt) {
    return EmcBasis{k, ell, enumerate_trails(g, dm, k, ell, endpoints)};
}

// Boundary from degree k to degree k-1. Column for (x_0,...,x_k) is the
// alternating sum over interior landmark deletions i = 1..k-1, keeping a
// face only when its length is still exactly ell. Endpoints are never
// removed.
inline IntegerMatrix boundary_matrix(const EmcBasis& basis_k, const EmcBasis& basis_km1,
                                     const DistanceMatrix& dm) {
    if (basis_km1.k != basis_k.k - 1 || basis_km1.ell != basis_k.ell)
        throw std::invalid_argument("boundary_matrix: bases are not adjacent degrees of one grading");
    IntegerMatrix m(basis_km1.size(), basis_k.size());
    const int k = basis_k.k;
    std::vector<int> face;
    for (int col = 0; col < basis_k.size(); ++col) {
        const auto& gen = basis_k.generators[col];
        for (int i = 1; i <= k - 1; ++i) {
            face = gen;
            face.erase(face.begin() + i);
            // Removing a landmark may shorten the walk; those faces are dropped.
            if (trail_length(face, dm) != ExtInt(basis_k.ell)) continue;
            int row = basis_km1.index_of(face);
            if (row < 0)
                throw std::logic_error("face of a generator missing from the lower basis");
            m.add(row, col, (i % 2 == 0) ? Int(1) : Int(-1));
        }
    }
    return m;
}

inline std::string trail_label(const std::vector<int>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

// The full length-ell chain complex in degrees 0..ell (higher degrees are
// empty). With endpoints fixed this is the (a,b) summand.
inline IntegerChainComplex build_emc(const Graph& g, int ell,
                                     std::optional<std::pair<int, int>> endpoints = std::nullopt) {
    if (ell < 0) throw std::invalid_argument("build_emc requires ell >= 0");
    const DistanceMatrix dm = path_metric(g);
    std::vector<EmcBasis> bases;
    for (int k = 0; k <= ell; ++k) bases.push_back(make_basis(g, dm, k, ell, endpoints));
    IntegerChainComplex c;
    for (int k = 0; k <= ell; ++k) {
        c.gradings.push_back(bases[k].size());
        c.labels.emplace_back();
        for (const auto& gen : bases[k].generators) c.labels.back().push_back(trail_label(gen));
        if (k == 0)
            c.boundaries.emplace_back(0, bases[0].size());
        else
            c.boundaries.push_back(boundary_matrix(bases[k], bases[k - 1], dm));
    }
    return c;
}

}  // namespace emh

#endif
