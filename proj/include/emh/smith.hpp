/**
 * Smith normal form over the integers and the homology computations
 * built on it.
 */

#ifndef EMH_SMITH_HPP
#define EMH_SMITH_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/integer/common_factor_rt.hpp>

#include "emh/integer_matrix.hpp"

namespace emh {

struct SmithDecomposition {
    std::vector<Int> diagonal;  // invariant factors, d_i | d_{i+1}, zeros last
    int rank = 0;               // number of nonzero factors
};

namespace detail {

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace detail

// Diagonalization by unimodular row/column operations with minimal-absolute-
// value pivot selection. The boundary matrices fed in here are sparse with
// tiny entries; the working copy is dense since elimination destroys
// sparsity quickly at the sizes this library handles.
inline SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
    auto a = m.to_dense();
    const int rows = m.rows();
    const int cols = m.cols();
    const int bound = std::min(rows, cols);
    int t = 0;
    while (t < bound) {
        // Minimal |entry| pivot in the trailing submatrix.
        int pr = -1, pc = -1;
        Int best;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (a[i][j] != 0) {
                    Int mag = detail::abs_int(a[i][j]);
                    if (pr < 0 || mag < best) {
                        best = mag;
                        pr = i;
                        pc = j;
                    }
                }
        if (pr < 0) break;  // trailing submatrix is zero
        std::swap(a[t], a[pr]);
        if (pc != t)
            for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

        for (bool settled = false; !settled;) {
            // Clear the pivot column; a nonzero remainder becomes the new
            // (strictly smaller) pivot.
            for (int i = t + 1; i < rows; ++i) {
                while (a[i][t] != 0) {
                    Int q = a[i][t] / a[t][t];
                    for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                    if (a[i][t] != 0) std::swap(a[t], a[i]);
                }
            }
            // Clear the pivot row the same way.
            bool row_swapped_cols = false;
            for (int j = t + 1; j < cols; ++j) {
                while (a[t][j] != 0) {
                    Int q = a[t][j] / a[t][t];
                    for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                    if (a[t][j] != 0) {
                        for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                        row_swapped_cols = true;
                    }
                }
            }
            if (row_swapped_cols) continue;  // column may be dirty again
            bool column_clear = true;
            for (int i = t + 1; i < rows && column_clear; ++i) column_clear = (a[i][t] == 0);
            if (!column_clear) continue;
            // Pivot must divide the whole trailing submatrix.
            int bi = -1, bj = -1;
            for (int i = t + 1; i < rows && bi < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi >= 0) {
                for (int j = t; j < cols; ++j) a[t][j] += a[bi][j];
                continue;
            }
            settled = true;
        }
        ++t;
    }

    SmithDecomposition out;
    out.diagonal.resize(bound, Int(0));
    for (int i = 0; i < t; ++i) out.diagonal[i] = detail::abs_int(a[i][i]);
    // Enforce the divisibility chain (the pivoting already yields it; this
    // is a cheap normalization pass, not a correctness crutch).
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            if (out.diagonal[j] % out.diagonal[i] == 0) continue;
            Int g = boost::integer::gcd(out.diagonal[i], out.diagonal[j]);
            Int l = out.diagonal[i] / g * out.diagonal[j];
            out.diagonal[i] = g;
            out.diagonal[j] = l;
        }
    out.rank = t;
    return out;
}

inline int integer_rank(const IntegerMatrix& m) { return smith_normal_form(m).rank; }

struct HomologyGroup {
    int degree = 0;
    long long free_rank = 0;
    std::vector<Int> torsion;  // coefficients > 1, each dividing the next

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
        return a.degree == b.degree && a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
};

// Homology of the complex at one degree: kernel of the outgoing boundary
// modulo image of the incoming one.
inline HomologyGroup homology(const IntegerChainComplex& c, int degree) {
    if (degree < 0 || degree > c.top_degree())
        throw std::out_of_range("homology degree outside the complex's graded range");
    const int dim = c.basis_size(degree);
    const SmithDecomposition out_snf = smith_normal_form(c.boundary(degree));
    const SmithDecomposition in_snf = smith_normal_form(c.boundary(degree + 1));
    HomologyGroup h;
    h.degree = degree;
    h.free_rank = static_cast<long long>(dim) - out_snf.rank - in_snf.rank;
    for (const Int& d : in_snf.diagonal)
        if (d > 1) h.torsion.push_back(d);
    std::sort(h.torsion.begin(), h.torsion.end());
    return h;
}

inline std::vector<HomologyGroup> homology_all(const IntegerChainComplex& c) {
    std::vector<HomologyGroup> out;
    for (int d = 0; d <= c.top_degree(); ++d) out.push_back(homology(c, d));
    return out;
}

// Direct sum of homology groups: ranks add, torsion multisets merge and are
// renormalized to invariant-factor form via primary decomposition.
inline HomologyGroup direct_sum(const std::vector<HomologyGroup>& parts, int degree) {
    HomologyGroup h;
    h.degree = degree;
    std::vector<Int> orders;
    for (const auto& p : parts) {
        h.free_rank += p.free_rank;
        orders.insert(orders.end(), p.torsion.begin(), p.torsion.end());
    }
    if (orders.empty()) return h;
    // prime -> exponents, descending
    std::vector<std::pair<Int, std::vector<int>>> primary;
    for (Int o : orders) {
        for (Int f = 2; f * f <= o; ++f) {
            if (o % f != 0) continue;
            int e = 0;
            while (o % f == 0) {
                o /= f;
                ++e;
            }
            auto it = std::find_if(primary.begin(), primary.end(),
                                   [&](const auto& pe) { return pe.first == f; });
            if (it == primary.end())
                primary.push_back({f, {e}});
            else
                it->second.push_back(e);
        }
        if (o > 1) {
            auto it = std::find_if(primary.begin(), primary.end(),
                                   [&](const auto& pe) { return pe.first == o; });
            if (it == primary.end())
                primary.push_back({o, {1}});
            else
                it->second.push_back(1);
        }
    }
    size_t chain_len = 0;
    for (auto& [p, es] : primary) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        chain_len = std::max(chain_len, es.size());
    }
    std::vector<Int> chain(chain_len, Int(1));  // chain[0] is the largest factor
    for (const auto& [p, es] : primary)
        for (size_t i = 0; i < es.size(); ++i)
            for (int e = 0; e < es[i]; ++e) chain[i] *= p;
    std::reverse(chain.begin(), chain.end());
    for (const Int& d : chain)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

}  // namespace emh

#endif
