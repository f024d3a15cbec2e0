/**
 * Complexes of injective words over a vertex alphabet, their graph-length
 * filtration, and the verification routines tying them back to trail
 * homology.
 */

#ifndef EMH_INJECTIVE_WORDS_HPP
#define EMH_INJECTIVE_WORDS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "emh/asao_izumihara.hpp"
#include "emh/graph.hpp"
#include "emh/homology.hpp"
#include "emh/trails.hpp"
#include "emh/tuple_complex.hpp"

namespace emh {

namespace detail {

inline void extend_word(int n, int cap, std::vector<int>& word, std::vector<bool>& used,
                        TupleComplex& out) {
    if (static_cast<int>(word.size()) == cap) return;
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        word.push_back(v);
        used[v] = true;
        out.insert_raw(word);
        extend_word(n, cap, word, used, out);
        used[v] = false;
        word.pop_back();
    }
}

inline void extend_word_filtered(const DistanceMatrix& dm, int ell, std::vector<int>& word,
                                 std::vector<bool>& used, std::int64_t len, TupleComplex& out) {
    const int n = dm.size();
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        std::int64_t next_len = len;
        if (!word.empty()) {
            ExtInt d = dm(word.back(), v);
            if (!d.is_finite()) continue;
            next_len += d.value();
            if (next_len > ell) continue;
        }
        word.push_back(v);
        used[v] = true;
        out.insert_raw(word);
        extend_word_filtered(dm, ell, word, used, next_len, out);
        used[v] = false;
        word.pop_back();
    }
}

}  // namespace detail

// All injective words of 1..cap letters over {0, ..., n-1}.
inline TupleComplex build_inj(int n, int cap) {
    if (n < 1 || cap < 1 || cap > n) throw std::invalid_argument("build_inj requires 1 <= cap <= n");
    TupleComplex out;
    std::vector<int> word;
    std::vector<bool> used(n, false);
    detail::extend_word(n, cap, word, used, out);
    return out;
}

// Injective words whose walk length under g's path metric is at most ell.
// A prefix over the bound cannot recover, so the generation prunes there.
inline TupleComplex build_inj_filtered(const Graph& g, int ell) {
    if (ell < 0) throw std::invalid_argument("length bound must be non-negative");
    const DistanceMatrix dm = path_metric(g);
    TupleComplex out;
    std::vector<int> word;
    std::vector<bool> used(g.vertex_count(), false);
    detail::extend_word_filtered(dm, ell, word, used, 0, out);
    return out;
}

// Fixed-point-free permutations of n letters, counted by enumeration.
inline long long count_derangements_bruteforce(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        bool fixed_point = false;
        for (int i = 0; i < n; ++i)
            if (perm[i] == i) {
                fixed_point = true;
                break;
            }
        if (!fixed_point) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

struct BjornerWachsReport {
    int n = 0;
    long long derangements = 0;
    bool passed = true;
    std::vector<HomologyGroup> reduced;  // degrees 0..n-1
    std::vector<std::string> mismatches;
};

// Reduced homology of the full injective-word complex on n letters must be
// free of derangement rank, concentrated in degree n - 1.
inline BjornerWachsReport verify_bjorner_wachs(int n, int cap = 6) {
    if (n < 1 || n > cap) throw std::invalid_argument("alphabet size exceeds configured cap");
    BjornerWachsReport report;
    report.n = n;
    report.derangements = count_derangements_bruteforce(n);
    TupleComplex inj = build_inj(n, n);
    IntegerChainComplex c = inj.chain_complex(/*augmented=*/true);
    for (int d = 0; d <= c.top_degree(); ++d) {
        HomologyGroup h = homology(c, d);
        report.reduced.push_back(h);
        const long long expect_rank = (d == n - 1) ? report.derangements : 0;
        if (h.free_rank != expect_rank || !h.torsion.empty()) {
            report.passed = false;
            report.mismatches.push_back("degree " + std::to_string(d) + ": got rank " +
                                        std::to_string(h.free_rank) +
                                        (h.torsion.empty() ? "" : " with torsion") +
                                        ", expected rank " + std::to_string(expect_rank));
        }
    }
    return report;
}

struct FiltrationReport {
    int ell = 0;
    bool passed = true;
    std::vector<HomologyGroup> filtration_side;  // relative homology per degree
    std::vector<HomologyGroup> emh_side;         // direct trail homology per degree
    std::vector<std::string> mismatches;
};

// The relative homology of one filtration step (Inj(V, ell), Inj(V, ell-1))
// against the degree-matching trail homology of the whole graph, and, in
// degrees >= 2, against the endpoint-pair decomposition through the
// Asao-Izumihara pairs.
inline FiltrationReport verify_filtration_quotient(const Graph& g, int ell) {
    if (ell < 3) throw std::invalid_argument("filtration verification requires ell >= 3");
    FiltrationReport report;
    report.ell = ell;
    TupleComplex big = build_inj_filtered(g, ell);
    TupleComplex sub = build_inj_filtered(g, ell - 1);
    IntegerChainComplex rel = relative_chain_complex(big, sub);
    IntegerChainComplex emc = build_emc(g, ell);
    const DistanceMatrix dm = path_metric(g);
    // Only off-diagonal pairs contribute: a trail from a to a would repeat
    // the endpoint, so those summands are zero.
    std::vector<AiPair> pairs;
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b = 0; b < g.vertex_count(); ++b)
            if (a != b) pairs.push_back(build_pair(g, a, b, ell));

    const int top = std::max(rel.top_degree(), emc.top_degree());
    for (int d = 0; d <= top; ++d) {
        HomologyGroup lhs = d <= rel.top_degree() ? homology(rel, d) : HomologyGroup{d, 0, {}};
        HomologyGroup rhs = d <= emc.top_degree() ? homology(emc, d) : HomologyGroup{d, 0, {}};
        lhs.degree = rhs.degree = d;
        report.filtration_side.push_back(lhs);
        report.emh_side.push_back(rhs);
        if (!(lhs == rhs)) {
            report.passed = false;
            report.mismatches.push_back("degree " + std::to_string(d) +
                                        ": filtration side and trail side disagree");
        }
        if (d >= 2) {
            std::vector<HomologyGroup> parts;
            for (const AiPair& pair : pairs) parts.push_back(emh_via_ai(pair, dm, d));
            HomologyGroup pairwise = direct_sum(parts, d);
            if (!(pairwise == rhs)) {
                report.passed = false;
                report.mismatches.push_back("degree " + std::to_string(d) +
                                            ": endpoint-pair sum disagrees with trail side");
            }
        }
    }
    return report;
}

}  // namespace emh

#endif
