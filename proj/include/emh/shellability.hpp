/**
 * Shelling verification and exhaustive search for small word complexes,
 * plus exact rational evaluators for the density thresholds.
 */

#ifndef EMH_SHELLABILITY_HPP
#define EMH_SHELLABILITY_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "emh/tuple_complex.hpp"

namespace emh {

using Rational = boost::multiprecision::cpp_rational;

struct ShellingOrder {
    std::vector<std::vector<int>> facet_sequence;
};

struct ShellCheck {
    bool ok = true;
    int first_failure = -1;       // index k of the facet that broke the condition
    std::string witness;

    explicit operator bool() const { return ok; }
};

namespace detail {

inline std::set<std::vector<int>> subword_faces(const std::vector<int>& facet) {
    std::set<std::vector<int>> out;
    const size_t n = facet.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> f;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) f.push_back(facet[i]);
        out.insert(std::move(f));
    }
    return out;
}

// The shelling condition for one facet against the union of its
// predecessors' faces: the intersection must be non-empty and covered by
// codimension-1 faces of the facet that themselves lie in the union.
inline bool facet_attaches(const std::vector<int>& facet,
                           const std::set<std::vector<int>>& predecessor_faces,
                           std::string* witness = nullptr) {
    // A vertex facet meets its predecessors in the empty face, which is its
    // unique codimension-1 face; it attaches unconditionally.
    if (facet.size() == 1) return true;
    auto faces = subword_faces(facet);
    std::vector<std::vector<int>> intersection;
    for (const auto& f : faces)
        if (predecessor_faces.count(f)) intersection.push_back(f);
    if (intersection.empty()) {
        if (witness) *witness = "intersection with predecessors is empty";
        return false;
    }
    std::vector<std::vector<int>> codim1;
    for (size_t i = 0; i < facet.size(); ++i) {
        std::vector<int> f = facet;
        f.erase(f.begin() + i);
        if (!f.empty() && predecessor_faces.count(f)) codim1.push_back(f);
    }
    for (const auto& f : intersection) {
        bool covered = false;
        for (const auto& b : codim1)
            if (is_subword(f, b)) {
                covered = true;
                break;
            }
        if (!covered) {
            if (witness)
                *witness = "intersection face " + trail_label(f) +
                           " is not inside any shared codimension-1 face";
            return false;
        }
    }
    return true;
}

}  // namespace detail

// Checks the shelling condition for an explicit facet order. The order must
// be a permutation of the facets of x.
inline ShellCheck is_shelling(const TupleComplex& x, const ShellingOrder& order) {
    auto facets = x.facets();
    std::set<std::vector<int>> expected(facets.begin(), facets.end());
    std::set<std::vector<int>> given(order.facet_sequence.begin(), order.facet_sequence.end());
    if (expected != given || given.size() != order.facet_sequence.size())
        throw std::invalid_argument("order is not a permutation of the facets");

    ShellCheck check;
    std::set<std::vector<int>> seen;
    for (size_t k = 0; k < order.facet_sequence.size(); ++k) {
        const auto& facet = order.facet_sequence[k];
        if (k > 0) {
            std::string witness;
            if (!detail::facet_attaches(facet, seen, &witness)) {
                check.ok = false;
                check.first_failure = static_cast<int>(k);
                check.witness = "facet " + trail_label(facet) + ": " + witness;
                return check;
            }
        }
        auto faces = detail::subword_faces(facet);
        seen.insert(faces.begin(), faces.end());
    }
    return check;
}

enum class ShellStatus { SHELLABLE, NOT_SHELLABLE, UNKNOWN };

inline std::string to_string(ShellStatus s) {
    switch (s) {
        case ShellStatus::SHELLABLE: return "SHELLABLE";
        case ShellStatus::NOT_SHELLABLE: return "NOT_SHELLABLE";
        default: return "UNKNOWN";
    }
}

struct ShellResult {
    ShellStatus status = ShellStatus::UNKNOWN;
    std::optional<ShellingOrder> order;
    long long steps = 0;  // partial orders examined
};

namespace detail {

struct ShellSearch {
    std::vector<std::vector<int>> facets;             // sorted by (dim desc, lex)
    std::vector<std::set<std::vector<int>>> faces;    // per facet
    std::vector<bool> used;
    std::vector<int> sequence;
    long long budget;
    long long steps = 0;
    bool exhausted_cleanly = true;

    bool extend(std::set<std::vector<int>>& seen) {
        if (sequence.size() == facets.size()) return true;
        // Non-increasing dimension: only facets of the largest remaining
        // dimension are candidates (rearrangement of any shelling has this
        // shape, so the restricted space is complete).
        size_t want = 0;
        for (size_t i = 0; i < facets.size(); ++i)
            if (!used[i]) want = std::max(want, facets[i].size());
        for (size_t i = 0; i < facets.size(); ++i) {
            if (used[i] || facets[i].size() != want) continue;
            if (++steps > budget) {
                exhausted_cleanly = false;
                return false;
            }
            if (!sequence.empty() && !facet_attaches(facets[i], seen)) continue;
            used[i] = true;
            sequence.push_back(static_cast<int>(i));
            std::vector<std::vector<int>> added;
            for (const auto& f : faces[i])
                if (seen.insert(f).second) added.push_back(f);
            if (extend(seen)) return true;
            for (const auto& f : added) seen.erase(f);
            sequence.pop_back();
            used[i] = false;
            if (!exhausted_cleanly) return false;
        }
        return false;
    }
};

}  // namespace detail

// Backtracking search over facet orders of non-increasing dimension.
// NOT_SHELLABLE is reported only when that space is exhausted; running out
// of budget yields UNKNOWN.
inline ShellResult find_shelling(const TupleComplex& x, long long budget = 1'000'000) {
    ShellResult result;
    auto facets = x.facets();
    if (facets.size() <= 1) {
        result.status = ShellStatus::SHELLABLE;
        result.order = ShellingOrder{facets};
        return result;
    }
    detail::ShellSearch search;
    std::sort(facets.begin(), facets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    search.facets = facets;
    for (const auto& f : facets) search.faces.push_back(detail::subword_faces(f));
    search.used.assign(facets.size(), false);
    search.budget = budget;
    std::set<std::vector<int>> seen;
    const bool found = search.extend(seen);
    result.steps = search.steps;
    if (found) {
        result.status = ShellStatus::SHELLABLE;
        ShellingOrder order;
        for (int i : search.sequence) order.facet_sequence.push_back(search.facets[i]);
        result.order = std::move(order);
    } else {
        result.status =
            search.exhausted_cleanly ? ShellStatus::NOT_SHELLABLE : ShellStatus::UNKNOWN;
    }
    return result;
}

// Faces of dimension <= s lying in a facet of dimension >= r.
inline TupleComplex skeleton_section(const TupleComplex& x, int r, int s) {
    if (r < 0 || r > s || s > x.dim())
        throw std::invalid_argument("skeleton_section requires 0 <= r <= s <= dim");
    std::vector<std::vector<int>> big_facets;
    for (const auto& f : x.facets())
        if (static_cast<int>(f.size()) - 1 >= r) big_facets.push_back(f);
    TupleComplex out;
    for (const auto& f : x.faces()) {
        if (static_cast<int>(f.size()) - 1 > s) continue;
        for (const auto& facet : big_facets)
            if (is_subword(f, facet)) {
                out.insert_raw(f);
                break;
            }
    }
    return out;
}

struct FacetDims {
    std::vector<int> dims;  // non-increasing
    int ell = 0;
};

namespace detail {

// Shared product formula behind both threshold evaluators. Factors switch
// from the high-dimension to the pairwise form at the first facet whose
// dimension drops below (ell - 2) / 2.
inline Rational shelling_threshold(const std::vector<int>& dims, int ell) {
    for (size_t i = 1; i < dims.size(); ++i)
        if (dims[i] > dims[i - 1])
            throw std::invalid_argument("facet dimensions must be non-increasing");
    for (int d : dims)
        if (d < 0) throw std::invalid_argument("facet dimensions must be non-negative");
    Rational product(1);  // empty product for a single facet
    for (size_t i = 0; i + 1 < dims.size(); ++i) {
        if (2 * dims[i] >= ell - 2)
            product *= Rational(dims[i] + 3, ell + 4);
        else
            product *= Rational(dims[i] + dims[i + 1], ell + 2 * dims[i + 1] - 2);
    }
    return product;
}

}  // namespace detail

inline Rational et_shelling_threshold(const FacetDims& dims) {
    if (dims.ell < 3) throw std::invalid_argument("threshold requires ell >= 3");
    return detail::shelling_threshold(dims.dims, dims.ell);
}

inline Rational etsub_shelling_threshold(const FacetDims& dims) {
    if (dims.ell < 3) throw std::invalid_argument("threshold requires ell >= 3");
    return detail::shelling_threshold(dims.dims, dims.ell - 1);
}

inline Rational vanishing_threshold(int ell) {
    if (ell < 1) throw std::invalid_argument("vanishing threshold requires ell >= 1");
    return Rational(ell + 1, 2 * ell - 1);
}

}  // namespace emh

#endif
