/**
 * Complexes of injective vertex tuples (word complexes): faces are ordered
 * tuples of distinct vertices, closed under deleting any single entry.
 */

#ifndef EMH_TUPLE_COMPLEX_HPP
#define EMH_TUPLE_COMPLEX_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "emh/integer_matrix.hpp"
#include "emh/trails.hpp"

namespace emh {

// True when `small` is an order-preserving subsequence of `big`.
inline bool is_subword(const std::vector<int>& small, const std::vector<int>& big) {
    size_t i = 0;
    for (size_t j = 0; j < big.size() && i < small.size(); ++j)
        if (big[j] == small[i]) ++i;
    return i == small.size();
}

class TupleComplex {
public:
    TupleComplex() = default;

    // Inserts a face together with all of its subwords.
    void insert_closed(const std::vector<int>& face) {
        if (face.empty()) return;
        check_injective(face);
        if (faces_.count(face)) return;
        faces_.insert(face);
        std::vector<int> sub;
        for (size_t i = 0; i < face.size(); ++i) {
            sub = face;
            sub.erase(sub.begin() + i);
            insert_closed(sub);
        }
    }

    // Inserts a single face; caller is responsible for closure (checked by
    // verify_closure / from_faces).
    void insert_raw(const std::vector<int>& face) {
        if (face.empty()) throw std::invalid_argument("faces are non-empty tuples");
        check_injective(face);
        faces_.insert(face);
    }

    static TupleComplex from_faces(const std::vector<std::vector<int>>& faces) {
        TupleComplex x;
        for (const auto& f : faces) x.insert_raw(f);
        if (auto w = x.closure_violation())
            throw std::invalid_argument("face set is not downward closed; missing face of " +
                                        trail_label(*w));
        return x;
    }

    static TupleComplex closure_of(const std::vector<std::vector<int>>& faces) {
        TupleComplex x;
        for (const auto& f : faces) x.insert_closed(f);
        return x;
    }

    bool contains(const std::vector<int>& face) const { return faces_.count(face) > 0; }
    bool empty() const { return faces_.empty(); }
    size_t face_count() const { return faces_.size(); }
    const std::set<std::vector<int>>& faces() const { return faces_; }

    // -1 for the empty complex.
    int dim() const {
        int d = -1;
        for (const auto& f : faces_) d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    std::vector<std::vector<int>> faces_of_dim(int d) const {
        std::vector<std::vector<int>> out;
        for (const auto& f : faces_)
            if (static_cast<int>(f.size()) == d + 1) out.push_back(f);
        std::sort(out.begin(), out.end());
        return out;
    }

    // Maximal faces: not a proper subword of any other face.
    std::vector<std::vector<int>> facets() const {
        std::vector<std::vector<int>> out;
        for (const auto& f : faces_) {
            bool maximal = true;
            // With downward closure it suffices to look one dimension up.
            for (const auto& g : faces_) {
                if (g.size() == f.size() + 1 && is_subword(f, g)) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) out.push_back(f);
        }
        return out;
    }

    // Some face violating downward closure (a deletion that is missing), or
    // nullopt when closed.
    std::optional<std::vector<int>> closure_violation() const {
        std::vector<int> sub;
        for (const auto& f : faces_) {
            if (f.size() == 1) continue;
            for (size_t i = 0; i < f.size(); ++i) {
                sub = f;
                sub.erase(sub.begin() + i);
                if (!faces_.count(sub)) return f;
            }
        }
        return std::nullopt;
    }

    bool contains_subcomplex(const TupleComplex& sub,
                             std::vector<int>* witness = nullptr) const {
        for (const auto& f : sub.faces_)
            if (!faces_.count(f)) {
                if (witness) *witness = f;
                return false;
            }
        return true;
    }

    // Simplicial chain complex with the alternating entry-deletion boundary.
    // With `augmented`, degree 0 maps onto the empty face by an all-ones row.
    IntegerChainComplex chain_complex(bool augmented = false) const;

    friend bool operator==(const TupleComplex& a, const TupleComplex& b) {
        return a.faces_ == b.faces_;
    }

private:
    static void check_injective(const std::vector<int>& face) {
        std::set<int> seen(face.begin(), face.end());
        if (seen.size() != face.size())
            throw std::invalid_argument("face " + trail_label(face) + " repeats a vertex");
    }

    std::set<std::vector<int>> faces_;
};

namespace detail {

inline std::vector<std::vector<std::vector<int>>> faces_by_dim(const TupleComplex& x) {
    std::vector<std::vector<std::vector<int>>> by_dim(x.dim() + 1);
    for (const auto& f : x.faces()) by_dim[f.size() - 1].push_back(f);
    for (auto& level : by_dim) std::sort(level.begin(), level.end());
    return by_dim;
}

inline int index_in(const std::vector<std::vector<int>>& sorted, const std::vector<int>& f) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), f);
    if (it == sorted.end() || *it != f) return -1;
    return static_cast<int>(it - sorted.begin());
}

}  // namespace detail

inline IntegerChainComplex TupleComplex::chain_complex(bool augmented) const {
    IntegerChainComplex c;
    if (empty()) {
        c.gradings.push_back(0);
        c.boundaries.emplace_back(augmented ? 1 : 0, 0);
        c.labels.emplace_back();
        return c;
    }
    auto by_dim = detail::faces_by_dim(*this);
    for (int d = 0; d < static_cast<int>(by_dim.size()); ++d) {
        const auto& level = by_dim[d];
        c.gradings.push_back(static_cast<int>(level.size()));
        c.labels.emplace_back();
        for (const auto& f : level) c.labels.back().push_back(trail_label(f));
        if (d == 0) {
            IntegerMatrix aug(augmented ? 1 : 0, static_cast<int>(level.size()));
            if (augmented)
                for (int j = 0; j < static_cast<int>(level.size()); ++j) aug.set(0, j, 1);
            c.boundaries.push_back(std::move(aug));
            continue;
        }
        IntegerMatrix b(static_cast<int>(by_dim[d - 1].size()), static_cast<int>(level.size()));
        std::vector<int> face;
        for (int col = 0; col < static_cast<int>(level.size()); ++col) {
            for (size_t i = 0; i < level[col].size(); ++i) {
                face = level[col];
                face.erase(face.begin() + i);
                int row = detail::index_in(by_dim[d - 1], face);
                if (row < 0) throw std::logic_error("complex is not downward closed");
                b.add(row, col, (i % 2 == 0) ? Int(1) : Int(-1));
            }
        }
        c.boundaries.push_back(std::move(b));
    }
    return c;
}

// Chain complex of the pair (big, sub): bases are faces of big not in sub,
// and boundary terms landing in sub are dropped. Throws (with a witness in
// the message) when sub is not contained in big.
inline IntegerChainComplex relative_chain_complex(const TupleComplex& big,
                                                  const TupleComplex& sub) {
    std::vector<int> witness;
    if (!big.contains_subcomplex(sub, &witness))
        throw std::invalid_argument("subcomplex containment violated at face " +
                                    trail_label(witness));
    IntegerChainComplex c;
    if (big.empty()) {
        c.gradings.push_back(0);
        c.boundaries.emplace_back(0, 0);
        c.labels.emplace_back();
        return c;
    }
    auto by_dim = detail::faces_by_dim(big);
    std::vector<std::vector<std::vector<int>>> rel(by_dim.size());
    for (size_t d = 0; d < by_dim.size(); ++d)
        for (const auto& f : by_dim[d])
            if (!sub.contains(f)) rel[d].push_back(f);
    for (int d = 0; d < static_cast<int>(rel.size()); ++d) {
        c.gradings.push_back(static_cast<int>(rel[d].size()));
        c.labels.emplace_back();
        for (const auto& f : rel[d]) c.labels.back().push_back(trail_label(f));
        IntegerMatrix b(d == 0 ? 0 : static_cast<int>(rel[d - 1].size()),
                        static_cast<int>(rel[d].size()));
        if (d > 0) {
            std::vector<int> face;
            for (int col = 0; col < static_cast<int>(rel[d].size()); ++col) {
                for (size_t i = 0; i < rel[d][col].size(); ++i) {
                    face = rel[d][col];
                    face.erase(face.begin() + i);
                    int row = detail::index_in(rel[d - 1], face);
                    if (row >= 0) b.add(row, col, (i % 2 == 0) ? Int(1) : Int(-1));
                }
            }
        }
        c.boundaries.push_back(std::move(b));
    }
    return c;
}

}  // namespace emh

#endif
