/**
 * Sparse integer matrices with arbitrary-precision entries, and the chain
 * complex container built from them.
 */

#ifndef EMH_INTEGER_MATRIX_HPP
#define EMH_INTEGER_MATRIX_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace emh {

using Int = boost::multiprecision::cpp_int;

// Sparse storage: only nonzero entries are kept, keyed by (row, col).
class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, Int value) {
        check(r, c);
        if (value == 0)
            entries_.erase({r, c});
        else
            entries_[{r, c}] = std::move(value);
    }

    void add(int r, int c, const Int& delta) {
        check(r, c);
        auto key = std::make_pair(r, c);
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            if (delta != 0) entries_[key] = delta;
        } else {
            it->second += delta;
            if (it->second == 0) entries_.erase(it);
        }
    }

    Int get(int r, int c) const {
        check(r, c);
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Int(0) : it->second;
    }

    const std::map<std::pair<int, int>, Int>& entries() const { return entries_; }
    size_t nonzero_count() const { return entries_.size(); }

    std::vector<std::vector<Int>> to_dense() const {
        std::vector<std::vector<Int>> d(rows_, std::vector<Int>(cols_, Int(0)));
        for (const auto& [rc, v] : entries_) d[rc.first][rc.second] = v;
        return d;
    }

    // this * other, dimension-checked.
    IntegerMatrix multiply(const IntegerMatrix& other) const {
        if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        IntegerMatrix out(rows_, other.cols_);
        for (const auto& [rc, v] : entries_)
            for (const auto& [rc2, w] : other.entries_)
                if (rc.second == rc2.first) out.add(rc.first, rc2.second, v * w);
        return out;
    }

    bool is_zero() const { return entries_.empty(); }

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("matrix index (" + std::to_string(r) + "," +
                                    std::to_string(c) + ") out of range");
    }

    int rows_, cols_;
    std::map<std::pair<int, int>, Int> entries_;
};

// Chain complex of free abelian groups. boundaries[d] maps degree d to
// degree d-1; boundaries[0] is the map out of degree 0 (zero rows for a
// plain complex, an augmentation row for a reduced one).
struct IntegerChainComplex {
    std::vector<int> gradings;                         // basis size per degree
    std::vector<IntegerMatrix> boundaries;             // one per degree
    std::vector<std::vector<std::string>> labels;      // optional generator labels

    int top_degree() const { return static_cast<int>(gradings.size()) - 1; }

    int basis_size(int degree) const {
        if (degree < 0 || degree > top_degree()) return 0;
        return gradings[degree];
    }

    const IntegerMatrix& boundary(int degree) const {
        static const IntegerMatrix kEmpty;
        if (degree < 0 || degree > top_degree()) return kEmpty;
        return boundaries[degree];
    }

    // d composed with d vanishes; returns the first offending degree or -1.
    int first_nonzero_composite() const {
        for (int d = 1; d <= top_degree(); ++d)
            if (!boundaries[d - 1].multiply(boundaries[d]).is_zero()) return d;
        return -1;
    }

    long long euler_characteristic() const {
        long long chi = 0;
        for (size_t d = 0; d < gradings.size(); ++d)
            chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(gradings[d]);
        return chi;
    }
};

}  // namespace emh

#endif
