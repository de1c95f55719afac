#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "field.hpp"

namespace gor {

/// Exact matrix over a coefficient field. Entries are held either densely
/// or as sparse rows; the choice is made from the fill ratio when the
/// matrix is finalised and can be overridden.
template <CoefficientField F>
class ExactMatrix {
  public:
    using Element = typename F::Element;
    enum class Storage { Dense, Sparse };
    static constexpr double kDensityThreshold = 0.2;

    ExactMatrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), sparse_(rows) {}

    static ExactMatrix identity(F field, std::size_t n) {
        ExactMatrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// Sets an entry. Zero values remove the entry.
    void set(std::size_t r, std::size_t c, const Element& v) {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
        auto& row = sparse_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
        if (it != row.end() && it->first == c) {
            if (field_.is_zero(v))
                row.erase(it);
            else
                it->second = v;
        } else if (!field_.is_zero(v)) {
            row.insert(it, {c, v});
        }
    }
    /// Adds to an entry; cheaper than set when rows are built left to right.
    void add(std::size_t r, std::size_t c, const Element& v) {
        if (field_.is_zero(v)) return;
        auto& row = sparse_[r];
        if (row.empty() || row.back().first < c) {
            row.push_back({c, v});
            return;
        }
        set(r, c, field_.add(get(r, c), v));
    }
    Element get(std::size_t r, std::size_t c) const {
        const auto& row = sparse_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
        return (it != row.end() && it->first == c) ? it->second : field_.zero();
    }
    const std::vector<std::pair<std::size_t, Element>>& row(std::size_t r) const { return sparse_[r]; }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& r : sparse_) n += r.size();
        return n;
    }
    double density() const {
        return rows_ == 0 || cols_ == 0 ? 0.0 : double(nonzeros()) / (double(rows_) * double(cols_));
    }
    Storage preferred_storage() const {
        return density() >= kDensityThreshold ? Storage::Dense : Storage::Sparse;
    }

    ExactMatrix transpose() const {
        ExactMatrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (const auto& [c, v] : sparse_[r]) t.sparse_[c].push_back({r, v});
        return t;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        const F& f = a.field_;
        ExactMatrix m(f, a.rows_, b.cols_);
        std::vector<Element> acc(b.cols_, f.zero());
        for (std::size_t r = 0; r < a.rows_; ++r) {
            std::fill(acc.begin(), acc.end(), f.zero());
            for (const auto& [k, v] : a.sparse_[r])
                for (const auto& [c, w] : b.sparse_[k]) acc[c] = f.add(acc[c], f.mul(v, w));
            for (std::size_t c = 0; c < b.cols_; ++c)
                if (!f.is_zero(acc[c])) m.sparse_[r].push_back({c, acc[c]});
        }
        return m;
    }

    bool is_zero() const {
        for (const auto& r : sparse_)
            if (!r.empty()) return false;
        return true;
    }

    std::size_t rank() const { return preferred_storage() == Storage::Dense ? rank_dense() : rank_sparse(); }

    std::size_t rank_dense() const {
        auto d = to_dense();
        return eliminate_dense(d, rows_, cols_, nullptr);
    }

    /// Row-by-row elimination keeping a sparse pivot row per column.
    std::size_t rank_sparse() const {
        const F& f = field_;
        std::vector<std::vector<std::pair<std::size_t, Element>>> pivot(cols_);
        std::vector<Element> acc(cols_, f.zero());
        std::vector<char> touched(cols_, 0);
        std::size_t rank = 0;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (sparse_[r].empty()) continue;
            std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> heap;
            std::vector<std::size_t> used;
            for (const auto& [c, v] : sparse_[r]) {
                acc[c] = v;
                touched[c] = 1;
                used.push_back(c);
                heap.push(c);
            }
            bool independent = false;
            while (!heap.empty()) {
                std::size_t c = heap.top();
                heap.pop();
                while (!heap.empty() && heap.top() == c) heap.pop();
                if (f.is_zero(acc[c])) continue;
                if (pivot[c].empty()) {
                    Element inv = f.inv(acc[c]);
                    std::vector<std::pair<std::size_t, Element>> prow;
                    prow.push_back({c, f.one()});
                    std::vector<std::size_t> rest;
                    while (!heap.empty()) {
                        rest.push_back(heap.top());
                        heap.pop();
                    }
                    std::sort(rest.begin(), rest.end());
                    rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
                    for (std::size_t k : rest)
                        if (k != c && !f.is_zero(acc[k])) prow.push_back({k, f.mul(acc[k], inv)});
                    pivot[c] = std::move(prow);
                    independent = true;
                    break;
                }
                Element factor = acc[c];
                for (const auto& [k, w] : pivot[c]) {
                    acc[k] = f.sub(acc[k], f.mul(factor, w));
                    if (!touched[k]) {
                        touched[k] = 1;
                        used.push_back(k);
                    }
                    if (k != c) heap.push(k);
                }
            }
            for (std::size_t k : used) {
                acc[k] = f.zero();
                touched[k] = 0;
            }
            if (independent) ++rank;
        }
        return rank;
    }

    /// Basis of the right kernel {v : M v = 0}, as column vectors.
    std::vector<std::vector<Element>> nullspace() const {
        auto d = to_dense();
        std::vector<std::size_t> pivot_cols;
        eliminate_dense(d, rows_, cols_, &pivot_cols, true);
        std::vector<char> is_pivot(cols_, 0);
        for (auto c : pivot_cols) is_pivot[c] = 1;
        std::vector<std::vector<Element>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Element> v(cols_, field_.zero());
            v[free] = field_.one();
            for (std::size_t i = 0; i < pivot_cols.size(); ++i)
                v[pivot_cols[i]] = field_.neg(d[i * cols_ + free]);
            basis.push_back(std::move(v));
        }
        return basis;
    }

  private:
    std::vector<Element> to_dense() const {
        std::vector<Element> d(rows_ * cols_, field_.zero());
        for (std::size_t r = 0; r < rows_; ++r)
            for (const auto& [c, v] : sparse_[r]) d[r * cols_ + c] = v;
        return d;
    }

    /// In-place Gauss-Jordan on a row-major buffer; returns the rank. With
    /// `reduced`, pivot rows are normalised and cleared above as well.
    std::size_t eliminate_dense(std::vector<Element>& d, std::size_t rows, std::size_t cols,
                                std::vector<std::size_t>* pivot_cols, bool reduced = false) const {
        const F& f = field_;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols && rank < rows; ++c) {
            std::size_t p = rank;
            while (p < rows && f.is_zero(d[p * cols + c])) ++p;
            if (p == rows) continue;
            if (p != rank)
                for (std::size_t k = 0; k < cols; ++k) std::swap(d[p * cols + k], d[rank * cols + k]);
            Element inv = f.inv(d[rank * cols + c]);
            for (std::size_t k = c; k < cols; ++k) d[rank * cols + k] = f.mul(d[rank * cols + k], inv);
            for (std::size_t r = reduced ? 0 : rank + 1; r < rows; ++r) {
                if (r == rank) continue;
                Element factor = d[r * cols + c];
                if (f.is_zero(factor)) continue;
                for (std::size_t k = c; k < cols; ++k)
                    d[r * cols + k] = f.sub(d[r * cols + k], f.mul(factor, d[rank * cols + k]));
            }
            if (pivot_cols) pivot_cols->push_back(c);
            ++rank;
        }
        return rank;
    }

    F field_;
    std::size_t rows_, cols_;
    std::vector<std::vector<std::pair<std::size_t, Element>>> sparse_;
};

/// Incremental row echelon form: feed dense vectors one at a time and learn
/// whether each is independent of the ones kept so far.
template <CoefficientField F>
class RowReducer {
  public:
    using Element = typename F::Element;
    RowReducer(F field, std::size_t cols) : field_(std::move(field)), cols_(cols), pivot_of_(cols, -1) {}

    std::size_t rank() const { return rows_.size(); }

    /// Reduces v against the kept rows; keeps it and returns true if a
    /// nonzero remainder is left.
    bool insert(std::vector<Element> v) {
        if (v.size() != cols_) throw std::invalid_argument("row has the wrong length");
        const F& f = field_;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (f.is_zero(v[c])) continue;
            int p = pivot_of_[c];
            if (p < 0) {
                Element inv = f.inv(v[c]);
                for (std::size_t k = c; k < cols_; ++k) v[k] = f.mul(v[k], inv);
                pivot_of_[c] = static_cast<int>(rows_.size());
                rows_.push_back(std::move(v));
                return true;
            }
            Element factor = v[c];
            const auto& row = rows_[p];
            for (std::size_t k = c; k < cols_; ++k)
                if (!f.is_zero(row[k])) v[k] = f.sub(v[k], f.mul(factor, row[k]));
        }
        return false;
    }

  private:
    F field_;
    std::size_t cols_;
    std::vector<int> pivot_of_;
    std::vector<std::vector<Element>> rows_;
};

}  // namespace gor
