#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace eccmat {

// Dense symmetric matrix with integer entries. Entries of every matrix
// handled here (distance, eccentricity, Laplacian variants) fit in 64 bits
// at the supported orders; exact characteristic polynomials widen to
// arbitrary precision internally.
class SymIntMatrix {
public:
    SymIntMatrix() : n_(0) {}
    explicit SymIntMatrix(int n) : n_(n), entries_(static_cast<size_t>(n) * n, 0) {
        if (n < 0) throw std::invalid_argument("matrix order must be nonnegative");
    }

    int order() const { return n_; }

    long long at(int i, int j) const { return entries_[idx(i, j)]; }

    void set(int i, int j, long long v) {
        entries_[idx(i, j)] = v;
        entries_[idx(j, i)] = v;
    }

    void add(int i, int j, long long v) {
        entries_[idx(i, j)] += v;
        if (i != j) entries_[idx(j, i)] += v;
    }

    long long trace() const {
        long long t = 0;
        for (int i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    long long row_sum(int i) const {
        long long s = 0;
        for (int j = 0; j < n_; ++j) s += at(i, j);
        return s;
    }

    double frobenius_norm() const {
        double s = 0;
        for (long long v : entries_) s += static_cast<double>(v) * static_cast<double>(v);
        return std::sqrt(s);
    }

    std::vector<double> to_dense_double() const {
        std::vector<double> d(entries_.size());
        for (size_t k = 0; k < entries_.size(); ++k) d[k] = static_cast<double>(entries_[k]);
        return d;
    }

    bool operator==(const SymIntMatrix&) const = default;

private:
    size_t idx(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw std::out_of_range("matrix index out of range");
        return static_cast<size_t>(i) * n_ + j;
    }

    int n_;
    std::vector<long long> entries_;
};

}  // namespace eccmat
