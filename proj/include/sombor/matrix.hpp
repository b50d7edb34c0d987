#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace sombor {

/// Dense real symmetric matrix, row-major. set() keeps the storage exactly
/// symmetric; graph-derived matrices have a zero diagonal.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const { return n_; }

    double operator()(int i, int j) const { return a_[idx(i, j)]; }

    void set(int i, int j, double value) {
        a_[idx(i, j)] = value;
        a_[idx(j, i)] = value;
    }

    double frobenius_norm() const {
        double acc = 0.0;
        for (double x : a_) acc += x * x;
        return std::sqrt(acc);
    }

    /// Principal submatrix with one row/column removed.
    SymmetricMatrix without(int v) const {
        SymmetricMatrix b(n_ - 1);
        for (int i = 0, bi = 0; i < n_; ++i) {
            if (i == v) continue;
            for (int j = 0, bj = 0; j < n_; ++j) {
                if (j == v) continue;
                b.set(bi, bj, (*this)(i, j));
                ++bj;
            }
            ++bi;
        }
        return b;
    }

    const std::vector<double>& data() const { return a_; }
    std::vector<double>& data() { return a_; }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<double> a_;
};

} // namespace sombor
