#pragma once

#include <set>
#include <utility>
#include <vector>

#include "specarb/errors.hpp"
#include "specarb/ring.hpp"

namespace specarb {

/// Dense n x n matrix over a pluggable scalar.  Construction needs an
/// explicit zero element so polynomial scalars carry their variable context
/// from the start.
template <class R>
class SquareMatrix {
  public:
    SquareMatrix(int n, R zero) : n_(n), a_(static_cast<std::size_t>(n) * n, std::move(zero)) {
        if (n < 1) throw DimensionMismatch("matrix dimension must be positive");
    }

    static SquareMatrix identity(int n, const R& zero, const R& one) {
        SquareMatrix m(n, zero);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    int size() const { return n_; }
    R& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const R& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    /// Matrix product, skipping zero operand entries — essential when the
    /// scalars are polynomials and the matrices are sparse in practice.
    SquareMatrix mul(const SquareMatrix& other) const {
        if (n_ != other.n_) throw DimensionMismatch("matrix sizes differ in product");
        SquareMatrix out(n_, RingOps<R>::zero_like(a_[0]));
        for (int i = 0; i < n_; ++i) {
            for (int k = 0; k < n_; ++k) {
                const R& aik = at(i, k);
                if (RingOps<R>::is_zero(aik)) continue;
                for (int j = 0; j < n_; ++j) {
                    const R& bkj = other.at(k, j);
                    if (RingOps<R>::is_zero(bkj)) continue;
                    out.at(i, j) = out.at(i, j) + aik * bkj;
                }
            }
        }
        return out;
    }

    SquareMatrix scaled(const R& c) const {
        SquareMatrix out(n_, RingOps<R>::zero_like(a_[0]));
        for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * c;
        return out;
    }

    void add_diag(const R& c) {
        for (int i = 0; i < n_; ++i) at(i, i) = at(i, i) + c;
    }

    R trace() const {
        R t = RingOps<R>::zero_like(a_[0]);
        for (int i = 0; i < n_; ++i) t = t + at(i, i);
        return t;
    }

    /// Positions of the entries that are not (tolerantly, for floats) zero.
    std::set<std::pair<int, int>> support() const {
        std::set<std::pair<int, int>> s;
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                if (!RingOps<R>::is_zero(at(i, j))) s.insert({i, j});
            }
        }
        return s;
    }

    SquareMatrix submatrix(int row0, int col0, int size) const {
        SquareMatrix out(size, RingOps<R>::zero_like(a_[0]));
        for (int i = 0; i < size; ++i) {
            for (int j = 0; j < size; ++j) out.at(i, j) = at(row0 + i, col0 + j);
        }
        return out;
    }

    static SquareMatrix block_diag(const SquareMatrix& a, const SquareMatrix& b) {
        SquareMatrix out(a.n_ + b.n_, RingOps<R>::zero_like(a.a_[0]));
        for (int i = 0; i < a.n_; ++i) {
            for (int j = 0; j < a.n_; ++j) out.at(i, j) = a.at(i, j);
        }
        for (int i = 0; i < b.n_; ++i) {
            for (int j = 0; j < b.n_; ++j) out.at(a.n_ + i, a.n_ + j) = b.at(i, j);
        }
        return out;
    }

  private:
    int n_;
    std::vector<R> a_;
};

}  // namespace specarb
