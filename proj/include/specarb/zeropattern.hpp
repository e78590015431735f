#pragma once

#include <set>
#include <utility>

#include "specarb/errors.hpp"
#include "specarb/matrix.hpp"

namespace specarb {

/// An n x n support set: the positions where a matrix with this pattern must
/// be nonzero (and must be zero everywhere else).  Positions are 0-based in
/// memory; serialization uses 1-based indices to match the usual matrix
/// display convention.
struct ZeroPattern {
    int n = 0;
    std::set<std::pair<int, int>> support;

    friend bool operator==(const ZeroPattern& a, const ZeroPattern& b) {
        return a.n == b.n && a.support == b.support;
    }
    friend bool operator!=(const ZeroPattern& a, const ZeroPattern& b) { return !(a == b); }
};

/// The 8x8 pattern with 15 = 2*8-1 entries underlying everything here.
ZeroPattern pattern_S();

/// Block-diagonal pattern of m full 2x2 blocks: size 2m, 4m entries.
ZeroPattern pattern_D(int m);

/// diag(a, b): supports shifted onto the block diagonal.
ZeroPattern pattern_diag(const ZeroPattern& a, const ZeroPattern& b);

template <class R>
ZeroPattern support_of(const SquareMatrix<R>& M) {
    return ZeroPattern{M.size(), M.support()};
}

}  // namespace specarb
