#pragma once

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "specarb/blocks.hpp"
#include "specarb/solver.hpp"
#include "specarb/zeropattern.hpp"

namespace specarb {

enum class SelectionBranch { GenericSubset, RepeatedValue };

/// Outcome of choosing the 8 values that go onto the 8x8 block: either a
/// generic 8-subset of distinct values that realizes, or eight copies of a
/// value repeated at least eight times in the input.  sigma and remainder
/// always partition the input multiset.
template <class F>
struct SubsetSelection {
    SelectionBranch branch = SelectionBranch::GenericSubset;
    std::vector<F> sigma;
    std::vector<F> remainder;
    long tried = 0;  // candidate subsets tested before success
};

struct SelectOptions {
    /// Below this many distinct values the repeated-value branch is
    /// preferred (pigeonhole regime); at or above it the generic search has
    /// the theoretical guarantee and runs first.
    int distinct_threshold = 102;
    unsigned long long seed = 0;
    long retries = 10000;
};

/// Everything the final construction reports: the matrix, the pattern check,
/// the entry count, and the spectral check (blockwise product vs. target).
template <class F>
struct RealizationReport {
    SquareMatrix<F> matrix;
    bool pattern_ok = false;
    long nonzero_count = 0;
    std::vector<MonicPoly<F>> block_polys;
    MonicPoly<F> assembled;
    MonicPoly<F> target;
    bool pass = false;
};

/// Independent re-check of a claimed realization: recompute the support,
/// count the nonzeros, recompute the characteristic polynomial along the
/// finest contiguous block partition of the pattern (each block capped at
/// size 32 for exact work; an unstructured pattern is a single block), and
/// compare with the target.
template <class F>
RealizationReport<F> verify(const SquareMatrix<F>& M, const ZeroPattern& pattern,
                            const MonicPoly<F>& target) {
    if (M.size() != pattern.n) {
        throw DimensionMismatch("matrix is " + std::to_string(M.size()) + "x" +
                                std::to_string(M.size()) + " but the pattern is for n = " +
                                std::to_string(pattern.n));
    }
    if (target.degree() != M.size()) {
        throw DimensionMismatch("target polynomial degree " + std::to_string(target.degree()) +
                                " does not match matrix size " + std::to_string(M.size()));
    }
    const ZeroPattern actual = support_of(M);
    const bool pattern_ok = (actual == pattern);
    const long nonzero_count = static_cast<long>(actual.support.size());

    // Finest contiguous block partition: every support position (r, c)
    // forces rows min..max into one block; merge the resulting intervals.
    const int n = pattern.n;
    std::vector<int> reach_at(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) reach_at[static_cast<std::size_t>(i)] = i;
    for (const auto& [r, c] : pattern.support) {
        const int lo = std::min(r, c), hi = std::max(r, c);
        reach_at[static_cast<std::size_t>(lo)] = std::max(reach_at[static_cast<std::size_t>(lo)], hi);
    }
    std::vector<MonicPoly<F>> block_polys;
    int start = 0, reach = 0;
    for (int i = 0; i < n; ++i) {
        reach = std::max(reach, reach_at[static_cast<std::size_t>(i)]);
        if (i == reach) {
            const int size = i - start + 1;
            if (size > 32) {
                throw DimensionTooLarge(size,
                                        "exact characteristic polynomial is capped at block "
                                        "size 32; the pattern has an irreducible block of size " +
                                            std::to_string(size));
            }
            block_polys.push_back(char_poly(M.submatrix(start, start, size)));
            start = i + 1;
        }
    }
    MonicPoly<F> assembled = poly_product(block_polys);
    const bool poly_ok = assembled.approx_equal(target);
    return RealizationReport<F>{M,         pattern_ok, nonzero_count,
                                std::move(block_polys), std::move(assembled),
                                target,    pattern_ok && poly_ok};
}

/// Choose the 8-element sub-multiset that the 8x8 block will carry.  In the
/// pigeonhole regime (fewer distinct values than the threshold) an
/// eight-fold repeated value is taken outright (ties by canonical order);
/// otherwise candidates of 8 distinct values are tested by actually running
/// the realization: a greedy seed of the 8 most frequent values, then
/// seeded random draws up to the retry budget.
template <class F>
SubsetSelection<F> select_subset(const std::vector<F>& U, const SelectOptions& opt = {}) {
    if (U.size() < 8) {
        throw BadCardinality("need at least 8 spectrum values, got " + std::to_string(U.size()));
    }
    std::map<F, long, FieldOrder<F>> counts;
    for (const F& v : U) ++counts[v];

    using MapIt = typename std::map<F, long, FieldOrder<F>>::const_iterator;
    auto repeated_candidate = [&]() -> std::optional<MapIt> {
        for (auto it = counts.begin(); it != counts.end(); ++it) {
            if (it->second >= 8) return it;  // smallest in canonical order wins
        }
        return std::nullopt;
    };
    auto make_repeated = [&](MapIt which, long tried) {
        SubsetSelection<F> sel;
        sel.branch = SelectionBranch::RepeatedValue;
        sel.sigma.assign(8, which->first);
        sel.tried = tried;
        for (auto it = counts.begin(); it != counts.end(); ++it) {
            const long keep = it->second - (it == which ? 8 : 0);
            for (long k = 0; k < keep; ++k) sel.remainder.push_back(it->first);
        }
        return sel;
    };

    std::vector<std::pair<F, long>> distinct(counts.begin(), counts.end());
    long tried = 0;
    auto attempt = [&](const std::vector<F>& sigma) -> bool {
        ++tried;
        return std::holds_alternative<XParams<F>>(realize_spectrum_S(sigma));
    };
    auto finish_generic = [&](std::vector<F> sigma) {
        SubsetSelection<F> sel;
        sel.branch = SelectionBranch::GenericSubset;
        sel.sigma = std::move(sigma);
        sel.tried = tried;
        std::map<F, long, FieldOrder<F>> rem = counts;
        for (const F& v : sel.sigma) --rem.at(v);
        for (const auto& [v, cnt] : rem) {
            for (long k = 0; k < cnt; ++k) sel.remainder.push_back(v);
        }
        return sel;
    };
    auto generic_search = [&]() -> std::optional<SubsetSelection<F>> {
        if (distinct.size() < 8) return std::nullopt;
        // Greedy seed: the 8 largest multiplicities, ties kept in canonical
        // order by the stable sort.
        std::vector<std::size_t> by_mult(distinct.size());
        for (std::size_t i = 0; i < by_mult.size(); ++i) by_mult[i] = i;
        std::stable_sort(by_mult.begin(), by_mult.end(), [&](std::size_t a, std::size_t b) {
            return distinct[a].second > distinct[b].second;
        });
        std::vector<F> sigma;
        for (std::size_t k = 0; k < 8; ++k) sigma.push_back(distinct[by_mult[k]].first);
        if (attempt(sigma)) return finish_generic(std::move(sigma));

        std::mt19937_64 rng(opt.seed);
        for (long t = 0; t < opt.retries; ++t) {
            std::array<std::size_t, 8> pick{};
            std::size_t got = 0;
            while (got < 8) {
                const std::size_t idx = static_cast<std::size_t>(rng() % distinct.size());
                bool dup = false;
                for (std::size_t j = 0; j < got; ++j) dup = dup || pick[j] == idx;
                if (!dup) pick[got++] = idx;
            }
            sigma.clear();
            for (std::size_t k = 0; k < 8; ++k) sigma.push_back(distinct[pick[k]].first);
            if (attempt(sigma)) return finish_generic(std::move(sigma));
        }
        return std::nullopt;
    };

    if (static_cast<long>(distinct.size()) < opt.distinct_threshold) {
        if (auto rep = repeated_candidate()) return make_repeated(*rep, 0);
        if (auto g = generic_search()) return *g;
        throw SelectionFailed(tried, "below the distinct threshold with no eight-fold repeated "
                                     "value, and the candidate search failed after " +
                                         std::to_string(tried) + " attempts");
    }
    if (auto g = generic_search()) return *g;
    if (auto rep = repeated_candidate()) return make_repeated(*rep, tried);
    throw SelectionFailed(tried, "candidate search exhausted after " + std::to_string(tried) +
                                     " attempts");
}

/// The headline construction: pick 8 values for the 8x8 block, put the rest
/// on 2x2 blocks, assemble the block diagonal, and independently verify
/// pattern, entry count, and spectrum.
template <class F>
RealizationReport<F> realize_full(const std::vector<F>& U, const SelectOptions& opt = {},
                                  SubsetSelection<F>* selection_out = nullptr,
                                  XParams<F>* params_out = nullptr) {
    if (U.size() < 8) {
        throw BadCardinality("need at least 8 spectrum values, got " + std::to_string(U.size()));
    }
    if ((U.size() - 8) % 2 != 0) {
        throw BadCardinality("the values beyond the first eight must pair onto 2x2 blocks; " +
                             std::to_string(U.size()) + " total values leave an odd remainder");
    }
    SubsetSelection<F> sel = select_subset(U, opt);
    RealizeOutcome<F> outcome = realize_spectrum_S(sel.sigma);
    if (!std::holds_alternative<XParams<F>>(outcome)) {
        // Generic candidates were vetted by exactly this call and constant
        // spectra always realize, so reaching here is an internal bug.
        throw std::logic_error("selected subset failed to realize: " +
                               std::get<Unrealizable>(outcome).reason);
    }
    const XParams<F>& params = std::get<XParams<F>>(outcome);
    SquareMatrix<F> M = build_X(params);
    const int m = static_cast<int>((U.size() - 8) / 2);
    if (m > 0) M = SquareMatrix<F>::block_diag(M, realize_D(sel.remainder));
    const ZeroPattern pattern = pattern_diag(pattern_S(), pattern_D(m));
    RealizationReport<F> report = verify(M, pattern, MonicPoly<F>::from_roots(U));
    if (selection_out) *selection_out = std::move(sel);
    if (params_out) *params_out = params;
    return report;
}

}  // namespace specarb
