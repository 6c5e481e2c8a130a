#pragma once

/**
 * @file overpartitions.hpp
 * @brief Overpartition and overpartition-pair enumeration, the three rank
 *        statistics, and their generating functions over Laurent coefficients.
 *
 * An overpartition is a partition in which the final (equivalently, first)
 * occurrence of a part may be overlined.  We normalize so that the overlined
 * copy of a value leads its plain copies; parts are weakly decreasing in
 * value.  An overpartition pair of n is a pair (lambda, mu) of overpartitions
 * with |lambda| + |mu| = n.
 *
 * Rank statistics for a pair are differences of counting statistics of the
 * two components:
 *   R1: number of parts,
 *   R2: number of overlined parts,
 *   R3: number of non-overlined parts.
 *
 * Generating functions live over LaurentIntPoly(W) with z tracking the rank;
 * each product factor is applied as an in-place recurrence across q-degrees,
 * so building a rank series to order N costs O(N^2) Laurent operations.
 */

#include "series.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace opp {

struct OverPart {
    std::uint32_t value = 0;
    bool overlined = false;
    bool operator==(const OverPart&) const = default;
    auto operator<=>(const OverPart&) const = default;
};

using Overpartition = std::vector<OverPart>;

struct OverpartitionPair {
    Overpartition first;
    Overpartition second;
    bool operator==(const OverpartitionPair&) const = default;
};

enum class RankKind { R1, R2, R3 };

inline std::string_view to_string(RankKind kind) {
    switch (kind) {
        case RankKind::R1: return "r1";
        case RankKind::R2: return "r2";
        case RankKind::R3: return "r3";
    }
    return "?";
}

namespace detail {

inline void enumerate_overpartitions_rec(std::uint32_t remaining, std::uint32_t max_part,
                                         bool may_overline_max, Overpartition& stack,
                                         std::vector<Overpartition>& out) {
    if (remaining == 0) {
        out.push_back(stack);
        return;
    }
    for (std::uint32_t v = std::min(remaining, max_part); v >= 1; --v) {
        // A part strictly smaller than its predecessor starts a fresh run and
        // may be overlined; repeating the predecessor's value may not.
        const bool fresh = v < max_part || may_overline_max;
        if (fresh) {
            stack.push_back({v, true});
            enumerate_overpartitions_rec(remaining - v, v, false, stack, out);
            stack.pop_back();
        }
        stack.push_back({v, false});
        enumerate_overpartitions_rec(remaining - v, v, false, stack, out);
        stack.pop_back();
    }
}

}  // namespace detail

/// All overpartitions of n in normalized form.  Counts grow exponentially;
/// n beyond the budget throws instead of silently grinding.
inline std::vector<Overpartition> enumerate_overpartitions(std::uint32_t n,
                                                           std::uint32_t budget = 30) {
    if (n > budget) throw std::invalid_argument("enumerate_overpartitions: n exceeds budget");
    std::vector<Overpartition> out;
    Overpartition stack;
    detail::enumerate_overpartitions_rec(n, n == 0 ? 1 : n, true, stack, out);
    return out;
}

/// All overpartition pairs of n: (lambda, mu) with |lambda| = k, |mu| = n - k.
inline std::vector<OverpartitionPair> enumerate_pairs(std::uint32_t n, std::uint32_t budget = 12) {
    if (n > budget) throw std::invalid_argument("enumerate_pairs: n exceeds budget");
    std::vector<OverpartitionPair> out;
    for (std::uint32_t k = 0; k <= n; ++k) {
        const auto firsts = enumerate_overpartitions(k, budget);
        const auto seconds = enumerate_overpartitions(n - k, budget);
        for (const auto& f : firsts) {
            for (const auto& s : seconds) {
                out.push_back({f, s});
            }
        }
    }
    return out;
}

inline std::int64_t rank(const OverpartitionPair& pair, RankKind kind) {
    const auto stat = [kind](const Overpartition& p) -> std::int64_t {
        std::int64_t total = 0, over = 0;
        for (const OverPart& part : p) {
            ++total;
            if (part.overlined) ++over;
        }
        switch (kind) {
            case RankKind::R1: return total;
            case RankKind::R2: return over;
            case RankKind::R3: return total - over;
        }
        return 0;
    };
    return stat(pair.first) - stat(pair.second);
}

/// Rank tally of all pairs of n by direct enumeration.
inline std::map<std::int64_t, std::int64_t> rank_counts_brute(std::uint32_t n, RankKind kind,
                                                              std::uint32_t budget = 12) {
    std::map<std::int64_t, std::int64_t> counts;
    for (const auto& pair : enumerate_pairs(n, budget)) {
        ++counts[rank(pair, kind)];
    }
    return counts;
}

namespace detail {

/// acc *= (1 + z^s q^k), truncated at the series order.
inline void apply_binomial_factor(std::vector<LaurentPoly>& c, std::int64_t s, std::size_t k) {
    if (k == 0) throw std::invalid_argument("apply_binomial_factor: k must be >= 1");
    for (std::size_t n = c.size(); n-- > k;) {
        c[n].add_shifted(c[n - k], s);
    }
    // n == k uses c[0]; handled by the loop above since it runs down to k.
}

/// acc *= 1 / (1 - z^s q^k), truncated at the series order.
inline void apply_geometric_factor(std::vector<LaurentPoly>& c, std::int64_t s, std::size_t k) {
    if (k == 0) throw std::invalid_argument("apply_geometric_factor: k must be >= 1");
    for (std::size_t n = k; n < c.size(); ++n) {
        c[n].add_shifted(c[n - k], s);
    }
}

}  // namespace detail

/**
 * Two-variable rank generating function, truncated to q-order N, with z kept
 * in a Laurent window of width N (ranks of pairs of n are bounded by n).
 *
 * Per part size k >= 1, the pair generating function contributes overlined
 * factors (1 + z^a q^k) and plain factors 1/(1 - z^a q^k), where a is the
 * z-weight the statistic assigns:
 *   R1: lambda parts weigh +1, mu parts weigh -1, overlined or not;
 *   R2: overlined parts weigh +1 / -1, plain parts weigh 0;
 *   R3: plain parts weigh +1 / -1, overlined parts weigh 0.
 */
inline Series<LaurentRing> rank_series(RankKind kind, std::size_t order) {
    if (order == 0) throw std::invalid_argument("rank_series: order must be >= 1");
    LaurentRing ring(order);
    std::vector<LaurentPoly> c(order);
    c[0] = LaurentPoly::constant(1);
    struct Factor {
        bool geometric;
        std::int64_t s;
    };
    std::vector<Factor> factors;
    switch (kind) {
        case RankKind::R1:
            factors = {{false, 1}, {false, -1}, {true, 1}, {true, -1}};
            break;
        case RankKind::R2:
            factors = {{false, 1}, {false, -1}, {true, 0}, {true, 0}};
            break;
        case RankKind::R3:
            factors = {{false, 0}, {false, 0}, {true, 1}, {true, -1}};
            break;
    }
    for (std::size_t k = 1; k < order; ++k) {
        for (const Factor& f : factors) {
            if (f.geometric) {
                detail::apply_geometric_factor(c, f.s, k);
            } else {
                detail::apply_binomial_factor(c, f.s, k);
            }
        }
    }
    return Series<LaurentRing>(ring, std::move(c), order);
}

/// Rank distribution at q^n read off a rank series: map from rank value m to
/// the number of pairs of n with that rank.
inline std::map<std::int64_t, Int> rank_distribution(const Series<LaurentRing>& s, std::size_t n) {
    const LaurentPoly& p = coeff_at(s, n);
    std::map<std::int64_t, Int> out;
    p.for_each([&](std::int64_t e, const Int& v) { out[e] = v; });
    return out;
}

/// Fold a rank distribution by residue of the rank mod t: entry s of the
/// result counts pairs whose rank is congruent to s (mod t).
inline std::vector<Int> rank_fold_mod(const Series<LaurentRing>& series, std::size_t n,
                                      std::uint32_t t) {
    if (t == 0) throw std::invalid_argument("rank_fold_mod: modulus must be >= 1");
    std::vector<Int> out(t, Int(0));
    const LaurentPoly& p = coeff_at(series, n);
    p.for_each([&](std::int64_t e, const Int& v) {
        const std::int64_t r = ((e % t) + t) % t;
        out[static_cast<std::size_t>(r)] += v;
    });
    return out;
}

/// Convenience: rank residue classes mod t at a single n, built from a series
/// of just-large-enough order.
inline std::vector<Int> rank_counts_mod(std::size_t n, RankKind kind, std::uint32_t t) {
    const auto series = rank_series(kind, n + 1);
    return rank_fold_mod(series, n, t);
}

}  // namespace opp
