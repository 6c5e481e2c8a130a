#pragma once

/**
 * @file arith.hpp
 * @brief Elementary number theory: factorization, representation counts by
 *        binary quadratic forms, and the closed-form congruence values used
 *        as independent cross-checks against series expansions.
 */

#include "bigint.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace opp {

struct PrimePower {
    std::uint64_t p = 0;
    std::uint32_t e = 0;
    bool operator==(const PrimePower&) const = default;
};

using Factorization = std::vector<PrimePower>;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

/// Prime factorization in ascending prime order.  factorize(1) is empty;
/// factorize(0) throws.
inline Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: 0 has no factorization");
    Factorization out;
    const auto take = [&](std::uint64_t p) {
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    take(2);
    take(3);
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        take(d);
        take(d + 2);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

inline std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square(std::uint64_t n) {
    const std::uint64_t r = isqrt_u64(n);
    return r * r == n;
}

inline bool is_twice_square(std::uint64_t n) {
    return n % 2 == 0 && is_square(n / 2);
}

/**
 * r2(n): number of (x, y) in Z^2 with x^2 + y^2 = n.
 *
 * Multiplicative formula: powers of 2 are neutral; a prime p = 1 (mod 4)
 * with exponent v contributes (1 + v); a prime p = 3 (mod 4) with odd
 * exponent kills the count, with even exponent it is neutral.  The total is
 * 4 times the product.  r2(0) = 1 by the lattice-point convention.
 */
inline std::int64_t r2_closed(std::uint64_t n) {
    if (n == 0) return 1;
    std::int64_t prod = 4;
    for (const PrimePower& pp : factorize(n)) {
        if (pp.p == 2) continue;
        if (pp.p % 4 == 1) {
            prod *= (1 + static_cast<std::int64_t>(pp.e));
        } else if (pp.e % 2 == 1) {
            return 0;
        }
    }
    return prod;
}

inline std::int64_t r2_brute(std::uint64_t n) {
    if (n == 0) return 1;
    std::int64_t count = 0;
    const std::int64_t lim = static_cast<std::int64_t>(isqrt_u64(n));
    for (std::int64_t x = -lim; x <= lim; ++x) {
        const std::uint64_t rest = n - static_cast<std::uint64_t>(x * x);
        if (is_square(rest)) {
            const std::uint64_t y = isqrt_u64(rest);
            count += (y == 0) ? 1 : 2;
        }
    }
    return count;
}

/**
 * R(n): number of (x, y) in Z^2 with x^2 + 5y^2 = n.
 *
 * With n = 2^a 5^b prod u_i^{v_i} prod w_j^{s_j}, where u = 1, 3, 7, 9 and
 * w = 11, 13, 17, 19 (mod 20): any odd s_j kills the count; otherwise
 * R(n) = (1 + (-1)^{a + t}) prod (1 + v_i), with t the number of prime
 * factors (with multiplicity) congruent to 3 or 7 (mod 20).  The parity
 * factor binds once; each w-prime's even-exponent condition binds per prime.
 * R(0) = 1.
 */
inline std::int64_t rep_x2p5y2_closed(std::uint64_t n) {
    if (n == 0) return 1;
    std::uint32_t a = 0;
    std::uint64_t t = 0;
    std::int64_t prod = 1;
    for (const PrimePower& pp : factorize(n)) {
        if (pp.p == 2) {
            a = pp.e;
            continue;
        }
        if (pp.p == 5) continue;
        const std::uint64_t r = pp.p % 20;
        if (r == 1 || r == 3 || r == 7 || r == 9) {
            prod *= (1 + static_cast<std::int64_t>(pp.e));
            if (r == 3 || r == 7) t += pp.e;
        } else {
            if (pp.e % 2 == 1) return 0;
        }
    }
    const bool even_parity = ((a + t) % 2) == 0;
    return even_parity ? 2 * prod : 0;
}

inline std::int64_t rep_x2p5y2_brute(std::uint64_t n) {
    if (n == 0) return 1;
    std::int64_t count = 0;
    const std::int64_t ylim = static_cast<std::int64_t>(isqrt_u64(n / 5));
    for (std::int64_t y = -ylim; y <= ylim; ++y) {
        const std::uint64_t rest = n - 5 * static_cast<std::uint64_t>(y * y);
        if (is_square(rest)) {
            const std::uint64_t x = isqrt_u64(rest);
            count += (x == 0) ? 1 : 2;
        }
    }
    return count;
}

/// Value of the overpartition-pair count at 3n, reduced mod 3, from the
/// closed form (-1)^n r2(n); an independent route that avoids any series.
inline std::uint32_t pp3n_mod3(std::uint64_t n) {
    if (n == 0) return 1;
    const std::int64_t r = r2_closed(n) % 3;
    if (n % 2 == 0) return static_cast<std::uint32_t>(r);
    return static_cast<std::uint32_t>((3 - r) % 3);
}

/// Value of the overpartition-pair count at 5n, reduced mod 5, from the
/// closed form (-1)^n R(n) with R counting x^2 + 5y^2 representations.
inline std::uint32_t pp5n_mod5(std::uint64_t n) {
    if (n == 0) return 1;
    const std::int64_t r = rep_x2p5y2_closed(n) % 5;
    if (n % 2 == 0) return static_cast<std::uint32_t>(r);
    return static_cast<std::uint32_t>((5 - r) % 5);
}

}  // namespace opp
