#pragma once

/**
 * @file series.hpp
 * @brief Truncated formal power series in q over an exact coefficient ring.
 *
 * A series of order N is the vector of coefficients of q^0 .. q^(N-1); nothing
 * is known beyond the order, so reading past it is an error rather than a
 * zero.  Values are immutable; every operation returns a new series.  Binary
 * operations require identical ring objects and truncate to the smaller order.
 *
 * Multiplication dispatches on sparsity: the operand with fewer nonzero
 * coefficients drives the outer loop, so a product against an O(sqrt(N))
 * support series (theta functions, Euler products) costs O(N*nnz) instead of
 * O(N^2).  Inversion runs the standard linear recurrence over the nonzero
 * support of the input only.
 */

#include "rings.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

namespace opp {

template <CoefficientRing R>
class Series {
public:
    using ring_type = R;
    using value_type = typename R::value_type;

    Series(R ring, std::vector<value_type> coeffs, std::size_t order)
        : ring_(std::move(ring)), c_(std::move(coeffs)) {
        if (order == 0) throw std::invalid_argument("Series: order must be >= 1");
        if (c_.size() > order) {
            throw std::invalid_argument("Series: more coefficients than the truncation order");
        }
        for (const auto& v : c_) {
            if (!ring_.validate(v)) {
                throw std::invalid_argument("Series: coefficient not valid in " + ring_.name());
            }
        }
        c_.resize(order, ring_.zero());
    }

    const R& ring() const { return ring_; }
    std::size_t order() const { return c_.size(); }

    const value_type& operator[](std::size_t n) const {
        if (n >= c_.size()) {
            throw std::out_of_range("Series: coefficient of q^" + std::to_string(n) +
                                    " is beyond truncation order " + std::to_string(c_.size()));
        }
        return c_[n];
    }

    const std::vector<value_type>& coeffs() const { return c_; }

private:
    R ring_;
    std::vector<value_type> c_;
};

namespace detail {

template <CoefficientRing R>
void require_same_ring(const Series<R>& a, const Series<R>& b) {
    if (!(a.ring() == b.ring())) {
        throw std::invalid_argument("series ring mismatch: " + a.ring().name() + " vs " +
                                    b.ring().name());
    }
}

template <CoefficientRing R>
std::size_t nnz_prefix(const std::vector<typename R::value_type>& v, const R& ring,
                       std::size_t n) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!ring.is_zero(v[i])) ++k;
    }
    return k;
}

}  // namespace detail

template <CoefficientRing R>
Series<R> make_series(R ring, std::vector<typename R::value_type> coeffs, std::size_t order) {
    return Series<R>(std::move(ring), std::move(coeffs), order);
}

/// Convenience constructor reducing machine integers into the ring.
template <CoefficientRing R>
Series<R> series_from_ints(const R& ring, const std::vector<std::int64_t>& coeffs,
                           std::size_t order) {
    std::vector<typename R::value_type> v;
    v.reserve(coeffs.size());
    for (std::int64_t x : coeffs) v.push_back(ring.from_ll(x));
    return Series<R>(ring, std::move(v), order);
}

template <CoefficientRing R>
Series<R> make_one(const R& ring, std::size_t order) {
    return Series<R>(ring, {ring.one()}, order);
}

template <CoefficientRing R>
Series<R> make_zero(const R& ring, std::size_t order) {
    return Series<R>(ring, {}, order);
}

/// Single term c * q^exp.
template <CoefficientRing R>
Series<R> make_monomial(const R& ring, std::int64_t c, std::size_t exp, std::size_t order) {
    if (exp >= order) return make_zero(ring, order);
    std::vector<typename R::value_type> v(exp + 1, ring.zero());
    v[exp] = ring.from_ll(c);
    return Series<R>(ring, std::move(v), order);
}

template <CoefficientRing R>
const typename R::value_type& coeff_at(const Series<R>& a, std::size_t n) {
    return a[n];
}

template <CoefficientRing R>
Series<R> add(const Series<R>& a, const Series<R>& b) {
    detail::require_same_ring(a, b);
    const R& ring = a.ring();
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<typename R::value_type> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(ring.add(a.coeffs()[i], b.coeffs()[i]));
    return Series<R>(ring, std::move(out), n);
}

template <CoefficientRing R>
Series<R> sub(const Series<R>& a, const Series<R>& b) {
    detail::require_same_ring(a, b);
    const R& ring = a.ring();
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<typename R::value_type> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(ring.sub(a.coeffs()[i], b.coeffs()[i]));
    return Series<R>(ring, std::move(out), n);
}

template <CoefficientRing R>
Series<R> negate(const Series<R>& a) {
    const R& ring = a.ring();
    std::vector<typename R::value_type> out;
    out.reserve(a.order());
    for (const auto& v : a.coeffs()) out.push_back(ring.neg(v));
    return Series<R>(ring, std::move(out), a.order());
}

template <CoefficientRing R>
Series<R> scale(const Series<R>& a, std::int64_t c) {
    const R& ring = a.ring();
    const auto f = ring.from_ll(c);
    std::vector<typename R::value_type> out;
    out.reserve(a.order());
    for (const auto& v : a.coeffs()) out.push_back(ring.mul(f, v));
    return Series<R>(ring, std::move(out), a.order());
}

template <CoefficientRing R>
Series<R> mul(const Series<R>& a, const Series<R>& b) {
    detail::require_same_ring(a, b);
    const R& ring = a.ring();
    const std::size_t n = std::min(a.order(), b.order());
    const auto& av = a.coeffs();
    const auto& bv = b.coeffs();
    const std::size_t nnz_a = detail::nnz_prefix(av, ring, n);
    const std::size_t nnz_b = detail::nnz_prefix(bv, ring, n);
    // The sparser operand drives the outer loop: cost O(n * min(nnz)).
    const auto& outer = nnz_a <= nnz_b ? av : bv;
    const auto& inner = nnz_a <= nnz_b ? bv : av;

    if constexpr (std::is_same_v<R, ModRing>) {
        const std::uint64_t m = ring.modulus();
        std::vector<std::uint64_t> acc(n, 0);
        // For small moduli whole rows can accumulate without reduction:
        // products are < 2^32 and the row length keeps sums below 2^64.
        const bool lazy = m <= 65536;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t ai = outer[i];
            if (ai == 0) continue;
            const std::size_t lim = n - i;
            std::uint64_t* out = acc.data() + i;
            const std::uint32_t* in = inner.data();
            if (lazy) {
                for (std::size_t j = 0; j < lim; ++j) out[j] += ai * in[j];
            } else {
                for (std::size_t j = 0; j < lim; ++j) out[j] = (out[j] + ai * in[j]) % m;
            }
        }
        std::vector<std::uint32_t> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(acc[i] % m);
        return Series<R>(ring, std::move(out), n);
    } else {
        std::vector<typename R::value_type> out(n, ring.zero());
        for (std::size_t i = 0; i < n; ++i) {
            if (ring.is_zero(outer[i])) continue;
            const std::size_t lim = n - i;
            for (std::size_t j = 0; j < lim; ++j) {
                if (!ring.is_zero(inner[j])) ring.mul_add(out[i + j], outer[i], inner[j]);
            }
        }
        return Series<R>(ring, std::move(out), n);
    }
}

/// Multiplicative inverse to the series' own order.  The constant term must
/// be a unit of the ring.  Cost is O(order * nnz(a)).
template <CoefficientRing R>
Series<R> invert(const Series<R>& a) {
    const R& ring = a.ring();
    const std::size_t n = a.order();
    const auto inv0 = ring.try_invert(a[0]);
    if (!inv0) {
        throw std::domain_error("invert: constant term " + ring.str(a[0]) +
                                " is not a unit in " + ring.name());
    }
    const auto& av = a.coeffs();
    std::vector<std::size_t> support;
    for (std::size_t k = 1; k < n; ++k) {
        if (!ring.is_zero(av[k])) support.push_back(k);
    }

    if constexpr (std::is_same_v<R, ModRing>) {
        const std::uint64_t m = ring.modulus();
        const bool lazy = m <= 65536;
        std::vector<std::uint32_t> b(n, 0);
        b[0] = *inv0;
        for (std::size_t i = 1; i < n; ++i) {
            std::uint64_t s = 0;
            for (std::size_t k : support) {
                if (k > i) break;
                if (lazy) s += std::uint64_t(av[k]) * b[i - k];
                else s = (s + std::uint64_t(av[k]) * b[i - k]) % m;
            }
            s %= m;
            b[i] = static_cast<std::uint32_t>(((m - s) % m) * (*inv0) % m);
        }
        return Series<R>(ring, std::move(b), n);
    } else {
        std::vector<typename R::value_type> b(n, ring.zero());
        b[0] = *inv0;
        for (std::size_t i = 1; i < n; ++i) {
            auto acc = ring.zero();
            for (std::size_t k : support) {
                if (k > i) break;
                ring.mul_add(acc, av[k], b[i - k]);
            }
            b[i] = ring.neg(ring.mul(*inv0, acc));
        }
        return Series<R>(ring, std::move(b), n);
    }
}

/// Integer power by repeated squaring; pow(a, 0) = 1; negative exponents
/// require a unit constant term.
template <CoefficientRing R>
Series<R> pow(const Series<R>& a, std::int64_t e) {
    const R& ring = a.ring();
    if (e == 0) return make_one(ring, a.order());
    Series<R> base = e < 0 ? invert(a) : a;
    std::uint64_t k = e < 0 ? (0 - static_cast<std::uint64_t>(e)) : static_cast<std::uint64_t>(e);
    Series<R> result = make_one(ring, base.order());
    while (k) {
        if (k & 1) result = mul(result, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return result;
}

/// Coefficients a_{m n + r} as a series in their own right.
template <CoefficientRing R>
Series<R> dissect(const Series<R>& a, std::int64_t m, std::int64_t r) {
    if (m < 1) throw std::invalid_argument("dissect: modulus must be >= 1");
    if (r < 0 || r >= m) throw std::invalid_argument("dissect: residue out of range [0, m)");
    const std::int64_t n = static_cast<std::int64_t>(a.order());
    if (n <= r) {
        throw std::invalid_argument("dissect: order " + std::to_string(n) +
                                    " has no coefficient in residue class " + std::to_string(r));
    }
    const std::size_t k = static_cast<std::size_t>((n - r + m - 1) / m);
    std::vector<typename R::value_type> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        out.push_back(a.coeffs()[static_cast<std::size_t>(r) + static_cast<std::size_t>(m) * i]);
    }
    return Series<R>(a.ring(), std::move(out), k);
}

/// Substitute q -> q^k: coefficient a_n lands on q^(k n).  Result order k*N,
/// every coefficient of which is determined by the input.
template <CoefficientRing R>
Series<R> inflate(const Series<R>& a, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("inflate: scale must be >= 1");
    const std::size_t n = a.order() * static_cast<std::size_t>(k);
    std::vector<typename R::value_type> out(n, a.ring().zero());
    for (std::size_t i = 0; i < a.order(); ++i) out[i * static_cast<std::size_t>(k)] = a.coeffs()[i];
    return Series<R>(a.ring(), std::move(out), n);
}

template <CoefficientRing R>
Series<R> truncate(const Series<R>& a, std::size_t order) {
    if (order == 0) throw std::invalid_argument("truncate: order must be >= 1");
    if (order > a.order()) {
        throw std::invalid_argument("truncate: cannot extend a series (order " +
                                    std::to_string(a.order()) + " -> " + std::to_string(order) +
                                    ")");
    }
    std::vector<typename R::value_type> out(a.coeffs().begin(),
                                            a.coeffs().begin() + static_cast<std::ptrdiff_t>(order));
    return Series<R>(a.ring(), std::move(out), order);
}

/// Multiply by q^d, keeping the order (top coefficients fall off).
template <CoefficientRing R>
Series<R> shift_up(const Series<R>& a, std::size_t d) {
    const std::size_t n = a.order();
    std::vector<typename R::value_type> out(n, a.ring().zero());
    for (std::size_t i = d; i < n; ++i) out[i] = a.coeffs()[i - d];
    return Series<R>(a.ring(), std::move(out), n);
}

/// Reduce an exact-integer series into IntegersMod(m).
inline Series<ModRing> reduce_mod(const Series<ZRing>& a, std::uint64_t m) {
    ModRing ring(m);
    std::vector<std::uint32_t> out;
    out.reserve(a.order());
    for (const auto& v : a.coeffs()) out.push_back(ring.reduce(v));
    return Series<ModRing>(ring, std::move(out), a.order());
}

/// Exact equality: same ring, same order, same coefficients.
template <CoefficientRing R>
bool operator==(const Series<R>& a, const Series<R>& b) {
    if (!(a.ring() == b.ring()) || a.order() != b.order()) return false;
    const R& ring = a.ring();
    for (std::size_t i = 0; i < a.order(); ++i) {
        if (!ring.equal(a.coeffs()[i], b.coeffs()[i])) return false;
    }
    return true;
}

template <CoefficientRing R>
bool operator!=(const Series<R>& a, const Series<R>& b) { return !(a == b); }

template <CoefficientRing R>
bool equal_upto(const Series<R>& a, const Series<R>& b, std::size_t n) {
    detail::require_same_ring(a, b);
    if (n > a.order() || n > b.order()) {
        throw std::invalid_argument("equal_upto: comparison order exceeds a series order");
    }
    const R& ring = a.ring();
    for (std::size_t i = 0; i < n; ++i) {
        if (!ring.equal(a.coeffs()[i], b.coeffs()[i])) return false;
    }
    return true;
}

template <CoefficientRing R>
Series<R> operator+(const Series<R>& a, const Series<R>& b) { return add(a, b); }
template <CoefficientRing R>
Series<R> operator-(const Series<R>& a, const Series<R>& b) { return sub(a, b); }
template <CoefficientRing R>
Series<R> operator-(const Series<R>& a) { return negate(a); }
template <CoefficientRing R>
Series<R> operator*(const Series<R>& a, const Series<R>& b) { return mul(a, b); }

}  // namespace opp
