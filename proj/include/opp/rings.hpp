#pragma once

/**
 * @file rings.hpp
 * @brief The three exact coefficient rings truncated series can be formed over.
 *
 * A ring object carries its parameters (modulus, Laurent window) and supplies
 * the arithmetic on its value_type.  Series operations are generic over any
 * type satisfying the CoefficientRing concept; binary series operations
 * require equal ring objects.
 */

#include "bigint.hpp"
#include "laurent.hpp"

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace opp {

template <typename R>
concept CoefficientRing =
    std::equality_comparable<R> && std::copy_constructible<R> &&
    requires(const R r, const typename R::value_type& a, typename R::value_type& acc,
             std::int64_t k) {
        typename R::value_type;
        { r.zero() } -> std::convertible_to<typename R::value_type>;
        { r.one() } -> std::convertible_to<typename R::value_type>;
        { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
        { r.sub(a, a) } -> std::convertible_to<typename R::value_type>;
        { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
        { r.neg(a) } -> std::convertible_to<typename R::value_type>;
        { r.mul_add(acc, a, a) };
        { r.is_zero(a) } -> std::convertible_to<bool>;
        { r.equal(a, a) } -> std::convertible_to<bool>;
        { r.validate(a) } -> std::convertible_to<bool>;
        { r.try_invert(a) } -> std::convertible_to<std::optional<typename R::value_type>>;
        { r.from_ll(k) } -> std::convertible_to<typename R::value_type>;
        { r.str(a) } -> std::convertible_to<std::string>;
        { r.name() } -> std::convertible_to<std::string>;
    };

/// Exact arbitrary-precision integers.
struct ZRing {
    using value_type = Int;

    bool operator==(const ZRing&) const = default;

    value_type zero() const { return Int(0); }
    value_type one() const { return Int(1); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    void mul_add(value_type& acc, const value_type& a, const value_type& b) const {
        acc += a * b;
    }
    bool is_zero(const value_type& a) const { return a.is_zero(); }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    bool validate(const value_type&) const { return true; }

    // Units of Z are +1 and -1.
    std::optional<value_type> try_invert(const value_type& a) const {
        if (a == 1 || a == -1) return a;
        return std::nullopt;
    }

    value_type from_ll(std::int64_t v) const { return Int(v); }
    std::string str(const value_type& a) const { return a.str(); }
    std::string name() const { return "ExactInteger"; }
};

/// Integers modulo M, canonical representatives in [0, M).  M must lie in
/// [2, 2^31]; moduli at or below 2^16 take a lazy-reduction convolution path.
class ModRing {
public:
    using value_type = std::uint32_t;

    explicit ModRing(std::uint64_t modulus) {
        if (modulus < 2 || modulus > (std::uint64_t(1) << 31)) {
            throw std::invalid_argument("ModRing: modulus must be in [2, 2^31]");
        }
        m_ = static_cast<std::uint32_t>(modulus);
    }

    std::uint32_t modulus() const { return m_; }
    bool operator==(const ModRing&) const = default;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type add(value_type a, value_type b) const {
        const std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<value_type>(s >= m_ ? s - m_ : s);
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (m_ - b); }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>((std::uint64_t(a) * b) % m_);
    }
    value_type neg(value_type a) const { return a ? m_ - a : 0; }
    void mul_add(value_type& acc, value_type a, value_type b) const { acc = add(acc, mul(a, b)); }
    bool is_zero(value_type a) const { return a == 0; }
    bool equal(value_type a, value_type b) const { return a == b; }
    bool validate(value_type a) const { return a < m_; }

    std::optional<value_type> try_invert(value_type a) const {
        std::int64_t t = 0, nt = 1;
        std::int64_t r = m_, nr = a % m_;
        while (nr != 0) {
            const std::int64_t q = r / nr;
            t = std::exchange(nt, t - q * nt);
            r = std::exchange(nr, r - q * nr);
        }
        if (r != 1) return std::nullopt;
        if (t < 0) t += m_;
        return static_cast<value_type>(t);
    }

    value_type from_ll(std::int64_t v) const {
        std::int64_t r = v % m_;
        if (r < 0) r += m_;
        return static_cast<value_type>(r);
    }

    value_type reduce(const Int& v) const {
        Int r = v % m_;
        if (r < 0) r += m_;
        return r.convert_to<value_type>();
    }

    std::string str(value_type a) const { return std::to_string(a); }
    std::string name() const { return "IntegersMod(" + std::to_string(m_) + ")"; }

private:
    std::uint32_t m_ = 2;
};

/// Laurent polynomials in z with integer entries, exponents confined to
/// [-window, window].  An operation whose result would leave the window is a
/// hard error, never a silent truncation.
class LaurentRing {
public:
    using value_type = LaurentPoly;

    explicit LaurentRing(std::int64_t window) : w_(window) {
        if (window < 0) throw std::invalid_argument("LaurentRing: window must be >= 0");
    }

    std::int64_t window() const { return w_; }
    bool operator==(const LaurentRing&) const = default;

    value_type zero() const { return LaurentPoly(); }
    value_type one() const { return LaurentPoly::constant(Int(1)); }
    value_type add(const value_type& a, const value_type& b) const { return checked(a + b); }
    value_type sub(const value_type& a, const value_type& b) const { return checked(a - b); }
    value_type mul(const value_type& a, const value_type& b) const { return checked(a * b); }
    value_type neg(const value_type& a) const { return -a; }
    void mul_add(value_type& acc, const value_type& a, const value_type& b) const {
        acc.add_mul(a, b);
        require_inside(acc);
    }
    bool is_zero(const value_type& a) const { return a.is_zero(); }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    bool validate(const value_type& a) const {
        return a.is_zero() || (a.min_exp() >= -w_ && a.max_exp() <= w_);
    }

    // Units are the monomials +/- z^k.
    std::optional<value_type> try_invert(const value_type& a) const {
        if (a.is_zero() || a.min_exp() != a.max_exp()) return std::nullopt;
        const Int c = a.coeff(a.min_exp());
        if (c != 1 && c != -1) return std::nullopt;
        return checked(LaurentPoly::monomial(c, -a.min_exp()));
    }

    value_type from_ll(std::int64_t v) const { return LaurentPoly::constant(Int(v)); }
    std::string str(const value_type& a) const { return a.str(); }
    std::string name() const { return "LaurentIntPoly(window=" + std::to_string(w_) + ")"; }

    value_type checked(value_type p) const {
        require_inside(p);
        return p;
    }

private:
    void require_inside(const value_type& p) const {
        if (!validate(p)) {
            throw std::domain_error("LaurentRing: exponent escapes window [-" +
                                    std::to_string(w_) + ", " + std::to_string(w_) + "]");
        }
    }

    std::int64_t w_ = 0;
};

static_assert(CoefficientRing<ZRing>);
static_assert(CoefficientRing<ModRing>);
static_assert(CoefficientRing<LaurentRing>);

}  // namespace opp
