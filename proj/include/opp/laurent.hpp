#pragma once

/**
 * @file laurent.hpp
 * @brief Laurent polynomials in one variable z with exact integer entries.
 *
 * Storage is dense over the exponent span [lo, lo + size): entry i holds the
 * coefficient of z^(lo + i).  The zero polynomial is the empty vector with
 * lo = 0; nonzero polynomials keep both edge entries nonzero (trimmed), so
 * structural equality is canonical equality.
 */

#include "bigint.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace opp {

class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(Int v) {
        LaurentPoly p;
        if (v != 0) {
            p.lo_ = 0;
            p.c_.push_back(std::move(v));
        }
        return p;
    }

    static LaurentPoly monomial(Int v, std::int64_t exp) {
        LaurentPoly p;
        if (v != 0) {
            p.lo_ = exp;
            p.c_.push_back(std::move(v));
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    // Exponent bounds; both return 0 for the zero polynomial.
    std::int64_t min_exp() const { return lo_; }
    std::int64_t max_exp() const {
        return c_.empty() ? 0 : lo_ + static_cast<std::int64_t>(c_.size()) - 1;
    }

    Int coeff(std::int64_t exp) const {
        if (c_.empty() || exp < lo_ || exp > max_exp()) return Int(0);
        return c_[static_cast<std::size_t>(exp - lo_)];
    }

    // Entry access for folding: (exponent, value) pairs in increasing exponent order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] != 0) f(lo_ + static_cast<std::int64_t>(i), c_[i]);
        }
    }

    // *this += z^shift * other.  Safe against aliasing.
    void add_shifted(const LaurentPoly& other, std::int64_t shift) {
        if (other.is_zero()) return;
        if (&other == this) {
            LaurentPoly copy(other);
            add_shifted(copy, shift);
            return;
        }
        const std::int64_t olo = other.lo_ + shift;
        const std::int64_t ohi = other.max_exp() + shift;
        grow_span(olo, ohi);
        for (std::size_t i = 0; i < other.c_.size(); ++i) {
            c_[static_cast<std::size_t>(olo + static_cast<std::int64_t>(i) - lo_)] += other.c_[i];
        }
        trim();
    }

    // *this += a * b.  Safe against aliasing with either operand.
    void add_mul(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return;
        if (&a == this || &b == this) {
            LaurentPoly prod;
            prod.add_mul_impl(a, b);
            add_shifted(prod, 0);
            return;
        }
        add_mul_impl(a, b);
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(a);
        r.add_shifted(b, 0);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r(a);
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        r.add_mul_impl(a, b);
        return r;
    }

    bool operator==(const LaurentPoly& other) const = default;

    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        for_each([&](std::int64_t e, const Int& v) {
            if (!out.empty()) out += v < 0 ? " - " : " + ";
            else if (v < 0) out += "-";
            Int av = v < 0 ? Int(-v) : v;
            const bool unit_coeff = (av == 1) && e != 0;
            if (!unit_coeff) out += av.str();
            if (e != 0) {
                if (!unit_coeff) out += "*";
                out += "z";
                if (e != 1) out += "^" + std::to_string(e);
            }
        });
        return out;
    }

private:
    void add_mul_impl(const LaurentPoly& a, const LaurentPoly& b) {
        const std::int64_t rlo = a.lo_ + b.lo_;
        const std::int64_t rhi = a.max_exp() + b.max_exp();
        grow_span(rlo, rhi);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            const std::size_t base =
                static_cast<std::size_t>(rlo + static_cast<std::int64_t>(i) - lo_);
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] != 0) c_[base + j] += a.c_[i] * b.c_[j];
            }
        }
        trim();
    }

    // Ensure the storage covers [nlo, nhi] in addition to the current span.
    void grow_span(std::int64_t nlo, std::int64_t nhi) {
        if (c_.empty()) {
            lo_ = nlo;
            c_.assign(static_cast<std::size_t>(nhi - nlo + 1), Int(0));
            return;
        }
        if (nlo < lo_) {
            c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - nlo), Int(0));
            lo_ = nlo;
        }
        if (nhi > max_exp()) {
            c_.resize(static_cast<std::size_t>(nhi - lo_ + 1), Int(0));
        }
    }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0) ++lead;
        if (lead) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
            lo_ += static_cast<std::int64_t>(lead);
        }
        if (c_.empty()) lo_ = 0;
    }

    std::int64_t lo_ = 0;
    std::vector<Int> c_;
};

}  // namespace opp
