#pragma once

/**
 * @file special_series.hpp
 * @brief Named q-series: Euler products, theta functions, eta quotients,
 *        Lambert sums, and the generating functions the verification checks
 *        are built from.
 *
 * Everything here is generated over the exact integers; callers reduce into
 * IntegersMod when a congruence view is wanted.  Euler products expand by the
 * pentagonal number theorem, so (q^k;q^k)_inf has O(sqrt(N/k)) support and
 * products/inversions against it stay cheap.
 */

#include "series.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace opp {

enum class NamedSeriesId {
    pp,         // overpartition pairs: 1 / phi(-q)^2
    op,         // overpartitions: 1 / phi(-q)
    A,          // (q;q)(q^6;q^6)^2 / ((q^2;q^2)(q^3;q^3))
    B,          // residue-1 stream of the 3-dissection of phi(-q)
    b,          // (q;q)^4 (q^2;q^2)^6
    c,          // phi(-q)^6
    p_minus2,   // 1 / (q;q)^2
    chan_a,     // 1 / ((q;q)(q^2;q^2))
    PD,         // (q^6;q^6) / ((q;q)(q^2;q^2)(q^3;q^3))
    phi_plus,   // phi(q)  = sum q^{n^2}, doubled away from 0
    phi_minus,  // phi(-q)
    psi,        // psi(q)  = sum q^{n(n+1)/2}
    r2,         // phi(q)^2
    r8,         // phi(q)^8
};

inline const std::vector<std::pair<NamedSeriesId, std::string_view>>& named_series_table() {
    static const std::vector<std::pair<NamedSeriesId, std::string_view>> table = {
        {NamedSeriesId::pp, "pp"},
        {NamedSeriesId::op, "op"},
        {NamedSeriesId::A, "A"},
        {NamedSeriesId::B, "B"},
        {NamedSeriesId::b, "b"},
        {NamedSeriesId::c, "c"},
        {NamedSeriesId::p_minus2, "p_minus2"},
        {NamedSeriesId::chan_a, "chan_a"},
        {NamedSeriesId::PD, "PD"},
        {NamedSeriesId::phi_plus, "phi_plus"},
        {NamedSeriesId::phi_minus, "phi_minus"},
        {NamedSeriesId::psi, "psi"},
        {NamedSeriesId::r2, "r2"},
        {NamedSeriesId::r8, "r8"},
    };
    return table;
}

inline std::string_view to_string(NamedSeriesId id) {
    for (const auto& [k, v] : named_series_table()) {
        if (k == id) return v;
    }
    return "?";
}

inline std::optional<NamedSeriesId> named_series_from_string(std::string_view s) {
    for (const auto& [k, v] : named_series_table()) {
        if (v == s) return k;
    }
    return std::nullopt;
}

struct EtaTerm {
    std::uint32_t scale;     // k of (q^k;q^k)_inf, k >= 1
    std::int32_t exponent;   // nonzero after canonicalization
    bool operator==(const EtaTerm&) const = default;
};

/// prefactor * q^qshift * prod_i (q^{k_i};q^{k_i})_inf^{e_i}, scales strictly
/// increasing.  Construction canonicalizes: terms are sorted, duplicates
/// merged, zero exponents dropped.
class EtaQuotientSpec {
public:
    EtaQuotientSpec(std::int64_t prefactor, std::int64_t qshift, std::vector<EtaTerm> terms)
        : prefactor_(prefactor), qshift_(qshift) {
        if (qshift < 0) throw std::invalid_argument("EtaQuotientSpec: qshift must be >= 0");
        std::sort(terms.begin(), terms.end(),
                  [](const EtaTerm& x, const EtaTerm& y) { return x.scale < y.scale; });
        for (const EtaTerm& t : terms) {
            if (t.scale < 1) throw std::invalid_argument("EtaQuotientSpec: scale must be >= 1");
            if (!terms_.empty() && terms_.back().scale == t.scale) {
                terms_.back().exponent += t.exponent;
            } else {
                terms_.push_back(t);
            }
        }
        std::erase_if(terms_, [](const EtaTerm& t) { return t.exponent == 0; });
    }

    std::int64_t prefactor() const { return prefactor_; }
    std::int64_t qshift() const { return qshift_; }
    const std::vector<EtaTerm>& terms() const { return terms_; }
    bool operator==(const EtaQuotientSpec&) const = default;

private:
    std::int64_t prefactor_;
    std::int64_t qshift_;
    std::vector<EtaTerm> terms_;
};

/// (q^k;q^k)_inf by the pentagonal number theorem: exponents k*j(3j-1)/2 with
/// sign (-1)^j over j in Z.
inline Series<ZRing> euler_product(std::uint32_t k, std::size_t order) {
    if (k < 1) throw std::invalid_argument("euler_product: scale must be >= 1");
    ZRing ring;
    std::vector<Int> c(order, Int(0));
    c[0] = 1;
    for (std::int64_t j = 1;; ++j) {
        const std::int64_t g1 = j * (3 * j - 1) / 2;
        const std::int64_t g2 = j * (3 * j + 1) / 2;
        const Int sgn = (j & 1) ? -1 : 1;
        const std::int64_t e1 = g1 * k;
        const std::int64_t e2 = g2 * k;
        if (e1 >= static_cast<std::int64_t>(order)) break;
        c[static_cast<std::size_t>(e1)] += sgn;
        if (e2 < static_cast<std::int64_t>(order)) c[static_cast<std::size_t>(e2)] += sgn;
    }
    return Series<ZRing>(ring, std::move(c), order);
}

/// phi(sign*q) = 1 + 2 sum_{j>=1} sign^j q^{j^2}.
inline Series<ZRing> theta_phi(int sign, std::size_t order) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("theta_phi: sign must be +1 or -1");
    ZRing ring;
    std::vector<Int> c(order, Int(0));
    c[0] = 1;
    for (std::int64_t j = 1; j * j < static_cast<std::int64_t>(order); ++j) {
        c[static_cast<std::size_t>(j * j)] = (sign < 0 && (j & 1)) ? -2 : 2;
    }
    return Series<ZRing>(ring, std::move(c), order);
}

/// psi(q) = sum_{j>=0} q^{j(j+1)/2}.
inline Series<ZRing> theta_psi(std::size_t order) {
    ZRing ring;
    std::vector<Int> c(order, Int(0));
    for (std::int64_t j = 0; j * (j + 1) / 2 < static_cast<std::int64_t>(order); ++j) {
        c[static_cast<std::size_t>(j * (j + 1) / 2)] = 1;
    }
    return Series<ZRing>(ring, std::move(c), order);
}

inline Series<ZRing> eta_quotient(const EtaQuotientSpec& spec, std::size_t order) {
    Series<ZRing> acc = make_one(ZRing(), order);
    for (const EtaTerm& t : spec.terms()) {
        acc = mul(acc, pow(euler_product(t.scale, order), t.exponent));
    }
    acc = scale(acc, spec.prefactor());
    if (spec.qshift() > 0) acc = shift_up(acc, static_cast<std::size_t>(spec.qshift()));
    return acc;
}

inline Series<ZRing> named_series(NamedSeriesId id, std::size_t order) {
    using Id = NamedSeriesId;
    switch (id) {
        case Id::pp: {
            const auto ob = invert(theta_phi(-1, order));
            return mul(ob, ob);
        }
        case Id::op:
            return invert(theta_phi(-1, order));
        case Id::A:
            return eta_quotient(EtaQuotientSpec(1, 0, {{1, 1}, {2, -1}, {3, -1}, {6, 2}}), order);
        case Id::B:
            // B_n = [q^{3n+1}] phi(-q); the q^{3n+1} part of phi(-q) is q*B(q^3).
            return dissect(theta_phi(-1, 3 * order), 3, 1);
        case Id::b:
            return mul(pow(euler_product(1, order), 4), pow(euler_product(2, order), 6));
        case Id::c:
            return pow(theta_phi(-1, order), 6);
        case Id::p_minus2:
            return pow(invert(euler_product(1, order)), 2);
        case Id::chan_a:
            return invert(mul(euler_product(1, order), euler_product(2, order)));
        case Id::PD:
            return eta_quotient(EtaQuotientSpec(1, 0, {{1, -1}, {2, -1}, {3, -1}, {6, 1}}), order);
        case Id::phi_plus:
            return theta_phi(1, order);
        case Id::phi_minus:
            return theta_phi(-1, order);
        case Id::psi:
            return theta_psi(order);
        case Id::r2:
            return pow(theta_phi(1, order), 2);
        case Id::r8:
            return pow(theta_phi(1, order), 8);
    }
    throw std::invalid_argument("named_series: unknown id");
}

/// sum_{k>=0} q^{5k+r} / (1 - (-q)^{5k+r}), 1 <= r <= 4.  Expanding the
/// geometric series, the term with m = 5k+r adds (-1)^{m j} to q^{m(j+1)}.
inline Series<ZRing> lambert_a(int r, std::size_t order) {
    if (r < 1 || r > 4) throw std::invalid_argument("lambert_a: residue must be in [1, 4]");
    ZRing ring;
    std::vector<Int> c(order, Int(0));
    for (std::int64_t m = r; m < static_cast<std::int64_t>(order); m += 5) {
        for (std::int64_t j = 0; m * (j + 1) < static_cast<std::int64_t>(order); ++j) {
            const bool negative = (m & 1) && (j & 1);
            c[static_cast<std::size_t>(m * (j + 1))] += negative ? -1 : 1;
        }
    }
    return Series<ZRing>(ring, std::move(c), order);
}

/// phi(q)^8 as the Lambert sum 1 + 16 sum_{n>=1} n^3 q^n / (1 - (-q)^n),
/// an independent route to the eighth power of the theta series.
inline Series<ZRing> r8_lambert(std::size_t order) {
    ZRing ring;
    std::vector<Int> c(order, Int(0));
    c[0] = 1;
    for (std::int64_t m = 1; m < static_cast<std::int64_t>(order); ++m) {
        const Int cube = Int(m) * m * m * 16;
        for (std::int64_t j = 0; m * (j + 1) < static_cast<std::int64_t>(order); ++j) {
            const bool negative = (m & 1) && (j & 1);
            c[static_cast<std::size_t>(m * (j + 1))] += negative ? -cube : cube;
        }
    }
    return Series<ZRing>(ring, std::move(c), order);
}

/// Generate a series at argument q^k truncated to the requested order:
/// gen is called for the base order ceil(order / k).
template <class Gen>
Series<ZRing> at_scale(Gen&& gen, std::uint32_t k, std::size_t order) {
    const std::size_t base = (order + k - 1) / k;
    return truncate(inflate(gen(base), k), order);
}

/**
 * Parse the eta-quotient grammar:  C [* q^D] [* (K1)^E1 (K2)^E2 ...]
 *
 * - C is an optional integer prefactor (default 1),
 * - q^D (or bare q) shifts by q^D,
 * - each (K)^E is (q^K;q^K)_inf^E with E a possibly negative integer
 *   (default 1 when ^E is omitted),
 * - '*' separators are optional; whitespace is free.
 */
inline EtaQuotientSpec parse_eta_spec(std::string_view text) {
    std::size_t i = 0;
    const auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
    };
    const auto parse_int = [&]() -> std::int64_t {
        skip();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        std::size_t digits_from = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits_from) {
            throw std::invalid_argument("eta spec: expected integer at offset " +
                                        std::to_string(start));
        }
        return std::stoll(std::string(text.substr(start, i - start)));
    };

    std::int64_t prefactor = 1;
    std::int64_t qshift = 0;
    std::vector<EtaTerm> terms;
    bool saw_anything = false;

    skip();
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == 'q') {
            ++i;
            if (i < text.size() && text[i] == '^') {
                ++i;
                const std::int64_t d = parse_int();
                if (d < 0) throw std::invalid_argument("eta spec: q-shift must be >= 0");
                qshift += d;
            } else {
                qshift += 1;
            }
        } else if (ch == '(') {
            ++i;
            const std::int64_t k = parse_int();
            skip();
            if (i >= text.size() || text[i] != ')') {
                throw std::invalid_argument("eta spec: expected ')'");
            }
            ++i;
            std::int64_t e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                e = parse_int();
            }
            if (k < 1 || k > 0xffffffffLL) {
                throw std::invalid_argument("eta spec: scale out of range");
            }
            terms.push_back({static_cast<std::uint32_t>(k), static_cast<std::int32_t>(e)});
        } else if (ch == '-' || ch == '+' || std::isdigit(static_cast<unsigned char>(ch))) {
            prefactor *= parse_int();
        } else {
            throw std::invalid_argument(std::string("eta spec: unexpected character '") + ch +
                                        "'");
        }
        saw_anything = true;
        skip();
    }
    if (!saw_anything) throw std::invalid_argument("eta spec: empty input");
    return EtaQuotientSpec(prefactor, qshift, std::move(terms));
}

}  // namespace opp
