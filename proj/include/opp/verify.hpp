#pragma once

/**
 * @file verify.hpp
 * @brief Registry of named verification checks over overpartition-pair
 *        arithmetic, plus an arithmetic-progression congruence scanner.
 *
 * Each check compares two independently computed objects (a series identity
 * against an eta-quotient closed form, a congruence family against a reduced
 * series, a rank statistic against brute-force enumeration) over a finite
 * window controlled by its parameters.  A check never proves the statement;
 * it reports the number of instances verified and the first counterexample
 * if one exists inside the window.
 *
 * Parameter defaults scale with a single budget knob.  Every parameter is
 * range-validated; a window that contains no instance at all is rejected
 * rather than reported as a vacuous pass.
 */

#include "arith.hpp"
#include "overpartitions.hpp"
#include "special_series.hpp"

#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace opp::verify {

enum class CheckId {
    gauss_identities,
    hs_dissection,
    identity_3n2,
    identity_4n3,
    cor23_mod64,
    cor23_mod5,
    mod4_all,
    ksv_mod8,
    ramanathan_pminus2,
    rank_r1_thirds,
    rank_r2_mod3,
    rank_r3_thirds,
    rank_diff_series_r1,
    rank_diff_series_r2,
    rank_diff_series_r3,
    cor34_series,
    chan_a_identity,
    thm41_pp3n,
    thm42_family_mod3,
    thm43_pp5n,
    lemma44_lambert,
    thm46_family_mod5,
    newman_b,
    thm51_mult_mod9,
    strange_2_13k,
    newman_c,
    thm55_mod5_vanish,
    thm56_strange_5pk,
    rank3_progression_scan,
};

inline const std::vector<std::pair<CheckId, std::string_view>>& check_table() {
    static const std::vector<std::pair<CheckId, std::string_view>> table = {
        {CheckId::gauss_identities, "gauss_identities"},
        {CheckId::hs_dissection, "hs_dissection"},
        {CheckId::identity_3n2, "identity_3n2"},
        {CheckId::identity_4n3, "identity_4n3"},
        {CheckId::cor23_mod64, "cor23_mod64"},
        {CheckId::cor23_mod5, "cor23_mod5"},
        {CheckId::mod4_all, "mod4_all"},
        {CheckId::ksv_mod8, "ksv_mod8"},
        {CheckId::ramanathan_pminus2, "ramanathan_pminus2"},
        {CheckId::rank_r1_thirds, "rank_r1_thirds"},
        {CheckId::rank_r2_mod3, "rank_r2_mod3"},
        {CheckId::rank_r3_thirds, "rank_r3_thirds"},
        {CheckId::rank_diff_series_r1, "rank_diff_series_r1"},
        {CheckId::rank_diff_series_r2, "rank_diff_series_r2"},
        {CheckId::rank_diff_series_r3, "rank_diff_series_r3"},
        {CheckId::cor34_series, "cor34_series"},
        {CheckId::chan_a_identity, "chan_a_identity"},
        {CheckId::thm41_pp3n, "thm41_pp3n"},
        {CheckId::thm42_family_mod3, "thm42_family_mod3"},
        {CheckId::thm43_pp5n, "thm43_pp5n"},
        {CheckId::lemma44_lambert, "lemma44_lambert"},
        {CheckId::thm46_family_mod5, "thm46_family_mod5"},
        {CheckId::newman_b, "newman_b"},
        {CheckId::thm51_mult_mod9, "thm51_mult_mod9"},
        {CheckId::strange_2_13k, "strange_2_13k"},
        {CheckId::newman_c, "newman_c"},
        {CheckId::thm55_mod5_vanish, "thm55_mod5_vanish"},
        {CheckId::thm56_strange_5pk, "thm56_strange_5pk"},
        {CheckId::rank3_progression_scan, "rank3_progression_scan"},
    };
    return table;
}

inline std::vector<CheckId> all_checks() {
    std::vector<CheckId> ids;
    for (const auto& [id, name] : check_table()) ids.push_back(id);
    return ids;
}

inline std::string_view to_string(CheckId id) {
    for (const auto& [k, v] : check_table()) {
        if (k == id) return v;
    }
    return "?";
}

inline std::optional<CheckId> check_from_string(std::string_view name) {
    for (const auto& [k, v] : check_table()) {
        if (v == name) return k;
    }
    return std::nullopt;
}

/// Integer-valued check parameters keyed by name ("N", "p", "k_max", ...).
using Params = std::map<std::string, std::int64_t>;

struct Failure {
    std::int64_t index = 0;
    std::string expected;
    std::string actual;
};

struct CheckReport {
    CheckId id;
    Params params;
    bool pass = false;
    std::int64_t checked = 0;
    std::optional<Failure> first_failure;
};

namespace detail {

inline std::string describe(const Int& v) { return to_decimal(v); }
inline std::string describe(std::uint32_t v) { return std::to_string(v); }
inline std::string describe(std::int64_t v) { return std::to_string(v); }
inline std::string describe(std::uint64_t v) { return std::to_string(v); }

/// Accumulates comparisons; remembers the first mismatch only.
class Gate {
public:
    template <class T>
    void equal(std::int64_t index, const T& expected, const T& actual) {
        ++checked_;
        if (!first_failure_ && !(expected == actual)) {
            first_failure_ = Failure{index, describe(expected), describe(actual)};
        }
    }

    void require(std::int64_t index, bool ok, std::string expected, std::string actual) {
        ++checked_;
        if (!first_failure_ && !ok) {
            first_failure_ = Failure{index, std::move(expected), std::move(actual)};
        }
    }

    void count(std::int64_t k = 1) { checked_ += k; }

    bool pass() const { return !first_failure_.has_value(); }
    std::int64_t checked() const { return checked_; }
    const std::optional<Failure>& first_failure() const { return first_failure_; }

private:
    std::int64_t checked_ = 0;
    std::optional<Failure> first_failure_;
};

inline std::int64_t ipow(std::int64_t base, std::uint32_t e) {
    std::int64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= base;
    return r;
}

inline Series<ZRing> pp_exact_series(std::size_t order) {
    const auto ob = invert(theta_phi(-1, order));
    return mul(ob, ob);
}

inline Series<ModRing> pp_mod_series(std::uint32_t m, std::size_t order) {
    const auto ob = invert(reduce_mod(theta_phi(-1, order), m));
    return mul(ob, ob);
}

inline Series<ModRing> pminus2_mod_series(std::uint32_t m, std::size_t order) {
    const auto inv = invert(reduce_mod(euler_product(1, order), m));
    return mul(inv, inv);
}

}  // namespace detail

/// Defaults scale linearly with the budget, with per-check floors keeping
/// each window non-vacuous and caps keeping single checks tractable.
inline Params default_params(CheckId id, std::int64_t budget = 500) {
    if (budget < 1) throw std::invalid_argument("default_params: budget must be >= 1");
    const auto lin = [budget](std::int64_t num, std::int64_t den, std::int64_t floor_,
                              std::int64_t cap) {
        return std::min(cap, std::max(floor_, budget * num / den));
    };
    switch (id) {
        case CheckId::gauss_identities: return {{"N", lin(2, 1, 16, 5000)}};
        case CheckId::hs_dissection: return {{"N", lin(3, 5, 16, 2000)}};
        case CheckId::identity_3n2: return {{"N", lin(1, 1, 8, 3000)}};
        case CheckId::identity_4n3: return {{"N", lin(1, 1, 8, 3000)}};
        case CheckId::cor23_mod64: return {{"N", lin(10, 1, 24, 100000)}};
        case CheckId::cor23_mod5: return {{"N", lin(10, 1, 24, 100000)}};
        case CheckId::mod4_all: return {{"N", lin(10, 1, 24, 100000)}};
        case CheckId::ksv_mod8: return {{"N", lin(10, 1, 24, 100000)}};
        case CheckId::ramanathan_pminus2: return {{"N", lin(10, 1, 24, 100000)}};
        case CheckId::rank_r1_thirds: return {{"N", lin(1, 10, 8, 1500)}};
        case CheckId::rank_r2_mod3: return {{"N", lin(1, 10, 8, 1500)}};
        case CheckId::rank_r3_thirds: return {{"N", lin(1, 10, 8, 1500)}};
        case CheckId::rank_diff_series_r1: return {{"N", lin(1, 5, 12, 1500)}};
        case CheckId::rank_diff_series_r2: return {{"N", lin(1, 5, 12, 1500)}};
        case CheckId::rank_diff_series_r3: return {{"N", lin(1, 5, 12, 1500)}};
        case CheckId::cor34_series: return {{"N", lin(3, 25, 8, 500)}};
        case CheckId::chan_a_identity: return {{"N", lin(2, 5, 12, 2000)}};
        case CheckId::thm41_pp3n: return {{"N", lin(6, 1, 16, 50000)}};
        case CheckId::thm42_family_mod3: return {{"N", lin(120, 1, 500, 150000)}};
        case CheckId::thm43_pp5n: return {{"N", lin(6, 1, 16, 30000)}};
        case CheckId::lemma44_lambert: return {{"N", lin(4, 1, 25, 100000)}};
        case CheckId::thm46_family_mod5: return {{"N", lin(120, 1, 500, 150000)}};
        case CheckId::newman_b: return {{"N", lin(1, 5, 13, 500)}, {"p", 13}};
        case CheckId::thm51_mult_mod9: return {{"N", lin(1, 5, 13, 2000)}, {"p", 13}};
        case CheckId::strange_2_13k: return {{"k_max", 3}};
        case CheckId::newman_c: return {{"N", lin(3, 10, 29, 500)}};
        case CheckId::thm55_mod5_vanish: return {{"N", lin(3, 25, 17, 1000)}};
        case CheckId::thm56_strange_5pk: return {{"k_max", 2}};
        case CheckId::rank3_progression_scan:
            return {{"N", lin(3, 25, 24, 1500)}, {"A_max", 4}, {"t", 1}, {"ell", 3}, {"j", 1}};
    }
    throw std::invalid_argument("default_params: unknown check");
}

namespace detail {

inline std::int64_t get(const Params& p, const char* key) { return p.at(key); }

inline void require_range(CheckId id, const char* key, std::int64_t value, std::int64_t lo,
                          std::int64_t hi) {
    if (value < lo || value > hi) {
        throw std::invalid_argument(std::string(to_string(id)) + ": parameter " + key +
                                    "=" + std::to_string(value) + " outside [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

inline void validate_params(CheckId id, const Params& p) {
    const auto n_in = [&](std::int64_t lo, std::int64_t hi) {
        require_range(id, "N", get(p, "N"), lo, hi);
    };
    switch (id) {
        case CheckId::gauss_identities: n_in(1, 5000); break;
        case CheckId::hs_dissection: n_in(1, 2000); break;
        case CheckId::identity_3n2: n_in(1, 3000); break;
        case CheckId::identity_4n3: n_in(1, 3000); break;
        case CheckId::cor23_mod64: n_in(1, 100000); break;
        case CheckId::cor23_mod5: n_in(1, 100000); break;
        case CheckId::mod4_all: n_in(1, 100000); break;
        case CheckId::ksv_mod8: n_in(1, 100000); break;
        case CheckId::ramanathan_pminus2: n_in(2, 100000); break;
        case CheckId::rank_r1_thirds: n_in(2, 1500); break;
        case CheckId::rank_r2_mod3: n_in(2, 1500); break;
        case CheckId::rank_r3_thirds: n_in(2, 1500); break;
        case CheckId::rank_diff_series_r1: n_in(1, 1500); break;
        case CheckId::rank_diff_series_r2: n_in(1, 1500); break;
        case CheckId::rank_diff_series_r3: n_in(1, 1500); break;
        case CheckId::cor34_series: n_in(1, 500); break;
        case CheckId::chan_a_identity: n_in(1, 2000); break;
        case CheckId::thm41_pp3n: n_in(1, 50000); break;
        case CheckId::thm42_family_mod3: n_in(1, 150000); break;
        case CheckId::thm43_pp5n: n_in(1, 30000); break;
        case CheckId::lemma44_lambert: n_in(1, 100000); break;
        case CheckId::thm46_family_mod5: n_in(1, 150000); break;
        case CheckId::newman_b: {
            n_in(1, 500);
            const std::int64_t prime = get(p, "p");
            require_range(id, "p", prime, 13, 97);
            if (!is_prime(static_cast<std::uint64_t>(prime)) || prime % 12 != 1) {
                throw std::invalid_argument("newman_b: p must be a prime with p = 1 (mod 12)");
            }
            break;
        }
        case CheckId::thm51_mult_mod9: {
            n_in(1, 2000);
            const std::int64_t prime = get(p, "p");
            require_range(id, "p", prime, 13, 97);
            if (!is_prime(static_cast<std::uint64_t>(prime)) || prime % 12 != 1) {
                throw std::invalid_argument(
                    "thm51_mult_mod9: p must be a prime with p = 1 (mod 12)");
            }
            if (prime * (3 * get(p, "N") + 2) > 200000) {
                throw std::invalid_argument("thm51_mult_mod9: p*(3N+2) must be <= 200000");
            }
            break;
        }
        case CheckId::strange_2_13k:
            require_range(id, "k_max", get(p, "k_max"), 0, 4);
            break;
        case CheckId::newman_c: n_in(1, 500); break;
        case CheckId::thm55_mod5_vanish: n_in(1, 1000); break;
        case CheckId::thm56_strange_5pk:
            require_range(id, "k_max", get(p, "k_max"), 0, 3);
            break;
        case CheckId::rank3_progression_scan: {
            n_in(2, 1500);
            require_range(id, "A_max", get(p, "A_max"), 2, 64);
            const std::int64_t t = get(p, "t");
            const std::int64_t ell = get(p, "ell");
            const std::int64_t j = get(p, "j");
            require_range(id, "t", t, 1, 99);
            require_range(id, "ell", ell, 3, 97);
            require_range(id, "j", j, 1, 9);
            if (t % 2 == 0) {
                throw std::invalid_argument("rank3_progression_scan: t must be odd");
            }
            if (!is_prime(static_cast<std::uint64_t>(ell)) || ell == 2) {
                throw std::invalid_argument("rank3_progression_scan: ell must be an odd prime");
            }
            // t must be a power of ell or coprime to ell.
            std::int64_t stripped = t;
            while (stripped % ell == 0) stripped /= ell;
            if (stripped != 1 && stripped != t) {
                throw std::invalid_argument(
                    "rank3_progression_scan: t must be a power of ell or coprime to ell");
            }
            if (ipow(ell, static_cast<std::uint32_t>(j)) > 1000000 / t) {
                throw std::invalid_argument("rank3_progression_scan: t*ell^j too large");
            }
            break;
        }
        default: n_in(1, 1000000); break;
    }
}

// -- individual check runners ------------------------------------------------

inline void run_gauss_identities(const Params& p, Gate& gate) {
    const auto N = static_cast<std::size_t>(get(p, "N"));
    const auto e1 = euler_product(1, N);
    const auto e2 = euler_product(2, N);
    const auto phi_lhs = theta_phi(-1, N);
    const auto phi_rhs = mul(pow(e1, 2), invert(e2));
    const auto psi_lhs = theta_psi(N);
    const auto psi_rhs = mul(pow(e2, 2), invert(e1));
    for (std::size_t n = 0; n < N; ++n) {
        gate.equal(static_cast<std::int64_t>(n), phi_lhs[n], phi_rhs[n]);
    }
    for (std::size_t n = 0; n < N; ++n) {
        gate.equal(static_cast<std::int64_t>(N + n), psi_lhs[n], psi_rhs[n]);
    }
}

inline void run_hs_dissection(const Params& p, Gate& gate) {
    const auto N = static_cast<std::size_t>(get(p, "N"));
    const auto phi_m = [](std::size_t n) { return theta_phi(-1, n); };
    const auto phi_p = [](std::size_t n) { return theta_phi(1, n); };
    const auto lhs = invert(theta_phi(-1, N));

    // Residues mod 3: phi(-q^9), phi(-q^3), and the quotient A at q^3.
    const auto p9 = at_scale(phi_m, 9, N);
    const auto p3 = at_scale(phi_m, 3, N);
    const auto a3 = at_scale([](std::size_t n) { return named_series(NamedSeriesId::A, n); }, 3, N);
    auto inner3 = pow(p9, 2);
    inner3 = add(inner3, scale(shift_up(mul(p9, a3), 1), 2));
    inner3 = add(inner3, scale(shift_up(pow(a3, 2), 2), 4));
    const auto rhs3 = mul(mul(p9, invert(pow(p3, 4))), inner3);
    for (std::size_t n = 0; n < N; ++n) {
        gate.equal(static_cast<std::int64_t>(n), lhs[n], rhs3[n]);
    }

    // Residues mod 4: phi(q^4) and psi(q^8) against 1/phi(-q^4)^4.
    const auto p4 = at_scale(phi_p, 4, N);
    const auto s8 = at_scale([](std::size_t n) { return theta_psi(n); }, 8, N);
    auto inner4 = pow(p4, 3);
    inner4 = add(inner4, scale(shift_up(mul(pow(p4, 2), s8), 1), 2));
    inner4 = add(inner4, scale(shift_up(mul(p4, pow(s8, 2)), 2), 4));
    inner4 = add(inner4, scale(shift_up(pow(s8, 3), 3), 8));
    const auto rhs4 = mul(invert(pow(at_scale(phi_m, 4, N), 4)), inner4);
    for (std::size_t n = 0; n < N; ++n) {
        gate.equal(static_cast<std::int64_t>(N + n), lhs[n], rhs4[n]);
    }
}

inline void run_identity_3n2(const Params& p, Gate& gate) {
    const auto N = static_cast<std::size_t>(get(p, "N"));
    const auto lhs = dissect(pp_exact_series(3 * N), 3, 2);
    const auto rhs = eta_quotient(EtaQuotientSpec(12, 0, {{1, -14}, {2, 6}, {3, 6}}), N);
    for (std::size_t n = 0; n < N; ++n) {
        gate.equal(static_cast<std::int64_t>(n), rhs[n], lhs[n]);
    }
}

inline void run_identity_4n3(const Params& p, Gate& gate) {
    const auto N = static_cast<std::size_t>(get(p, "N"));
    const auto lhs = dissect(pp_exact_series(4 * N), 4, 3);
    const auto rhs = eta_quotient(EtaQuotientSpec(32, 0, {{1, -22}, {2, 20}}), N);
    for (std::size_t n = 0; n < N; ++n) {
        gate.equal(static_cast<std::int64_t>(n), rhs[n], lhs[n]);
    }
}

inline void run_cor23_mod64(const Params& p, Gate& gate) {
    const auto N = get(p, "N");
    const auto series = pp_mod_series(64, static_cast<std::size_t>(N) + 1);
    for (std::int64_t arg = 7; arg <= N; arg += 8) {
        gate.equal(arg, std::uint32_t{0}, series[static_cast<std::size_t>(arg)]);
    }
}

inline void run_cor23_mod5(const Params& p, Gate& gate) {
    const auto N = get(p, "N");
    const auto series = pp_mod_series(5, static_cast<std::size_t>(N) + 1);
    for (std::int64_t r : {11, 15, 19}) {
        for (std::int64_t arg = r; arg <= N; arg += 20) {
            gate.equal(arg, std::uint32_t{0}, series[static_cast<std::size_t>(arg)]);
        }
    }
}

inline void run_mod4_all(const Params& p, Gate& gate) {
    const auto N = get(p, "N");
    const auto series = pp_mod_series(4, static_cast<std::size_t>(N) + 1);
    for (std::int64_t n = 1; n <= N; ++n) {
        gate.equal(n, std::uint32_t{0}, series[static_cast<std::size_t>(n)]);
    }
}

inline void run_ksv_mod8(const Params& p, Gate& gate) {
    const auto N = get(p, "N");
    const auto series = pp_mod_series(8, static_cast<std::size_t>(N) + 1);
    for (std::int64_t n = 1; n <= N; ++n) {
        const auto un = static_cast<std::uint64_t>(n);
        const std::uint32_t expected = (is_square(un) || is_twice_square(un)) ? 4u : 0u;
        gate.equal(n, expected, series[static_cast<std::size_t>(n)]);
    }
}

inline void run_ramanathan_pminus2(const Params& p, Gate& gate) {
    const auto N = get(p, "N");
    const auto series = pminus2_mod_series(5, static_cast<std::size_t>(N) + 1);
    for (std::int64_t r : {2, 3, 4}) {
        for (std::int64_t arg = r; arg <= N; arg += 5) {
            gate.equal(arg, std::uint32_t{0}, series[static_cast<std::size_t>(arg)]);
        }
    }
}

inline void run_rank_thirds(RankKind kind, const Params& p, Gate& gate) {
    const auto N = static_cast<std::size_t>(get(p, "N"));
    const auto rs = rank_series(kind, N + 1);
    const auto pp = pp_exact_series(N + 1);
    for (std::size_t arg = 2; arg <= N; arg += 3) {
        const auto fold = rank_fold_mod(rs, arg, 3);
        const Int& total = pp[arg];
        const Int third = total / 3;
        const bool ok = (total % 3 == 0) && fold[0] == third && fold[1] == third &&
                        fold[2] == third;
        gate.require(static_cast<std::int64_t>(arg), ok,
                     "three classes of " + to_decimal(total) + "/3",
                     "[" + to_decimal(fold[0]) + "," + to_decimal(fold[1]) + "," +
                         to_decimal(fold[2]) + "]");
    }
}

inline void run_rank_r2_mod3(const Params& p, Gate& gate) {
    const auto N = static_cast<std::size_t>(get(p, "N"));
    const auto rs = rank_series(RankKind::R2, N + 1);
    for (std::size_t arg = 2; arg <= N; arg += 3) {
        const auto fold = rank_fold_mod(rs, arg, 3);
        const Int r0 = fold[0] % 3, r1 = fold[1] % 3, r2v = fold[2] % 3;
        gate.require(static_cast<std::int64_t>(arg), r0 == r1 && r1 == r2v,
                     "equal residues (mod 3)",
                     "[" + to_decimal(r0) + "," + to_decimal(r1) + "," + to_decimal(r2v) + "]");
    }
}

inline void run_rank_diff_series(RankKind kind, const Params& p, Gate& gate) {
    const auto N = static_cast<std::size_t>(get(p, "N"));
    const auto rs = rank_series(kind, N);
    Series<ZRing> rhs = [&] {
        switch (kind) {
            case RankKind::R1:
                return mul(eta_quotient(EtaQuotientSpec(1, 0, {{3, -2}, {6, 1}}), N),
                           theta_phi(-1, N));
            case RankKind::R2:
                return named_series(NamedSeriesId::PD, N);
            case RankKind::R3:
                return mul(invert(euler_product(3, N)), theta_psi(N));
        }
        throw std::invalid_argument("rank_diff_series: bad kind");
    }();
    for (std::size_t n = 0; n < N; ++n) {
        const auto fold = rank_fold_mod(rs, n, 3);
        gate.equal(static_cast<std::int64_t>(n), rhs[n], Int(fold[0] - fold[1]));
    }
}

inline void run_cor34_series(const Params& p, Gate& gate) {
    const auto N = static_cast<std::size_t>(get(p, "N"));
    const auto rs = rank_series(RankKind::R2, 3 * N);
    const auto rhs =
        eta_quotient(EtaQuotientSpec(3, 0, {{1, -5}, {2, -3}, {3, 3}, {6, 3}}), N);
    for (std::size_t n = 0; n < N; ++n) {
        const auto fold = rank_fold_mod(rs, 3 * n + 2, 3);
        gate.equal(static_cast<std::int64_t>(n), rhs[n], Int(fold[0] - fold[1]));
    }
}

inline void run_chan_a_identity(const Params& p, Gate& gate) {
    const auto N = static_cast<std::size_t>(get(p, "N"));
    const auto lhs = dissect(named_series(NamedSeriesId::chan_a, 3 * N), 3, 2);
    const auto rhs =
        eta_quotient(EtaQuotientSpec(3, 0, {{1, -4}, {2, -4}, {3, 3}, {6, 3}}), N);
    for (std::size_t n = 0; n < N; ++n) {
        gate.equal(static_cast<std::int64_t>(n), rhs[n], lhs[n]);
    }
}

inline void run_thm41_pp3n(const Params& p, Gate& gate) {
    const auto N = get(p, "N");
    const auto series = pp_mod_series(3, static_cast<std::size_t>(3 * N) + 1);
    for (std::int64_t n = 0; n <= N; ++n) {
        gate.equal(n, pp3n_mod3(static_cast<std::uint64_t>(n)),
                   series[static_cast<std::size_t>(3 * n)]);
    }
}

inline void run_thm42_family_mod3(const Params& p, Gate& gate) {
    const auto N = get(p, "N");
    const auto series = pp_mod_series(3, static_cast<std::size_t>(N) + 1);
    struct Member {
        std::int64_t p;
        std::uint32_t alpha;
    };
    for (const Member m : {Member{3, 1}, Member{3, 2}, Member{7, 0}, Member{7, 1},
                           Member{11, 0}}) {
        const std::int64_t base = 3 * ipow(m.p, 2 * m.alpha + 1);
        for (std::int64_t s = 1; s < m.p; ++s) {
            for (std::int64_t n = 0;; ++n) {
                const std::int64_t arg = base * (m.p * n + s);
                if (arg > N || arg < 0) break;
                gate.equal(arg, std::uint32_t{0}, series[static_cast<std::size_t>(arg)]);
            }
        }
    }
}

inline void run_thm43_pp5n(const Params& p, Gate& gate) {
    const auto N = get(p, "N");
    const auto series = pp_mod_series(5, static_cast<std::size_t>(5 * N) + 1);
    for (std::int64_t n = 0; n <= N; ++n) {
        gate.equal(n, pp5n_mod5(static_cast<std::uint64_t>(n)),
                   series[static_cast<std::size_t>(5 * n)]);
    }
}

inline void run_lemma44_lambert(const Params& p, Gate& gate) {
    const auto N = static_cast<std::size_t>(get(p, "N"));
    for (int r = 1; r <= 4; ++r) {
        const auto series = lambert_a(r, 5 * N + 1);
        for (std::size_t n = 1; n <= N; ++n) {
            gate.equal(static_cast<std::int64_t>(5 * n), series[n], series[5 * n]);
        }
    }
}

inline void run_thm46_family_mod5(const Params& p, Gate& gate) {
    const auto N = get(p, "N");
    const auto series = pp_mod_series(5, static_cast<std::size_t>(N) + 1);
    const auto vanish = [&](std::int64_t step, std::int64_t offset) {
        for (std::int64_t arg = offset; arg <= N; arg += step) {
            gate.equal(arg, std::uint32_t{0}, series[static_cast<std::size_t>(arg)]);
        }
    };
    vanish(25, 10);
    vanish(25, 15);
    vanish(125, 50);
    vanish(125, 75);
    // The families lift along powers of 5 because the value at 5n (mod 5)
    // does not see the exponent of 5 in n.
    for (std::int64_t m = 1; 25 * m <= N; ++m) {
        gate.equal(25 * m, series[static_cast<std::size_t>(5 * m)],
                   series[static_cast<std::size_t>(25 * m)]);
    }
}

inline void run_newman_b(const Params& p, Gate& gate) {
    const auto N = get(p, "N");
    const auto prime = get(p, "p");
    const std::int64_t base = (2 * prime - 2) / 3;
    const auto order = static_cast<std::size_t>(prime * N + base) + 1;
    const auto b = named_series(NamedSeriesId::b, order);
    const Int anchor = b[static_cast<std::size_t>(base)];
    const Int p4 = Int(prime) * prime * prime * prime;
    for (std::int64_t n = 1; n <= N; ++n) {
        Int lhs = b[static_cast<std::size_t>(prime * n + base)];
        const std::int64_t num = 3 * n - 2 * (prime - 1);
        if (num >= 0 && num % (3 * prime) == 0) {
            lhs += p4 * b[static_cast<std::size_t>(num / (3 * prime))];
        }
        gate.equal(prime * n + base, Int(anchor * b[static_cast<std::size_t>(n)]), lhs);
    }
}

inline void run_thm51_mult_mod9(const Params& p, Gate& gate) {
    const auto N = get(p, "N");
    const auto prime = get(p, "p");
    const auto series =
        pp_mod_series(9, static_cast<std::size_t>(prime * (3 * N + 2)) + 1);
    const auto pp_small = pp_exact_series(static_cast<std::size_t>(2 * prime) + 1);
    const Int& pp2p = pp_small[static_cast<std::size_t>(2 * prime)];
    gate.require(0, pp2p % 3 == 0, "multiplier divisible by 3", to_decimal(pp2p));
    if (pp2p % 3 != 0) return;
    const auto cmod = static_cast<std::uint32_t>(Int((pp2p / 3) % 9).convert_to<std::uint32_t>());
    for (std::int64_t n = 1; n <= N; ++n) {
        const std::int64_t arg = 3 * n + 2;
        if (arg % prime == 0) continue;
        const std::uint32_t expected = (cmod * series[static_cast<std::size_t>(arg)]) % 9;
        gate.equal(prime * arg, expected, series[static_cast<std::size_t>(prime * arg)]);
    }
}

inline void run_strange_2_13k(const Params& p, Gate& gate) {
    const auto k_max = static_cast<std::uint32_t>(get(p, "k_max"));
    const std::int64_t top = 2 * ipow(13, k_max);
    const auto series = pp_mod_series(9, static_cast<std::size_t>(top) + 1);
    for (std::uint32_t k = 0; k <= k_max; ++k) {
        const std::int64_t arg = 2 * ipow(13, k);
        const auto expected = static_cast<std::uint32_t>((3 * (k + 1)) % 9);
        gate.equal(arg, expected, series[static_cast<std::size_t>(arg)]);
    }
}

inline void run_newman_c(const Params& p, Gate& gate) {
    const auto N = get(p, "N");
    const auto order = static_cast<std::size_t>(29 * N) + 1;
    const auto c = named_series(NamedSeriesId::c, order);
    for (std::int64_t prime : {5, 13, 17, 29}) {
        const Int p2 = Int(prime) * prime;
        for (std::int64_t n = 1; n <= N; ++n) {
            Int lhs = c[static_cast<std::size_t>(n * prime)];
            if (n % prime == 0) lhs += p2 * c[static_cast<std::size_t>(n / prime)];
            gate.equal(n * prime, Int((p2 + 1) * c[static_cast<std::size_t>(n)]), lhs);
        }
    }
}

inline void run_thm55_mod5_vanish(const Params& p, Gate& gate) {
    const auto N = get(p, "N");
    const auto series = pp_mod_series(5, static_cast<std::size_t>(5 * 17 * N) + 1);
    for (std::int64_t prime : {13, 17}) {
        for (std::int64_t n = 1; n <= N; ++n) {
            if (n % prime == 0) continue;
            const std::int64_t arg = 5 * prime * n;
            gate.equal(arg, std::uint32_t{0}, series[static_cast<std::size_t>(arg)]);
        }
    }
}

inline void run_thm56_strange_5pk(const Params& p, Gate& gate) {
    const auto k_max = static_cast<std::uint32_t>(get(p, "k_max"));
    const std::int64_t top = 5 * ipow(41, k_max);
    const auto series = pp_mod_series(5, static_cast<std::size_t>(top) + 1);
    for (std::int64_t prime : {29, 41}) {
        for (std::uint32_t k = 0; k <= k_max; ++k) {
            const std::int64_t arg = 5 * ipow(prime, k);
            const auto expected = static_cast<std::uint32_t>((3 * (k + 1)) % 5);
            gate.equal(arg, expected, series[static_cast<std::size_t>(arg)]);
        }
    }
}

inline void run_rank3_progression_scan(const Params& p, Gate& gate) {
    const auto N = static_cast<std::size_t>(get(p, "N"));
    const auto a_max = get(p, "A_max");
    const auto t = static_cast<std::uint32_t>(get(p, "t"));
    const auto ell = get(p, "ell");
    const auto j = static_cast<std::uint32_t>(get(p, "j"));
    const Int lj = ipow(ell, j);

    const auto rs = rank_series(RankKind::R3, N);
    // ok[n]: every rank class mod t at n has its count divisible by ell^j.
    std::vector<char> ok(N, 0);
    for (std::size_t n = 0; n < N; ++n) {
        const auto fold = rank_fold_mod(rs, n, t);
        bool all = true;
        for (const Int& v : fold) {
            if (v % lj != 0) {
                all = false;
                break;
            }
        }
        ok[n] = all ? 1 : 0;
    }

    struct Candidate {
        std::int64_t A;
        std::int64_t B;
    };
    std::vector<Candidate> candidates;
    for (std::int64_t A = 2; A <= a_max; ++A) {
        for (std::int64_t B = 0; B < A; ++B) {
            gate.count();
            bool all = true;
            std::int64_t evidence = 0;
            for (std::size_t n = static_cast<std::size_t>(B); n < N;
                 n += static_cast<std::size_t>(A)) {
                if (!ok[n]) {
                    all = false;
                    break;
                }
                ++evidence;
            }
            if (all && evidence > 0) candidates.push_back({A, B});
        }
    }

    // Cross-check every candidate against direct enumeration on small n.
    for (const Candidate& c : candidates) {
        for (std::size_t n = static_cast<std::size_t>(c.B); n < N && n <= 12;
             n += static_cast<std::size_t>(c.A)) {
            const auto counts = rank_counts_brute(static_cast<std::uint32_t>(n), RankKind::R3);
            std::vector<Int> fold(t, Int(0));
            for (const auto& [rank_value, count] : counts) {
                const std::int64_t cls = ((rank_value % t) + t) % t;
                fold[static_cast<std::size_t>(cls)] += count;
            }
            bool all = true;
            for (const Int& v : fold) {
                if (v % lj != 0) {
                    all = false;
                    break;
                }
            }
            gate.require(static_cast<std::int64_t>(n), all,
                         "enumeration divisible by " + to_decimal(lj) + " in each class",
                         "progression (" + std::to_string(c.A) + "," + std::to_string(c.B) +
                             ") fails at n=" + std::to_string(n));
        }
    }

    // Under the canonical parameters the classical progression must surface.
    if (t == 1 && ell == 3 && j == 1 && a_max >= 3 && N > 8) {
        bool found = false;
        for (const Candidate& c : candidates) {
            if (c.A == 3 && c.B == 2) found = true;
        }
        gate.require(-1, found, "candidate progression (3,2)",
                     found ? "present" : "absent");
    }
}

}  // namespace detail

/**
 * Run one check with defaults from the budget, overlaid with explicit
 * parameter overrides.  Unknown keys and out-of-range values throw; a
 * parameter window containing no instance throws rather than passing.
 */
inline CheckReport run_check(CheckId id, const Params& overrides = {},
                             std::int64_t budget = 500) {
    Params params = default_params(id, budget);
    for (const auto& [key, value] : overrides) {
        const auto it = params.find(key);
        if (it == params.end()) {
            throw std::invalid_argument(std::string(to_string(id)) +
                                        ": unknown parameter \"" + key + "\"");
        }
        it->second = value;
    }
    detail::validate_params(id, params);

    detail::Gate gate;
    switch (id) {
        case CheckId::gauss_identities: detail::run_gauss_identities(params, gate); break;
        case CheckId::hs_dissection: detail::run_hs_dissection(params, gate); break;
        case CheckId::identity_3n2: detail::run_identity_3n2(params, gate); break;
        case CheckId::identity_4n3: detail::run_identity_4n3(params, gate); break;
        case CheckId::cor23_mod64: detail::run_cor23_mod64(params, gate); break;
        case CheckId::cor23_mod5: detail::run_cor23_mod5(params, gate); break;
        case CheckId::mod4_all: detail::run_mod4_all(params, gate); break;
        case CheckId::ksv_mod8: detail::run_ksv_mod8(params, gate); break;
        case CheckId::ramanathan_pminus2: detail::run_ramanathan_pminus2(params, gate); break;
        case CheckId::rank_r1_thirds:
            detail::run_rank_thirds(RankKind::R1, params, gate);
            break;
        case CheckId::rank_r2_mod3: detail::run_rank_r2_mod3(params, gate); break;
        case CheckId::rank_r3_thirds:
            detail::run_rank_thirds(RankKind::R3, params, gate);
            break;
        case CheckId::rank_diff_series_r1:
            detail::run_rank_diff_series(RankKind::R1, params, gate);
            break;
        case CheckId::rank_diff_series_r2:
            detail::run_rank_diff_series(RankKind::R2, params, gate);
            break;
        case CheckId::rank_diff_series_r3:
            detail::run_rank_diff_series(RankKind::R3, params, gate);
            break;
        case CheckId::cor34_series: detail::run_cor34_series(params, gate); break;
        case CheckId::chan_a_identity: detail::run_chan_a_identity(params, gate); break;
        case CheckId::thm41_pp3n: detail::run_thm41_pp3n(params, gate); break;
        case CheckId::thm42_family_mod3: detail::run_thm42_family_mod3(params, gate); break;
        case CheckId::thm43_pp5n: detail::run_thm43_pp5n(params, gate); break;
        case CheckId::lemma44_lambert: detail::run_lemma44_lambert(params, gate); break;
        case CheckId::thm46_family_mod5: detail::run_thm46_family_mod5(params, gate); break;
        case CheckId::newman_b: detail::run_newman_b(params, gate); break;
        case CheckId::thm51_mult_mod9: detail::run_thm51_mult_mod9(params, gate); break;
        case CheckId::strange_2_13k: detail::run_strange_2_13k(params, gate); break;
        case CheckId::newman_c: detail::run_newman_c(params, gate); break;
        case CheckId::thm55_mod5_vanish: detail::run_thm55_mod5_vanish(params, gate); break;
        case CheckId::thm56_strange_5pk: detail::run_thm56_strange_5pk(params, gate); break;
        case CheckId::rank3_progression_scan:
            detail::run_rank3_progression_scan(params, gate);
            break;
    }
    if (gate.checked() == 0) {
        throw std::invalid_argument(std::string(to_string(id)) +
                                    ": parameter window contains nothing to check");
    }
    return CheckReport{id, std::move(params), gate.pass(), gate.checked(),
                       gate.first_failure()};
}

/// Run the whole registry at one budget.  Reports come back in registry
/// order; budgets below 64 are rejected as too small to be meaningful.
inline std::vector<CheckReport> run_all(std::int64_t budget = 500) {
    if (budget < 64) throw std::invalid_argument("run_all: budget must be >= 64");
    std::vector<CheckReport> reports;
    for (const CheckId id : all_checks()) {
        reports.push_back(run_check(id, {}, budget));
    }
    return reports;
}

namespace detail {

inline std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (const char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

}  // namespace detail

/// One JSON object per report, stable key order, exact integer payloads.
inline std::string to_json(const CheckReport& report) {
    std::string out = "{\"id\":\"";
    out += to_string(report.id);
    out += "\",\"params\":{";
    bool first = true;
    for (const auto& [key, value] : report.params) {
        if (!first) out += ',';
        first = false;
        out += '"';
        out += key;
        out += "\":";
        out += std::to_string(value);
    }
    out += "},\"pass\":";
    out += report.pass ? "true" : "false";
    out += ",\"checked\":";
    out += std::to_string(report.checked);
    out += ",\"first_failure\":";
    if (!report.first_failure) {
        out += "null";
    } else {
        const Failure& f = *report.first_failure;
        out += "{\"index\":";
        out += std::to_string(f.index);
        out += ",\"expected\":\"";
        out += detail::json_escape(f.expected);
        out += "\",\"actual\":\"";
        out += detail::json_escape(f.actual);
        out += "\"}";
    }
    out += '}';
    return out;
}

struct ScanCandidate {
    std::int64_t A = 0;
    std::int64_t B = 0;
    std::int64_t evidence = 0;
    bool operator==(const ScanCandidate&) const = default;
};

/**
 * Heuristic search for progressions An+B whose overpartition-pair counts all
 * vanish mod M within the window n <= N.  Classes containing n=0 never
 * qualify (the count at 0 is 1), so B=0 never appears with any A.
 */
inline std::vector<ScanCandidate> scan_progressions(std::int64_t M, std::int64_t A_max,
                                                    std::int64_t N) {
    if (M < 2) throw std::invalid_argument("scan_progressions: modulus must be >= 2");
    if (A_max < 2) throw std::invalid_argument("scan_progressions: A_max must be >= 2");
    if (N < 1) throw std::invalid_argument("scan_progressions: N must be >= 1");
    if (N > 2000000) throw std::invalid_argument("scan_progressions: N must be <= 2000000");
    const auto series =
        detail::pp_mod_series(static_cast<std::uint32_t>(M), static_cast<std::size_t>(N) + 1);
    std::vector<ScanCandidate> out;
    for (std::int64_t A = 2; A <= A_max; ++A) {
        for (std::int64_t B = 0; B < A; ++B) {
            bool all = true;
            std::int64_t evidence = 0;
            for (std::int64_t n = B; n <= N; n += A) {
                if (series[static_cast<std::size_t>(n)] != 0) {
                    all = false;
                    break;
                }
                ++evidence;
            }
            if (all && evidence > 0) out.push_back({A, B, evidence});
        }
    }
    return out;
}

}  // namespace opp::verify
