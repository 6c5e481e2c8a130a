// Acceptance gate: one PASS/FAIL line per criterion on stdout, details for
// any failure on stderr, exit 0 only if every criterion holds.

#include <opp/opp.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <map>
#include <vector>

using namespace opp;
using verify::CheckId;

namespace {

bool check(CheckId id, const verify::Params& overrides) {
    const auto report = verify::run_check(id, overrides);
    if (!report.pass) std::cerr << "  " << verify::to_json(report) << '\n';
    return report.pass;
}

bool identities() {
    return check(CheckId::gauss_identities, {{"N", 1000}}) &&
           check(CheckId::hs_dissection, {{"N", 300}}) &&
           check(CheckId::identity_3n2, {{"N", 500}}) &&
           check(CheckId::identity_4n3, {{"N", 500}}) &&
           check(CheckId::cor34_series, {{"N", 60}}) &&
           check(CheckId::chan_a_identity, {{"N", 200}});
}

bool anchors() {
    const auto pp = named_series(NamedSeriesId::pp, 27);
    if (pp[2] != 12 || pp[3] != 32) return false;
    const auto ob9 = invert(reduce_mod(theta_phi(-1, 27), 9));
    if (mul(ob9, ob9)[26] != 6) return false;
    const auto ob5 = invert(reduce_mod(theta_phi(-1, 6), 5));
    return mul(ob5, ob5)[5] == 3;
}

bool congruence_families() {
    if (!check(CheckId::mod4_all, {{"N", 5000}})) return false;
    if (!check(CheckId::ksv_mod8, {{"N", 5000}})) return false;
    if (!check(CheckId::cor23_mod64, {{"N", 5000}})) return false;
    if (!check(CheckId::cor23_mod5, {{"N", 5000}})) return false;
    const auto ob = invert(reduce_mod(theta_phi(-1, 20001), 3));
    const auto series = mul(ob, ob);
    for (std::size_t arg = 2; arg <= 20000; arg += 3) {
        if (series[arg] != 0) return false;
    }
    return true;
}

bool ranks() {
    for (const RankKind kind : {RankKind::R1, RankKind::R2, RankKind::R3}) {
        const auto series = rank_series(kind, 13);
        for (std::uint32_t n = 0; n <= 12; ++n) {
            const auto brute = rank_counts_brute(n, kind);
            std::map<std::int64_t, Int> dist;
            for (const auto& [m, v] : rank_distribution(series, n)) {
                if (!v.is_zero()) dist[m] = v;
            }
            if (dist.size() != brute.size()) return false;
            for (const auto& [m, count] : brute) {
                const auto it = dist.find(m);
                if (it == dist.end() || it->second != count) return false;
            }
        }
    }
    return check(CheckId::rank_r1_thirds, {{"N", 50}}) &&
           check(CheckId::rank_r3_thirds, {{"N", 50}}) &&
           check(CheckId::rank_r2_mod3, {{"N", 50}});
}

bool closed_forms() {
    if (!check(CheckId::thm41_pp3n, {{"N", 3000}})) return false;
    if (!check(CheckId::thm43_pp5n, {{"N", 3000}})) return false;
    if (!check(CheckId::lemma44_lambert, {{"N", 2000}})) return false;
    for (std::uint64_t n = 0; n <= 10000; ++n) {
        if (r2_closed(n) != r2_brute(n)) return false;
        if (rep_x2p5y2_closed(n) != rep_x2p5y2_brute(n)) return false;
    }
    return true;
}

bool prime_families() {
    return check(CheckId::thm42_family_mod3, {{"N", 60000}}) &&
           check(CheckId::thm46_family_mod5, {{"N", 60000}});
}

bool multiplicative() {
    return check(CheckId::newman_b, {{"N", 100}}) &&
           check(CheckId::newman_c, {{"N", 150}}) &&
           check(CheckId::thm51_mult_mod9, {{"N", 100}}) &&
           check(CheckId::strange_2_13k, {{"k_max", 3}}) &&
           check(CheckId::thm56_strange_5pk, {{"k_max", 2}}) &&
           check(CheckId::thm55_mod5_vanish, {{"N", 60}});
}

bool scanner() {
    const auto has = [](const std::vector<verify::ScanCandidate>& v, std::int64_t a,
                        std::int64_t b) {
        for (const auto& c : v) {
            if (c.A == a && c.B == b) return true;
        }
        return false;
    };
    const auto m3 = verify::scan_progressions(3, 4, 2000);
    const auto m5 = verify::scan_progressions(5, 20, 2000);
    const auto m64 = verify::scan_progressions(64, 8, 2000);
    return has(m3, 3, 2) && has(m5, 20, 11) && has(m5, 20, 15) && has(m5, 20, 19) &&
           has(m64, 8, 7);
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        bool (*fn)();
    };
    const std::vector<Criterion> criteria = {
        {"series identities against closed product forms", identities},
        {"anchored coefficient values", anchors},
        {"congruence families over full windows", congruence_families},
        {"rank statistics: enumeration vs series", ranks},
        {"closed-form arithmetic vs series and brute force", closed_forms},
        {"prime-parameterized vanishing families", prime_families},
        {"multiplicative and geometric-progression congruences", multiplicative},
        {"progression scanner recovers known classes", scanner},
    };
    bool all = true;
    for (const auto& c : criteria) {
        bool ok = false;
        try {
            ok = c.fn();
        } catch (const std::exception& e) {
            std::cerr << "  error: " << e.what() << '\n';
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  " << c.label << std::endl;
        all = all && ok;
    }
    return all ? 0 : 1;
}
