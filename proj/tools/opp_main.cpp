// Command-line front end: series expansion, rank distributions, the check
// registry, and the progression scanner.  All numeric output is exact
// decimal text; rows are emitted as JSON Lines unless --format plain.

#include <CLI11.hpp>
#include <opp/opp.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr std::int64_t kExactOrderCap = 5000;
constexpr std::int64_t kModOrderCap = 150000;
constexpr std::int64_t kRankOrderCap = 1500;

std::int64_t env_budget() {
    const char* raw = std::getenv("OPP_BUDGET_N");
    if (raw == nullptr) return 500;
    std::size_t pos = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(raw, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("OPP_BUDGET_N must be a positive integer");
    }
    if (pos != std::string(raw).size() || value < 1) {
        throw std::invalid_argument("OPP_BUDGET_N must be a positive integer");
    }
    return value;
}

void require_format(const std::string& format) {
    if (format != "jsonl" && format != "plain") {
        throw std::invalid_argument("--format must be jsonl or plain");
    }
}

struct ExpandArgs {
    std::string series;
    std::int64_t n = 0;
    std::int64_t mod = 0;
    std::string format = "jsonl";
};

int run_expand(const ExpandArgs& args) {
    require_format(args.format);
    if (args.n < 1) throw std::invalid_argument("expand: --n must be >= 1");
    const std::int64_t cap = args.mod != 0 ? kModOrderCap : kExactOrderCap;
    if (args.n > cap) {
        throw std::invalid_argument("expand: --n must be <= " + std::to_string(cap) +
                                    (args.mod != 0 ? " with --mod" : " without --mod"));
    }
    const auto order = static_cast<std::size_t>(args.n);

    opp::Series<opp::ZRing> series = [&] {
        if (const auto id = opp::named_series_from_string(args.series)) {
            return opp::named_series(*id, order);
        }
        return opp::eta_quotient(opp::parse_eta_spec(args.series), order);
    }();

    const auto emit = [&](std::size_t n, const std::string& value) {
        if (args.format == "plain") {
            std::cout << value << '\n';
        } else {
            std::cout << "{\"n\":" << n << ",\"value\":\"" << value << "\"}\n";
        }
    };
    if (args.mod != 0) {
        if (args.mod < 2) throw std::invalid_argument("expand: --mod must be >= 2");
        const auto reduced =
            opp::reduce_mod(series, static_cast<std::uint32_t>(args.mod));
        for (std::size_t n = 0; n < order; ++n) emit(n, std::to_string(reduced[n]));
    } else {
        for (std::size_t n = 0; n < order; ++n) emit(n, opp::to_decimal(series[n]));
    }
    return 0;
}

struct RankArgs {
    std::string kind;
    std::int64_t n = -1;
    std::int64_t t = 0;
    std::string format = "jsonl";
};

int run_rank(const RankArgs& args) {
    require_format(args.format);
    opp::RankKind kind;
    if (args.kind == "r1") {
        kind = opp::RankKind::R1;
    } else if (args.kind == "r2") {
        kind = opp::RankKind::R2;
    } else if (args.kind == "r3") {
        kind = opp::RankKind::R3;
    } else {
        throw std::invalid_argument("rank: --kind must be r1, r2, or r3");
    }
    if (args.n < 0) throw std::invalid_argument("rank: --n must be >= 0");
    if (args.n >= kRankOrderCap) {
        throw std::invalid_argument("rank: --n must be < " + std::to_string(kRankOrderCap));
    }
    const auto n = static_cast<std::size_t>(args.n);
    if (args.t != 0) {
        if (args.t < 1) throw std::invalid_argument("rank: --t must be >= 1");
        const auto counts = opp::rank_counts_mod(n, kind, static_cast<std::uint32_t>(args.t));
        for (std::size_t s = 0; s < counts.size(); ++s) {
            if (args.format == "plain") {
                std::cout << s << ' ' << opp::to_decimal(counts[s]) << '\n';
            } else {
                std::cout << "{\"s\":" << s << ",\"count\":\"" << opp::to_decimal(counts[s])
                          << "\"}\n";
            }
        }
    } else {
        const auto series = opp::rank_series(kind, n + 1);
        for (const auto& [m, count] : opp::rank_distribution(series, n)) {
            if (args.format == "plain") {
                std::cout << m << ' ' << opp::to_decimal(count) << '\n';
            } else {
                std::cout << "{\"m\":" << m << ",\"count\":\"" << opp::to_decimal(count)
                          << "\"}\n";
            }
        }
    }
    return 0;
}

struct VerifyArgs {
    std::string check;
    std::optional<std::int64_t> budget;
    std::optional<std::int64_t> n;
    std::vector<std::string> params;
};

opp::verify::Params parse_overrides(const VerifyArgs& args) {
    opp::verify::Params overrides;
    for (const std::string& kv : args.params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("verify: --param expects key=value, got \"" + kv +
                                        "\"");
        }
        const std::string key = kv.substr(0, eq);
        const std::string value = kv.substr(eq + 1);
        std::size_t pos = 0;
        std::int64_t parsed = 0;
        try {
            parsed = std::stoll(value, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("verify: --param value for \"" + key +
                                        "\" is not an integer");
        }
        if (pos != value.size()) {
            throw std::invalid_argument("verify: --param value for \"" + key +
                                        "\" is not an integer");
        }
        overrides[key] = parsed;
    }
    if (args.n) overrides["N"] = *args.n;
    return overrides;
}

int run_verify(const VerifyArgs& args) {
    const std::int64_t budget = args.budget ? *args.budget : env_budget();
    if (args.check == "all") {
        if (args.n || !args.params.empty()) {
            throw std::invalid_argument(
                "verify: --n/--param overrides require a single --check");
        }
        bool all_pass = true;
        for (const auto& report : opp::verify::run_all(budget)) {
            std::cout << opp::verify::to_json(report) << '\n';
            all_pass = all_pass && report.pass;
        }
        return all_pass ? 0 : 1;
    }
    const auto id = opp::verify::check_from_string(args.check);
    if (!id) throw std::invalid_argument("verify: unknown check \"" + args.check + "\"");
    const auto report = opp::verify::run_check(*id, parse_overrides(args), budget);
    std::cout << opp::verify::to_json(report) << '\n';
    return report.pass ? 0 : 1;
}

struct ScanArgs {
    std::int64_t mod = 0;
    std::int64_t a_max = 8;
    std::optional<std::int64_t> n;
};

int run_scan(const ScanArgs& args) {
    const std::int64_t window = args.n ? *args.n : 4 * env_budget();
    for (const auto& row : opp::verify::scan_progressions(args.mod, args.a_max, window)) {
        std::cout << "{\"A\":" << row.A << ",\"B\":" << row.B
                  << ",\"evidence\":" << row.evidence << ",\"heuristic\":true}\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Overpartition-pair arithmetic: q-series expansion, rank statistics, "
        "and a registry of identity/congruence checks."};
    app.require_subcommand(1);

    ExpandArgs expand_args;
    auto* expand = app.add_subcommand("expand", "Expand a named series or eta quotient");
    expand
        ->add_option("--series", expand_args.series,
                     "Named series (pp, op, A, B, b, c, p_minus2, chan_a, PD, phi_plus, "
                     "phi_minus, psi, r2, r8) or an eta-quotient expression "
                     "\"C * q^D * (k1)^e1 (k2)^e2 ...\" where (k)^e denotes "
                     "(q^k;q^k)_inf^e, exponents may be negative, and '*' is optional")
        ->required();
    expand->add_option("--n", expand_args.n, "Number of coefficients to print")->required();
    expand->add_option("--mod", expand_args.mod, "Reduce coefficients modulo this integer");
    expand->add_option("--format", expand_args.format, "Output format: jsonl or plain");

    RankArgs rank_args;
    auto* rank = app.add_subcommand("rank", "Rank distribution of overpartition pairs of n");
    rank->add_option("--kind", rank_args.kind, "Rank statistic: r1, r2, or r3")->required();
    rank->add_option("--n", rank_args.n, "Weight of the pairs")->required();
    rank->add_option("--t", rank_args.t, "Fold ranks into residue classes mod t");
    rank->add_option("--format", rank_args.format, "Output format: jsonl or plain");

    VerifyArgs verify_args;
    std::int64_t budget_raw = 0;
    std::int64_t n_raw = 0;
    auto* verify = app.add_subcommand("verify", "Run registered checks, one JSON report each");
    verify->add_option("--check", verify_args.check, "Check id, or \"all\"")->required();
    auto* budget_opt =
        verify->add_option("--budget", budget_raw,
                           "Scale for default parameters (default: OPP_BUDGET_N or 500)");
    auto* n_opt = verify->add_option("--n", n_raw, "Override the check's N parameter");
    verify->add_option("--param", verify_args.params,
                       "Parameter override key=value (repeatable)");

    ScanArgs scan_args;
    std::int64_t scan_n_raw = 0;
    auto* scan =
        app.add_subcommand("scan", "Search progressions An+B with counts vanishing mod M");
    scan->add_option("--mod", scan_args.mod, "Modulus M")->required();
    scan->add_option("--a-max", scan_args.a_max, "Largest progression step A");
    auto* scan_n_opt =
        scan->add_option("--n", scan_n_raw, "Window bound (default: 4 * budget)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (budget_opt->count() > 0) verify_args.budget = budget_raw;
        if (n_opt->count() > 0) verify_args.n = n_raw;
        if (scan_n_opt->count() > 0) scan_args.n = scan_n_raw;
        if (expand->parsed()) return run_expand(expand_args);
        if (rank->parsed()) return run_rank(rank_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (scan->parsed()) return run_scan(scan_args);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
