#include <catch2/catch_amalgamated.hpp>

#include <opp/verify.hpp>

#include <algorithm>

using namespace opp;
using namespace opp::verify;

TEST_CASE("check registry round-trips") {
    REQUIRE(all_checks().size() == 29);
    for (const auto& [id, name] : check_table()) {
        REQUIRE(to_string(id) == name);
        const auto back = check_from_string(name);
        REQUIRE(back.has_value());
        REQUIRE(*back == id);
    }
    REQUIRE_FALSE(check_from_string("nope").has_value());
}

TEST_CASE("default parameters scale with the budget") {
    REQUIRE(default_params(CheckId::gauss_identities, 500) == Params{{"N", 1000}});
    REQUIRE(default_params(CheckId::thm42_family_mod3, 500) == Params{{"N", 60000}});
    REQUIRE(default_params(CheckId::rank3_progression_scan, 500) ==
            Params{{"A_max", 4}, {"N", 60}, {"ell", 3}, {"j", 1}, {"t", 1}});
    // Caps and floors bind at the extremes.
    REQUIRE(default_params(CheckId::gauss_identities, 1000000).at("N") == 5000);
    REQUIRE(default_params(CheckId::rank_r1_thirds, 1).at("N") == 8);
    REQUIRE_THROWS_AS(default_params(CheckId::gauss_identities, 0), std::invalid_argument);
}

TEST_CASE("every check passes on a reduced window") {
    const std::vector<std::pair<CheckId, Params>> cases = {
        {CheckId::gauss_identities, {{"N", 64}}},
        {CheckId::hs_dissection, {{"N", 40}}},
        {CheckId::identity_3n2, {{"N", 32}}},
        {CheckId::identity_4n3, {{"N", 32}}},
        {CheckId::cor23_mod64, {{"N", 200}}},
        {CheckId::cor23_mod5, {{"N", 100}}},
        {CheckId::mod4_all, {{"N", 100}}},
        {CheckId::ksv_mod8, {{"N", 200}}},
        {CheckId::ramanathan_pminus2, {{"N", 100}}},
        {CheckId::rank_r1_thirds, {{"N", 14}}},
        {CheckId::rank_r2_mod3, {{"N", 14}}},
        {CheckId::rank_r3_thirds, {{"N", 14}}},
        {CheckId::rank_diff_series_r1, {{"N", 24}}},
        {CheckId::rank_diff_series_r2, {{"N", 24}}},
        {CheckId::rank_diff_series_r3, {{"N", 24}}},
        {CheckId::cor34_series, {{"N", 16}}},
        {CheckId::chan_a_identity, {{"N", 40}}},
        {CheckId::thm41_pp3n, {{"N", 200}}},
        {CheckId::thm42_family_mod3, {{"N", 2000}}},
        {CheckId::thm43_pp5n, {{"N", 200}}},
        {CheckId::lemma44_lambert, {{"N", 100}}},
        {CheckId::thm46_family_mod5, {{"N", 800}}},
        {CheckId::newman_b, {{"N", 13}}},
        {CheckId::thm51_mult_mod9, {{"N", 13}}},
        {CheckId::strange_2_13k, {{"k_max", 2}}},
        {CheckId::newman_c, {{"N", 29}}},
        {CheckId::thm55_mod5_vanish, {{"N", 17}}},
        {CheckId::thm56_strange_5pk, {{"k_max", 1}}},
        {CheckId::rank3_progression_scan, {{"N", 24}}},
    };
    REQUIRE(cases.size() == all_checks().size());
    for (const auto& [id, overrides] : cases) {
        CAPTURE(to_string(id));
        const auto report = run_check(id, overrides);
        REQUIRE(report.id == id);
        REQUIRE(report.pass);
        REQUIRE(report.checked > 0);
        REQUIRE_FALSE(report.first_failure.has_value());
        for (const auto& [key, value] : overrides) {
            REQUIRE(report.params.at(key) == value);
        }
    }
}

TEST_CASE("run_all covers the registry in order") {
    const auto reports = run_all(64);
    const auto ids = all_checks();
    REQUIRE(reports.size() == ids.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CAPTURE(to_string(ids[i]));
        REQUIRE(reports[i].id == ids[i]);
        REQUIRE(reports[i].pass);
        REQUIRE(reports[i].params == default_params(ids[i], 64));
    }
    REQUIRE_THROWS_AS(run_all(8), std::invalid_argument);
}

TEST_CASE("parameter validation") {
    REQUIRE_THROWS_AS(run_check(CheckId::gauss_identities, {{"Q", 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(run_check(CheckId::gauss_identities, {{"N", 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(run_check(CheckId::newman_b, {{"p", 14}}), std::invalid_argument);
    // 17 is prime but not 1 mod 12.
    REQUIRE_THROWS_AS(run_check(CheckId::newman_b, {{"p", 17}}), std::invalid_argument);
    REQUIRE_THROWS_AS(run_check(CheckId::rank3_progression_scan, {{"ell", 4}}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(run_check(CheckId::rank3_progression_scan, {{"t", 2}}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(run_check(CheckId::rank3_progression_scan, {{"t", 15}}),
                      std::invalid_argument);
    // A window with no instance in it is an error, not a pass.
    REQUIRE_THROWS_AS(run_check(CheckId::cor23_mod64, {{"N", 6}}), std::invalid_argument);
}

TEST_CASE("thm51 rejects windows that outgrow the series cap") {
    REQUIRE_THROWS_AS(run_check(CheckId::thm51_mult_mod9, {{"N", 2000}, {"p", 97}}),
                      std::invalid_argument);
}

TEST_CASE("alternate parameters for the rank scan") {
    const auto report =
        run_check(CheckId::rank3_progression_scan, {{"N", 40}, {"t", 3}, {"ell", 3}, {"j", 1}});
    REQUIRE(report.pass);
    REQUIRE(report.checked > 0);
}

TEST_CASE("report serialization") {
    CheckReport passing;
    passing.id = CheckId::mod4_all;
    passing.params = {{"N", 5}};
    passing.pass = true;
    passing.checked = 5;
    REQUIRE(to_json(passing) ==
            R"({"id":"mod4_all","params":{"N":5},"pass":true,"checked":5,"first_failure":null})");

    CheckReport failing;
    failing.id = CheckId::ksv_mod8;
    failing.params = {{"N", 9}};
    failing.pass = false;
    failing.checked = 8;
    failing.first_failure = Failure{7, "0", "32"};
    REQUIRE(to_json(failing) ==
            R"({"id":"ksv_mod8","params":{"N":9},"pass":false,"checked":8,)"
            R"("first_failure":{"index":7,"expected":"0","actual":"32"}})");

    CheckReport multi;
    multi.id = CheckId::newman_b;
    multi.params = {{"p", 13}, {"N", 10}};
    multi.pass = true;
    multi.checked = 10;
    REQUIRE(to_json(multi) ==
            R"({"id":"newman_b","params":{"N":10,"p":13},"pass":true,"checked":10,)"
            R"("first_failure":null})");

    CheckReport escaped;
    escaped.id = CheckId::mod4_all;
    escaped.params = {{"N", 1}};
    escaped.pass = false;
    escaped.checked = 1;
    escaped.first_failure = Failure{0, "a\"b", "c\\d"};
    REQUIRE(to_json(escaped) ==
            R"({"id":"mod4_all","params":{"N":1},"pass":false,"checked":1,)"
            R"("first_failure":{"index":0,"expected":"a\"b","actual":"c\\d"}})");
}

TEST_CASE("progression scan finds the classical classes") {
    const auto mod3 = scan_progressions(3, 4, 500);
    REQUIRE(mod3 == std::vector<ScanCandidate>{{3, 2, 167}});

    const auto mod5 = scan_progressions(5, 20, 600);
    const auto has = [&](std::int64_t A, std::int64_t B) {
        return std::any_of(mod5.begin(), mod5.end(), [&](const ScanCandidate& c) {
            return c.A == A && c.B == B;
        });
    };
    REQUIRE(has(20, 11));
    REQUIRE(has(20, 15));
    REQUIRE(has(20, 19));

    const auto mod64 = scan_progressions(64, 8, 500);
    REQUIRE(std::any_of(mod64.begin(), mod64.end(), [](const ScanCandidate& c) {
        return c.A == 8 && c.B == 7;
    }));
    // The class through n = 0 can never qualify.
    for (const auto& c : mod64) REQUIRE(c.B != 0);
}

TEST_CASE("progression scan guards") {
    REQUIRE_THROWS_AS(scan_progressions(1, 4, 100), std::invalid_argument);
    REQUIRE_THROWS_AS(scan_progressions(3, 1, 100), std::invalid_argument);
    REQUIRE_THROWS_AS(scan_progressions(3, 4, 0), std::invalid_argument);
}
