#include <catch2/catch_amalgamated.hpp>

#include <opp/arith.hpp>
#include <opp/special_series.hpp>

#include <cstdint>

using namespace opp;

TEST_CASE("is_prime small table") {
    int count = 0;
    for (std::uint64_t n = 0; n < 100; ++n) {
        if (is_prime(n)) ++count;
    }
    REQUIRE(count == 25);
    REQUIRE(is_prime(2));
    REQUIRE(is_prime(97));
    REQUIRE_FALSE(is_prime(0));
    REQUIRE_FALSE(is_prime(1));
    REQUIRE_FALSE(is_prime(91));
    REQUIRE(is_prime(1000003));
    REQUIRE_FALSE(is_prime(1000001));
}

TEST_CASE("factorize") {
    REQUIRE(factorize(360) == Factorization{{2, 3}, {3, 2}, {5, 1}});
    REQUIRE(factorize(4394) == Factorization{{2, 1}, {13, 3}});
    REQUIRE(factorize(97) == Factorization{{97, 1}});
    REQUIRE(factorize(1).empty());
    REQUIRE_THROWS_AS(factorize(0), std::invalid_argument);
    // Round-trip a few composites.
    for (std::uint64_t n = 1; n <= 500; ++n) {
        std::uint64_t back = 1;
        for (const auto& [p, e] : factorize(n)) {
            REQUIRE(is_prime(p));
            for (std::uint32_t i = 0; i < e; ++i) back *= p;
        }
        REQUIRE(back == n);
    }
}

TEST_CASE("square detection") {
    REQUIRE(is_square(0));
    REQUIRE(is_square(1));
    REQUIRE(is_square(25));
    REQUIRE(is_square(1000000000000ULL));
    REQUIRE_FALSE(is_square(2));
    REQUIRE_FALSE(is_square(24));
    REQUIRE_FALSE(is_square(26));
    REQUIRE_FALSE(is_square(1000000000001ULL));
    REQUIRE(is_twice_square(2));
    REQUIRE(is_twice_square(8));
    REQUIRE(is_twice_square(50));
    REQUIRE_FALSE(is_twice_square(4));
    REQUIRE_FALSE(is_twice_square(12));
    for (std::uint64_t n = 0; n <= 10000; ++n) {
        const std::uint64_t r = isqrt_u64(n);
        REQUIRE(r * r <= n);
        REQUIRE((r + 1) * (r + 1) > n);
    }
}

TEST_CASE("sum of two squares count") {
    REQUIRE(r2_closed(0) == 1);
    REQUIRE(r2_closed(1) == 4);
    REQUIRE(r2_closed(2) == 4);
    REQUIRE(r2_closed(3) == 0);
    REQUIRE(r2_closed(5) == 8);
    REQUIRE(r2_closed(25) == 12);
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        CAPTURE(n);
        REQUIRE(r2_closed(n) == r2_brute(n));
    }
    // Against the theta-square series.
    const auto series = named_series(NamedSeriesId::r2, 2001);
    for (std::size_t n = 0; n <= 2000; ++n) {
        CAPTURE(n);
        REQUIRE(series[n] == Int(r2_closed(n)));
    }
}

TEST_CASE("r2 vanishes on odd powers of 3 mod 4 primes") {
    for (const std::uint64_t p : {3ULL, 7ULL, 11ULL}) {
        for (const std::uint32_t alpha : {0u, 1u}) {
            std::uint64_t pk = p;
            for (std::uint32_t i = 0; i < 2 * alpha; ++i) pk *= p;
            for (const std::uint64_t k : {1ULL, 2ULL, 4ULL, 5ULL, 8ULL, 10ULL}) {
                if (k % p == 0) continue;
                CAPTURE(p, alpha, k);
                REQUIRE(r2_closed(pk * k) == 0);
            }
        }
    }
}

TEST_CASE("x^2 + 5 y^2 representation count") {
    REQUIRE(rep_x2p5y2_closed(0) == 1);
    REQUIRE(rep_x2p5y2_closed(1) == 2);
    REQUIRE(rep_x2p5y2_closed(2) == 0);
    REQUIRE(rep_x2p5y2_closed(4) == 2);
    REQUIRE(rep_x2p5y2_closed(5) == 2);
    REQUIRE(rep_x2p5y2_closed(6) == 4);
    REQUIRE(rep_x2p5y2_closed(21) == 8);
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        CAPTURE(n);
        REQUIRE(rep_x2p5y2_closed(n) == rep_x2p5y2_brute(n));
    }
    // Against phi(q) * phi(q^5).
    const std::size_t N = 2001;
    const auto series =
        mul(theta_phi(1, N), at_scale([](std::size_t m) { return theta_phi(1, m); }, 5, N));
    for (std::size_t n = 0; n < N; ++n) {
        CAPTURE(n);
        REQUIRE(series[n] == Int(rep_x2p5y2_closed(n)));
    }
}

TEST_CASE("closed-form congruence values match the exact series") {
    const auto pp = named_series(NamedSeriesId::pp, 181);
    for (std::uint64_t n = 0; n <= 60; ++n) {
        CAPTURE(n);
        REQUIRE(Int(pp3n_mod3(n)) == pp[static_cast<std::size_t>(3 * n)] % 3);
    }
    for (std::uint64_t n = 0; n <= 36; ++n) {
        CAPTURE(n);
        REQUIRE(Int(pp5n_mod5(n)) == pp[static_cast<std::size_t>(5 * n)] % 5);
    }
}
