#include <array>
#include <map>

#include <doctest.h>

#include "superperm/bounds.hpp"

using namespace spm;

TEST_CASE("closed-form bound values") {
    static constexpr std::array<long long, 8> I = {1, 2, 4, 9, 28, 125, 726, 5047};
    static constexpr std::array<long long, 8> C = {1, 2, 5, 11, 35, 148, 833, 5686};
    static constexpr std::array<long long, 8> B = {1, 2, 5, 13, 49, 217, 1261, 8881};
    static constexpr std::array<long long, 8> S = {1, 2, 5, 19, 97, 601, 4321, 35281};
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(bound_I(n) == I[static_cast<std::size_t>(n - 1)]);
        CHECK(bound_C(n) == C[static_cast<std::size_t>(n - 1)]);
        CHECK(bound_B(n) == B[static_cast<std::size_t>(n - 1)]);
        CHECK(bound_S(n) == S[static_cast<std::size_t>(n - 1)]);
    }
    CHECK(bound_S(8) == 7 * 5040 + 1);
    CHECK_THROWS(bound_I(0));
}

TEST_CASE("total 1-cycle counts") {
    CHECK(bound_L(1) == 1);
    CHECK(bound_L(4) == 3);
    CHECK(bound_L(5) == 8);
    CHECK(bound_L(7) == 108);
    CHECK(bound_L(8) == 640);
}

TEST_CASE("rational upper bound") {
    CHECK(bound_Bprime(1) == 1);
    CHECK(bound_Bprime(2) == 2);
    CHECK(bound_Bprime(3) == BigRational(17, 3));
    CHECK(bound_Bprime(4) == 16);
    CHECK(bound_Bprime(5) == BigRational(257, 5));
    CHECK(bound_Bprime(6) == BigRational(695, 3));
    CHECK(bound_Bprime(8) == 8941);
    for (int n = 1; n <= 20; ++n) {
        CAPTURE(n);
        CHECK(BigRational(bound_B(n)) <= bound_Bprime(n));
    }
}

TEST_CASE("bound chain") {
    for (int n = 3; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(bound_I(n) <= bound_C(n));
        CHECK(bound_B(n) <= bound_S(n));
    }
    // the chain clause starts at n = 3: B(2) = 2 equals S(2), and the
    // published B(2) = 3 would even exceed it
    CHECK(bound_B(2) == bound_S(2));
}

TEST_CASE("two shapes of the 1-cycle upper bound agree") {
    for (int n = 1; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(bound_B(n) ==
              1 + factorial_big(static_cast<unsigned>(n - 1)) + bound_L(n) * (n - 2));
    }
}

TEST_CASE("prime closed form") {
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
        CAPTURE(p);
        CHECK(prime_B_closed_form(p) == bound_B(p));
        // expanded shape: 1 + (p-1)^2 + 2(p-1)((p-1)! - (p-1))/p
        const BigInt f = factorial_big(static_cast<unsigned>(p - 1));
        CHECK(prime_B_closed_form(p) ==
              1 + BigInt(p - 1) * (p - 1) + 2 * BigInt(p - 1) * ((f - (p - 1)) / p));
    }
    CHECK(prime_B_closed_form(5) == 49);
    CHECK(prime_B_closed_form(7) == 1261);
    CHECK(prime_B_closed_form(3) == 5);
    CHECK_THROWS(prime_B_closed_form(4));
    CHECK_THROWS(prime_B_closed_form(1));
}

TEST_CASE("ratio report") {
    const auto rows = ratio_report(23);
    REQUIRE(rows.size() == 21);
    CHECK(rows[0].n == 3);

    const auto& r4 = rows[1];
    CHECK(r4.B_ratio == BigRational(13, 6));

    const auto& r11 = rows[8];
    CHECK(r11.n == 11);
    CHECK(r11.B_ratio == BigRational(BigInt(6597901), factorial_big(10)));

    SUBCASE("prime ratios: range well inside (1.5, 2.2)") {
        for (int p : {5, 7, 11, 13, 17, 19, 23}) {
            const BigRational u(bound_B(p), factorial_big(static_cast<unsigned>(p - 1)));
            CHECK(u > BigRational(3, 2));
            CHECK(u < BigRational(11, 5));
        }
    }
    SUBCASE("prime ratios increase from 7 up; 5 sits above 7") {
        const auto u = [](int p) {
            return BigRational(bound_B(p), factorial_big(static_cast<unsigned>(p - 1)));
        };
        CHECK(u(5) > u(7));  // 49/24 > 1261/720
        CHECK(u(7) < u(11));
        CHECK(u(11) < u(13));
        CHECK(u(13) < u(17));
        CHECK(u(17) < u(19));
        CHECK(u(19) < u(23));
    }
    SUBCASE("relaxed-bound ratio window and prime convergence") {
        for (int n = 6; n <= 20; ++n) {
            const BigRational r =
                bound_Bprime(n) / BigRational(factorial_big(static_cast<unsigned>(n - 1)));
            CHECK(r > 1);
            CHECK(r <= BigRational(12, 5));
        }
        BigRational prev_gap(-1);
        for (int p : {7, 11, 13, 17, 19}) {
            BigRational gap =
                bound_Bprime(p) / BigRational(factorial_big(static_cast<unsigned>(p - 1))) - 2;
            if (gap < 0) gap = -gap;
            if (prev_gap >= 0) CHECK(gap < prev_gap);
            prev_gap = gap;
        }
    }
    SUBCASE("1-cycle total squeeze") {
        for (int n = 3; n <= 20; ++n) {
            CAPTURE(n);
            const BigInt fact2 = factorial_big(static_cast<unsigned>(n - 2));
            const BigRational lratio(bound_L(n), fact2);
            CHECK(BigRational(n - 1, n) <= lratio);
            BigRational upper = 0;
            for (std::uint64_t d : divisors_of(static_cast<std::uint64_t>(n))) {
                BigInt num = euler_phi(static_cast<std::uint64_t>(n) / d);
                for (std::uint64_t i = 1; i < d; ++i) num *= n;
                num *= factorial_big(static_cast<unsigned>(d - 1));
                BigInt den = 1;
                for (std::uint64_t i = 0; i < d; ++i) den *= d;
                den *= fact2;
                upper += BigRational(num, den);
            }
            CHECK(lratio <= upper);
        }
    }
    CHECK_THROWS(ratio_report(2));
}

TEST_CASE("bounds table assembly") {
    std::map<int, BigInt> best;
    best[4] = 12;
    const auto rows = bounds_table(5, &best);
    REQUIRE(rows.size() == 5);
    CHECK(rows[3].n == 4);
    REQUIRE(rows[3].best_found.has_value());
    CHECK(*rows[3].best_found == 12);
    CHECK_FALSE(rows[4].best_found.has_value());
    CHECK(rows[4].B == 49);
}

TEST_CASE("published tabulation deviations are exactly three") {
    const auto devs = published_table_deviations(8);
    REQUIRE(devs.size() == 3);
    CHECK(devs[0].n == 2);
    CHECK(devs[0].column == 'B');
    CHECK(devs[0].computed == 2);
    CHECK(devs[0].published == 3);
    CHECK(devs[1].n == 7);
    CHECK(devs[1].column == 'C');
    CHECK(devs[1].computed == 833);
    CHECK(devs[1].published == 823);
    CHECK(devs[2].n == 8);
    CHECK(devs[2].column == 'S');
    CHECK(devs[2].computed == 35281);
    CHECK(devs[2].published == 35280);
    CHECK(published_table_deviations(6).size() == 1);
}

TEST_CASE("rational formatting") {
    CHECK(format_rational(BigRational(16)) == "16");
    CHECK(format_rational(BigRational(17, 3)) == "17/3");
    CHECK(format_rational(BigRational(-3, 6)) == "-1/2");
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(23));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(21));
}
