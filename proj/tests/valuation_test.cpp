#include <doctest.h>

#include <stdexcept>

#include "sigma/coeff_table.hpp"
#include "sigma/valuation.hpp"

using namespace sigma;

namespace {

// Test-local oracles, independent of the library implementations: the
// factorial by plain multiplication, the valuation by trial division.
mpz_class factorial_oracle(unsigned long n) {
    mpz_class f = 1;
    for (unsigned long k = 2; k <= n; ++k) f *= k;
    return f;
}

long valuation_oracle(mpz_class x, long p) {
    REQUIRE(x != 0);
    long count = 0;
    while (x % p == 0) {
        x /= p;
        ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("primality gate") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK(!is_prime(0));
    CHECK(!is_prime(1));
    CHECK(!is_prime(91));  // 7 * 13
    CHECK_THROWS_AS(nu_factorial(5, 4), NotPrime);
    CHECK_THROWS_AS(nu(mpz_class(6), 1), NotPrime);
    CHECK_THROWS_AS(nu_b(1, 1, 9), NotPrime);
}

TEST_CASE("factorial valuations by Legendre") {
    CHECK(nu_factorial(0, 2) == 0);
    CHECK(nu_factorial(5, 2) == 3);
    CHECK(nu_factorial(11, 3) == valuation_oracle(factorial_oracle(11), 3));
    CHECK(nu_factorial(11, 3) == 4);
}

TEST_CASE("Legendre agrees with trial division up to 200!") {
    for (unsigned long n = 0; n <= 200; ++n) {
        const mpz_class f = factorial_oracle(n);
        for (long p : {2, 3, 5, 7})
            CHECK(static_cast<long>(nu_factorial(n, static_cast<unsigned long>(
                                                        p))) ==
                  valuation_oracle(f, p));
    }
}

TEST_CASE("valuation of integers") {
    CHECK(nu(mpz_class(-18), 3) == 2);
    CHECK(nu(mpz_class(1), 7) == 0);
    CHECK(nu(mpz_class(1024), 2) == 10);
    CHECK_THROWS_AS(nu(mpz_class(0), 3), ZeroValuation);
}

TEST_CASE("reference integers b") {
    CHECK(b_value(0, 0) == 1);
    CHECK(b_value(1, 0) == 5);    // 5! / (2^3 * 3)
    CHECK(b_value(0, 1) == 35);   // 7! / (2^4 * 3^2)
    CHECK_THROWS_AS(b_value(-1, 0), std::invalid_argument);
    for (long i = 0; i <= 10; ++i)
        for (long j = 0; j <= 10; ++j) CHECK(b_value(i, j) > 0);
}

TEST_CASE("closed-form valuation of b") {
    CHECK(nu_b(0, 0, 2) == 0);
    CHECK(nu_b(1, 1, 3) == 1);
    CHECK(nu_b(10, 10, 2) == 11);
}

TEST_CASE("closed form matches the constructed value") {
    for (long i = 0; i <= 30; ++i) {
        for (long j = 0; j <= 30; ++j) {
            const mpz_class b = b_value(i, j);
            for (unsigned long p : {2ul, 3ul, 5ul})
                CHECK(nu_b(i, j, p) ==
                      static_cast<long>(nu(b, p)));
        }
    }
}

TEST_CASE("hypothesis check on known indices") {
    const CoeffTable table = compute_rectangle(10, 10, 2);

    const ValuationReport origin = hypothesis_check(table, {0, 0});
    CHECK(origin.status == MatchStatus::Match);
    CHECK(origin.nu2_actual == 0);
    CHECK(origin.nu3_actual == 0);
    CHECK(origin.nu2_predicted == 0);
    CHECK(origin.nu3_predicted == 0);

    const ValuationReport small = hypothesis_check(table, {1, 1});
    CHECK(small.status == MatchStatus::Match);
    CHECK(small.nu2_actual == 1);
    CHECK(small.nu3_actual == 2);
    CHECK(small.nu3_predicted == 1 + nu_b(1, 1, 3));

    const ValuationReport large = hypothesis_check(table, {10, 10});
    CHECK(large.status == MatchStatus::Match);
    CHECK(large.nu2_actual == 11);
    CHECK(large.nu3_actual == 20);
}

TEST_CASE("verification over a rectangle") {
    const CoeffTable table = compute_rectangle(20, 20, 2);
    const VerificationSummary summary = verify_range(table, 20, 20);
    CHECK(summary.total == 441);
    CHECK(summary.matches == 441);
    CHECK(summary.non_matches.empty());
    CHECK(summary.all_match());
    CHECK(summary.elapsed_seconds >= 0.0);
}

TEST_CASE("mismatches are classified per prime") {
    CoeffTable table = compute_rectangle(1, 1);

    SUBCASE("wrong 2-adic valuation") {
        table.set({0, 0}, 2);
        const ValuationReport report = hypothesis_check(table, {0, 0});
        CHECK(report.status == MatchStatus::Mismatch2);
        const VerificationSummary summary = verify_range(table, 1, 1);
        CHECK(summary.mismatch2 == 1);
        CHECK(summary.matches == 3);
        REQUIRE(summary.non_matches.size() == 1);
        CHECK(summary.non_matches[0].idx == Index{0, 0});
    }
    SUBCASE("wrong 3-adic valuation") {
        table.set({0, 0}, 3);
        CHECK(hypothesis_check(table, {0, 0}).status == MatchStatus::Mismatch3);
    }
    SUBCASE("both wrong") {
        table.set({0, 0}, 6);
        CHECK(hypothesis_check(table, {0, 0}).status ==
              MatchStatus::MismatchBoth);
    }
    SUBCASE("zero coefficient is its own status") {
        table.set({1, 0}, 0);
        const ValuationReport report = hypothesis_check(table, {1, 0});
        CHECK(report.status == MatchStatus::ZeroCoefficient);
        CHECK(report.nu2_actual == -1);
        const VerificationSummary summary = verify_range(table, 1, 1);
        CHECK(summary.zero_coefficients == 1);
    }
}

TEST_CASE("verification propagates missing coverage") {
    const CoeffTable table = compute_rectangle(2, 2);
    CHECK_THROWS_AS(verify_range(table, 50, 50), NotComputed);
}

TEST_CASE("membership predicate: nu_3 >= j on the computed range") {
    const CoeffTable table = compute_rectangle(15, 15);
    for (long j = 0; j <= 15; ++j)
        for (long i = 0; i <= 15; ++i)
            CHECK(static_cast<long>(nu(table.coefficient({i, j}), 3)) >= j);
}

TEST_CASE("residual matrices") {
    const CoeffTable table = compute_rectangle(12, 8, 2);

    SUBCASE("p = 2 residual vanishes where the hypothesis holds") {
        const ResidualMatrix matrix = residual_report(table, 2, 12, 8);
        for (long j = 0; j <= 8; ++j)
            for (long i = 0; i <= 12; ++i) {
                REQUIRE(matrix.at(i, j).has_value());
                CHECK(*matrix.at(i, j) == 0);
            }
    }
    SUBCASE("p = 3 residual equals j where the hypothesis holds") {
        const ResidualMatrix matrix = residual_report(table, 3, 12, 8);
        for (long j = 0; j <= 8; ++j)
            for (long i = 0; i <= 12; ++i) CHECK(*matrix.at(i, j) == j);
    }
    SUBCASE("p = 5 residual is informational and defined") {
        const ResidualMatrix matrix = residual_report(table, 5, 12, 8);
        CHECK(matrix.prime == 5);
        CHECK(matrix.at(0, 0).has_value());
    }
    SUBCASE("zero coefficients are flagged per entry") {
        CoeffTable patched = table;
        patched.set({1, 0}, 0);
        const ResidualMatrix matrix = residual_report(patched, 5, 2, 1);
        CHECK(!matrix.at(1, 0).has_value());
        CHECK(matrix.at(0, 0).has_value());
    }
    SUBCASE("non-prime is rejected") {
        CHECK_THROWS_AS(residual_report(table, 6, 2, 2), NotPrime);
    }
}
