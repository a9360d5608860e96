#include <doctest.h>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "sigma/series_oracle.hpp"
#include "sigma/truncated_series.hpp"

using namespace sigma;

namespace {

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(SIGMA_GOLDEN_DIR) + "/" + name,
                     std::ios::binary);
    REQUIRE(in);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct Lcg {
    std::uint64_t state;

    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(
                                                   hi - lo + 1));
    }
};

BivariatePoly random_poly(Lcg& rng) {
    BivariatePoly p;
    const long terms = rng.range(1, 4);
    for (long t = 0; t < terms; ++t) {
        const long num = rng.range(-5, 5);
        if (num == 0) continue;
        p += BivariatePoly::term(rational(num, rng.range(1, 6)),
                                 rng.range(0, 3), rng.range(0, 3));
    }
    return p;
}

TruncatedSeries random_series(Lcg& rng, long lowest, long order) {
    std::vector<BivariatePoly> coeffs;
    for (long k = lowest; k < order; ++k) coeffs.push_back(random_poly(rng));
    return TruncatedSeries(lowest, std::move(coeffs), order);
}

const BivariatePoly one = BivariatePoly::constant(1);

}  // namespace

TEST_CASE("polynomials stay canonical") {
    const BivariatePoly half = BivariatePoly::term(rational(2, 4), 1, 0);
    CHECK(half.coeff(1, 0) == rational(1, 2));
    CHECK((half - half).is_zero());
    CHECK((half - half).term_count() == 0);
    CHECK(BivariatePoly::term(0, 2, 2).is_zero());
}

TEST_CASE("polynomial ring identities on random triples") {
    Lcg rng{20240811};
    for (int trial = 0; trial < 50; ++trial) {
        const BivariatePoly a = random_poly(rng);
        const BivariatePoly b = random_poly(rng);
        const BivariatePoly c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("polynomial derivatives and the Euler scaling") {
    const BivariatePoly p = BivariatePoly::term(1, 3, 1);  // g2^3 g3
    CHECK(p.derivative_g2() == BivariatePoly::term(3, 2, 1));
    CHECK(p.derivative_g3() == BivariatePoly::term(1, 3, 0));
    CHECK(p.weighted_scale(4, 6) == BivariatePoly::term(18, 3, 1));
    CHECK(one.derivative_g2().is_zero());
}

TEST_CASE("polynomial rendering in graded-lex order") {
    CHECK(BivariatePoly().str() == "0");
    CHECK(BivariatePoly::term(rational(-1, 240), 1, 0).str() == "-1/240*g2");
    const BivariatePoly mixed = one + BivariatePoly::term(1, 0, 1) +
                                BivariatePoly::term(1, 2, 0);
    CHECK(mixed.str() == "g2^2 + g3 + 1");
    const BivariatePoly signs =
        BivariatePoly::term(1, 2, 0) - BivariatePoly::term(rational(1, 3), 1, 1);
    CHECK(signs.str() == "g2^2 - 1/3*g2*g3");
}

TEST_CASE("series precision bookkeeping") {
    const TruncatedSeries f(1, {one, BivariatePoly(), -one}, 5);  // z - z^3
    CHECK(f.order() == 5);
    CHECK(f.lowest_power() == 1);
    CHECK(f.coeff(0).is_zero());
    CHECK(f.coeff(4).is_zero());
    CHECK_THROWS_AS((void)f.coeff(5), InsufficientPrecision);

    const TruncatedSeries square = f * f;
    CHECK(square.order() == 6);
    CHECK(square.coeff(2) == one);
    CHECK(square.coeff(4) == one * mpq_class(-2));
    CHECK(square.coeff(5).is_zero());
    CHECK_THROWS_AS((void)square.coeff(6), InsufficientPrecision);
}

TEST_CASE("laurent multiplication loses precision across the pole") {
    const TruncatedSeries pole(-2, {one}, 1);   // z^-2 + O(z)
    const TruncatedSeries tail(1, {one}, 4);    // z + O(z^4)
    const TruncatedSeries product = pole * tail;
    CHECK(product.order() == 2);  // min(-2 + 4, 1 + 1)
    CHECK(product.lowest_power() == -1);
    CHECK(product.coeff(-1) == one);
    CHECK(product.coeff(1).is_zero());
    CHECK_THROWS_AS((void)product.coeff(2), InsufficientPrecision);
}

TEST_CASE("addition takes the weaker precision") {
    const TruncatedSeries a(1, {one}, 3);
    const TruncatedSeries b(2, {one}, 5);
    const TruncatedSeries sum = a + b;
    CHECK(sum.order() == 3);
    CHECK(sum.coeff(1) == one);
    CHECK(sum.coeff(2) == one);
    CHECK_THROWS_AS((void)sum.coeff(3), InsufficientPrecision);
}

TEST_CASE("zero series conventions") {
    const TruncatedSeries zero;
    CHECK(zero.is_zero());
    CHECK(zero.is_exact());
    CHECK(zero.coeff(1000).is_zero());

    const TruncatedSeries f(1, {one}, 4);
    CHECK((f * zero).is_exact());
    CHECK((f * zero).is_zero());
    CHECK((f * mpq_class(0)).is_exact());
    CHECK((f + zero) == f);

    // A zero-through-precision series is not the exact zero.
    const TruncatedSeries foggy(0, {}, 3);
    CHECK(foggy.is_zero());
    CHECK(!foggy.is_exact());
    CHECK((f * foggy).order() == 4);  // min(1 + 3, 3 + 4)
}

TEST_CASE("derivative shifts the precision window") {
    const TruncatedSeries f(-2, {one, BivariatePoly(), BivariatePoly(),
                                 BivariatePoly(), BivariatePoly(), one},
                            5);  // z^-2 + z^3
    const TruncatedSeries df = f.derivative();
    CHECK(df.order() == 4);
    CHECK(df.coeff(-3) == one * mpq_class(-2));
    CHECK(df.coeff(2) == one * mpq_class(3));
    CHECK(df.coeff(0).is_zero());

    // z d/dz recovers the full order.
    CHECK(f.derivative().shifted(1).order() == 5);
}

TEST_CASE("exp and log invert each other") {
    Lcg rng{424242};
    for (int trial = 0; trial < 10; ++trial) {
        const TruncatedSeries u = random_series(rng, 1, 9);
        const TruncatedSeries expu = TruncatedSeries::exp(u);
        CHECK(expu.order() == 9);
        CHECK(expu.coeff(0) == one);
        CHECK(TruncatedSeries::log(expu) == u);

        const TruncatedSeries g =
            TruncatedSeries::monomial(one, 0, 9) + random_series(rng, 1, 9);
        CHECK(TruncatedSeries::exp(TruncatedSeries::log(g)) == g);
    }
    CHECK_THROWS_AS(TruncatedSeries::exp(TruncatedSeries(0, {one}, 3)),
                    std::domain_error);
    CHECK_THROWS_AS(TruncatedSeries::log(TruncatedSeries(1, {one}, 3)),
                    std::domain_error);
}

TEST_CASE("series dump matches the golden file") {
    const CoeffTable table = compute_rectangle(2, 1);
    CHECK(sigma_from_table(table, 12).dump() ==
          read_golden("sigma_dump_order12.txt"));
}

TEST_CASE("sigma assembled from the table") {
    const CoeffTable table = compute_rectangle(2, 1);

    const TruncatedSeries head = sigma_from_table(table, 6);
    const TruncatedSeries expected(
        1,
        {one, BivariatePoly(), BivariatePoly(), BivariatePoly(),
         BivariatePoly::term(rational(-1, 240), 1, 0)},
        6);
    CHECK(head == expected);

    CHECK(sigma_from_table(table, 2) == TruncatedSeries(1, {one}, 2));

    const TruncatedSeries longer = sigma_from_table(table, 8);
    CHECK(longer.coeff(7) == BivariatePoly::term(rational(-1, 840), 0, 1));

    // Coverage shortfall: z^7 needs (0, 1), outside this working set.
    const CoeffTable tiny = compute_rectangle(1, 0);
    CHECK_THROWS_AS(sigma_from_table(tiny, 8), NotComputed);
    CHECK_THROWS_AS(sigma_from_table(tiny, 0), std::invalid_argument);
}

TEST_CASE("Q0 annihilation") {
    const TruncatedSeries z = TruncatedSeries::monomial(one, 1);
    CHECK(apply_Q0(z).is_zero());

    const CoeffTable table = compute_rectangle(3, 2);
    const TruncatedSeries sigma12 = sigma_from_table(table, 12);
    const TruncatedSeries image = apply_Q0(sigma12);
    CHECK(image.is_zero());
    CHECK(image.order() == 12);

    // A non-sigma monomial is not annihilated: Q0(g2 z) = 4 g2 z.
    const TruncatedSeries g2z =
        TruncatedSeries::monomial(BivariatePoly::term(1, 1, 0), 1);
    CHECK(apply_Q0(g2z) ==
          TruncatedSeries::monomial(BivariatePoly::term(4, 1, 0), 1));
}

TEST_CASE("Q2 annihilation up to the truncation boundary") {
    const CoeffTable table = compute_rectangle(3, 2);
    const TruncatedSeries sigma8 = sigma_from_table(table, 8);
    const TruncatedSeries image = apply_Q2(sigma8);
    CHECK(image.order() == 6);
    CHECK(image.is_zero());  // nothing below z^6

    // On z alone the boundary residual appears.
    const TruncatedSeries z = TruncatedSeries::monomial(one, 1);
    CHECK(apply_Q2(z) ==
          TruncatedSeries::monomial(BivariatePoly::term(rational(-1, 24), 1, 0),
                                    3));

    CHECK_THROWS_AS(apply_Q2(TruncatedSeries(1, {one}, 2)),
                    InsufficientPrecision);
}

TEST_CASE("P-function expansion coefficients") {
    const TruncatedSeries p = pe_laurent(8);
    CHECK(p.lowest_power() == -2);
    CHECK(p.order() == 8);
    CHECK(p.coeff(-2) == one);
    CHECK(p.coeff(0).is_zero());
    CHECK(p.coeff(2) == BivariatePoly::term(rational(1, 20), 1, 0));
    CHECK(p.coeff(4) == BivariatePoly::term(rational(1, 28), 0, 1));
    CHECK(p.coeff(6) == BivariatePoly::term(rational(1, 1200), 2, 0));
    CHECK(p.coeff(3).is_zero());
    CHECK_THROWS_AS((void)p.coeff(8), InsufficientPrecision);
    CHECK_THROWS_AS(pe_laurent(-3), std::invalid_argument);
}

TEST_CASE("cubic identity residual vanishes") {
    const TruncatedSeries residual = weierstrass_residual(12);
    CHECK(residual.is_zero());
    CHECK(residual.order() == 8);
    CHECK(residual.coeff(-6).is_zero());
    CHECK(residual.coeff(0).is_zero());

    // Through z^20 as well, given enough input precision.
    CHECK(weierstrass_residual(25).is_zero());
    CHECK(weierstrass_residual(25).order() == 21);
}

TEST_CASE("sigma reconstructed from the P-function") {
    const TruncatedSeries s = sigma_from_pe(12);
    CHECK(s.coeff(1) == one);
    CHECK(s.coeff(5) == BivariatePoly::term(rational(-1, 240), 1, 0));

    const CoeffTable table = compute_rectangle(8, 5);
    const TruncatedSeries via_table = sigma_from_table(table, 30);
    const TruncatedSeries via_pe = sigma_from_pe(30);
    CHECK(via_pe.agrees_with(via_table, 30));
    CHECK(via_pe == via_table);
    CHECK_THROWS_AS(sigma_from_pe(0), std::invalid_argument);
}
