#include "sigma/series_oracle.hpp"

#include <stdexcept>
#include <vector>

namespace sigma {

namespace {

// c_2 .. c_k_max of the P-function Laurent expansion.
std::vector<BivariatePoly> pe_coefficients(long k_max) {
    std::vector<BivariatePoly> c(
        k_max >= 2 ? static_cast<std::size_t>(k_max) + 1 : 0);
    if (k_max >= 2) c[2] = BivariatePoly::term(rational(1, 20), 1, 0);
    if (k_max >= 3) c[3] = BivariatePoly::term(rational(1, 28), 0, 1);
    for (long k = 4; k <= k_max; ++k) {
        BivariatePoly sum;
        for (long m = 2; m <= k - 2; ++m)
            sum += c[static_cast<std::size_t>(m)] *
                   c[static_cast<std::size_t>(k - m)];
        c[static_cast<std::size_t>(k)] =
            sum * rational(3, (2 * k + 1) * (k - 3));
    }
    return c;
}

}  // namespace

TruncatedSeries sigma_from_table(const CoeffTable& table, long order) {
    if (order < 1)
        throw std::invalid_argument("series order must be positive");
    std::vector<BivariatePoly> coefficients(static_cast<std::size_t>(order - 1));
    for (long i = 0; 4 * i + 1 < order; ++i) {
        for (long j = 0; 4 * i + 6 * j + 1 < order; ++j) {
            const long n = 4 * i + 6 * j + 1;
            const mpz_class& a = table.coefficient({i, j});
            if (a == 0) continue;
            // a(i,j) * (1/2)^i * 2^j / n!
            mpz_class numerator = a << static_cast<unsigned long>(j);
            mpz_class denominator;
            mpz_fac_ui(denominator.get_mpz_t(), static_cast<unsigned long>(n));
            mpz_mul_2exp(denominator.get_mpz_t(), denominator.get_mpz_t(),
                         static_cast<unsigned long>(i));
            coefficients[static_cast<std::size_t>(n - 1)] +=
                BivariatePoly::term(rational(numerator, denominator), i, j);
        }
    }
    return TruncatedSeries(1, std::move(coefficients), order);
}

TruncatedSeries apply_Q0(const TruncatedSeries& f) {
    const TruncatedSeries euler_part = map_coefficients(
        f, [](const BivariatePoly& p) { return p.weighted_scale(4, 6); });
    return euler_part - f.derivative().shifted(1) + f;
}

TruncatedSeries apply_Q2(const TruncatedSeries& f) {
    if (!f.is_exact() && f.order() < 3)
        throw InsufficientPrecision(
            "the double z-derivative needs order >= 3");
    const BivariatePoly six_g3 = BivariatePoly::term(6, 0, 1);
    const BivariatePoly third_g2_sq = BivariatePoly::term(rational(1, 3), 2, 0);
    const TruncatedSeries mix_part = map_coefficients(
        f, [&](const BivariatePoly& p) {
            return six_g3 * p.derivative_g2() + third_g2_sq * p.derivative_g3();
        });
    const TruncatedSeries second_derivative_part =
        f.derivative().derivative() * rational(-1, 2);
    const TruncatedSeries potential_part =
        (f * BivariatePoly::term(rational(-1, 24), 1, 0)).shifted(2);
    return mix_part + second_derivative_part + potential_part;
}

TruncatedSeries pe_laurent(long order) {
    if (order < -2)
        throw std::invalid_argument("order must be at least -2");
    if (order <= -2) return TruncatedSeries(-2, {}, order);
    // Highest k with 2k - 2 < order.
    const long k_max = (order + 1) / 2;
    const std::vector<BivariatePoly> c = pe_coefficients(k_max);
    std::vector<BivariatePoly> coefficients(
        static_cast<std::size_t>(order + 2));
    coefficients[0] = BivariatePoly::constant(1);  // z^-2
    for (long k = 2; k <= k_max; ++k)
        coefficients[static_cast<std::size_t>(2 * k)] =
            c[static_cast<std::size_t>(k)];
    return TruncatedSeries(-2, std::move(coefficients), order);
}

TruncatedSeries sigma_from_pe(long order) {
    if (order < 1)
        throw std::invalid_argument("series order must be positive");
    if (order == 1) return TruncatedSeries(1, {}, order);
    // (log sigma)'' = z^-2 - P, integrated twice with the constants pinned
    // by sigma(0) = 0, sigma'(0) = 1 and sigma odd.
    const long k_max = (order - 2) / 2;
    const std::vector<BivariatePoly> c = pe_coefficients(k_max);
    std::vector<BivariatePoly> h(
        k_max >= 2 ? static_cast<std::size_t>(2 * k_max - 3) : 0);
    for (long k = 2; k <= k_max; ++k)
        h[static_cast<std::size_t>(2 * k - 4)] =
            c[static_cast<std::size_t>(k)] *
            rational(-1, (2 * k - 1) * (2 * k));
    const TruncatedSeries exponent(4, std::move(h), order - 1);
    return TruncatedSeries::exp(exponent).shifted(1);
}

TruncatedSeries weierstrass_residual(long order) {
    const TruncatedSeries p = pe_laurent(order);
    const TruncatedSeries dp = p.derivative();
    const TruncatedSeries cubic = p * p * p;
    return dp * dp - cubic * mpq_class(4) +
           p * BivariatePoly::term(1, 1, 0) +
           TruncatedSeries::monomial(BivariatePoly::term(1, 0, 1), 0);
}

}  // namespace sigma
