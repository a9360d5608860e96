#include "sigma/valuation.hpp"

#include <chrono>
#include <stdexcept>

namespace sigma {

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (unsigned long d = 3; d <= p / d; d += 2)
        if (p % d == 0) return false;
    return true;
}

namespace {

void require_prime(unsigned long p) {
    if (!is_prime(p)) throw NotPrime(p);
}

}  // namespace

unsigned long nu_factorial(unsigned long n, unsigned long p) {
    require_prime(p);
    unsigned long total = 0;
    for (unsigned long q = n / p; q > 0; q /= p) total += q;
    return total;
}

unsigned long nu(const mpz_class& x, unsigned long p) {
    require_prime(p);
    if (x == 0) throw ZeroValuation();
    const mpz_class prime(static_cast<unsigned long>(p));
    mpz_class reduced;
    return mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
}

mpz_class b_value(long i, long j) {
    if (i < 0 || j < 0)
        throw std::invalid_argument("b is defined for non-negative indices");
    const unsigned long n = static_cast<unsigned long>(4 * i + 6 * j + 1);
    mpz_class numerator;
    mpz_fac_ui(numerator.get_mpz_t(), n);

    mpz_class denominator(1);
    mpz_mul_2exp(denominator.get_mpz_t(), denominator.get_mpz_t(),
                 static_cast<unsigned long>(3 * i + 4 * j));
    mpz_class power3;
    mpz_ui_pow_ui(power3.get_mpz_t(), 3, static_cast<unsigned long>(i + 2 * j));
    denominator *= power3;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(i));
    denominator *= fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(j));
    denominator *= fact;

    if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
        throw IntegralityViolation(i, j);
    mpz_class result;
    mpz_divexact(result.get_mpz_t(), numerator.get_mpz_t(),
                 denominator.get_mpz_t());
    return result;
}

long nu_b(long i, long j, unsigned long p) {
    require_prime(p);
    if (i < 0 || j < 0)
        throw std::invalid_argument("b is defined for non-negative indices");
    const unsigned long n = static_cast<unsigned long>(4 * i + 6 * j + 1);
    long result = static_cast<long>(nu_factorial(n, p)) -
                  static_cast<long>(nu_factorial(static_cast<unsigned long>(i), p)) -
                  static_cast<long>(nu_factorial(static_cast<unsigned long>(j), p));
    if (p == 2) result -= 3 * i + 4 * j;
    if (p == 3) result -= i + 2 * j;
    return result;
}

const char* to_string(MatchStatus status) {
    switch (status) {
        case MatchStatus::Match: return "Match";
        case MatchStatus::Mismatch2: return "Mismatch2";
        case MatchStatus::Mismatch3: return "Mismatch3";
        case MatchStatus::MismatchBoth: return "MismatchBoth";
        case MatchStatus::ZeroCoefficient: return "ZeroCoefficient";
    }
    return "Unknown";
}

ValuationReport hypothesis_check(const CoeffTable& table, Index idx) {
    const mpz_class& a = table.coefficient(idx);
    ValuationReport report;
    report.idx = idx;
    report.nu2_predicted = nu_b(idx.i, idx.j, 2);
    report.nu3_predicted = idx.j + nu_b(idx.i, idx.j, 3);
    if (a == 0) {
        report.status = MatchStatus::ZeroCoefficient;
        return report;
    }
    report.nu2_actual = static_cast<long>(nu(a, 2));
    report.nu3_actual = static_cast<long>(nu(a, 3));
    const bool two_ok = report.nu2_actual == report.nu2_predicted;
    const bool three_ok = report.nu3_actual == report.nu3_predicted;
    if (two_ok && three_ok)
        report.status = MatchStatus::Match;
    else if (!two_ok && three_ok)
        report.status = MatchStatus::Mismatch2;
    else if (two_ok && !three_ok)
        report.status = MatchStatus::Mismatch3;
    else
        report.status = MatchStatus::MismatchBoth;
    return report;
}

VerificationSummary verify_range(const CoeffTable& table, long max_i,
                                 long max_j) {
    const auto start = std::chrono::steady_clock::now();
    VerificationSummary summary;
    summary.max_i = max_i;
    summary.max_j = max_j;
    summary.total = (max_i + 1) * (max_j + 1);
    for (long j = 0; j <= max_j; ++j) {
        for (long i = 0; i <= max_i; ++i) {
            const ValuationReport report = hypothesis_check(table, {i, j});
            switch (report.status) {
                case MatchStatus::Match: ++summary.matches; break;
                case MatchStatus::Mismatch2: ++summary.mismatch2; break;
                case MatchStatus::Mismatch3: ++summary.mismatch3; break;
                case MatchStatus::MismatchBoth: ++summary.mismatch_both; break;
                case MatchStatus::ZeroCoefficient:
                    ++summary.zero_coefficients;
                    break;
            }
            if (report.status != MatchStatus::Match)
                summary.non_matches.push_back(report);
        }
    }
    summary.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return summary;
}

ResidualMatrix residual_report(const CoeffTable& table, unsigned long p,
                               long max_i, long max_j) {
    require_prime(p);
    ResidualMatrix matrix;
    matrix.prime = p;
    matrix.max_i = max_i;
    matrix.max_j = max_j;
    matrix.cells.resize(static_cast<std::size_t>((max_i + 1) * (max_j + 1)));
    for (long j = 0; j <= max_j; ++j) {
        for (long i = 0; i <= max_i; ++i) {
            const mpz_class& a = table.coefficient({i, j});
            auto& cell =
                matrix.cells[static_cast<std::size_t>(j * (max_i + 1) + i)];
            if (a == 0)
                cell = std::nullopt;  // valuation undefined; flagged per entry
            else
                cell = static_cast<long>(nu(a, p)) - nu_b(i, j, p);
        }
    }
    return matrix;
}

}  // namespace sigma
