#ifndef SIGMA_VALUATION_HPP
#define SIGMA_VALUATION_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "sigma/coeff_table.hpp"
#include "sigma/errors.hpp"

namespace sigma {

// Deterministic trial division; fine for the single-digit primes used here.
bool is_prime(unsigned long p);

// nu_p(n!) by Legendre's formula, sum over k of floor(n / p^k).
unsigned long nu_factorial(unsigned long n, unsigned long p);

// Largest k with p^k dividing x. Throws ZeroValuation for x = 0.
unsigned long nu(const mpz_class& x, unsigned long p);

// The reference integer (4i+6j+1)! / (2^(3i+4j) 3^(i+2j) i! j!), built
// explicitly. The division is exact for every i, j >= 0; a remainder throws
// IntegralityViolation.
mpz_class b_value(long i, long j);

// Valuation of b(i, j) in closed form, straight from Legendre sums. Never
// materializes the factorials, so it stays cheap for large indices.
long nu_b(long i, long j, unsigned long p);

enum class MatchStatus {
    Match,
    Mismatch2,
    Mismatch3,
    MismatchBoth,
    ZeroCoefficient,
};

const char* to_string(MatchStatus status);

// Comparison of the measured 2- and 3-adic valuations of one coefficient
// against the predicted values nu_2(b) and j + nu_3(b). Actual valuations
// are -1 for a zero coefficient (status ZeroCoefficient).
struct ValuationReport {
    Index idx;
    long nu2_actual = -1;
    long nu3_actual = -1;
    long nu2_predicted = 0;
    long nu3_predicted = 0;
    MatchStatus status = MatchStatus::Match;
};

ValuationReport hypothesis_check(const CoeffTable& table, Index idx);

struct VerificationSummary {
    long max_i = 0;
    long max_j = 0;
    long total = 0;
    long matches = 0;
    long mismatch2 = 0;
    long mismatch3 = 0;
    long mismatch_both = 0;
    long zero_coefficients = 0;
    std::vector<ValuationReport> non_matches;
    double elapsed_seconds = 0.0;

    bool all_match() const { return matches == total; }
};

// One report per index of the rectangle [0, max_i] x [0, max_j].
VerificationSummary verify_range(const CoeffTable& table, long max_i,
                                 long max_j);

// Exploratory residual nu_p(a) - nu_p(b) over the rectangle; no pass/fail
// semantics attached. Cells are empty where the coefficient is zero and the
// valuation undefined.
struct ResidualMatrix {
    unsigned long prime = 2;
    long max_i = 0;
    long max_j = 0;
    std::vector<std::optional<long>> cells;  // row-major, rows indexed by j

    const std::optional<long>& at(long i, long j) const {
        return cells[static_cast<std::size_t>(j * (max_i + 1) + i)];
    }
};

ResidualMatrix residual_report(const CoeffTable& table, unsigned long p,
                               long max_i, long max_j);

}  // namespace sigma

#endif  // SIGMA_VALUATION_HPP
