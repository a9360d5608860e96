#ifndef SIGMA_BIVARIATE_POLY_HPP
#define SIGMA_BIVARIATE_POLY_HPP

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <utility>

namespace sigma {

// Reduced rational from a num/den pair (mpq_class does not canonicalize on
// construction).
inline mpq_class rational(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

inline mpq_class rational(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num);
    q /= mpq_class(den);
    return q;
}

// Sparse exact-rational polynomial in the two curve parameters g2, g3.
// Always canonical: no zero coefficients stored, fractions reduced with
// positive denominator (mpq invariant). Terms are kept in graded-lex order
// (total degree descending, then g2-exponent descending), which is also the
// printing order.
class BivariatePoly {
public:
    struct Exponents {
        long e2 = 0;
        long e3 = 0;

        friend bool operator==(const Exponents&, const Exponents&) = default;
    };

    BivariatePoly() = default;

    static BivariatePoly constant(const mpq_class& value);
    static BivariatePoly term(const mpq_class& coefficient, long e2, long e3);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Zero when the monomial is absent.
    const mpq_class& coeff(long e2, long e3) const;

    BivariatePoly& operator+=(const BivariatePoly& other);
    BivariatePoly& operator-=(const BivariatePoly& other);
    BivariatePoly& operator*=(const mpq_class& scalar);

    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) {
        a += b;
        return a;
    }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) {
        a -= b;
        return a;
    }
    friend BivariatePoly operator*(const BivariatePoly& a,
                                   const BivariatePoly& b);
    friend BivariatePoly operator*(BivariatePoly a, const mpq_class& scalar) {
        a *= scalar;
        return a;
    }
    friend BivariatePoly operator-(const BivariatePoly& a);

    BivariatePoly derivative_g2() const;
    BivariatePoly derivative_g3() const;

    // Term-wise Euler-type scaling: each monomial g2^a g3^b picks up the
    // factor w2*a + w3*b. Equals w2 g2 d/dg2 + w3 g3 d/dg3, exactly.
    BivariatePoly weighted_scale(long w2, long w3) const;

    void for_each_term(
        const std::function<void(Exponents, const mpq_class&)>& fn) const;

    // Graded-lex term order, rationals rendered as p/q.
    std::string str() const;

    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

private:
    struct GradedLex {
        bool operator()(const Exponents& a, const Exponents& b) const {
            const long da = a.e2 + a.e3;
            const long db = b.e2 + b.e3;
            if (da != db) return da > db;
            return a.e2 > b.e2;
        }
    };

    void add_term(const Exponents& exponents, const mpq_class& coefficient);

    std::map<Exponents, mpq_class, GradedLex> terms_;
};

}  // namespace sigma

#endif  // SIGMA_BIVARIATE_POLY_HPP
