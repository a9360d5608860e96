#ifndef SIGMA_TRUNCATED_SERIES_HPP
#define SIGMA_TRUNCATED_SERIES_HPP

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "sigma/bivariate_poly.hpp"
#include "sigma/errors.hpp"

namespace sigma {

// Truncated Laurent series in z with BivariatePoly coefficients and explicit
// precision: every power below `order` is exact, everything at or beyond it
// is unknown. `lowest_power` marks the first possibly-nonzero power; powers
// below it are exactly zero. A default-constructed series is the exact zero
// series, whose order is the infinity sentinel.
class TruncatedSeries {
public:
    static constexpr long infinite_order = std::numeric_limits<long>::max();

    TruncatedSeries() = default;

    // Coefficients for powers lowest_power, lowest_power + 1, ... They must
    // all lie below `order`.
    TruncatedSeries(long lowest_power, std::vector<BivariatePoly> coefficients,
                    long order);

    // Exact single-term series c * z^power.
    static TruncatedSeries monomial(const BivariatePoly& c, long power);
    static TruncatedSeries monomial(const BivariatePoly& c, long power,
                                    long order);

    long lowest_power() const { return lowest_power_; }
    long order() const { return order_; }
    bool is_exact() const { return order_ == infinite_order; }

    // No nonzero coefficient anywhere below the order.
    bool is_zero() const { return coefficients_.empty(); }

    // Exact zero below lowest_power; throws InsufficientPrecision at or
    // beyond the order.
    const BivariatePoly& coeff(long power) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a,
                                     const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a,
                                     const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a);

    // Laurent precision rule: order(f*g) = min(lowest(f) + order(g),
    // lowest(g) + order(f)).
    friend TruncatedSeries operator*(const TruncatedSeries& a,
                                     const TruncatedSeries& b);

    // Multiplication by exact z-free factors keeps the order.
    friend TruncatedSeries operator*(const TruncatedSeries& a,
                                     const mpq_class& scalar);
    friend TruncatedSeries operator*(const TruncatedSeries& a,
                                     const BivariatePoly& p);

    TruncatedSeries shifted(long dz) const;       // * z^dz
    TruncatedSeries truncated(long new_order) const;
    TruncatedSeries derivative() const;           // d/dz, costs one order

    // Term-wise exp for series with vanishing constant term (lowest >= 1).
    static TruncatedSeries exp(const TruncatedSeries& u);
    // Term-wise log for series with constant term exactly 1.
    static TruncatedSeries log(const TruncatedSeries& g);

    // Applies fn to every tracked coefficient; order and offsets unchanged.
    friend TruncatedSeries map_coefficients(
        const TruncatedSeries& f,
        const std::function<BivariatePoly(const BivariatePoly&)>& fn);

    // True when both series are exact through `below` and agree there.
    bool agrees_with(const TruncatedSeries& other, long below) const;

    // One line per tracked power: "z^<k>: <polynomial>".
    std::string dump() const;

    friend bool operator==(const TruncatedSeries&,
                           const TruncatedSeries&) = default;

private:
    void normalize();

    long lowest_power_ = 0;
    std::vector<BivariatePoly> coefficients_;
    long order_ = infinite_order;
};

}  // namespace sigma

#endif  // SIGMA_TRUNCATED_SERIES_HPP
