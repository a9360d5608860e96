#include "sigma/truncated_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace sigma {

namespace {

const BivariatePoly zero_poly;

long sat_add(long a, long b) {
    if (a == TruncatedSeries::infinite_order ||
        b == TruncatedSeries::infinite_order)
        return TruncatedSeries::infinite_order;
    return a + b;
}

}  // namespace

TruncatedSeries::TruncatedSeries(long lowest_power,
                                 std::vector<BivariatePoly> coefficients,
                                 long order)
    : lowest_power_(lowest_power),
      coefficients_(std::move(coefficients)),
      order_(order) {
    if (order_ != infinite_order &&
        lowest_power_ + static_cast<long>(coefficients_.size()) > order_)
        throw std::invalid_argument(
            "series coefficients extend beyond the declared order");
    normalize();
}

TruncatedSeries TruncatedSeries::monomial(const BivariatePoly& c, long power) {
    return monomial(c, power, infinite_order);
}

TruncatedSeries TruncatedSeries::monomial(const BivariatePoly& c, long power,
                                          long order) {
    return TruncatedSeries(power, {c}, order);
}

void TruncatedSeries::normalize() {
    while (!coefficients_.empty() && coefficients_.back().is_zero())
        coefficients_.pop_back();
    std::size_t leading = 0;
    while (leading < coefficients_.size() && coefficients_[leading].is_zero())
        ++leading;
    if (leading > 0) {
        coefficients_.erase(coefficients_.begin(),
                            coefficients_.begin() +
                                static_cast<std::ptrdiff_t>(leading));
        lowest_power_ += static_cast<long>(leading);
    }
    if (coefficients_.empty())
        lowest_power_ = order_ == infinite_order ? 0 : order_;
}

const BivariatePoly& TruncatedSeries::coeff(long power) const {
    if (order_ != infinite_order && power >= order_)
        throw InsufficientPrecision("coefficient of z^" +
                                    std::to_string(power) +
                                    " is beyond the tracked order " +
                                    std::to_string(order_));
    if (power < lowest_power_) return zero_poly;
    const std::size_t idx = static_cast<std::size_t>(power - lowest_power_);
    return idx < coefficients_.size() ? coefficients_[idx] : zero_poly;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const long order = std::min(a.order_, b.order_);
    const long lo = std::min(a.lowest_power_, b.lowest_power_);
    const long stored_end =
        std::max(a.lowest_power_ + static_cast<long>(a.coefficients_.size()),
                 b.lowest_power_ + static_cast<long>(b.coefficients_.size()));
    const long hi = std::max(lo, std::min(order, stored_end));
    std::vector<BivariatePoly> coefficients(static_cast<std::size_t>(hi - lo));
    for (long k = lo; k < hi; ++k)
        coefficients[static_cast<std::size_t>(k - lo)] = a.coeff(k) + b.coeff(k);
    return TruncatedSeries(lo, std::move(coefficients), order);
}

TruncatedSeries operator-(const TruncatedSeries& a) {
    return map_coefficients(a,
                            [](const BivariatePoly& p) { return -p; });
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a + (-b);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if ((a.is_zero() && a.is_exact()) || (b.is_zero() && b.is_exact()))
        return TruncatedSeries();
    const long order = std::min(sat_add(a.lowest_power_, b.order_),
                                sat_add(b.lowest_power_, a.order_));
    const long lo = a.lowest_power_ + b.lowest_power_;
    const std::size_t na = a.coefficients_.size();
    const std::size_t nb = b.coefficients_.size();
    const long stored =
        (na == 0 || nb == 0) ? 0 : static_cast<long>(na + nb - 1);
    const long hi =
        order == TruncatedSeries::infinite_order
            ? lo + stored
            : std::max(lo, std::min(order, lo + stored));
    std::vector<BivariatePoly> coefficients(static_cast<std::size_t>(hi - lo));
    for (std::size_t ka = 0; ka < na; ++ka) {
        if (a.coefficients_[ka].is_zero()) continue;
        for (std::size_t kb = 0; kb < nb; ++kb) {
            const long power = lo + static_cast<long>(ka + kb);
            if (power >= hi) break;
            if (b.coefficients_[kb].is_zero()) continue;
            coefficients[ka + kb] += a.coefficients_[ka] * b.coefficients_[kb];
        }
    }
    return TruncatedSeries(lo, std::move(coefficients), order);
}

TruncatedSeries operator*(const TruncatedSeries& a, const mpq_class& scalar) {
    if (scalar == 0) return TruncatedSeries();
    return map_coefficients(
        a, [&scalar](const BivariatePoly& p) { return p * scalar; });
}

TruncatedSeries operator*(const TruncatedSeries& a, const BivariatePoly& p) {
    if (p.is_zero()) return TruncatedSeries();
    return map_coefficients(a,
                            [&p](const BivariatePoly& c) { return c * p; });
}

TruncatedSeries TruncatedSeries::shifted(long dz) const {
    TruncatedSeries result(*this);
    result.lowest_power_ += dz;
    result.order_ = sat_add(result.order_, dz);
    result.normalize();
    return result;
}

TruncatedSeries TruncatedSeries::truncated(long new_order) const {
    const long order = std::min(order_, new_order);
    std::vector<BivariatePoly> coefficients;
    for (long k = lowest_power_;
         k < std::min(order, lowest_power_ +
                                 static_cast<long>(coefficients_.size()));
         ++k)
        coefficients.push_back(coeff(k));
    return TruncatedSeries(lowest_power_, std::move(coefficients), order);
}

TruncatedSeries TruncatedSeries::derivative() const {
    const long order =
        order_ == infinite_order ? infinite_order : order_ - 1;
    std::vector<BivariatePoly> coefficients;
    coefficients.reserve(coefficients_.size());
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
        const long power = lowest_power_ + static_cast<long>(k);
        coefficients.push_back(coefficients_[k] * mpq_class(power));
    }
    return TruncatedSeries(lowest_power_ - 1, std::move(coefficients), order);
}

TruncatedSeries TruncatedSeries::exp(const TruncatedSeries& u) {
    if (u.is_zero() && u.is_exact())
        return monomial(BivariatePoly::constant(1), 0);
    if (u.is_exact())
        throw std::invalid_argument(
            "exp of an exact nonzero series has no finite representation");
    if (u.lowest_power_ < 1)
        throw std::domain_error("exp requires a vanishing constant term");
    const long order = u.order_;
    std::vector<BivariatePoly> e(static_cast<std::size_t>(order));
    e[0] = BivariatePoly::constant(1);
    for (long n = 1; n < order; ++n) {
        BivariatePoly acc;
        for (long m = 1; m <= n; ++m) {
            const BivariatePoly& um = u.coeff(m);
            if (um.is_zero()) continue;
            const BivariatePoly& prev = e[static_cast<std::size_t>(n - m)];
            if (prev.is_zero()) continue;
            acc += um * prev * mpq_class(m);
        }
        e[static_cast<std::size_t>(n)] = acc * rational(1, n);
    }
    return TruncatedSeries(0, std::move(e), order);
}

TruncatedSeries TruncatedSeries::log(const TruncatedSeries& g) {
    const bool exact_one = g.is_exact() && g.lowest_power_ == 0 &&
                           g.coefficients_.size() == 1 &&
                           g.coefficients_[0] == BivariatePoly::constant(1);
    if (exact_one) return TruncatedSeries();
    if (g.is_exact())
        throw std::invalid_argument(
            "log of an exact series has no finite representation");
    if (g.coeff(0) != BivariatePoly::constant(1))
        throw std::domain_error("log requires constant term 1");
    const long order = g.order_;
    std::vector<BivariatePoly> l(static_cast<std::size_t>(order));
    for (long n = 1; n < order; ++n) {
        BivariatePoly acc;
        for (long m = 1; m < n; ++m) {
            const BivariatePoly& lm = l[static_cast<std::size_t>(m)];
            if (lm.is_zero()) continue;
            const BivariatePoly& gk = g.coeff(n - m);
            if (gk.is_zero()) continue;
            acc += lm * gk * mpq_class(m);
        }
        l[static_cast<std::size_t>(n)] = g.coeff(n) - acc * rational(1, n);
    }
    return TruncatedSeries(0, std::move(l), order);
}

TruncatedSeries map_coefficients(
    const TruncatedSeries& f,
    const std::function<BivariatePoly(const BivariatePoly&)>& fn) {
    std::vector<BivariatePoly> coefficients;
    coefficients.reserve(f.coefficients_.size());
    for (const BivariatePoly& p : f.coefficients_) coefficients.push_back(fn(p));
    return TruncatedSeries(f.lowest_power_, std::move(coefficients), f.order_);
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& other,
                                  long below) const {
    if (order_ < below || other.order_ < below)
        throw InsufficientPrecision(
            "comparison through z^" + std::to_string(below - 1) +
            " exceeds the tracked precision");
    for (long k = std::min(lowest_power_, other.lowest_power_); k < below; ++k)
        if (coeff(k) != other.coeff(k)) return false;
    return true;
}

std::string TruncatedSeries::dump() const {
    const long end =
        order_ == infinite_order
            ? lowest_power_ + static_cast<long>(coefficients_.size())
            : order_;
    std::string out;
    for (long k = lowest_power_; k < end; ++k) {
        out += "z^" + std::to_string(k) + ": " + coeff(k).str() + "\n";
    }
    return out;
}

}  // namespace sigma
