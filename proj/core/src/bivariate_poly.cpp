#include "sigma/bivariate_poly.hpp"

namespace sigma {

namespace {

const mpq_class zero_coeff{0};

std::string monomial_str(BivariatePoly::Exponents e) {
    std::string out;
    if (e.e2 > 0) {
        out += "g2";
        if (e.e2 > 1) out += "^" + std::to_string(e.e2);
    }
    if (e.e3 > 0) {
        if (!out.empty()) out += "*";
        out += "g3";
        if (e.e3 > 1) out += "^" + std::to_string(e.e3);
    }
    return out;
}

std::string term_str(const mpq_class& coefficient,
                     BivariatePoly::Exponents e) {
    const std::string mono = monomial_str(e);
    if (mono.empty()) return coefficient.get_str();
    if (coefficient == 1) return mono;
    if (coefficient == -1) return "-" + mono;
    return coefficient.get_str() + "*" + mono;
}

}  // namespace

BivariatePoly BivariatePoly::constant(const mpq_class& value) {
    return term(value, 0, 0);
}

BivariatePoly BivariatePoly::term(const mpq_class& coefficient, long e2,
                                  long e3) {
    BivariatePoly p;
    p.add_term({e2, e3}, coefficient);
    return p;
}

const mpq_class& BivariatePoly::coeff(long e2, long e3) const {
    const auto it = terms_.find({e2, e3});
    return it == terms_.end() ? zero_coeff : it->second;
}

void BivariatePoly::add_term(const Exponents& exponents,
                             const mpq_class& coefficient) {
    if (coefficient == 0) return;
    const auto [it, inserted] = terms_.emplace(exponents, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other) {
    for (const auto& [exponents, coefficient] : other.terms_)
        add_term(exponents, coefficient);
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& other) {
    for (const auto& [exponents, coefficient] : other.terms_)
        add_term(exponents, -coefficient);
    return *this;
}

BivariatePoly& BivariatePoly::operator*=(const mpq_class& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [exponents, coefficient] : terms_) coefficient *= scalar;
    return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly product;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            product.add_term({ea.e2 + eb.e2, ea.e3 + eb.e3}, ca * cb);
    return product;
}

BivariatePoly operator-(const BivariatePoly& a) {
    BivariatePoly negated;
    for (const auto& [exponents, coefficient] : a.terms_)
        negated.terms_.emplace(exponents, -coefficient);
    return negated;
}

BivariatePoly BivariatePoly::derivative_g2() const {
    BivariatePoly result;
    for (const auto& [e, c] : terms_)
        if (e.e2 > 0) result.add_term({e.e2 - 1, e.e3}, c * e.e2);
    return result;
}

BivariatePoly BivariatePoly::derivative_g3() const {
    BivariatePoly result;
    for (const auto& [e, c] : terms_)
        if (e.e3 > 0) result.add_term({e.e2, e.e3 - 1}, c * e.e3);
    return result;
}

BivariatePoly BivariatePoly::weighted_scale(long w2, long w3) const {
    BivariatePoly result;
    for (const auto& [e, c] : terms_)
        result.add_term(e, c * (w2 * e.e2 + w3 * e.e3));
    return result;
}

void BivariatePoly::for_each_term(
    const std::function<void(Exponents, const mpq_class&)>& fn) const {
    for (const auto& [exponents, coefficient] : terms_)
        fn(exponents, coefficient);
}

std::string BivariatePoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [exponents, coefficient] : terms_) {
        if (first) {
            out = term_str(coefficient, exponents);
            first = false;
            continue;
        }
        if (coefficient < 0) {
            out += " - " + term_str(-coefficient, exponents);
        } else {
            out += " + " + term_str(coefficient, exponents);
        }
    }
    return out;
}

}  // namespace sigma
