#include "braidfloor/laurent.hpp"

#include "braidfloor/errors.hpp"

namespace braidfloor {

LaurentPoly::LaurentPoly(long constant) {
    if (constant != 0) coeffs_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(const mpz_class& constant) {
    if (constant != 0) coeffs_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(mpz_class coefficient, long exponent) {
    LaurentPoly p;
    if (coefficient != 0) p.coeffs_.emplace(exponent, std::move(coefficient));
    return p;
}

mpz_class LaurentPoly::coefficient(long exponent) const {
    const auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? mpz_class(0) : it->second;
}

long LaurentPoly::min_exp() const {
    if (is_zero()) throw internal_error("min_exp of the zero polynomial");
    return coeffs_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (is_zero()) throw internal_error("max_exp of the zero polynomial");
    return coeffs_.rbegin()->first;
}

mpz_class LaurentPoly::evaluate_at_one() const {
    mpz_class sum = 0;
    for (const auto& [e, c] : coeffs_) sum += c;
    return sum;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + k, c);
    return out;
}

void LaurentPoly::set(long exponent, mpz_class coefficient) {
    if (coefficient == 0)
        coeffs_.erase(exponent);
    else
        coeffs_[exponent] = std::move(coefficient);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) set(e, coefficient(e) + c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) set(e, coefficient(e) - c);
    return *this;
}

LaurentPoly operator-(const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [e, c] : p.coeffs_) out.coeffs_.emplace(e, -c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out;
    for (const auto& [e1, c1] : lhs.coeffs_)
        for (const auto& [e2, c2] : rhs.coeffs_) out.set(e1 + e2, out.coefficient(e1 + e2) + c1 * c2);
    return out;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : coeffs_) {
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const mpz_class magnitude = abs(c);
        if (e == 0) {
            out += magnitude.get_str();
        } else {
            if (magnitude != 1) {
                out += magnitude.get_str();
                out += '*';
            }
            out += 't';
            if (e != 1) out += '^' + std::to_string(e);
        }
    }
    return out;
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw internal_error("division by the zero polynomial");
    if (a.is_zero()) return {};

    // Shift both operands to ordinary polynomials and long-divide from the
    // top; a non-integer leading quotient or a stuck remainder means the
    // division is not exact.
    const long shift = a.min_exp() - b.min_exp();
    LaurentPoly rem = a.shifted(-a.min_exp());
    const LaurentPoly den = b.shifted(-b.min_exp());
    const long den_deg = den.max_exp();
    const mpz_class& den_lead = den.coefficients().rbegin()->second;

    LaurentPoly quotient;
    while (!rem.is_zero()) {
        const long deg = rem.max_exp();
        if (deg < den_deg)
            throw internal_error("inexact Laurent division (remainder " + rem.to_string() + ")");
        const mpz_class& lead = rem.coefficients().rbegin()->second;
        if (!mpz_divisible_p(lead.get_mpz_t(), den_lead.get_mpz_t()))
            throw internal_error("inexact Laurent division (leading coefficient)");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), lead.get_mpz_t(), den_lead.get_mpz_t());
        const LaurentPoly term = LaurentPoly::monomial(q, deg - den_deg);
        quotient += term;
        rem -= term * den;
    }
    return quotient.shifted(shift);
}

}  // namespace braidfloor
