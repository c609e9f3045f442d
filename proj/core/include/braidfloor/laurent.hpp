#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace braidfloor {

/// Integer-coefficient Laurent polynomial in one variable t, stored sparsely
/// as exponent -> coefficient with no zero coefficients; the zero polynomial
/// is the empty map. Coefficients are arbitrary precision (Burau products
/// overflow fixed-width integers quickly).
class LaurentPoly {
public:
    using Coeffs = std::map<long, mpz_class>;

    LaurentPoly() = default;
    LaurentPoly(long constant);  // NOLINT(google-explicit-constructor): ring constants
    explicit LaurentPoly(const mpz_class& constant);

    static LaurentPoly monomial(mpz_class coefficient, long exponent);
    static LaurentPoly variable() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    const Coeffs& coefficients() const { return coeffs_; }
    mpz_class coefficient(long exponent) const;

    /// Lowest / highest stored exponent; both require a nonzero polynomial.
    long min_exp() const;
    long max_exp() const;
    long span() const { return max_exp() - min_exp(); }

    mpz_class evaluate_at_one() const;

    /// Multiplication by the unit t^k.
    LaurentPoly shifted(long k) const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator-(const LaurentPoly& p);
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Rendering with ascending exponents, explicit signs and caret
    /// exponents, e.g. `1 - 3*t + t^2` or `-2*t^-1 + 1`. Zero renders as `0`.
    std::string to_string() const;

private:
    void set(long exponent, mpz_class coefficient);
    Coeffs coeffs_;
};

/// Exact quotient a / b in the Laurent ring. Throws internal_error when b is
/// zero or the division leaves a remainder; every call site divides
/// quantities that are divisible by theorem, so failure is a bug detector.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace braidfloor
