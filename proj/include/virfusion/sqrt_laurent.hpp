#pragma once

#include "virfusion/bivariate.hpp"
#include "virfusion/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace virfusion {

// A bare xi^{1/2} survived specialization at a xi that is not a rational square.
struct OddHalfPower : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Laurent polynomial in xi^{1/2} whose coefficients are polynomials in (a, b).
// Exponents are stored as integers in units of xi^{1/2}: key 2 is xi, key -1 is xi^{-1/2}.
class SqrtLaurent {
public:
    using Terms = std::map<int, BivariatePolynomial>;

    SqrtLaurent() = default;
    SqrtLaurent(BivariatePolynomial constant);  // NOLINT(google-explicit-constructor)
    SqrtLaurent(long constant) : SqrtLaurent(BivariatePolynomial(constant)) {}  // NOLINT

    // coeff * xi^{half_exponent/2}
    static SqrtLaurent power(int half_exponent, BivariatePolynomial coeff = BivariatePolynomial(1));
    static SqrtLaurent a() { return SqrtLaurent(BivariatePolynomial::x()); }
    static SqrtLaurent b() { return SqrtLaurent(BivariatePolynomial::y()); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // True iff every stored exponent is even (no half-integer power of xi).
    bool is_xi_integral() const;

    // Substitute rational a0, b0; the xi dependence is kept.
    SqrtLaurent specialize_ab(const Rational& a0, const Rational& b0) const;
    // Exact value at (a0, b0, xi0). Throws OddHalfPower when an odd exponent
    // carries a nonzero coefficient and xi0 is not the square of a rational.
    Rational specialize(const Rational& a0, const Rational& b0, const Rational& xi0) const;

    SqrtLaurent& operator+=(const SqrtLaurent& o);
    SqrtLaurent& operator-=(const SqrtLaurent& o);
    SqrtLaurent& operator*=(const SqrtLaurent& o);

    friend SqrtLaurent operator+(SqrtLaurent l, const SqrtLaurent& r) { return l += r; }
    friend SqrtLaurent operator-(SqrtLaurent l, const SqrtLaurent& r) { return l -= r; }
    friend SqrtLaurent operator*(SqrtLaurent l, const SqrtLaurent& r) { return l *= r; }
    friend bool operator==(const SqrtLaurent&, const SqrtLaurent&) = default;

    std::string to_string() const;

private:
    void add_term(int e, const BivariatePolynomial& c);
    Terms terms_;
};

inline Rational sqrt_laurent_specialize(const SqrtLaurent& g, const Rational& a0, const Rational& b0,
                                        const Rational& xi0)
{
    return g.specialize(a0, b0, xi0);
}

} // namespace virfusion
