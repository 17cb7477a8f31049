#pragma once

#include "virfusion/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace virfusion {

// Exact polynomial in two commuting variables. Used both for Zhu bimodule
// images in C[x,y] and for the (a,b) coefficients of Q-factors.
class BivariatePolynomial {
public:
    using Exponent = std::pair<int, int>;
    using Terms = std::map<Exponent, Rational>;

    BivariatePolynomial() = default;
    BivariatePolynomial(Rational constant);  // NOLINT(google-explicit-constructor)
    BivariatePolynomial(long constant) : BivariatePolynomial(Rational(constant)) {}  // NOLINT

    static BivariatePolynomial monomial(int i, int j, Rational coeff = Rational(1));
    static BivariatePolynomial x() { return monomial(1, 0); }
    static BivariatePolynomial y() { return monomial(0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(int i, int j) const;
    int total_degree() const;  // -1 for the zero polynomial
    // Sum of the terms of exactly the given total degree.
    BivariatePolynomial homogeneous_part(int degree) const;

    Rational evaluate(const Rational& x0, const Rational& y0) const;

    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    BivariatePolynomial& operator-=(const BivariatePolynomial& o);
    BivariatePolynomial& operator*=(const BivariatePolynomial& o);
    BivariatePolynomial& operator*=(const Rational& s);

    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
    friend BivariatePolynomial operator*(BivariatePolynomial a, const BivariatePolynomial& b) { return a *= b; }
    friend BivariatePolynomial operator*(BivariatePolynomial a, const Rational& s) { return a *= s; }
    friend BivariatePolynomial operator*(const Rational& s, BivariatePolynomial a) { return a *= s; }
    friend BivariatePolynomial operator-(const BivariatePolynomial& a) { return a * Rational(-1); }
    friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

    BivariatePolynomial pow(int e) const;

    // Human-readable form, e.g. "x^2 - 2*x*y + 1/8".
    std::string to_string(char var1 = 'x', char var2 = 'y') const;

private:
    void add_term(const Exponent& e, const Rational& c);
    Terms terms_;
};

// The exact value of f at (x0, y0).
inline Rational bivariate_evaluate(const BivariatePolynomial& f, const Rational& x0, const Rational& y0)
{
    return f.evaluate(x0, y0);
}

} // namespace virfusion
