#include "virfusion/rational.hpp"

#include <stdexcept>

namespace virfusion {

Rational::Rational(long num, long den) : value_(num, den)
{
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den)
{
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw std::invalid_argument("Rational: empty string");
    auto slash = s.find('/');
    auto parse_int = [&](const std::string& part) {
        mpz_class z;
        std::string digits = part;
        if (!digits.empty() && digits.front() == '+')
            digits.erase(digits.begin());
        if (digits.empty() || z.set_str(digits, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        return z;
    };
    if (slash == std::string::npos)
        return Rational(parse_int(s));
    mpz_class num = parse_int(s.substr(0, slash));
    mpz_class den = parse_int(s.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::pow(int e) const
{
    if (e < 0)
        return Rational(1) / pow(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

std::optional<Rational> Rational::sqrt_exact() const
{
    if (sign() < 0)
        return std::nullopt;
    const mpz_class& num = value_.get_num();
    const mpz_class& den = value_.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    return Rational(sqrt(num), sqrt(den));
}

std::string Rational::to_string() const
{
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational binomial(long n, int k)
{
    if (k < 0)
        return Rational(0);
    Rational r(1);
    for (int j = 0; j < k; ++j)
        r *= Rational(n - j, j + 1);
    return r;
}

} // namespace virfusion
