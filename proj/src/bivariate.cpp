#include "virfusion/bivariate.hpp"

#include <algorithm>
#include <vector>

namespace virfusion {

BivariatePolynomial::BivariatePolynomial(Rational constant)
{
    add_term({0, 0}, constant);
}

BivariatePolynomial BivariatePolynomial::monomial(int i, int j, Rational coeff)
{
    BivariatePolynomial p;
    p.add_term({i, j}, coeff);
    return p;
}

void BivariatePolynomial::add_term(const Exponent& e, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Rational BivariatePolynomial::coefficient(int i, int j) const
{
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

int BivariatePolynomial::total_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.first + e.second);
    return d;
}

BivariatePolynomial BivariatePolynomial::homogeneous_part(int degree) const
{
    BivariatePolynomial p;
    for (const auto& [e, c] : terms_)
        if (e.first + e.second == degree)
            p.terms_.emplace(e, c);
    return p;
}

Rational BivariatePolynomial::evaluate(const Rational& x0, const Rational& y0) const
{
    // Cache powers; exponents are small and dense in practice.
    std::vector<Rational> xp{Rational(1)}, yp{Rational(1)};
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        while (static_cast<int>(xp.size()) <= e.first)
            xp.push_back(xp.back() * x0);
        while (static_cast<int>(yp.size()) <= e.second)
            yp.push_back(yp.back() * y0);
        sum += c * xp[e.first] * yp[e.second];
    }
    return sum;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& o)
{
    BivariatePolynomial r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
    *this = std::move(r);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const Rational& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

BivariatePolynomial BivariatePolynomial::pow(int e) const
{
    BivariatePolynomial r(1);
    for (int k = 0; k < e; ++k)
        r *= *this;
    return r;
}

std::string BivariatePolynomial::to_string(char var1, char var2) const
{
    if (terms_.empty())
        return "0";
    // Highest total degree first, then by descending power of the first variable.
    std::vector<std::pair<Exponent, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db)
            return da > db;
        return a.first.first > b.first.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        Rational mag = c.abs();
        if (first)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        first = false;
        std::string mono;
        auto var = [&](char v, int p) {
            if (p == 0)
                return;
            if (!mono.empty())
                mono += "*";
            mono += v;
            if (p > 1)
                mono += "^" + std::to_string(p);
        };
        var(var1, e.first);
        var(var2, e.second);
        if (mono.empty())
            out += mag.to_string();
        else if (mag == Rational(1))
            out += mono;
        else
            out += mag.to_string() + "*" + mono;
    }
    return out;
}

} // namespace virfusion
