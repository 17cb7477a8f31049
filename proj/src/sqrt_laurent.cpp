#include "virfusion/sqrt_laurent.hpp"

namespace virfusion {

SqrtLaurent::SqrtLaurent(BivariatePolynomial constant)
{
    add_term(0, constant);
}

SqrtLaurent SqrtLaurent::power(int half_exponent, BivariatePolynomial coeff)
{
    SqrtLaurent s;
    s.add_term(half_exponent, coeff);
    return s;
}

void SqrtLaurent::add_term(int e, const BivariatePolynomial& c)
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

bool SqrtLaurent::is_xi_integral() const
{
    for (const auto& [e, c] : terms_)
        if (e % 2 != 0)
            return false;
    return true;
}

SqrtLaurent SqrtLaurent::specialize_ab(const Rational& a0, const Rational& b0) const
{
    SqrtLaurent s;
    for (const auto& [e, c] : terms_)
        s.add_term(e, BivariatePolynomial(c.evaluate(a0, b0)));
    return s;
}

Rational SqrtLaurent::specialize(const Rational& a0, const Rational& b0, const Rational& xi0) const
{
    if (xi0.is_zero())
        throw std::domain_error("SqrtLaurent: xi must be nonzero");
    std::optional<Rational> root;
    bool root_checked = false;
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational v = c.evaluate(a0, b0);
        if (v.is_zero())
            continue;
        if (e % 2 == 0) {
            sum += v * xi0.pow(e / 2);
            continue;
        }
        if (!root_checked) {
            root = xi0.sqrt_exact();
            root_checked = true;
        }
        if (!root)
            throw OddHalfPower("xi^{" + std::to_string(e) + "/2} survives at xi = " + xi0.to_string()
                               + ", which is not a rational square");
        sum += v * root->pow(e);
    }
    return sum;
}

SqrtLaurent& SqrtLaurent::operator+=(const SqrtLaurent& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

SqrtLaurent& SqrtLaurent::operator-=(const SqrtLaurent& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

SqrtLaurent& SqrtLaurent::operator*=(const SqrtLaurent& o)
{
    SqrtLaurent r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term(e1 + e2, c1 * c2);
    *this = std::move(r);
    return *this;
}

std::string SqrtLaurent::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty())
            out += " + ";
        out += "(" + it->second.to_string('a', 'b') + ")";
        if (it->first != 0) {
            out += "*xi^";
            out += it->first % 2 == 0 ? std::to_string(it->first / 2) : "(" + std::to_string(it->first) + "/2)";
        }
    }
    return out;
}

} // namespace virfusion
