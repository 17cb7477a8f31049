#include "virfusion/zhu.hpp"

#include <set>

namespace virfusion {

ZhuClass zhu_reduce(const VermaVector& v)
{
    const Rational& h = v.params().h;
    BivariatePolynomial total;
    for (const auto& [word, coeff] : v.terms()) {
        BivariatePolynomial image(coeff);
        int tail_grade = word.size();
        for (int a : word.parts()) {
            tail_grade -= a;
            BivariatePolynomial factor = BivariatePolynomial::monomial(0, 1, Rational(a))
                                       - BivariatePolynomial::x() + BivariatePolynomial(h + Rational(tail_grade));
            if (a % 2 != 0)
                factor *= Rational(-1);
            image *= factor;
        }
        total += image;
    }
    return {std::move(total), v.params()};
}

std::pair<VermaVector, VermaVector> left_right_omega(const VermaVector& v)
{
    VermaModule module(v.params());
    VermaVector l2 = module.apply(-2, v);
    VermaVector l1 = module.apply(-1, v);
    VermaVector l0 = module.apply(0, v);
    return {l2 + Rational(2) * l1 + l0, l2 + l1};
}

std::vector<ZhuClass> singular_image(const ModuleLabel& label, SingularMemo* memo)
{
    std::vector<ZhuClass> out;
    for (const auto& gen : maximal_submodule_generators(label, memo))
        out.push_back(zhu_reduce(gen.vector));
    return out;
}

int fz_upper_bound(const ModuleLabel& w1, const ModuleLabel& w2, const ModuleLabel& w3, SingularMemo* memo)
{
    const Rational h1 = params_of(w1).h;
    const Rational h2 = params_of(w2).h;
    const Rational h3 = params_of(w3).h;
    for (const auto& img : singular_image(w1, memo))
        if (!img.poly.evaluate(h3, h2).is_zero())
            return 0;
    for (const auto& img : singular_image(w2, memo))
        if (!img.poly.evaluate(h3, h1).is_zero())
            return 0;
    return 1;
}

QFactorSpec QFactorSpec::make(int alpha, int beta, int k, int l)
{
    if (alpha < 1 || beta < 1 || k < 0 || k >= alpha || l < 0 || l >= beta)
        throw std::invalid_argument("QFactorSpec: need alpha, beta >= 1, 0 <= k < alpha, 0 <= l < beta");
    return {alpha, beta, k, l};
}

namespace {

// m xi^{1/2} - n xi^{-1/2}
SqrtLaurent root_pair(long m, long n)
{
    return SqrtLaurent::power(1, BivariatePolynomial(Rational(m))) - SqrtLaurent::power(-1, BivariatePolynomial(Rational(n)));
}

} // namespace

SqrtLaurent q_factor(const QFactorSpec& spec)
{
    const long al = spec.alpha, be = spec.beta, k = spec.k, l = spec.l;
    const SqrtLaurent diff = SqrtLaurent::b() - SqrtLaurent::a();
    SqrtLaurent first = diff - root_pair(k, l) * root_pair(al - k, be - l);
    SqrtLaurent second = diff - root_pair(k + 1, l + 1) * root_pair(al - k - 1, be - l - 1);
    SqrtLaurent braced = root_pair(al - 2 * k - 1, be - 2 * l - 1);
    return first * second + braced * braced * SqrtLaurent::a();
}

Rational p_squared(int alpha, int beta, const Rational& a0, const Rational& b0, const Rational& xi0)
{
    if (xi0.is_zero())
        throw std::domain_error("p_squared: xi must be nonzero");
    SqrtLaurent product(1);
    for (int k = 0; k < alpha; ++k)
        for (int l = 0; l < beta; ++l)
            product *= q_factor(QFactorSpec::make(alpha, beta, k, l)).specialize_ab(a0, b0);
    return product.specialize(Rational(0), Rational(0), xi0);
}

bool product_condition(int q, int i1, int s1, int i2, int s2, const Rational& h3)
{
    for (int k = 0; k < i1; ++k)
        for (int l = 0; l < s1; ++l)
            if (h3 == weight_c1q(q, i1 + i2 - 2 * k - 1, s1 + s2 - 2 * l - 1))
                return true;
    return false;
}

bool equivalence_check(int q, int i1, int s1, int i2, int s2, const Rational& h3)
{
    const Rational a0 = -weight_c1q(q, i2, s2);
    const Rational b0 = -h3 + weight_c1q(q, i1, s1);
    const bool p_vanishes = p_squared(i1, s1, a0, b0, Rational(q)).is_zero();
    return p_vanishes == product_condition(q, i1, s1, i2, s2, h3);
}

EquivalenceSweep equivalence_sweep(int q_max, int label_max, int h3_i_max)
{
    EquivalenceSweep sweep;
    for (int q = 1; q <= q_max; ++q) {
        std::set<Rational> targets;
        for (int i = 1; i <= h3_i_max; ++i)
            for (int s = 1; s <= q; ++s)
                targets.insert(weight_c1q(q, i, s));
        const int s_max = std::min(q, label_max);
        for (int i1 = 1; i1 <= label_max; ++i1)
            for (int s1 = 1; s1 <= s_max; ++s1)
                for (int i2 = 1; i2 <= label_max; ++i2)
                    for (int s2 = 1; s2 <= s_max; ++s2)
                        for (const Rational& h3 : targets) {
                            ++sweep.checked;
                            if (!equivalence_check(q, i1, s1, i2, s2, h3))
                                sweep.counterexamples.push_back({q, i1, s1, i2, s2, h3});
                        }
    }
    return sweep;
}

} // namespace virfusion
