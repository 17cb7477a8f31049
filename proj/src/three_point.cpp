#include "virfusion/three_point.hpp"

#include <stdexcept>

namespace virfusion {

ThreePointEvaluator::ThreePointEvaluator(ThreePointDatum datum)
    : datum_(std::move(datum)),
      mu_(datum_.h3 - datum_.h1 - datum_.h2),
      slot1_(HighestWeightParams{datum_.c, datum_.h1}),
      slot2_(HighestWeightParams{datum_.c, datum_.h2})
{
}

Rational ThreePointEvaluator::matrix_element(const Partition& dual, const Partition& w1, const Partition& w2)
{
    Key key{dual, w1, w2};
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    Rational value(0);
    const Partition empty;
    if (!dual.empty()) {
        // <L_{-a} Z', X> = <Z', L_a X>, and
        // L_a Y(u,x) w = sum_i C(a+1,i) x^{a+1-i} Y(L_{i-1}u, x) w + Y(u,x) L_a w.
        const int a = dual.leading();
        const Partition rest = dual.tail();
        const int top = std::min(w1.size() + 1, a + 1);
        for (int i = 0; i <= top; ++i) {
            const Rational b = binomial(a + 1, i);
            for (const auto& [u, cu] : slot1_.act(i - 1, w1))
                value += b * cu * matrix_element(rest, u, w2);
        }
        for (const auto& [w, cw] : slot2_.act(a, w2))
            value += cw * matrix_element(rest, w1, w);
    } else if (!w2.empty()) {
        // Y(u,x) L_{-m} w = L_{-m} Y(u,x) w - sum_i C(1-m,i) x^{1-m-i} Y(L_{i-1}u, x) w,
        // and L_{-m} is absorbed by the lowest-weight dual vector.
        const int m = w2.leading();
        const Partition tail = w2.tail();
        for (int i = 0; i <= w1.size() + 1; ++i) {
            const Rational b = binomial(1 - m, i);
            if (b.is_zero())
                continue;
            for (const auto& [u, cu] : slot1_.act(i - 1, w1))
                value -= b * cu * matrix_element(empty, u, tail);
        }
    } else if (!w1.empty()) {
        const int a = w1.leading();
        const Partition tail = w1.tail();
        if (a == 1) {
            // L_{-1} derivative
            value = (mu_ - Rational(tail.size())) * matrix_element(empty, tail, empty);
        } else {
            // Iterate of L_{-a} = omega_{1-a} between primaries: only L_{-1} and L_0
            // on slot 2 survive.
            value = matrix_element(empty, tail, Partition{1})
                  + Rational(a - 1) * datum_.h2 * matrix_element(empty, tail, empty);
            if (a % 2 != 0)
                value = -value;
        }
    } else {
        value = Rational(1);
    }
    return memo_.emplace(std::move(key), value).first->second;
}

ThreePointCoefficient ThreePointEvaluator::evaluate(Slot slot, const VermaVector& v)
{
    const Rational& h = slot == Slot::One ? datum_.h1 : slot == Slot::Two ? datum_.h2 : datum_.h3;
    if (v.params() != HighestWeightParams{datum_.c, h})
        throw std::invalid_argument("evaluate_descendant: vector does not live in the Verma module of slot "
                                    + std::to_string(static_cast<int>(slot)));
    if (!v.is_homogeneous())
        throw std::invalid_argument("evaluate_descendant: vector must be homogeneous");
    const Partition empty;
    Rational coeff(0);
    for (const auto& [w, c] : v.terms()) {
        switch (slot) {
        case Slot::One: coeff += c * matrix_element(empty, w, empty); break;
        case Slot::Two: coeff += c * matrix_element(empty, empty, w); break;
        case Slot::Three: coeff += c * matrix_element(w, empty, empty); break;
        }
    }
    const int grade = v.grade();
    return {coeff, slot == Slot::Three ? -grade : grade};
}

ThreePointCoefficient evaluate_descendant(const ThreePointDatum& datum, Slot slot, const VermaVector& v)
{
    ThreePointEvaluator evaluator(datum);
    return evaluator.evaluate(slot, v);
}

DecouplingCoefficients decoupling_coefficients(int q, const C1qIrreducible& w1, const C1qIrreducible& w2,
                                               const C1qIrreducible& w3, SingularMemo* memo)
{
    for (const auto* w : {&w1, &w2, &w3})
        if (w->q != q)
            throw InvalidLabel("null_decoupling: label belongs to c_{1," + std::to_string(w->q) + "}, expected q = "
                               + std::to_string(q));
    const ThreePointDatum datum{central_charge_pq(1, q), params_of(w1).h, params_of(w2).h, params_of(w3).h};
    ThreePointEvaluator evaluator(datum);
    auto generator = [&](const C1qIrreducible& w) { return maximal_submodule_generators(w, memo).front().vector; };
    return {evaluator.evaluate(Slot::One, generator(w1)).coeff, evaluator.evaluate(Slot::Two, generator(w2)).coeff,
            evaluator.evaluate(Slot::Three, generator(w3)).coeff};
}

bool null_decoupling(int q, const C1qIrreducible& w1, const C1qIrreducible& w2, const C1qIrreducible& w3,
                     SingularMemo* memo)
{
    return decoupling_coefficients(q, w1, w2, w3, memo).all_zero();
}

} // namespace virfusion
