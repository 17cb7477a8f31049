#pragma once

#include "virfusion/bivariate.hpp"
#include "virfusion/sqrt_laurent.hpp"
#include "virfusion/virasoro.hpp"

#include <utility>
#include <vector>

namespace virfusion {

// Image of a Verma vector in the bimodule A(M(c,h)) ~ C[x,y].
struct ZhuClass {
    BivariatePolynomial poly;
    HighestWeightParams source_params;
    friend bool operator==(const ZhuClass&, const ZhuClass&) = default;
};

// [L_{-n} u] = (-1)^n (n y - x + wt u) [u], with wt u = h + grade(u) and
// [v_{c,h}] = 1, applied by peeling the leftmost mode of each monomial.
ZhuClass zhu_reduce(const VermaVector& v);

// ((L_{-2} + 2L_{-1} + L_0) v, (L_{-2} + L_{-1}) v): the left and right
// actions of [omega] before reduction.
std::pair<VermaVector, VermaVector> left_right_omega(const VermaVector& v);

// zhu_reduce of every generator of the maximal submodule.
std::vector<ZhuClass> singular_image(const ModuleLabel& label, SingularMemo* memo = nullptr);

// Frenkel-Zhu upper bound: 1 iff the singular images of w1 vanish at
// (x,y) = (h3,h2) and those of w2 vanish at (h3,h1).
int fz_upper_bound(const ModuleLabel& w1, const ModuleLabel& w2, const ModuleLabel& w3,
                   SingularMemo* memo = nullptr);

struct QFactorSpec {
    int alpha, beta, k, l;
    // Validates alpha, beta >= 1, 0 <= k < alpha, 0 <= l < beta.
    static QFactorSpec make(int alpha, int beta, int k, int l);
};

// Q^{alpha,beta}_{k,l}(a,b;xi) as a Laurent polynomial in xi^{1/2} over Q[a,b].
SqrtLaurent q_factor(const QFactorSpec& spec);

// prod_{k<alpha} prod_{l<beta} Q_{k,l} at (a0, b0, xi0). The product is formed
// in xi before xi is specialized.
Rational p_squared(int alpha, int beta, const Rational& a0, const Rational& b0, const Rational& xi0);

// prod_{k<i1} prod_{l<s1} (h3 - h_{i1+i2-2k-1, s1+s2-2l-1}) == 0
bool product_condition(int q, int i1, int s1, int i2, int s2, const Rational& h3);

// [P^2_{i1,s1}(-h_{i2,s2}, -h3 + h_{i1,s1}; q) == 0]  <=>  product_condition(...)
bool equivalence_check(int q, int i1, int s1, int i2, int s2, const Rational& h3);

struct EquivalenceCounterexample {
    int q, i1, s1, i2, s2;
    Rational h3;
};

struct EquivalenceSweep {
    long checked = 0;
    std::vector<EquivalenceCounterexample> counterexamples;
};

// q in [1, q_max]; i1, s1, i2, s2 in [1, label_max] with s <= q; h3 over
// weight_c1q(q, i, s) for i <= h3_i_max, s <= q.
EquivalenceSweep equivalence_sweep(int q_max, int label_max, int h3_i_max);

} // namespace virfusion
