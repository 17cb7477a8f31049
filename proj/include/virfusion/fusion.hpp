#pragma once

#include "virfusion/rational.hpp"
#include "virfusion/virasoro.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace virfusion {

struct NotIrreducibleVerma : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// (i, s) for the c_{1,q} series or (r, s) for a minimal model.
using KacPair = std::pair<int, int>;

struct ASet {
    int m, n;
    std::vector<int> elements;  // m+n-1, m+n-3, ..., |m-n|+1
};

ASet a_set(int m, int n);

struct FusionAnswer {
    int value = 0;
    std::optional<KacPair> witness;
    friend bool operator==(const FusionAnswer&, const FusionAnswer&) = default;
};

// 1 iff h_{i3,s3} = h_{i,s} for some i in A_{i1,i2}, s in A_{s1,s2}. Weights
// are compared, so s may leave (0, q]; a witness inside the box is preferred.
FusionAnswer fusion_c1q(int q, KacPair w1, KacPair w2, KacPair w3);

// Canonical labels of the A-set expansion, deduplicated by weight.
std::set<C1qIrreducible> fusion_product_c1q(int q, KacPair w1, KacPair w2);

// Minimal-model rule: r3 in A_{r1,r2}, r3 <= 2p-1-r1-r2 and the same for s,
// testing both Kac representatives of the third label.
int fusion_minimal(int p, int q, KacPair w1, KacPair w2, KacPair w3);

// N^{M(h')}_{L(h_{i,s}), M(h)} for irreducible Verma modules M(h), M(h').
int fusion_verma_mixed(int q, KacPair w, const Rational& h, const Rational& h_prime);

// Same condition with an explicit root s' of s'^2 = 4qh + (q-1)^2; used to
// check that both signs of s' give the same answer.
int fusion_verma_mixed_with_root(int q, KacPair w, const Rational& root, const Rational& h_prime);

// N^{M(h)}_{L(h_{i1,s1}), L(h_{i2,s2})}; always 0 once M(h) is irreducible.
int fusion_verma_target_zero(int q, KacPair w1, KacPair w2, const Rational& h);

struct CrossValidationDisagreement {
    int q;
    KacPair w1, w2, w3;
    int closed_form;
    int fz_bound;
    bool decoupling;
    // Every A-set witness has s > q, so the weight match aliases a different
    // canonical label.
    bool witness_outside_box;
};

struct CrossValidationReport {
    long triples = 0;
    std::vector<CrossValidationDisagreement> disagreements;
};

// Compares fusion_c1q, fz_upper_bound and null_decoupling over every triple of
// labels with q <= q_max, i <= i_max, 0 < s <= q.
CrossValidationReport cross_validate(int q_max, int i_max, SingularMemo* memo = nullptr);

} // namespace virfusion
