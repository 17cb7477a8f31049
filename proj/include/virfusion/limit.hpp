#pragma once

#include "virfusion/fusion.hpp"
#include "virfusion/rational.hpp"
#include "virfusion/virasoro.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace virfusion {

struct LabelOutOfBox : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotStabilized : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using LabelTriple = std::array<KacPair, 3>;

// One member of the sequence of minimal models L(c_{k,kq-1}, 0) approaching c_{1,q}.
struct LimitRow {
    int k;
    Rational c_k;
    std::array<Rational, 3> h_k;  // h_n^k = kac_weight_pq(k, kq-1, i_n, s_n)
    bool fusion_allowed;
    Rational slot1_null_coeff;
};

std::vector<LimitRow> limit_sequence(int q, const LabelTriple& labels, int k_min, int k_max,
                                     SingularMemo* memo = nullptr);

struct LimitReport {
    // Closed-form limits: the ratio of the k^2 coefficients of numerator and denominator.
    Rational c_limit;
    std::array<Rational, 3> h_limit;
    std::vector<Rational> c_gap;                 // |c_k - c_limit| per row
    std::array<std::vector<Rational>, 3> h_gap;  // |h_n^k - h_limit| per row
    bool c_gap_strictly_decreasing = false;
    std::array<bool, 3> h_gap_strictly_decreasing{};
    // Non-increasing and strictly decreasing while positive.
    std::array<bool, 3> h_gap_monotone{};

    bool fusion_eventual = false;
    int fusion_oracle = 0;  // fusion_c1q at the limit
    bool fusion_matches_oracle = false;

    Rational null_limit;           // slot-1 coefficient at (c_{1,q}, h_{i_n,s_n})
    std::vector<Rational> null_gap;  // |slot1_null_coeff - null_limit| per row
    bool null_gap_monotone = false;
};

// Throws NotStabilized when fusion_allowed changes within the top half of the rows.
LimitReport limit_check(const std::vector<LimitRow>& rows, int q, const LabelTriple& labels,
                        SingularMemo* memo = nullptr);

} // namespace virfusion
