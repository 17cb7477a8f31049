#include "virfusion/limit.hpp"

#include "virfusion/three_point.hpp"

namespace virfusion {

namespace {

// Quadratic a*k^2 + b*k + c with integer coefficients.
struct Quadratic {
    long a = 0, b = 0, c = 0;
    Rational at(int k) const { return Rational(a * k * k + b * k + c); }
};

// (i(kq-1) - sk)^2 - (kq-1-k)^2 over 4k(kq-1), as polynomials in k.
std::pair<Quadratic, Quadratic> weight_as_rational_function(int q, int i, int s)
{
    // i(kq-1) - sk = (iq - s)k - i ;  kq-1-k = (q-1)k - 1
    const long u = static_cast<long>(i) * q - s, v = -i;
    const long w = q - 1, z = -1;
    Quadratic num{u * u - w * w, 2 * (u * v - w * z), v * v - z * z};
    Quadratic den{4L * q, -4, 0};
    return {num, den};
}

// 13 - 6((kq-1)/k + k/(kq-1)) = (13k(kq-1) - 6(kq-1)^2 - 6k^2) / (k(kq-1))
std::pair<Quadratic, Quadratic> central_charge_as_rational_function(int q)
{
    const long qq = q;
    Quadratic num{13 * qq - 6 * qq * qq - 6, -13 + 12 * qq, -6};
    Quadratic den{qq, -1, 0};
    return {num, den};
}

Rational leading_ratio(const std::pair<Quadratic, Quadratic>& f)
{
    return Rational(f.first.a, f.second.a);
}

bool strictly_decreasing(const std::vector<Rational>& v)
{
    for (size_t i = 1; i < v.size(); ++i)
        if (!(v[i] < v[i - 1]))
            return false;
    return true;
}

bool monotone_to_zero(const std::vector<Rational>& v)
{
    for (size_t i = 1; i < v.size(); ++i) {
        if (v[i] > v[i - 1])
            return false;
        if (v[i - 1].sign() > 0 && !(v[i] < v[i - 1]))
            return false;
    }
    return true;
}

} // namespace

std::vector<LimitRow> limit_sequence(int q, const LabelTriple& labels, int k_min, int k_max, SingularMemo* memo)
{
    if (q < 1)
        throw std::invalid_argument("limit_sequence: q must be positive");
    if (k_min > k_max)
        throw std::invalid_argument("limit_sequence: kmin > kmax");
    std::vector<LimitRow> rows;
    for (int k = k_min; k <= k_max; ++k) {
        const int p2 = k * q - 1;
        for (const auto& [i, s] : labels)
            if (i < 1 || s < 1 || i >= k || s >= p2)
                throw LabelOutOfBox("label (" + std::to_string(i) + "," + std::to_string(s)
                                    + ") is outside the Kac box of (" + std::to_string(k) + "," + std::to_string(p2)
                                    + ")");
        LimitRow row;
        row.k = k;
        row.c_k = central_charge_pq(k, p2);
        for (size_t n = 0; n < 3; ++n)
            row.h_k[n] = kac_weight_pq(k, p2, labels[n].first, labels[n].second);
        row.fusion_allowed = fusion_minimal(k, p2, labels[0], labels[1], labels[2]) == 1;

        const int grade = labels[0].first * labels[0].second;
        const HighestWeightParams params{row.c_k, row.h_k[0]};
        std::optional<VermaVector> sv = memo ? memo->get(params, grade) : singular_vector(params, grade);
        if (!sv)
            throw SolverFailure("limit_sequence: no singular vector at grade " + std::to_string(grade) + ", k = "
                                + std::to_string(k));
        row.slot1_null_coeff
            = evaluate_descendant({row.c_k, row.h_k[0], row.h_k[1], row.h_k[2]}, Slot::One, *sv).coeff;
        rows.push_back(std::move(row));
    }
    return rows;
}

LimitReport limit_check(const std::vector<LimitRow>& rows, int q, const LabelTriple& labels, SingularMemo* memo)
{
    if (rows.empty())
        throw std::invalid_argument("limit_check: no rows");
    LimitReport report;
    report.c_limit = leading_ratio(central_charge_as_rational_function(q));
    for (size_t n = 0; n < 3; ++n)
        report.h_limit[n] = leading_ratio(weight_as_rational_function(q, labels[n].first, labels[n].second));

    for (const auto& row : rows) {
        report.c_gap.push_back((row.c_k - report.c_limit).abs());
        for (size_t n = 0; n < 3; ++n)
            report.h_gap[n].push_back((row.h_k[n] - report.h_limit[n]).abs());
    }
    report.c_gap_strictly_decreasing = strictly_decreasing(report.c_gap);
    for (size_t n = 0; n < 3; ++n) {
        report.h_gap_strictly_decreasing[n] = strictly_decreasing(report.h_gap[n]);
        report.h_gap_monotone[n] = monotone_to_zero(report.h_gap[n]);
    }

    const size_t half = rows.size() / 2;
    for (size_t r = half + 1; r < rows.size(); ++r)
        if (rows[r].fusion_allowed != rows[half].fusion_allowed)
            throw NotStabilized("limit_check: fusion_allowed changes at k = " + std::to_string(rows[r].k));
    report.fusion_eventual = rows.back().fusion_allowed;
    report.fusion_oracle = fusion_c1q(q, labels[0], labels[1], labels[2]).value;
    report.fusion_matches_oracle = report.fusion_eventual == (report.fusion_oracle == 1);

    const C1qIrreducible w1 = C1qIrreducible::make(q, labels[0].first, labels[0].second);
    const VermaVector sv = maximal_submodule_generators(w1, memo).front().vector;
    const ThreePointDatum datum{report.c_limit, report.h_limit[0], report.h_limit[1], report.h_limit[2]};
    report.null_limit = evaluate_descendant(datum, Slot::One, sv).coeff;
    for (const auto& row : rows)
        report.null_gap.push_back((row.slot1_null_coeff - report.null_limit).abs());
    report.null_gap_monotone = monotone_to_zero(report.null_gap);
    return report;
}

} // namespace virfusion
