#include "virfusion/fusion.hpp"

#include "virfusion/three_point.hpp"
#include "virfusion/zhu.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace virfusion {

ASet a_set(int m, int n)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("a_set: m, n must be positive");
    ASet set{m, n, {}};
    for (int e = m + n - 1; e >= std::abs(m - n) + 1; e -= 2)
        set.elements.push_back(e);
    return set;
}

namespace {

C1qIrreducible checked(int q, KacPair w)
{
    return C1qIrreducible::make(q, w.first, w.second);
}

std::vector<KacPair> all_witnesses(int q, KacPair w1, KacPair w2, const Rational& h3)
{
    std::vector<KacPair> out;
    for (int i : a_set(w1.first, w2.first).elements)
        for (int s : a_set(w1.second, w2.second).elements)
            if (weight_c1q(q, i, s) == h3)
                out.emplace_back(i, s);
    return out;
}

} // namespace

FusionAnswer fusion_c1q(int q, KacPair w1, KacPair w2, KacPair w3)
{
    checked(q, w1);
    checked(q, w2);
    checked(q, w3);
    const auto witnesses = all_witnesses(q, w1, w2, weight_c1q(q, w3.first, w3.second));
    if (witnesses.empty())
        return {0, std::nullopt};
    auto in_box = std::find_if(witnesses.begin(), witnesses.end(), [q](const KacPair& w) { return w.second <= q; });
    return {1, in_box != witnesses.end() ? *in_box : witnesses.front()};
}

std::set<C1qIrreducible> fusion_product_c1q(int q, KacPair w1, KacPair w2)
{
    checked(q, w1);
    checked(q, w2);
    std::set<C1qIrreducible> out;
    for (int i : a_set(w1.first, w2.first).elements)
        for (int s : a_set(w1.second, w2.second).elements)
            out.insert(*canonicalize_label_c1q(q, i, s));
    return out;
}

int fusion_minimal(int p, int q, KacPair w1, KacPair w2, KacPair w3)
{
    auto canonical = [&](KacPair w) {
        MinimalIrreducible::make(p, q, w.first, w.second);
        KacPair flipped{p - w.first, q - w.second};
        return std::min(w, flipped);
    };
    const KacPair a = canonical(w1);
    const KacPair b = canonical(w2);
    const KacPair c = canonical(w3);
    auto allowed = [](int x1, int x2, int x3, int bound) {
        const auto set = a_set(x1, x2).elements;
        return std::find(set.begin(), set.end(), x3) != set.end() && x3 <= 2 * bound - 1 - x1 - x2;
    };
    for (KacPair target : {c, KacPair{p - c.first, q - c.second}})
        if (allowed(a.first, b.first, target.first, p) && allowed(a.second, b.second, target.second, q))
            return 1;
    return 0;
}

namespace {

void require_irreducible_verma(int q, const Rational& h, const char* what)
{
    if (!is_irreducible_verma_c1q(q, h))
        throw NotIrreducibleVerma(std::string(what) + " = " + h.to_string() + " gives a reducible Verma module M(c_{1,"
                                  + std::to_string(q) + "}, h)");
}

std::vector<int> symmetric_range(int n)
{
    std::vector<int> out;
    for (int v = -n + 1; v <= n - 1; v += 2)
        out.push_back(v);
    return out;
}

} // namespace

int fusion_verma_mixed_with_root(int q, KacPair w, const Rational& root, const Rational& h_prime)
{
    checked(q, w);
    const Rational target = Rational(4L * q) * h_prime + Rational(static_cast<long>(q - 1) * (q - 1));
    for (int j : symmetric_range(w.first))
        for (int t : symmetric_range(w.second)) {
            Rational d = Rational(static_cast<long>(j) * q) - root - Rational(t);
            if (d * d == target)
                return 1;
        }
    return 0;
}

int fusion_verma_mixed(int q, KacPair w, const Rational& h, const Rational& h_prime)
{
    checked(q, w);
    require_irreducible_verma(q, h, "h");
    require_irreducible_verma(q, h_prime, "h'");
    const Rational root_squared = Rational(4L * q) * h + Rational(static_cast<long>(q - 1) * (q - 1));
    if (auto root = root_squared.sqrt_exact()) {
        return fusion_verma_mixed_with_root(q, w, *root, h_prime) | fusion_verma_mixed_with_root(q, w, -*root, h_prime);
    }
    // s' is irrational (or imaginary), so -2(jq - t)s' cannot cancel the rational
    // part unless jq = t; the condition then collapses to h' = h.
    for (int j : symmetric_range(w.first))
        for (int t : symmetric_range(w.second))
            if (static_cast<long>(j) * q == t && h_prime == h)
                return 1;
    return 0;
}

int fusion_verma_target_zero(int q, KacPair w1, KacPair w2, const Rational& h)
{
    checked(q, w1);
    checked(q, w2);
    require_irreducible_verma(q, h, "h");
    return 0;
}

CrossValidationReport cross_validate(int q_max, int i_max, SingularMemo* memo)
{
    SingularMemo local;
    if (!memo)
        memo = &local;
    CrossValidationReport report;
    for (int q = 1; q <= q_max; ++q) {
        std::vector<C1qIrreducible> labels;
        for (int i = 1; i <= i_max; ++i)
            for (int s = 1; s <= q; ++s)
                labels.push_back(C1qIrreducible::make(q, i, s));
        for (const auto& l1 : labels)
            for (const auto& l2 : labels)
                for (const auto& l3 : labels) {
                    ++report.triples;
                    const KacPair w1{l1.i, l1.s}, w2{l2.i, l2.s}, w3{l3.i, l3.s};
                    const FusionAnswer closed = fusion_c1q(q, w1, w2, w3);
                    const int fz = fz_upper_bound(l1, l2, l3, memo);
                    const bool dec = null_decoupling(q, l1, l2, l3, memo);
                    if (closed.value == fz && fz == (dec ? 1 : 0))
                        continue;
                    const bool outside = closed.value == 1 && closed.witness->second > q;
                    report.disagreements.push_back({q, w1, w2, w3, closed.value, fz, dec, outside});
                }
    }
    return report;
}

} // namespace virfusion
