#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library beyond the Rational type.

#include "virfusion/rational.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using virfusion::Rational;

// p(n) from Euler's pentagonal number theorem.
inline std::vector<long long> partition_counts(int n_max)
{
    std::vector<long long> p(static_cast<size_t>(n_max) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        long long acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n)
                break;
            const long long sign = (k % 2 == 1) ? 1 : -1;
            acc += sign * p[static_cast<size_t>(n - g1)];
            if (g2 <= n)
                acc += sign * p[static_cast<size_t>(n - g2)];
        }
        p[static_cast<size_t>(n)] = acc;
    }
    return p;
}

// Brute force: all non-increasing sequences of positive parts summing to n.
inline void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(n - part, part, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> brute_partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

// Textbook null vectors, in the normal order used by the library (most negative mode first).
// Level 2 at h_{1,2}, h_{2,1}: L_{-1}^2 - 2(2h+1)/3 L_{-2}.
inline Rational level2_l2_coefficient(const Rational& h)
{
    return Rational(-2, 3) * (Rational(2) * h + Rational(1));
}
// Level 3 at h_{1,3}, h_{3,1}: L_{-3} - 2/(h+2) L_{-1}L_{-2} + 1/((h+1)(h+2)) L_{-1}^3, rewritten with
// L_{-1}L_{-2} = L_{-2}L_{-1} + L_{-3} and scaled so L_{-1}^3 has coefficient 1.
struct Level3 {
    Rational l21, l3;
};
inline Level3 level3_coefficients(const Rational& h)
{
    return {Rational(-2) * (h + Rational(1)), h * (h + Rational(1))};
}

// Q^{alpha,beta}_{k,l}(a, b; r^2) evaluated directly from the bracket formula, r rational.
inline Rational q_factor_direct(int alpha, int beta, int k, int l, const Rational& a, const Rational& b,
                                const Rational& r)
{
    const Rational ri = Rational(1) / r;
    auto R = [](long n) { return Rational(n); };
    const Rational f1 = (b - a) - (R(k) * r - R(l) * ri) * (R(alpha - k) * r - R(beta - l) * ri);
    const Rational f2 = (b - a) - (R(k + 1) * r - R(l + 1) * ri) * (R(alpha - k - 1) * r - R(beta - l - 1) * ri);
    const Rational sq = R(alpha - 2 * k - 1) * r - R(beta - 2 * l - 1) * ri;
    return f1 * f2 + sq * sq * a;
}

inline Rational h_c1q(int q, long i, long s)
{
    const Rational d = Rational(i * q - s);
    return (d * d - Rational((q - 1) * (q - 1))) / Rational(4L * q);
}

// Fusion coefficient of the (p,q) minimal model from the Verlinde formula with the
// modular S-matrix, in floating point, rounded to the nearest integer.
inline int verlinde(int p, int q, std::pair<int, int> a, std::pair<int, int> b, std::pair<int, int> c)
{
    const double pi = std::numbers::pi;
    auto S = [&](std::pair<int, int> x, std::pair<int, int> y) {
        const auto [r, s] = x;
        const auto [rho, sigma] = y;
        const double sign = ((1 + s * rho + r * sigma) % 2 == 0) ? 1.0 : -1.0;
        return 2.0 * std::sqrt(2.0 / (p * q)) * sign * std::sin(pi * q * r * rho / p)
             * std::sin(pi * p * s * sigma / q);
    };
    double sum = 0;
    for (int r = 1; r < p; ++r)
        for (int s = 1; s < q; ++s) {
            const std::pair<int, int> m{r, s};
            sum += S(a, m) * S(b, m) * S(c, m) / S({1, 1}, m);
        }
    return static_cast<int>(std::lround(sum / 2.0));
}

// Direct enumeration of the Verma-module rule for rational-square s'^2: both
// signs of s', all j and t in the stated ranges.
inline std::optional<int> verma_mixed_enumerate(int q, int i, int s, const Rational& h, const Rational& hp)
{
    const Rational sp2 = Rational(4L * q) * h + Rational((q - 1) * (q - 1));
    auto root = sp2.sqrt_exact();
    if (!root)
        return std::nullopt;
    for (const Rational& sp : {*root, -*root})
        for (int j = -i + 1; j <= i - 1; j += 2)
            for (int t = -s + 1; t <= s - 1; t += 2) {
                const Rational d = Rational(static_cast<long>(j) * q - t) - sp;
                if ((d * d - Rational((q - 1) * (q - 1))) / Rational(4L * q) == hp)
                    return 1;
            }
    return 0;
}

inline Rational random_rational(std::mt19937& rng, int span = 7)
{
    std::uniform_int_distribution<int> num(-span, span), den(1, span);
    return Rational(num(rng), den(rng));
}

} // namespace oracle
