#include "oracles.hpp"
#include "printers.hpp"

#include "virfusion/fusion.hpp"
#include "virfusion/zhu.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace virfusion;
using R = Rational;

namespace {

std::vector<int> interval(int m, int n)
{
    std::vector<int> out;
    for (int v = m + n - 1; v >= std::abs(m - n) + 1; v -= 2)
        out.push_back(v);
    return out;
}

// Fusion allowed with a witness inside the canonical box s <= q.
bool in_box_witness(int q, KacPair w1, KacPair w2, KacPair w3)
{
    const R h3 = oracle::h_c1q(q, w3.first, w3.second);
    for (int i : interval(w1.first, w2.first))
        for (int s : interval(w1.second, w2.second))
            if (s <= q && oracle::h_c1q(q, i, s) == h3)
                return true;
    return false;
}

bool any_witness(int q, KacPair w1, KacPair w2, KacPair w3)
{
    const R h3 = oracle::h_c1q(q, w3.first, w3.second);
    for (int i : interval(w1.first, w2.first))
        for (int s : interval(w1.second, w2.second))
            if (oracle::h_c1q(q, i, s) == h3)
                return true;
    return false;
}

std::vector<KacPair> c1q_labels(int q, int i_max)
{
    std::vector<KacPair> out;
    for (int i = 1; i <= i_max; ++i)
        for (int s = 1; s <= q; ++s)
            out.emplace_back(i, s);
    return out;
}

} // namespace

TEST_CASE("a_set")
{
    CHECK(a_set(1, 1).elements == std::vector<int>{1});
    CHECK(a_set(2, 2).elements == std::vector<int>{3, 1});
    CHECK(a_set(2, 3).elements == std::vector<int>{4, 2});
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            const auto a = a_set(m, n);
            CHECK(a.elements.size() == static_cast<size_t>(std::min(m, n)));
            for (int e : a.elements) {
                CHECK(e > 0);
                CHECK((e - (m + n - 1)) % 2 == 0);
            }
        }
    CHECK_THROWS(a_set(0, 2));
}

TEST_CASE("fusion_c1q examples")
{
    auto r = fusion_c1q(2, {1, 2}, {1, 2}, {1, 1});
    CHECK(r.value == 1);
    CHECK(r.witness == KacPair{1, 1});
    r = fusion_c1q(2, {1, 2}, {1, 2}, {2, 1});
    CHECK(r.value == 0);
    CHECK_FALSE(r.witness.has_value());
    r = fusion_c1q(3, {1, 2}, {2, 2}, {2, 1});
    CHECK(r.value == 1);
    CHECK(r.witness == KacPair{2, 1});
    CHECK_THROWS_AS(fusion_c1q(2, {1, 3}, {1, 1}, {1, 1}), InvalidLabel);
    CHECK_THROWS_AS(fusion_c1q(2, {1, 1}, {0, 1}, {1, 1}), InvalidLabel);
}

TEST_CASE("fusion_c1q compares weights and is symmetric")
{
    for (int q = 1; q <= 4; ++q) {
        const auto labels = c1q_labels(q, 3);
        for (auto w1 : labels)
            for (auto w2 : labels)
                for (auto w3 : labels) {
                    const auto a = fusion_c1q(q, w1, w2, w3);
                    CHECK(a.value == (any_witness(q, w1, w2, w3) ? 1 : 0));
                    CHECK(a.value == fusion_c1q(q, w2, w1, w3).value);
                    CHECK(a.witness.has_value() == (a.value == 1));
                    if (a.witness)
                        CHECK(oracle::h_c1q(q, a.witness->first, a.witness->second)
                              == oracle::h_c1q(q, w3.first, w3.second));
                }
    }
}

TEST_CASE("fusion_product_c1q examples")
{
    using S = std::set<C1qIrreducible>;
    CHECK(fusion_product_c1q(3, {1, 2}, {2, 2}) == S{C1qIrreducible::make(3, 2, 1), C1qIrreducible::make(3, 2, 3)});
    CHECK(fusion_product_c1q(2, {1, 2}, {1, 2}) == S{C1qIrreducible::make(2, 1, 1)});
    CHECK(fusion_product_c1q(2, {1, 2}, {2, 2}) == S{C1qIrreducible::make(2, 1, 1), C1qIrreducible::make(2, 2, 1)});
    std::set<R> weights;
    for (const auto& l : fusion_product_c1q(2, {2, 1}, {2, 2}))
        weights.insert(weight_c1q(2, l.i, l.s));
    CHECK(weights == std::set<R>{R(-1, 8), R(15, 8)});
}

TEST_CASE("fusion product invariants")
{
    for (int q = 1; q <= 4; ++q) {
        const auto labels = c1q_labels(q, 4);
        for (auto w1 : labels) {
            CHECK(fusion_product_c1q(q, {1, 1}, w1) == std::set{C1qIrreducible::make(q, w1.first, w1.second)});
            for (auto w2 : labels) {
                const auto prod = fusion_product_c1q(q, w1, w2);
                CHECK(prod == fusion_product_c1q(q, w2, w1));
                CHECK(prod.size() <= static_cast<size_t>(std::min(w1.first, w2.first) * std::min(w1.second, w2.second)));
                for (auto w3 : labels) {
                    const bool member = prod.count(C1qIrreducible::make(q, w3.first, w3.second)) == 1;
                    CHECK(member == (fusion_c1q(q, w1, w2, w3).value == 1));
                }
            }
        }
    }
}

TEST_CASE("fusion_minimal on the Ising model")
{
    CHECK(fusion_minimal(4, 3, {2, 2}, {2, 2}, {1, 1}) == 1);
    CHECK(fusion_minimal(4, 3, {2, 2}, {2, 2}, {3, 1}) == 1);
    CHECK(fusion_minimal(4, 3, {2, 2}, {2, 2}, {2, 2}) == 0);
    CHECK_THROWS_AS(fusion_minimal(4, 3, {4, 1}, {1, 1}, {1, 1}), InvalidLabel);
    CHECK_THROWS_AS(fusion_minimal(4, 2, {1, 1}, {1, 1}, {1, 1}), InvalidLabel);

    // 1 = (1,1), sigma = (2,2), epsilon = (3,1); every Kac representative must give the same answer.
    const std::map<char, std::vector<KacPair>> reps{
        {'1', {{1, 1}, {3, 2}}}, {'s', {{2, 2}, {2, 1}}}, {'e', {{3, 1}, {1, 2}}}};
    const std::map<std::string, int> table{
        {"111", 1}, {"1ss", 1}, {"1ee", 1}, {"ss1", 1}, {"sse", 1}, {"ses", 1}, {"ee1", 1},
        {"s1s", 1}, {"e1e", 1}, {"ess", 1}};
    for (const auto& [a, ra] : reps)
        for (const auto& [b, rb] : reps)
            for (const auto& [c, rc] : reps) {
                const int expected = table.count(std::string{a, b, c}) ? 1 : 0;
                for (auto x : ra)
                    for (auto y : rb)
                        for (auto z : rc)
                            CHECK(fusion_minimal(4, 3, x, y, z) == expected);
            }
}

TEST_CASE("fusion_minimal agrees with the Verlinde formula")
{
    for (auto [p, q] : {std::pair{3, 2}, std::pair{4, 3}, std::pair{5, 2}, std::pair{5, 3}, std::pair{5, 4},
                        std::pair{7, 2}, std::pair{6, 5}, std::pair{7, 3}, std::pair{5, 9}})
        for (int r1 = 1; r1 < p; ++r1)
            for (int s1 = 1; s1 < q; ++s1)
                for (int r2 = 1; r2 < p; ++r2)
                    for (int s2 = 1; s2 < q; ++s2)
                        for (int r3 = 1; r3 < p; ++r3)
                            for (int s3 = 1; s3 < q; ++s3)
                                CHECK(fusion_minimal(p, q, {r1, s1}, {r2, s2}, {r3, s3})
                                      == oracle::verlinde(p, q, {r1, s1}, {r2, s2}, {r3, s3}));
}

TEST_CASE("fz_upper_bound agrees with fusion_minimal")
{
    SingularMemo memo;
    for (auto [p, q] : {std::pair{4, 3}, std::pair{5, 2}, std::pair{3, 2}})
        for (int r1 = 1; r1 < p; ++r1)
            for (int s1 = 1; s1 < q; ++s1)
                for (int r2 = 1; r2 < p; ++r2)
                    for (int s2 = 1; s2 < q; ++s2)
                        for (int r3 = 1; r3 < p; ++r3)
                            for (int s3 = 1; s3 < q; ++s3)
                                CHECK(fz_upper_bound(MinimalIrreducible::make(p, q, r1, s1),
                                                     MinimalIrreducible::make(p, q, r2, s2),
                                                     MinimalIrreducible::make(p, q, r3, s3), &memo)
                                      == fusion_minimal(p, q, {r1, s1}, {r2, s2}, {r3, s3}));
}

TEST_CASE("fusion_verma_mixed examples")
{
    CHECK(fusion_verma_mixed(2, {1, 2}, R(-3, 32), R(5, 32)) == 1);
    CHECK(fusion_verma_mixed(2, {1, 2}, R(-3, 32), R(-3, 32)) == 1);
    CHECK(fusion_verma_mixed(2, {1, 2}, R(1, 8), R(7, 3)) == 0);
    CHECK(fusion_verma_mixed(2, {1, 2}, R(1, 8), R(1, 8)) == 0);
    CHECK(fusion_verma_mixed(2, {1, 1}, R(1, 8), R(1, 8)) == 1);
    CHECK_THROWS_AS(fusion_verma_mixed(2, {1, 2}, R(0), R(5, 32)), NotIrreducibleVerma);
    CHECK_THROWS_AS(fusion_verma_mixed(2, {1, 2}, R(-3, 32), R(3)), NotIrreducibleVerma);
}

TEST_CASE("fusion_verma_mixed against direct enumeration, both signs of the root")
{
    std::mt19937 rng(77);
    for (int q = 1; q <= 3; ++q)
        for (int i = 1; i <= 3; ++i)
            for (int s = 1; s <= q; ++s)
                for (int trial = 0; trial < 30; ++trial) {
                    // h with a rational root: s' = u, h = (u^2 - (q-1)^2) / 4q.
                    const R u = oracle::random_rational(rng, 9);
                    const R h = (u * u - R((q - 1) * (q - 1))) / R(4L * q);
                    if (!is_irreducible_verma_c1q(q, h))
                        continue;
                    std::vector<R> candidates{oracle::random_rational(rng)};
                    std::uniform_int_distribution<int> jt(-3, 3);
                    const R d = R(static_cast<long>(jt(rng)) * q - jt(rng)) - u;
                    candidates.push_back((d * d - R((q - 1) * (q - 1))) / R(4L * q));
                    for (const R& hp : candidates) {
                        if (!is_irreducible_verma_c1q(q, hp))
                            continue;
                        const int expected = *oracle::verma_mixed_enumerate(q, i, s, h, hp);
                        CHECK(fusion_verma_mixed(q, {i, s}, h, hp) == expected);
                        CHECK(fusion_verma_mixed_with_root(q, {i, s}, u, hp) == expected);
                        CHECK(fusion_verma_mixed_with_root(q, {i, s}, -u, hp) == expected);
                    }
                }
}

TEST_CASE("fusion_verma_target_zero")
{
    CHECK(fusion_verma_target_zero(2, {1, 2}, {1, 2}, R(-3, 32)) == 0);
    CHECK(fusion_verma_target_zero(3, {2, 2}, {1, 1}, R(1, 5)) == 0);
    CHECK_THROWS_AS(fusion_verma_target_zero(2, {1, 1}, {1, 1}, R(0)), NotIrreducibleVerma);
}

TEST_CASE("cross_validate disagreements are exactly the out-of-box witnesses")
{
    SingularMemo memo;
    CHECK(cross_validate(1, 3, &memo).disagreements.empty());
    for (auto [q_max, i_max] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 3}}) {
        const auto report = cross_validate(q_max, i_max, &memo);
        long expected_triples = 0;
        size_t aliased = 0;
        for (int q = 1; q <= q_max; ++q) {
            const auto labels = c1q_labels(q, i_max);
            expected_triples += static_cast<long>(labels.size() * labels.size() * labels.size());
            for (auto w1 : labels)
                for (auto w2 : labels)
                    for (auto w3 : labels)
                        if (any_witness(q, w1, w2, w3) && !in_box_witness(q, w1, w2, w3))
                            ++aliased;
        }
        CHECK(report.triples == expected_triples);
        CHECK(report.disagreements.size() == aliased);
        for (const auto& d : report.disagreements) {
            CHECK(d.closed_form == 1);
            CHECK(d.fz_bound == 1);
            CHECK_FALSE(d.decoupling);
            CHECK(d.witness_outside_box);
            CHECK_FALSE(in_box_witness(d.q, d.w1, d.w2, d.w3));
        }
    }
}

TEST_CASE("minimal-model limit agrees with fusion_c1q off the out-of-box set")
{
    for (int q = 1; q <= 2; ++q) {
        const auto labels = c1q_labels(q, 2);
        for (auto w1 : labels)
            for (auto w2 : labels)
                for (auto w3 : labels) {
                    const int k0 = 2 * (w1.first + w2.first + w3.first);
                    const bool aliased = any_witness(q, w1, w2, w3) && !in_box_witness(q, w1, w2, w3);
                    const int closed = fusion_c1q(q, w1, w2, w3).value;
                    for (int k = k0; k <= k0 + 4; ++k) {
                        const int minimal = fusion_minimal(k, k * q - 1, w1, w2, w3);
                        CHECK((minimal != closed) == aliased);
                    }
                }
    }
}
