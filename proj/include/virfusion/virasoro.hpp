#pragma once

#include "virfusion/partition.hpp"
#include "virfusion/rational.hpp"

#include <atomic>
#include <compare>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

namespace virfusion {

struct InvalidLabel : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonUniqueSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SolverFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Central charge and highest weight of a Verma module M(c,h).
struct HighestWeightParams {
    Rational c;
    Rational h;
    friend auto operator<=>(const HighestWeightParams&, const HighestWeightParams&) = default;
};

// The nonzero parameter t of c(t) = 13 - 6t - 6/t.
class TParam {
public:
    explicit TParam(Rational t);
    const Rational& value() const { return t_; }

private:
    Rational t_;
};

Rational central_charge_pq(int p, int q);
Rational central_charge_t(const TParam& t);
// ((sp - rq)^2 - (p - q)^2) / 4pq; no Kac-box check.
Rational kac_weight_pq(int p, int q, int r, int s);
// ((iq - s)^2 - (q - 1)^2) / 4q, evaluated as written for any integers.
Rational weight_c1q(int q, long i, long s);
Rational weight_alpha_beta_t(int alpha, int beta, const TParam& t);

struct MinimalIrreducible {
    int p, q, r, s;
    // Validates gcd(p,q) = 1, p,q > 1, 0 < r < p, 0 < s < q.
    static MinimalIrreducible make(int p, int q, int r, int s);
    friend bool operator==(const MinimalIrreducible&, const MinimalIrreducible&) = default;
};

struct C1qIrreducible {
    int q, i, s;
    // Validates q >= 1, i > 0, 0 < s <= q.
    static C1qIrreducible make(int q, int i, int s);
    friend auto operator<=>(const C1qIrreducible&, const C1qIrreducible&) = default;
};

struct GenericVerma {
    Rational c, h;
    friend bool operator==(const GenericVerma&, const GenericVerma&) = default;
};

using ModuleLabel = std::variant<MinimalIrreducible, C1qIrreducible, GenericVerma>;

HighestWeightParams params_of(const ModuleLabel& label);
std::string label_to_string(const ModuleLabel& label);

// Finite linear combination of PBW monomials e_I v_{c,h} in M(c,h).
class VermaVector {
public:
    using Terms = std::map<Partition, Rational>;

    VermaVector() = default;
    explicit VermaVector(HighestWeightParams params) : params_(std::move(params)) {}
    VermaVector(HighestWeightParams params, Terms terms);

    static VermaVector highest_weight(const HighestWeightParams& params);
    static VermaVector monomial(const HighestWeightParams& params, const Partition& word,
                                const Rational& coeff = Rational(1));

    const HighestWeightParams& params() const { return params_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Partition& word) const;
    // Largest grade present; 0 for the zero vector.
    int grade() const;
    bool is_homogeneous() const;

    void add(const Partition& word, const Rational& coeff);

    VermaVector& operator+=(const VermaVector& o);
    VermaVector& operator-=(const VermaVector& o);
    VermaVector& operator*=(const Rational& s);
    friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
    friend VermaVector operator-(VermaVector a, const VermaVector& b) { return a -= b; }
    friend VermaVector operator*(VermaVector a, const Rational& s) { return a *= s; }
    friend VermaVector operator*(const Rational& s, VermaVector a) { return a *= s; }
    friend bool operator==(const VermaVector&, const VermaVector&) = default;

    // e.g. "-1/2 L_{-2} v + L_{-1}^2 v"
    std::string to_string() const;

private:
    void check_compatible(const VermaVector& o) const;

    HighestWeightParams params_;
    Terms terms_;
};

// Straightening engine for one Verma module. Memoizes L_n acting on each
// normal-ordered monomial; an instance is not meant to be shared across threads.
class VermaModule {
public:
    explicit VermaModule(HighestWeightParams params) : params_(std::move(params)) {}

    const HighestWeightParams& params() const { return params_; }

    // L_n e_w v_{c,h} in the PBW basis.
    const VermaVector::Terms& act(int n, const Partition& word);
    VermaVector apply(int n, const VermaVector& v);

private:
    HighestWeightParams params_;
    std::map<std::pair<int, Partition>, VermaVector::Terms> memo_;
};

VermaVector apply_mode(int n, const VermaVector& v);

// Grade-n vector annihilated by L_1 and L_2, normalized so the (1^n)
// coefficient is 1. nullopt when no such vector exists.
std::optional<VermaVector> singular_vector(const HighestWeightParams& params, int n);

// Transparent memo over singular_vector, keyed by (c, h, n). Thread-safe.
class SingularMemo {
public:
    using Key = std::tuple<Rational, Rational, int>;

    std::optional<VermaVector> get(const HighestWeightParams& params, int n);
    // Preload a known vector (e.g. from a cache file). Returns false if an
    // existing entry disagrees.
    bool insert(const HighestWeightParams& params, int n, const VermaVector& v);
    std::map<Key, VermaVector> solved_entries() const;

    long hits() const { return hits_; }
    long misses() const { return misses_; }

private:
    mutable std::mutex mutex_;
    std::map<Key, std::optional<VermaVector>> table_;
    std::atomic<long> hits_{0};
    std::atomic<long> misses_{0};
};

struct SubmoduleGenerator {
    int grade;
    VermaVector vector;
};

// Singular vectors generating the maximal proper submodule of the Verma
// module underlying an irreducible label: grades rs and (p-r)(q-s) for minimal
// models, grade i*s for the c_{1,q} series.
std::vector<SubmoduleGenerator> maximal_submodule_generators(const ModuleLabel& label,
                                                             SingularMemo* memo = nullptr);

// M(c_{1,q}, h) is irreducible iff 4qh + (q-1)^2 is not the square of an integer.
bool is_irreducible_verma_c1q(int q, const Rational& h);

// The canonical label (i' > 0, 0 < s' <= q) with |i'q - s'| = |iq - s|.
std::optional<C1qIrreducible> canonicalize_label_c1q(int q, long i, long s);

} // namespace virfusion
