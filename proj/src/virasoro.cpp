#include "virfusion/virasoro.hpp"

#include "virfusion/linear_solve.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace virfusion {

TParam::TParam(Rational t) : t_(std::move(t))
{
    if (t_.is_zero())
        throw std::invalid_argument("TParam: t must be nonzero");
}

Rational central_charge_pq(int p, int q)
{
    if (p < 1 || q < 1)
        throw std::invalid_argument("central_charge_pq: p, q must be positive");
    return Rational(13) - Rational(6) * (Rational(q, p) + Rational(p, q));
}

Rational central_charge_t(const TParam& t)
{
    return Rational(13) - Rational(6) * t.value() - Rational(6) / t.value();
}

Rational kac_weight_pq(int p, int q, int r, int s)
{
    long a = static_cast<long>(s) * p - static_cast<long>(r) * q;
    long d = p - q;
    return Rational(a * a - d * d, 4L * p * q);
}

Rational weight_c1q(int q, long i, long s)
{
    if (q < 1)
        throw std::invalid_argument("weight_c1q: q must be positive");
    long m = i * q - s;
    long d = q - 1;
    return Rational(m * m - d * d, 4L * q);
}

Rational weight_alpha_beta_t(int alpha, int beta, const TParam& t)
{
    const Rational& tv = t.value();
    return Rational(static_cast<long>(alpha) * alpha - 1, 4) * tv - Rational(static_cast<long>(alpha) * beta - 1, 2)
         + Rational(static_cast<long>(beta) * beta - 1, 4) / tv;
}

MinimalIrreducible MinimalIrreducible::make(int p, int q, int r, int s)
{
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw InvalidLabel("minimal model needs coprime p, q > 1, got (" + std::to_string(p) + ","
                           + std::to_string(q) + ")");
    if (r < 1 || r >= p || s < 1 || s >= q)
        throw InvalidLabel("label (" + std::to_string(r) + "," + std::to_string(s) + ") outside the Kac box of ("
                           + std::to_string(p) + "," + std::to_string(q) + ")");
    return {p, q, r, s};
}

C1qIrreducible C1qIrreducible::make(int q, int i, int s)
{
    if (q < 1)
        throw InvalidLabel("c_{1,q} label needs q >= 1");
    if (i < 1 || s < 1 || s > q)
        throw InvalidLabel("c_{1," + std::to_string(q) + "} label (" + std::to_string(i) + "," + std::to_string(s)
                           + ") needs i > 0 and 0 < s <= q");
    return {q, i, s};
}

HighestWeightParams params_of(const ModuleLabel& label)
{
    struct Visitor {
        HighestWeightParams operator()(const MinimalIrreducible& m) const
        {
            return {central_charge_pq(m.p, m.q), kac_weight_pq(m.p, m.q, m.r, m.s)};
        }
        HighestWeightParams operator()(const C1qIrreducible& l) const
        {
            return {central_charge_pq(1, l.q), weight_c1q(l.q, l.i, l.s)};
        }
        HighestWeightParams operator()(const GenericVerma& g) const { return {g.c, g.h}; }
    };
    return std::visit(Visitor{}, label);
}

std::string label_to_string(const ModuleLabel& label)
{
    struct Visitor {
        std::string operator()(const MinimalIrreducible& m) const
        {
            return "L(c_{" + std::to_string(m.p) + "," + std::to_string(m.q) + "}; " + std::to_string(m.r) + ","
                 + std::to_string(m.s) + ")";
        }
        std::string operator()(const C1qIrreducible& l) const
        {
            return "L(c_{1," + std::to_string(l.q) + "}; " + std::to_string(l.i) + "," + std::to_string(l.s) + ")";
        }
        std::string operator()(const GenericVerma& g) const
        {
            return "M(" + g.c.to_string() + ", " + g.h.to_string() + ")";
        }
    };
    return std::visit(Visitor{}, label);
}

// --- VermaVector ---

VermaVector::VermaVector(HighestWeightParams params, Terms terms) : params_(std::move(params))
{
    for (auto& [w, c] : terms)
        add(w, c);
}

VermaVector VermaVector::highest_weight(const HighestWeightParams& params)
{
    return monomial(params, Partition{});
}

VermaVector VermaVector::monomial(const HighestWeightParams& params, const Partition& word, const Rational& coeff)
{
    VermaVector v(params);
    v.add(word, coeff);
    return v;
}

Rational VermaVector::coefficient(const Partition& word) const
{
    auto it = terms_.find(word);
    return it == terms_.end() ? Rational(0) : it->second;
}

int VermaVector::grade() const
{
    int g = 0;
    for (const auto& [w, c] : terms_)
        g = std::max(g, w.size());
    return g;
}

bool VermaVector::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    int g = terms_.begin()->first.size();
    for (const auto& [w, c] : terms_)
        if (w.size() != g)
            return false;
    return true;
}

void VermaVector::add(const Partition& word, const Rational& coeff)
{
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(word, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void VermaVector::check_compatible(const VermaVector& o) const
{
    if (params_ != o.params_)
        throw std::invalid_argument("VermaVector: vectors live in different Verma modules");
}

VermaVector& VermaVector::operator+=(const VermaVector& o)
{
    check_compatible(o);
    for (const auto& [w, c] : o.terms_)
        add(w, c);
    return *this;
}

VermaVector& VermaVector::operator-=(const VermaVector& o)
{
    check_compatible(o);
    for (const auto& [w, c] : o.terms_)
        add(w, -c);
    return *this;
}

VermaVector& VermaVector::operator*=(const Rational& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_)
        c *= s;
    return *this;
}

std::string VermaVector::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational mag = c.abs();
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (mag != Rational(1))
            os << mag << " ";
        const auto& parts = w.parts();
        for (size_t i = 0; i < parts.size();) {
            size_t j = i;
            while (j < parts.size() && parts[j] == parts[i])
                ++j;
            os << "L_{-" << parts[i] << "}";
            if (j - i > 1)
                os << "^" << (j - i);
            os << " ";
            i = j;
        }
        os << "v";
    }
    return os.str();
}

// --- straightening ---

const VermaVector::Terms& VermaModule::act(int n, const Partition& word)
{
    auto key = std::make_pair(n, word);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    VermaVector::Terms res;
    auto add = [&res](const Partition& w, const Rational& c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = res.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                res.erase(it);
        }
    };

    if (n == 0) {
        add(word, params_.h + Rational(word.size()));
    } else if (word.empty()) {
        if (n < 0)
            add(Partition{-n}, Rational(1));
    } else if (n < 0 && -n >= word.leading()) {
        add(word.prepend(-n), Rational(1));
    } else {
        // L_n L_{-a} rest = L_{-a} (L_n rest) + [L_n, L_{-a}] rest
        const int a = word.leading();
        const Partition rest = word.tail();
        const VermaVector::Terms& inner = act(n, rest);
        for (const auto& [u, cu] : inner) {
            const VermaVector::Terms& outer = act(-a, u);
            for (const auto& [w2, c2] : outer)
                add(w2, cu * c2);
        }
        if (n + a != 0) {
            const VermaVector::Terms& comm = act(n - a, rest);
            for (const auto& [w2, c2] : comm)
                add(w2, Rational(n + a) * c2);
        }
        if (n == a)
            add(rest, params_.c * Rational(static_cast<long>(n) * n * n - n, 12));
    }
    return memo_.emplace(std::move(key), std::move(res)).first->second;
}

VermaVector VermaModule::apply(int n, const VermaVector& v)
{
    if (v.params() != params_)
        throw std::invalid_argument("VermaModule::apply: vector from a different module");
    VermaVector out(params_);
    for (const auto& [w, c] : v.terms())
        for (const auto& [w2, c2] : act(n, w))
            out.add(w2, c * c2);
    return out;
}

VermaVector apply_mode(int n, const VermaVector& v)
{
    VermaModule module(v.params());
    return module.apply(n, v);
}

std::optional<VermaVector> singular_vector(const HighestWeightParams& params, int n)
{
    if (n < 1)
        throw std::invalid_argument("singular_vector: grade must be positive");
    const std::vector<Partition> basis = enumerate_partitions(n);
    const Partition lead = Partition::ones(n);
    std::vector<Partition> unknowns;
    for (const auto& p : basis)
        if (p != lead)
            unknowns.push_back(p);

    VermaModule module(params);
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (int m = 1; m <= 2 && m <= n; ++m) {
        for (const auto& target : enumerate_partitions(n - m)) {
            std::vector<Rational> row;
            row.reserve(unknowns.size());
            for (const auto& u : unknowns) {
                const auto& img = module.act(m, u);
                auto it = img.find(target);
                row.push_back(it == img.end() ? Rational(0) : it->second);
            }
            const auto& img = module.act(m, lead);
            auto it = img.find(target);
            rhs.push_back(it == img.end() ? Rational(0) : -it->second);
            rows.push_back(std::move(row));
        }
    }

    SolveResult sol = solve_linear(std::move(rows), std::move(rhs), static_cast<int>(unknowns.size()));
    if (sol.status == SolveStatus::Inconsistent)
        return std::nullopt;
    if (sol.status == SolveStatus::Underdetermined)
        throw NonUniqueSolution("singular_vector: solution space at (c,h) = (" + params.c.to_string() + ", "
                                + params.h.to_string() + "), grade " + std::to_string(n)
                                + " has positive dimension");
    VermaVector v = VermaVector::monomial(params, lead);
    for (size_t j = 0; j < unknowns.size(); ++j)
        v.add(unknowns[j], sol.solution[j]);
    return v;
}

// --- memo ---

std::optional<VermaVector> SingularMemo::get(const HighestWeightParams& params, int n)
{
    Key key{params.c, params.h, n};
    {
        std::lock_guard lock(mutex_);
        if (auto it = table_.find(key); it != table_.end()) {
            ++hits_;
            return it->second;
        }
    }
    ++misses_;
    std::optional<VermaVector> v = singular_vector(params, n);
    std::lock_guard lock(mutex_);
    return table_.try_emplace(std::move(key), std::move(v)).first->second;
}

bool SingularMemo::insert(const HighestWeightParams& params, int n, const VermaVector& v)
{
    std::lock_guard lock(mutex_);
    auto [it, inserted] = table_.try_emplace(Key{params.c, params.h, n}, v);
    return inserted || it->second == v;
}

std::map<SingularMemo::Key, VermaVector> SingularMemo::solved_entries() const
{
    std::lock_guard lock(mutex_);
    std::map<Key, VermaVector> out;
    for (const auto& [k, v] : table_)
        if (v)
            out.emplace(k, *v);
    return out;
}

// --- submodule structure ---

namespace {

SubmoduleGenerator solve_generator(const HighestWeightParams& params, int grade, SingularMemo* memo,
                                   const ModuleLabel& label)
{
    std::optional<VermaVector> v = memo ? memo->get(params, grade) : singular_vector(params, grade);
    if (!v)
        throw SolverFailure("no singular vector at grade " + std::to_string(grade) + " for " + label_to_string(label));
    return {grade, std::move(*v)};
}

} // namespace

std::vector<SubmoduleGenerator> maximal_submodule_generators(const ModuleLabel& label, SingularMemo* memo)
{
    const HighestWeightParams params = params_of(label);
    if (const auto* m = std::get_if<MinimalIrreducible>(&label)) {
        return {solve_generator(params, m->r * m->s, memo, label),
                solve_generator(params, (m->p - m->r) * (m->q - m->s), memo, label)};
    }
    if (const auto* l = std::get_if<C1qIrreducible>(&label))
        return {solve_generator(params, l->i * l->s, memo, label)};
    throw std::invalid_argument("maximal_submodule_generators: needs an irreducible label, got "
                                + label_to_string(label));
}

bool is_irreducible_verma_c1q(int q, const Rational& h)
{
    if (q < 1)
        throw std::invalid_argument("is_irreducible_verma_c1q: q must be positive");
    Rational d = Rational(4L * q) * h + Rational(static_cast<long>(q - 1) * (q - 1));
    if (!d.is_integer() || d.sign() < 0)
        return true;
    return !mpz_perfect_square_p(d.numerator().get_mpz_t());
}

std::optional<C1qIrreducible> canonicalize_label_c1q(int q, long i, long s)
{
    if (q < 1)
        return std::nullopt;
    long m = std::labs(i * q - s);
    long ip = m / q + 1;
    long sp = ip * q - m;
    return C1qIrreducible{q, static_cast<int>(ip), static_cast<int>(sp)};
}

} // namespace virfusion
