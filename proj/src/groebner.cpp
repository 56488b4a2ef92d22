#include "afree/groebner.hpp"

#include "afree/algebra_io.hpp"
#include "afree/error.hpp"

#include <algorithm>
#include <functional>

namespace afree {

PolyIdeal pure_ideal(const SullivanAlgebra& A)
{
    const GeneratorSet& gens = *A.generators();
    PolyIdeal I;
    std::vector<long> var_of(gens.size(), -1);
    for (const auto& g : gens.all()) {
        if (g.is_odd())
            continue;
        if (g.degree != 2 || !A.differential(g.id).is_zero())
            throw PreconditionError("not a pure algebra: even generator " + g.name +
                                    " must have degree 2 and zero differential");
        var_of[g.id] = static_cast<long>(I.variables.size());
        I.variables.push_back(g.name);
    }
    PolyRing R(I.variables.size(), MonomialOrder::grevlex);
    for (const auto& g : gens.all()) {
        if (!g.is_odd())
            continue;
        std::vector<PolyTerm> terms;
        for (const auto& [m, c] : A.differential(g.id).terms()) {
            Exponents e(I.variables.size(), 0);
            for (const auto& f : m.factors()) {
                if (var_of[f.id] < 0)
                    throw PreconditionError("not a pure algebra: d " + g.name + " involves odd generators");
                e[static_cast<std::size_t>(var_of[f.id])] = f.exponent;
            }
            terms.push_back({std::move(e), c});
        }
        Poly p = R.normalize(std::move(terms));
        if (!p.is_zero())
            I.generators.push_back(std::move(p));
    }
    return I;
}

Poly normal_form(const PolyRing& R, const Poly& f, const std::vector<Poly>& basis)
{
    Poly p = f;
    Poly rem;
    std::size_t start = 0;
    while (start < p.terms.size()) {
        const PolyTerm& lt = p.terms[start];
        const Poly* div = nullptr;
        for (const auto& g : basis)
            if (!g.is_zero() && divides(g.leading().exps, lt.exps)) {
                div = &g;
                break;
            }
        if (!div) {
            rem.terms.push_back(lt);
            ++start;
            continue;
        }
        Exponents s(R.variables());
        for (std::size_t i = 0; i < s.size(); ++i)
            s[i] = lt.exps[i] - div->leading().exps[i];
        Rational c = lt.coef / div->leading().coef;
        Poly tail;
        tail.terms.assign(p.terms.begin() + static_cast<std::ptrdiff_t>(start) + 1, p.terms.end());
        Poly g_tail;
        g_tail.terms.assign(div->terms.begin() + 1, div->terms.end());
        p = R.sub(tail, R.shift(g_tail, s, c));
        start = 0;
    }
    return rem;
}

namespace {

struct Pair {
    std::size_t i, j;
    Exponents lcm;
    std::uint32_t degree;
};

class Buchberger {
public:
    Buchberger(const PolyRing& R, std::size_t budget) : R_(R), budget_(budget) {}

    void add_input(Poly p)
    {
        p = R_.monic(normal_form(R_, p, active_polys()));
        if (!p.is_zero())
            update(std::move(p));
    }

    void run()
    {
        while (!pairs_.empty()) {
            auto best = std::min_element(pairs_.begin(), pairs_.end(), [this](const Pair& a, const Pair& b) {
                if (a.degree != b.degree)
                    return a.degree < b.degree;
                return R_.compare(a.lcm, b.lcm) < 0;
            });
            Pair pr = *best;
            pairs_.erase(best);
            if (++steps_ > budget_)
                throw BudgetExceeded("Buchberger step budget of " + std::to_string(budget_) + " exhausted");
            Poly s = spoly(polys_[pr.i], polys_[pr.j], pr.lcm);
            Poly h = R_.monic(normal_form(R_, s, active_polys()));
            if (!h.is_zero())
                update(std::move(h));
        }
    }

    std::vector<Poly> reduced_basis() const
    {
        std::vector<Poly> g = active_polys();
        std::vector<Poly> out;
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::vector<Poly> others;
            for (std::size_t j = 0; j < g.size(); ++j)
                if (j != i)
                    others.push_back(g[j]);
            Poly lead;
            lead.terms.push_back(g[i].leading());
            Poly tail;
            tail.terms.assign(g[i].terms.begin() + 1, g[i].terms.end());
            out.push_back(R_.add(lead, normal_form(R_, tail, others)));
        }
        std::sort(out.begin(), out.end(),
                  [this](const Poly& a, const Poly& b) { return R_.compare(a.leading().exps, b.leading().exps) < 0; });
        return out;
    }

    std::size_t steps() const { return steps_; }

private:
    std::vector<Poly> active_polys() const
    {
        std::vector<Poly> out;
        for (std::size_t i = 0; i < polys_.size(); ++i)
            if (active_[i])
                out.push_back(polys_[i]);
        return out;
    }

    Poly spoly(const Poly& f, const Poly& g, const Exponents& l) const
    {
        Exponents sf(l.size()), sg(l.size());
        for (std::size_t i = 0; i < l.size(); ++i) {
            sf[i] = l[i] - f.leading().exps[i];
            sg[i] = l[i] - g.leading().exps[i];
        }
        return R_.sub(R_.shift(f, sf, 1 / f.leading().coef), R_.shift(g, sg, 1 / g.leading().coef));
    }

    Pair make_pair(std::size_t i, std::size_t j) const
    {
        Exponents l = lcm(polys_[i].leading().exps, polys_[j].leading().exps);
        auto d = total_degree(l);
        return {i, j, std::move(l), d};
    }

    // Gebauer–Möller installation of a new basis element h.
    void update(Poly h)
    {
        std::size_t hi = polys_.size();
        polys_.push_back(std::move(h));
        active_.push_back(false);
        const Exponents& lh = polys_[hi].leading().exps;

        std::vector<Pair> C, D;
        for (std::size_t g = 0; g < hi; ++g)
            if (active_[g])
                C.push_back(make_pair(g, hi));
        while (!C.empty()) {
            Pair p = std::move(C.back());
            C.pop_back();
            const Exponents& lg = polys_[p.i].leading().exps;
            bool keep = coprime(lh, lg);
            if (!keep) {
                auto dominated = [&](const Pair& q) { return divides(q.lcm, p.lcm); };
                keep = std::none_of(C.begin(), C.end(), dominated) && std::none_of(D.begin(), D.end(), dominated);
            }
            if (keep)
                D.push_back(std::move(p));
        }
        std::vector<Pair> E;
        for (auto& p : D)
            if (!coprime(lh, polys_[p.i].leading().exps))
                E.push_back(std::move(p));

        std::vector<Pair> B;
        for (auto& p : pairs_) {
            Exponents l1 = lcm(polys_[p.i].leading().exps, lh);
            Exponents l2 = lcm(polys_[p.j].leading().exps, lh);
            if (!divides(lh, p.lcm) || l1 == p.lcm || l2 == p.lcm)
                B.push_back(std::move(p));
        }
        for (auto& p : E)
            B.push_back(std::move(p));
        pairs_ = std::move(B);

        for (std::size_t g = 0; g < hi; ++g)
            if (active_[g] && divides(lh, polys_[g].leading().exps))
                active_[g] = false;
        active_[hi] = true;
    }

    const PolyRing& R_;
    std::size_t budget_;
    std::size_t steps_ = 0;
    std::vector<Poly> polys_;
    std::vector<bool> active_;
    std::vector<Pair> pairs_;
};

}  // namespace

GroebnerBasis buchberger(const PolyIdeal& I, MonomialOrder order, const BuchbergerOptions& options)
{
    PolyRing R(I.variables.size(), order);
    Buchberger bb(R, options.step_budget);
    std::vector<Poly> inputs;
    for (const auto& g : I.generators)
        inputs.push_back(R.normalize(g.terms));
    for (const auto& p : inputs)
        bb.add_input(p);
    bb.run();

    GroebnerBasis gb;
    gb.order = order;
    gb.variables = I.variables.size();
    gb.polys = bb.reduced_basis();
    gb.pair_reductions = bb.steps();
    for (const auto& p : inputs)
        if (!normal_form(R, p, gb.polys).is_zero())
            throw Error("internal error: ideal generator does not reduce to zero modulo its Groebner basis");
    return gb;
}

bool is_zero_dimensional(const GroebnerBasis& gb, std::size_t variables)
{
    std::vector<bool> has_pure(variables, false);
    for (const auto& p : gb.polys) {
        const Exponents& e = p.leading().exps;
        std::size_t support = 0, last = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) {
                ++support;
                last = i;
            }
        if (support == 0)
            return true;  // the unit ideal
        if (support == 1)
            has_pure[last] = true;
    }
    return std::all_of(has_pure.begin(), has_pure.end(), [](bool b) { return b; });
}

namespace {

std::size_t count_standard(const GroebnerBasis& gb, std::size_t n, std::uint32_t degree)
{
    std::size_t count = 0;
    Exponents e(n, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
        if (n == 0) {
            if (left == 0)
                count += std::none_of(gb.polys.begin(), gb.polys.end(),
                                      [&](const Poly& p) { return divides(p.leading().exps, e); });
            return;
        }
        if (i + 1 == n) {
            e[i] = left;
            if (std::none_of(gb.polys.begin(), gb.polys.end(),
                             [&](const Poly& p) { return divides(p.leading().exps, e); }))
                ++count;
            e[i] = 0;
            return;
        }
        for (std::uint32_t k = 0; k <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(0, degree);
    return count;
}

}  // namespace

std::vector<std::size_t> quotient_hilbert(const PolyIdeal& I, const GroebnerBasis& gb, int cutoff)
{
    if (gb.variables != I.variables.size())
        throw PreconditionError("Groebner basis does not match the ideal");
    std::vector<std::size_t> dims(static_cast<std::size_t>(std::max(cutoff, -1) + 1), 0);
    for (int n = 0; n <= cutoff; n += 2)
        dims[static_cast<std::size_t>(n)] = count_standard(gb, gb.variables, static_cast<std::uint32_t>(n / 2));
    return dims;
}

std::optional<int> quotient_top_degree(const GroebnerBasis& gb, std::size_t variables)
{
    if (!is_zero_dimensional(gb, variables))
        return std::nullopt;
    // Standard monomials are closed under division, so the first empty degree
    // bounds them all.
    int top = -1;
    for (std::uint32_t d = 0;; ++d) {
        if (count_standard(gb, variables, d) == 0)
            break;
        top = static_cast<int>(2 * d);
    }
    if (top < 0)
        return std::nullopt;  // unit ideal: the quotient is zero
    return top;
}

std::string write_groebner(const GroebnerBasis& gb, const std::vector<std::string>& names)
{
    std::string out = std::string("groebner order=") + to_string(gb.order) + " vars=" +
                      std::to_string(gb.variables) + "\n";
    for (const auto& p : gb.polys)
        out += format_poly(p, names) + "\n";
    return out;
}

int formal_dimension_estimate(const SullivanAlgebra& A)
{
    int d = 0;
    for (const auto& g : A.generators()->all())
        d += g.is_odd() ? g.degree : -(g.degree - 1);
    return d;
}

int default_cohomology_cutoff(const SullivanAlgebra& A)
{
    return std::max(0, formal_dimension_estimate(A) + 6);
}

std::vector<std::size_t> cohomology_dims(const SullivanAlgebra& A, int cutoff, std::size_t basis_budget)
{
    if (cutoff < 0)
        throw PreconditionError("cutoff must be non-negative");
    std::vector<std::size_t> dims;
    std::size_t previous_rank = 0;  // rank of d: Λ^{n-1} → Λ^n
    for (int n = 0; n <= cutoff; ++n) {
        SparseMatrix m = differential_matrix(A, n, basis_budget);
        std::size_t r = rank(m);
        dims.push_back(m.cols - r - previous_rank);
        previous_rank = r;
    }
    return dims;
}

}  // namespace afree
