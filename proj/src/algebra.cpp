#include "afree/algebra.hpp"

#include "afree/error.hpp"

#include <algorithm>
#include <cctype>

namespace afree {

namespace {

bool valid_name(std::string_view name)
{
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
        return false;
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

GenId GeneratorSet::add(std::string name, int degree)
{
    if (!valid_name(name))
        throw PreconditionError("invalid generator name '" + name + "'");
    if (degree <= 0)
        throw PreconditionError("generator " + name + " must have positive degree");
    if (by_name_.count(name))
        throw PreconditionError("duplicate generator " + name);
    auto id = static_cast<GenId>(gens_.size());
    by_name_.emplace(name, id);
    gens_.push_back({id, std::move(name), degree});
    return id;
}

std::optional<GenId> GeneratorSet::find(std::string_view name) const
{
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

bool operator==(const GeneratorSet& a, const GeneratorSet& b)
{
    if (a.gens_.size() != b.gens_.size())
        return false;
    for (std::size_t i = 0; i < a.gens_.size(); ++i)
        if (a.gens_[i].name != b.gens_[i].name || a.gens_[i].degree != b.gens_[i].degree)
            return false;
    return true;
}

bool same_universe(const GeneratorSetPtr& a, const GeneratorSetPtr& b)
{
    return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------
// Monomials

struct MonomialOps {
    static Monomial make(std::vector<Factor> factors, int degree)
    {
        Monomial m;
        m.factors_ = std::move(factors);
        m.degree_ = degree;
        return m;
    }
};

Monomial Monomial::power(const GeneratorSet& gens, GenId id, std::uint32_t exponent)
{
    if (id >= gens.size())
        throw StructuralError("generator id out of range");
    if (exponent == 0)
        return {};
    if (gens[id].is_odd() && exponent > 1)
        throw PreconditionError("odd generator " + gens[id].name + " squares to zero");
    return MonomialOps::make({{id, exponent}}, gens[id].degree * static_cast<int>(exponent));
}

std::uint32_t Monomial::length() const
{
    std::uint32_t n = 0;
    for (const auto& f : factors_)
        n += f.exponent;
    return n;
}

std::uint32_t Monomial::exponent(GenId id) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), id,
                               [](const Factor& f, GenId g) { return f.id < g; });
    return it != factors_.end() && it->id == id ? it->exponent : 0;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t n = std::min(fa.size(), fb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (fa[i].id != fb[i].id)
            return fa[i].id < fb[i].id;
        if (fa[i].exponent != fb[i].exponent)
            return fa[i].exponent > fb[i].exponent;
    }
    return fa.size() < fb.size();
}

std::pair<int, Monomial> multiply(const GeneratorSet& gens, const Monomial& a, const Monomial& b)
{
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::vector<Factor> out;
    out.reserve(fa.size() + fb.size());

    std::size_t odd_left = 0;  // odd factors of `a` not yet emitted
    for (const auto& f : fa)
        odd_left += gens[f.id].is_odd();

    std::size_t swaps = 0;
    std::size_t i = 0, j = 0;
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size() || (i < fa.size() && fa[i].id < fb[j].id)) {
            odd_left -= gens[fa[i].id].is_odd();
            out.push_back(fa[i++]);
        }
        else if (i == fa.size() || fb[j].id < fa[i].id) {
            if (gens[fb[j].id].is_odd())
                swaps += odd_left;
            out.push_back(fb[j++]);
        }
        else {
            if (gens[fa[i].id].is_odd())
                return {0, {}};
            out.push_back({fa[i].id, fa[i].exponent + fb[j].exponent});
            ++i;
            ++j;
        }
    }
    return {swaps % 2 ? -1 : 1, MonomialOps::make(std::move(out), a.degree() + b.degree())};
}

Monomial make_monomial(const GeneratorSet& gens, std::vector<Factor> factors)
{
    int degree = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Factor& f = factors[i];
        if (f.id >= gens.size())
            throw StructuralError("generator id out of range");
        if (i > 0 && factors[i - 1].id >= f.id)
            throw PreconditionError("monomial factors must have strictly increasing ids");
        if (f.exponent == 0 || (gens[f.id].is_odd() && f.exponent > 1))
            throw PreconditionError("invalid exponent for generator " + gens[f.id].name);
        degree += gens[f.id].degree * static_cast<int>(f.exponent);
    }
    return MonomialOps::make(std::move(factors), degree);
}

// ---------------------------------------------------------------------------
// Elements

Element::Element(GeneratorSetPtr gens) : gens_(std::move(gens)) {}

Element::Element(GeneratorSetPtr gens, Terms terms) : gens_(std::move(gens)), terms_(std::move(terms))
{
    std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
}

Element Element::scalar(GeneratorSetPtr gens, const Rational& c)
{
    return monomial(std::move(gens), Monomial{}, c);
}

Element Element::generator(GeneratorSetPtr gens, GenId id)
{
    auto m = Monomial::power(*gens, id);
    return monomial(std::move(gens), std::move(m));
}

Element Element::monomial(GeneratorSetPtr gens, Monomial m, const Rational& c)
{
    Element e(std::move(gens));
    if (c != 0)
        e.terms_.emplace(std::move(m), c);
    return e;
}

Rational Element::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Element::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    // Terms are ordered by degree first.
    int lo = terms_.begin()->first.degree();
    int hi = terms_.rbegin()->first.degree();
    if (lo != hi)
        return std::nullopt;
    return lo;
}

Element Element::operator-() const
{
    Element out(gens_);
    for (const auto& [m, c] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), m, -c);
    return out;
}

namespace {

void require_same(const Element& a, const Element& b)
{
    if (!same_universe(a.generators(), b.generators()))
        throw StructuralError("elements live over different generator sets");
}

void accumulate(Element::Terms& acc, const Monomial& m, const Rational& c)
{
    auto [it, inserted] = acc.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            acc.erase(it);
    }
}

}  // namespace

Element operator+(const Element& a, const Element& b)
{
    require_same(a, b);
    Element::Terms acc = a.terms();
    for (const auto& [m, c] : b.terms())
        accumulate(acc, m, c);
    return Element(a.generators(), std::move(acc));
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Rational& c, const Element& a)
{
    Element::Terms acc;
    if (c != 0)
        for (const auto& [m, v] : a.terms())
            acc.emplace_hint(acc.end(), m, c * v);
    return Element(a.generators(), std::move(acc));
}

bool operator==(const Element& a, const Element& b)
{
    return same_universe(a.generators(), b.generators()) && a.terms() == b.terms();
}

Element multiply(const Element& a, const Element& b)
{
    require_same(a, b);
    const GeneratorSet& gens = *a.generators();
    Element::Terms acc;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            auto [sign, m] = multiply(gens, ma, mb);
            if (sign != 0)
                accumulate(acc, m, sign > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
        }
    return Element(a.generators(), std::move(acc));
}

// ---------------------------------------------------------------------------
// Sullivan algebras

SullivanAlgebra::SullivanAlgebra(GeneratorSetPtr gens, std::vector<Element> differentials)
    : gens_(std::move(gens)), diffs_(std::move(differentials))
{
    diffs_.resize(gens_->size(), Element(gens_));
}

Element SullivanAlgebra::generator(std::string_view name) const
{
    auto id = gens_->find(name);
    if (!id)
        throw PreconditionError("unknown generator " + std::string(name));
    return generator(*id);
}

bool operator==(const SullivanAlgebra& a, const SullivanAlgebra& b)
{
    if (!same_universe(a.gens_, b.gens_))
        return false;
    for (std::size_t i = 0; i < a.diffs_.size(); ++i)
        if (a.diffs_[i].terms() != b.diffs_[i].terms())
            return false;
    return true;
}

GenId SullivanAlgebraBuilder::add_generator(std::string name, int degree)
{
    if (frozen_)
        throw PreconditionError("generator set already frozen");
    return pending_->add(std::move(name), degree);
}

const GeneratorSetPtr& SullivanAlgebraBuilder::generators()
{
    if (!frozen_)
        frozen_ = pending_;
    return frozen_;
}

void SullivanAlgebraBuilder::set_differential(GenId id, Element image)
{
    generators();
    if (id >= frozen_->size())
        throw PreconditionError("differential assigned to unknown generator");
    diffs_.insert_or_assign(id, std::move(image));
}

SullivanAlgebra SullivanAlgebraBuilder::build()
{
    const auto& gens = generators();
    std::vector<Element> diffs(gens->size(), Element(gens));
    for (auto& [id, e] : diffs_)
        diffs[id] = std::move(e);
    return SullivanAlgebra(gens, std::move(diffs));
}

namespace {

// Left/right multiplication of an element by a single monomial.
Element::Terms times_left(const GeneratorSet& gens, const Monomial& left, const Element::Terms& terms)
{
    Element::Terms out;
    for (const auto& [m, c] : terms) {
        auto [sign, p] = multiply(gens, left, m);
        if (sign != 0)
            accumulate(out, p, sign > 0 ? c : Rational(-c));
    }
    return out;
}

Element::Terms times_right(const GeneratorSet& gens, const Element::Terms& terms, const Monomial& right)
{
    Element::Terms out;
    for (const auto& [m, c] : terms) {
        auto [sign, p] = multiply(gens, m, right);
        if (sign != 0)
            accumulate(out, p, sign > 0 ? c : Rational(-c));
    }
    return out;
}

void differential_of_monomial(const SullivanAlgebra& A, const Monomial& m, const Rational& coef,
                              Element::Terms& acc)
{
    const GeneratorSet& gens = *A.generators();
    const auto& fs = m.factors();
    int prefix_degree = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const Factor& f = fs[i];
        const Element& dg = A.differential(f.id);
        if (!dg.is_zero()) {
            // prefix · g^{e-1} · dg · suffix, with g^{e-1} even (e > 1 only for even g)
            std::vector<Factor> before(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(i));
            if (f.exponent > 1)
                before.push_back({f.id, f.exponent - 1});
            std::vector<Factor> after(fs.begin() + static_cast<std::ptrdiff_t>(i) + 1, fs.end());
            Monomial left = make_monomial(gens, std::move(before));
            Monomial right = make_monomial(gens, std::move(after));

            Rational scale = coef * f.exponent;
            if (prefix_degree % 2)
                scale = -scale;
            auto terms = times_right(gens, times_left(gens, left, dg.terms()), right);
            for (const auto& [p, c] : terms)
                accumulate(acc, p, scale * c);
        }
        prefix_degree += gens[f.id].degree * static_cast<int>(f.exponent);
    }
}

}  // namespace

Element apply_differential(const SullivanAlgebra& A, const Element& e)
{
    if (!same_universe(A.generators(), e.generators()))
        throw StructuralError("element references generators outside the algebra");
    Element::Terms acc;
    for (const auto& [m, c] : e.terms())
        differential_of_monomial(A, m, c, acc);
    return Element(A.generators(), std::move(acc));
}

ValidationReport check_well_formed(const SullivanAlgebra& A)
{
    ValidationReport report;
    const GeneratorSet& gens = *A.generators();
    bool structural_ok = true;
    for (const auto& g : gens.all()) {
        const Element& dg = A.differential(g.id);
        if (!same_universe(dg.generators(), A.generators())) {
            report.issues.push_back("d " + g.name + " refers to a foreign generator set");
            structural_ok = false;
            continue;
        }
        for (const auto& [m, c] : dg.terms()) {
            for (const auto& f : m.factors())
                if (f.id >= gens.size()) {
                    report.issues.push_back("d " + g.name + " references dangling generator id " +
                                            std::to_string(f.id));
                    structural_ok = false;
                }
            if (m.degree() != g.degree + 1) {
                report.issues.push_back("degree violation: d " + g.name + " has a term of degree " +
                                        std::to_string(m.degree()) + ", expected " +
                                        std::to_string(g.degree + 1));
                break;
            }
        }
    }
    if (!structural_ok)
        return report;
    for (const auto& g : gens.all()) {
        Element dd = apply_differential(A, A.differential(g.id));
        if (!dd.is_zero())
            report.issues.push_back("d^2 " + g.name + " != 0");
    }
    return report;
}

namespace {

struct BasisWalker {
    const GeneratorSet& gens;
    std::size_t budget;
    std::vector<Monomial>& out;
    std::vector<Factor> current;
    std::vector<int> min_degree_suffix;  // smallest degree among generators id..end

    void walk(GenId id, int remaining, int degree_so_far)
    {
        if (remaining == 0) {
            if (out.size() >= budget)
                throw BudgetExceeded("graded piece exceeds basis budget of " + std::to_string(budget));
            out.push_back(MonomialOps::make(current, degree_so_far));
            return;
        }
        if (id >= gens.size() || min_degree_suffix[id] > remaining)
            return;
        const Generator& g = gens[id];
        std::uint32_t max_exp = g.is_odd() ? 1u : static_cast<std::uint32_t>(remaining / g.degree);
        if (g.is_odd() && g.degree > remaining)
            max_exp = 0;
        // Larger exponents on smaller ids come first.
        for (std::uint32_t e = max_exp + 1; e-- > 0;) {
            int used = g.degree * static_cast<int>(e);
            if (e > 0)
                current.push_back({id, e});
            walk(id + 1, remaining - used, degree_so_far + used);
            if (e > 0)
                current.pop_back();
        }
    }
};

}  // namespace

std::vector<Monomial> monomial_basis(const GeneratorSet& gens, int n, std::size_t budget)
{
    std::vector<Monomial> out;
    if (n < 0)
        return out;
    BasisWalker w{gens, budget, out, {}, std::vector<int>(gens.size() + 1, 0)};
    w.min_degree_suffix[gens.size()] = std::numeric_limits<int>::max();
    for (std::size_t i = gens.size(); i-- > 0;)
        w.min_degree_suffix[i] = std::min(gens[static_cast<GenId>(i)].degree, w.min_degree_suffix[i + 1]);
    w.walk(0, n, 0);
    return out;
}

std::vector<Monomial> monomial_basis(const SullivanAlgebra& A, int n, std::size_t budget)
{
    return monomial_basis(*A.generators(), n, budget);
}

SparseMatrix differential_matrix(const SullivanAlgebra& A, int n, std::size_t budget)
{
    auto source = monomial_basis(A, n, budget);
    auto target = monomial_basis(A, n + 1, budget);
    std::map<Monomial, std::size_t, MonomialLess> index;
    for (std::size_t i = 0; i < target.size(); ++i)
        index.emplace(target[i], i);

    SparseMatrix m(target.size(), source.size());
    for (std::size_t j = 0; j < source.size(); ++j) {
        Element::Terms acc;
        differential_of_monomial(A, source[j], 1, acc);
        auto& col = m.columns[j];
        col.reserve(acc.size());
        for (auto& [mono, c] : acc)
            col.emplace_back(index.at(mono), std::move(c));
        std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    }
    return m;
}

SquareZeroReport check_square_zero_matrices(const SullivanAlgebra& A, int max_degree, std::size_t budget)
{
    SquareZeroReport rep;
    std::optional<SparseMatrix> lower;
    for (int n = 0; n <= max_degree; ++n) {
        try {
            if (!lower)
                lower = differential_matrix(A, n, budget);
            SparseMatrix upper = differential_matrix(A, n + 1, budget);
            rep.largest_basis = std::max({rep.largest_basis, lower->cols, upper.cols, upper.rows});
            if (!multiply(upper, *lower).is_zero()) {
                rep.ok = false;
                if (!rep.failing_degree)
                    rep.failing_degree = n;
            }
            lower = std::move(upper);
            rep.checked_through = n;
        }
        catch (const BudgetExceeded&) {
            rep.stopped_at = n;
            break;
        }
    }
    return rep;
}

}  // namespace afree
