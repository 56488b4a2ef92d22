#include "afree/borel.hpp"

#include "afree/algebra_io.hpp"
#include "afree/error.hpp"
#include "afree/groebner.hpp"
#include "afree/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace afree {

// ---------------------------------------------------------------------------
// Homogeneous space layout

int HomogeneousSpaceData::dimension() const
{
    int d = numerator_count * k * k;
    for (const auto& b : denominator)
        d -= b.rank * b.rank;
    return d;
}

HomogeneousSpaceData edge_sphere_layout(int k)
{
    if (k < 1)
        throw PreconditionError("edge sphere needs k >= 1");
    HomogeneousSpaceData h;
    h.k = k;
    h.numerator_count = k + 2;
    DenominatorBlock lower{"L", k - 1, {}};
    for (int f = 1; f <= k + 2; ++f)
        lower.factors.push_back(f);
    h.denominator.push_back(std::move(lower));
    for (int f = 2; f <= k + 2; ++f)
        h.denominator.push_back({"U" + std::to_string(f), k, {1, f}});
    return h;
}

HomogeneousSpaceData build_edge_sphere(int k)
{
    if (k < 2)
        throw PreconditionError("edge spheres are built for k >= 2 (got k=" + std::to_string(k) + ")");
    return edge_sphere_layout(k);
}

// ---------------------------------------------------------------------------
// Torus inclusions

std::vector<WeightMatrix> build_torus_inclusion(const Edge& e, int k, int r)
{
    if (k < 2)
        throw PreconditionError("torus inclusions are built for k >= 2");
    if (e.a == e.b)
        throw PreconditionError("edge endpoints must differ");
    if (e.a < 0 || e.b < 0 || e.a >= r || e.b >= r)
        throw PreconditionError("edge endpoint outside the acting torus");
    std::vector<WeightMatrix> blocks;
    for (int i = 0; i <= k; ++i) {
        WeightMatrix w(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(r), 0));
        for (int row = 0; row < k; ++row)
            w[static_cast<std::size_t>(row)][static_cast<std::size_t>(row < i ? e.a : e.b)] = 1;
        blocks.push_back(std::move(w));
    }
    return blocks;
}

WeightMatrix first_factor_weights(int k, int r)
{
    return WeightMatrix(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(r), 0));
}

TorusActionData assemble_action(const Graph& G, int k)
{
    if (k < 2)
        throw PreconditionError("torus actions are built for k >= 2");
    TorusActionData action;
    action.k = k;
    action.r = G.vertex_count();
    for (const auto& e : G.edges())
        action.spheres.push_back({e, build_torus_inclusion(e, k, action.r)});
    return action;
}

std::string write_action(const TorusActionData& action)
{
    std::ostringstream out;
    out << "action k=" << action.k << " r=" << action.r << "\n";
    for (const auto& s : action.spheres) {
        out << "sphere " << s.edge.a + 1 << " " << s.edge.b + 1 << "\n";
        for (std::size_t i = 0; i < s.blocks.size(); ++i) {
            out << "block " << i << "\n";
            for (const auto& row : s.blocks[i]) {
                for (std::size_t j = 0; j < row.size(); ++j)
                    out << (j ? " " : "") << row[j];
                out << "\n";
            }
        }
    }
    return out.str();
}

namespace {

int parse_keyed(const std::string& word, const std::string& key, std::size_t lineno)
{
    if (word.rfind(key + "=", 0) != 0)
        throw ParseError(lineno, "expected " + key + "=<int>");
    try {
        std::size_t used = 0;
        int v = std::stoi(word.substr(key.size() + 1), &used);
        if (used != word.size() - key.size() - 1)
            throw std::invalid_argument("trailing");
        return v;
    }
    catch (const std::exception&) {
        throw ParseError(lineno, "bad integer in " + word);
    }
}

}  // namespace

TorusActionData parse_action(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> words;
        for (std::string w; ls >> w;)
            words.push_back(w);
        if (!words.empty() && words[0][0] != '#')
            lines.emplace_back(lineno, std::move(words));
    }
    if (lines.empty() || lines[0].second.size() != 3 || lines[0].second[0] != "action")
        throw ParseError(lines.empty() ? 0 : lines[0].first, "expected header 'action k=<k> r=<r>'");
    TorusActionData action;
    action.k = parse_keyed(lines[0].second[1], "k", lines[0].first);
    action.r = parse_keyed(lines[0].second[2], "r", lines[0].first);
    if (action.k < 2 || action.r < 0)
        throw ParseError(lines[0].first, "k must be >= 2 and r >= 0");

    auto to_int = [](const std::string& w, std::size_t ln) {
        try {
            std::size_t used = 0;
            int v = std::stoi(w, &used);
            if (used != w.size())
                throw std::invalid_argument("trailing");
            return v;
        }
        catch (const std::exception&) {
            throw ParseError(ln, "bad integer '" + w + "'");
        }
    };

    std::size_t pos = 1;
    while (pos < lines.size()) {
        const auto& [ln, w] = lines[pos];
        if (w.size() != 3 || w[0] != "sphere")
            throw ParseError(ln, "expected 'sphere <a> <b>'");
        int a = to_int(w[1], ln) - 1, b = to_int(w[2], ln) - 1;
        if (a < 0 || b < 0 || a >= action.r || b >= action.r || a >= b)
            throw ParseError(ln, "sphere vertices must satisfy 1 <= a < b <= r");
        EdgeSphereAction sphere{{a, b}, {}};
        ++pos;
        for (int i = 0; i <= action.k; ++i) {
            if (pos >= lines.size() || lines[pos].second.size() != 2 || lines[pos].second[0] != "block" ||
                to_int(lines[pos].second[1], lines[pos].first) != i)
                throw ParseError(pos < lines.size() ? lines[pos].first : 0, "expected 'block " + std::to_string(i) + "'");
            ++pos;
            WeightMatrix m;
            for (int row = 0; row < action.k; ++row) {
                if (pos >= lines.size() || lines[pos].second.size() != static_cast<std::size_t>(action.r))
                    throw ParseError(pos < lines.size() ? lines[pos].first : 0,
                                     "expected a row of " + std::to_string(action.r) + " integers");
                std::vector<int> values;
                for (const auto& x : lines[pos].second)
                    values.push_back(to_int(x, lines[pos].first));
                m.push_back(std::move(values));
                ++pos;
            }
            sphere.blocks.push_back(std::move(m));
        }
        action.spheres.push_back(std::move(sphere));
    }
    return action;
}

// ---------------------------------------------------------------------------
// Model builder

std::size_t BiquotientModelBuilder::add_block(std::string name_prefix, int size)
{
    if (size < 0)
        throw PreconditionError("negative block size");
    std::size_t first = symbols_;
    if (size > 0) {
        blocks_.push_back({std::move(name_prefix), first, size, false});
        symbols_ += static_cast<std::size_t>(size);
    }
    return first;
}

std::size_t BiquotientModelBuilder::add_plain(std::string name)
{
    std::size_t first = symbols_;
    blocks_.push_back({std::move(name), first, 1, true});
    ++symbols_;
    return first;
}

void BiquotientModelBuilder::add_factor(std::string name_prefix, std::vector<LinearForm> denominator_roots,
                                        std::vector<LinearForm> torus_roots)
{
    if (denominator_roots.size() != torus_roots.size())
        throw PreconditionError("both sides of a numerator factor need the same number of roots");
    factors_.push_back({std::move(name_prefix), std::move(denominator_roots), std::move(torus_roots)});
}

namespace {

Integer factorial(unsigned n)
{
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// e_1..e_count of the given linear forms, as polynomials in the root symbols.
std::vector<Poly> elementary_of_forms(const PolyRing& R, const std::vector<LinearForm>& roots)
{
    std::vector<Poly> e(roots.size() + 1);
    e[0] = R.constant(1);
    for (const auto& form : roots) {
        std::vector<PolyTerm> terms;
        for (const auto& [sym, c] : form) {
            Exponents ex(R.variables(), 0);
            ex[sym] = 1;
            terms.push_back({std::move(ex), c});
        }
        Poly l = R.normalize(std::move(terms));
        for (std::size_t j = roots.size(); j >= 1; --j)
            e[j] = R.add(e[j], R.mul(l, e[j - 1]));
    }
    return e;
}

// Leading-term rewriting of Weyl-averaged polynomials in Chern classes.
class ChernRewriter {
public:
    struct BlockInfo {
        std::size_t first;
        int size;
        bool plain;
        std::vector<GenId> chern;  // c_1..c_size, or the single plain generator
    };

    ChernRewriter(std::vector<BlockInfo> blocks, std::size_t symbols, GeneratorSetPtr gens)
        : blocks_(std::move(blocks)), symbols_(symbols), gens_(std::move(gens))
    {
    }

    Element rewrite(const Poly& p)
    {
        // Average over the Weyl groups: x^α contributes m_λ / |orbit(α)|, stored
        // as the coefficient of its dominant (per-block decreasing) representative.
        std::map<Exponents, Rational> dom;
        for (const auto& t : p.terms) {
            Exponents key = t.exps;
            Integer orbit = 1;
            for (const auto& b : blocks_) {
                if (b.plain)
                    continue;
                auto begin = key.begin() + static_cast<std::ptrdiff_t>(b.first);
                auto end = begin + b.size;
                std::sort(begin, end, std::greater<>());
                orbit *= orbit_size(begin, end);
            }
            auto& slot = dom[key];
            slot += t.coef / Rational(orbit);
        }
        std::erase_if(dom, [](const auto& kv) { return kv.second == 0; });

        Element::Terms out;
        while (!dom.empty()) {
            auto lead = std::prev(dom.end());
            Exponents alpha = lead->first;
            Rational c = lead->second;

            std::vector<Factor> factors;
            std::vector<std::vector<std::pair<Exponents, Integer>>> parts;
            for (const auto& b : blocks_) {
                auto begin = alpha.begin() + static_cast<std::ptrdiff_t>(b.first);
                if (b.plain) {
                    if (*begin)
                        factors.push_back({b.chern[0], *begin});
                    parts.push_back({{Exponents{*begin}, Integer(1)}});
                    continue;
                }
                std::vector<std::uint32_t> powers(static_cast<std::size_t>(b.size));
                for (int i = 0; i < b.size; ++i) {
                    std::uint32_t next = i + 1 < b.size ? begin[i + 1] : 0;
                    powers[static_cast<std::size_t>(i)] = begin[i] - next;
                    if (powers[static_cast<std::size_t>(i)])
                        factors.push_back({b.chern[static_cast<std::size_t>(i)], powers[static_cast<std::size_t>(i)]});
                }
                parts.push_back(dominant_of_product(b.size, powers));
            }
            Element::Terms::value_type term{make_monomial(*gens_, factors), c};
            if (auto [it, ok] = out.insert(term); !ok)
                it->second += c;

            // Subtract c · (product of e-monomials) in dominant coordinates.
            std::vector<std::pair<Exponents, Integer>> combined{{Exponents(symbols_, 0), Integer(1)}};
            for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
                const auto& b = blocks_[bi];
                std::vector<std::pair<Exponents, Integer>> next;
                for (const auto& [ex, coef] : combined)
                    for (const auto& [sub, sc] : parts[bi]) {
                        Exponents e = ex;
                        std::copy(sub.begin(), sub.end(), e.begin() + static_cast<std::ptrdiff_t>(b.first));
                        next.emplace_back(std::move(e), coef * sc);
                    }
                combined = std::move(next);
            }
            for (const auto& [ex, coef] : combined) {
                auto& slot = dom[ex];
                slot -= c * Rational(coef);
                if (slot == 0)
                    dom.erase(ex);
            }
            if (dom.count(alpha))
                throw Error("internal error: Chern rewriting did not cancel its leading term");
        }
        return Element(gens_, std::move(out));
    }

private:
    template <class It>
    static Integer orbit_size(It begin, It end)
    {
        // begin..end sorted decreasingly: n! / Π (multiplicity)!
        Integer denom = 1;
        for (It i = begin; i != end;) {
            It j = i;
            while (j != end && *j == *i)
                ++j;
            denom *= factorial(static_cast<unsigned>(j - i));
            i = j;
        }
        return factorial(static_cast<unsigned>(end - begin)) / denom;
    }

    // Dominant monomials of e_1^{p_1} ⋯ e_n^{p_n} in n variables.
    const std::vector<std::pair<Exponents, Integer>>& dominant_of_product(int n, const std::vector<std::uint32_t>& p)
    {
        auto key = std::make_pair(n, p);
        if (auto it = cache_.find(key); it != cache_.end())
            return it->second;
        PolyRing R(static_cast<std::size_t>(n), MonomialOrder::lex);
        std::vector<LinearForm> vars(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            vars[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        auto e = elementary_of_forms(R, vars);
        Poly prod = R.constant(1);
        for (int i = 0; i < n; ++i)
            for (std::uint32_t k = 0; k < p[static_cast<std::size_t>(i)]; ++k)
                prod = R.mul(prod, e[static_cast<std::size_t>(i) + 1]);
        std::vector<std::pair<Exponents, Integer>> dominant;
        for (const auto& t : prod.terms)
            if (std::is_sorted(t.exps.begin(), t.exps.end(), std::greater<>()))
                dominant.emplace_back(t.exps, numerator(t.coef));
        return cache_.emplace(key, std::move(dominant)).first->second;
    }

    std::vector<BlockInfo> blocks_;
    std::size_t symbols_;
    GeneratorSetPtr gens_;
    std::map<std::pair<int, std::vector<std::uint32_t>>, std::vector<std::pair<Exponents, Integer>>> cache_;
};

}  // namespace

SullivanAlgebra BiquotientModelBuilder::build() const
{
    SullivanAlgebraBuilder b;
    std::vector<ChernRewriter::BlockInfo> infos;
    for (const auto& blk : blocks_) {
        ChernRewriter::BlockInfo info{blk.first, blk.size, blk.plain, {}};
        if (blk.plain)
            info.chern.push_back(b.add_generator(blk.prefix, 2));
        else
            for (int i = 1; i <= blk.size; ++i)
                info.chern.push_back(b.add_generator(blk.prefix + "_" + std::to_string(i), 2 * i));
        infos.push_back(std::move(info));
    }
    std::vector<std::vector<GenId>> odd;
    for (const auto& f : factors_) {
        std::vector<GenId> ids;
        for (std::size_t i = 1; i <= f.h_roots.size(); ++i)
            ids.push_back(b.add_generator(f.prefix + "_" + std::to_string(i), static_cast<int>(2 * i - 1)));
        odd.push_back(std::move(ids));
    }
    const auto& gens = b.generators();
    ChernRewriter rewriter(std::move(infos), symbols_, gens);
    PolyRing R(symbols_, MonomialOrder::grlex);
    for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
        const auto& f = factors_[fi];
        auto eh = elementary_of_forms(R, f.h_roots);
        auto et = elementary_of_forms(R, f.t_roots);
        for (std::size_t i = 1; i <= f.h_roots.size(); ++i)
            b.set_differential(odd[fi][i - 1], rewriter.rewrite(eh[i]) - rewriter.rewrite(et[i]));
    }
    return b.build();
}

// ---------------------------------------------------------------------------
// Borel models

std::string torus_generator_name(int j) { return "t" + std::to_string(j + 1); }

namespace {

std::string sphere_prefix(const std::optional<Edge>& sphere)
{
    if (!sphere)
        return "";
    return "s" + std::to_string(sphere->a + 1) + "_" + std::to_string(sphere->b + 1) + "_";
}

// Adds one edge sphere; `weights` is null for the trivial torus.
void add_sphere(BiquotientModelBuilder& B, const HomogeneousSpaceData& space, const std::optional<Edge>& edge,
                const std::vector<WeightMatrix>* weights, const std::vector<std::size_t>& torus_symbols)
{
    const std::string prefix = sphere_prefix(edge);
    const int k = space.k;
    std::vector<std::size_t> first;
    for (const auto& blk : space.denominator)
        first.push_back(B.add_block(prefix + "c" + blk.label, blk.rank));

    for (int f = 1; f <= space.numerator_count; ++f) {
        std::vector<LinearForm> h(static_cast<std::size_t>(k)), t(static_cast<std::size_t>(k));
        for (std::size_t bi = 0; bi < space.denominator.size(); ++bi) {
            const auto& blk = space.denominator[bi];
            if (std::find(blk.factors.begin(), blk.factors.end(), f) == blk.factors.end())
                continue;
            // Standard inclusion: coordinate m of the block lands on coordinate m.
            for (int m = 0; m < blk.rank; ++m)
                h[static_cast<std::size_t>(m)][first[bi] + static_cast<std::size_t>(m)] += 1;
        }
        if (weights && f >= 2) {
            const WeightMatrix& w = (*weights)[static_cast<std::size_t>(f - 2)];
            for (int m = 0; m < k; ++m)
                for (std::size_t j = 0; j < torus_symbols.size(); ++j)
                    if (int c = w[static_cast<std::size_t>(m)][j]; c != 0)
                        t[static_cast<std::size_t>(m)][torus_symbols[j]] += c;
        }
        for (auto* side : {&h, &t})
            for (auto& form : *side)
                std::erase_if(form, [](const auto& kv) { return kv.second == 0; });
        B.add_factor(prefix + "v" + std::to_string(f), std::move(h), std::move(t));
    }
}

}  // namespace

SullivanAlgebra borel_model(const TorusActionData& action)
{
    BiquotientModelBuilder B;
    std::vector<std::size_t> torus;
    for (int j = 0; j < action.r; ++j)
        torus.push_back(B.add_plain(torus_generator_name(j)));
    HomogeneousSpaceData space = build_edge_sphere(action.k);
    for (const auto& s : action.spheres) {
        if (s.blocks.size() != static_cast<std::size_t>(action.k) + 1)
            throw PreconditionError("sphere needs k+1 weight blocks");
        for (const auto& w : s.blocks)
            if (w.size() != static_cast<std::size_t>(action.k) ||
                std::any_of(w.begin(), w.end(), [&](const auto& row) { return row.size() != static_cast<std::size_t>(action.r); }))
                throw PreconditionError("weight block must be k x r");
        add_sphere(B, space, s.edge, &s.blocks, torus);
    }
    return B.build();
}

SullivanAlgebra borel_model(const HomogeneousSpaceData& space)
{
    BiquotientModelBuilder B;
    add_sphere(B, space, std::nullopt, nullptr, {});
    return B.build();
}

std::string volume_generator_name(const std::optional<Edge>& sphere, int factor, int k)
{
    return sphere_prefix(sphere) + "v" + std::to_string(factor) + "_" + std::to_string(k);
}

// ---------------------------------------------------------------------------
// Verifications

KernelCheckReport claim1_kernel_check(int k)
{
    KernelCheckReport rep;
    rep.k = k;
    HomogeneousSpaceData space = build_edge_sphere(k);
    SullivanAlgebra model = borel_model(space);
    const GeneratorSet& gens = *model.generators();
    const int factors = space.numerator_count;

    // Linear part of d vol_f: coefficients on single generators.
    std::vector<std::map<GenId, Rational>> linear(static_cast<std::size_t>(factors));
    std::vector<GenId> targets;
    for (int f = 1; f <= factors; ++f) {
        Element d = apply_differential(model, model.generator(volume_generator_name(std::nullopt, f, k)));
        for (const auto& [m, c] : d.terms())
            if (m.factors().size() == 1 && m.factors()[0].exponent == 1) {
                linear[static_cast<std::size_t>(f - 1)][m.factors()[0].id] = c;
                targets.push_back(m.factors()[0].id);
            }
    }
    std::vector<GenId> top;  // c_k of U(k)_f for f = 2..k+2
    for (int f = 2; f <= factors; ++f) {
        auto id = gens.find("cU" + std::to_string(f) + "_" + std::to_string(k));
        if (!id)
            throw Error("internal error: missing top Chern class of U(k)_" + std::to_string(f));
        top.push_back(*id);
        targets.push_back(*id);
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

    bool ok = true;
    for (int f = 1; f <= factors; ++f) {
        const auto& col = linear[static_cast<std::size_t>(f - 1)];
        std::string image;
        for (const auto& [id, c] : col)
            image += (image.empty() ? "" : " + ") + (c == 1 ? std::string() : to_string(c) + "*") + gens[id].name;
        bool shape;
        if (f == 1)
            shape = col.size() == top.size() &&
                    std::all_of(top.begin(), top.end(), [&](GenId id) { return col.count(id) && col.at(id) == 1; });
        else
            shape = col.size() == 1 && col.count(top[static_cast<std::size_t>(f - 2)]) &&
                    col.at(top[static_cast<std::size_t>(f - 2)]) == 1;
        ok = ok && shape;
        rep.lines.push_back("linear part of d vol_" + std::to_string(f) + " = " + (image.empty() ? "0" : image) +
                            (shape ? "" : "  [unexpected]"));
    }

    DenseMatrix m(targets.size(), std::vector<Rational>(static_cast<std::size_t>(factors), Rational(0)));
    for (std::size_t row = 0; row < targets.size(); ++row)
        for (int f = 0; f < factors; ++f)
            if (auto it = linear[static_cast<std::size_t>(f)].find(targets[row]); it != linear[static_cast<std::size_t>(f)].end())
                m[row][static_cast<std::size_t>(f)] = it->second;
    auto kernel = kernel_basis(m, static_cast<std::size_t>(factors));
    rep.kernel_dimension = kernel.size();
    if (kernel.size() == 1 && kernel[0][0] != 0) {
        Rational scale = 1 / kernel[0][0];
        for (auto& x : kernel[0])
            rep.kernel_vector.push_back(x * scale);
    }
    bool expected_kernel = rep.kernel_vector.size() == static_cast<std::size_t>(factors) &&
                           std::all_of(rep.kernel_vector.begin() + 1, rep.kernel_vector.end(),
                                       [](const Rational& x) { return x == -1; });
    ok = ok && kernel.size() == 1 && expected_kernel;

    std::string kv;
    for (std::size_t i = 0; i < rep.kernel_vector.size(); ++i) {
        const Rational& x = rep.kernel_vector[i];
        std::string term = "vol_" + std::to_string(i + 1);
        if (i == 0)
            kv += (x == 1 ? "" : to_string(x) + "*") + term;
        else
            kv += (x < 0 ? " - " : " + ") + (abs(x) == 1 ? std::string() : to_string(abs(x)) + "*") + term;
    }
    rep.lines.push_back("kernel dimension " + std::to_string(kernel.size()) + (kv.empty() ? "" : ", spanned by " + kv));
    rep.ok = ok;
    return rep;
}

VolumeCheckReport verify_volume_differential(const SullivanAlgebra& model, const TorusActionData& action,
                                             const Edge& edge)
{
    VolumeCheckReport rep;
    rep.edge = edge;
    auto sphere = std::find_if(action.spheres.begin(), action.spheres.end(),
                               [&](const EdgeSphereAction& s) { return s.edge == edge; });
    if (sphere == action.spheres.end())
        throw PreconditionError("no sphere for edge (" + std::to_string(edge.a + 1) + "," +
                                std::to_string(edge.b + 1) + ")");
    const int k = action.k;
    Element vol = model.generator(volume_generator_name(edge, 1, k));
    for (int f = 2; f <= k + 2; ++f)
        vol = vol - model.generator(volume_generator_name(edge, f, k));
    Element d = apply_differential(model, vol);

    const GeneratorSet& gens = *model.generators();
    std::vector<bool> is_torus(gens.size(), false);
    for (int j = 0; j < action.r; ++j)
        if (auto id = gens.find(torus_generator_name(j)))
            is_torus[*id] = true;
    Element::Terms pure;
    for (const auto& [m, c] : d.terms())
        if (std::all_of(m.factors().begin(), m.factors().end(), [&](const Factor& f) { return is_torus[f.id]; }))
            pure.emplace(m, c);
    Element found(model.generators(), std::move(pure));

    GenId ta = *gens.find(torus_generator_name(edge.a));
    GenId tb = *gens.find(torus_generator_name(edge.b));
    Element::Terms sum;
    for (int l = 0; l <= k; ++l) {
        std::vector<Factor> fs;
        if (k - l > 0)
            fs.push_back({ta, static_cast<std::uint32_t>(k - l)});
        if (l > 0)
            fs.push_back({tb, static_cast<std::uint32_t>(l)});
        if (ta > tb)
            std::reverse(fs.begin(), fs.end());
        sum.emplace(make_monomial(gens, std::move(fs)), -1);
    }
    Element expected(model.generators(), std::move(sum));

    rep.found = format_element(found);
    rep.expected = format_element(expected);
    rep.sign = found == expected ? 1 : found == -expected ? -1 : 0;
    rep.ok = rep.sign != 0;
    return rep;
}

VolumeCheckReport verify_volume_differential(const Graph& G, int k, const Edge& edge)
{
    auto action = assemble_action(G, k);
    return verify_volume_differential(borel_model(action), action, edge);
}

BorelCheckReport check_borel(const Graph& G, int k)
{
    BorelCheckReport rep;
    HomogeneousSpaceData space = build_edge_sphere(k);
    SullivanAlgebra sphere_model = borel_model(space);
    int dim = space.dimension();
    int model_dim = formal_dimension_estimate(sphere_model);
    bool dim_ok = dim == 2 * k - 1 && model_dim == dim;
    rep.lines.push_back("edge sphere dimension " + std::to_string(dim) + " (model " + std::to_string(model_dim) +
                        ", expected " + std::to_string(2 * k - 1) + ")" + (dim_ok ? "" : "  [FAIL]"));

    auto action = assemble_action(G, k);
    SullivanAlgebra model = borel_model(action);
    rep.well_formed = check_well_formed(model);
    rep.lines.push_back(std::string("Borel model well-formed: ") + (rep.well_formed.ok() ? "yes" : "no"));
    for (const auto& issue : rep.well_formed.issues)
        rep.lines.push_back("  " + issue);

    rep.kernel = claim1_kernel_check(k);
    for (const auto& l : rep.kernel.lines)
        rep.lines.push_back(l);

    std::optional<int> sign;
    bool uniform = true;
    for (const auto& e : G.edges()) {
        auto v = verify_volume_differential(model, action, e);
        if (v.sign != 0) {
            if (sign && *sign != v.sign)
                uniform = false;
            sign = v.sign;
        }
        rep.lines.push_back("edge (" + std::to_string(e.a + 1) + "," + std::to_string(e.b + 1) +
                            "): torus part of d vol = " + v.found + (v.ok ? "" : "  [expected " + v.expected + "]"));
        rep.volumes.push_back(std::move(v));
    }
    rep.global_sign = uniform && sign ? *sign : (G.edges().empty() ? 1 : 0);
    bool volumes_ok = std::all_of(rep.volumes.begin(), rep.volumes.end(), [](const auto& v) { return v.ok; });
    if (!G.edges().empty())
        rep.lines.push_back(rep.global_sign == 1    ? "global sign: equals -sum on every edge"
                            : rep.global_sign == -1 ? "global sign: equals +sum on every edge (opposite orientation)"
                                                    : "global sign: inconsistent across edges");
    rep.ok = dim_ok && rep.well_formed.ok() && rep.kernel.ok && volumes_ok && rep.global_sign != 0;
    return rep;
}

}  // namespace afree
