#include "afree/reduction.hpp"

#include "afree/certificate.hpp"
#include "afree/error.hpp"
#include "afree/groebner.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <cstdio>

namespace afree {

std::string vertex_generator_name(int vertex) { return "x" + std::to_string(vertex + 1); }

std::string edge_generator_name(const Edge& e)
{
    return "y_" + std::to_string(e.a + 1) + "_" + std::to_string(e.b + 1);
}

namespace {

// d y_(a,b) = Σ_{l=0}^{k} x_a^{k−l} x_b^l with y in degree 2k−1.
SullivanAlgebra encode_family(const Graph& G, int k)
{
    SullivanAlgebraBuilder b;
    std::vector<GenId> x;
    for (int v = 0; v < G.vertex_count(); ++v)
        x.push_back(b.add_generator(vertex_generator_name(v), 2));
    std::vector<GenId> y;
    for (const auto& e : G.edges())
        y.push_back(b.add_generator(edge_generator_name(e), 2 * k - 1));
    const auto& gens = b.generators();
    for (std::size_t i = 0; i < G.edges().size(); ++i) {
        const Edge& e = G.edges()[i];
        Element::Terms terms;
        for (int l = 0; l <= k; ++l) {
            std::vector<Factor> fs;
            if (k - l > 0)
                fs.push_back({x[static_cast<std::size_t>(e.a)], static_cast<std::uint32_t>(k - l)});
            if (l > 0)
                fs.push_back({x[static_cast<std::size_t>(e.b)], static_cast<std::uint32_t>(l)});
            terms.emplace(make_monomial(*gens, std::move(fs)), 1);
        }
        b.set_differential(y[i], Element(gens, std::move(terms)));
    }
    return b.build();
}

}  // namespace

SullivanAlgebra encode_shifted(const Graph& G, int k)
{
    if (k < 2)
        throw PreconditionError("the shifted encoding requires k >= 2 (got k=" + std::to_string(k) + ")");
    return encode_family(G, k);
}

SullivanAlgebra encode_original(const Graph& G, int k)
{
    if (k < 3)
        throw PreconditionError("the original encoding requires k >= 3 (got k=" + std::to_string(k) + ")");
    return encode_family(G, k - 1);
}

SullivanAlgebra encode(const Graph& G, const EncodingParams& params)
{
    return params.variant == EncodingVariant::shifted ? encode_shifted(G, params.k) : encode_original(G, params.k);
}

const char* to_string(Verdict v) { return v == Verdict::almost_free ? "AlmostFree" : "NotAlmostFree"; }

const char* to_string(DecisionMethod m)
{
    return m == DecisionMethod::groebner ? "groebner" : "certificate_search";
}

DecisionMethod parse_decision_method(const std::string& name)
{
    if (name == "groebner")
        return DecisionMethod::groebner;
    if (name == "certificate_search" || name == "certificate-search")
        return DecisionMethod::certificate_search;
    throw std::invalid_argument("unknown decision method '" + name + "'");
}

namespace {

// Exhausts all (k+1)^r exponent vectors in lexicographic order.
std::optional<Coloring> search_certificate(const MorphismVerifier& verifier, int r, int k, std::size_t& examined)
{
    int m = k + 1;
    std::vector<int> e(static_cast<std::size_t>(r), 0);
    while (true) {
        ++examined;
        if (verifier.accepts(e, m))
            return Coloring{e};
        int i = r - 1;
        while (i >= 0 && e[static_cast<std::size_t>(i)] == m - 1)
            e[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            return std::nullopt;
        ++e[static_cast<std::size_t>(i)];
    }
}

}  // namespace

namespace {

// Colours every vertex if possible, else one colourable component.
using ComponentSolver = std::function<std::optional<Coloring>(const Graph&)>;

std::optional<std::pair<std::vector<int>, Coloring>> component_witness(const Graph& G, const ComponentSolver& solve)
{
    std::optional<std::pair<std::vector<int>, Coloring>> partial;
    std::vector<int> all_colors(static_cast<std::size_t>(G.vertex_count()), 0);
    bool complete = true;
    for (const auto& comp : connected_components(G)) {
        auto col = solve(induced_subgraph(G, comp));
        if (!col) {
            complete = false;
            continue;
        }
        for (std::size_t i = 0; i < comp.size(); ++i)
            all_colors[static_cast<std::size_t>(comp[i])] = col->colors[i];
        if (!partial)
            partial.emplace(comp, *col);
    }
    if (!partial)
        return std::nullopt;
    if (complete) {
        std::vector<int> everyone(static_cast<std::size_t>(G.vertex_count()));
        std::iota(everyone.begin(), everyone.end(), 0);
        return std::make_pair(std::move(everyone), Coloring{std::move(all_colors)});
    }
    return partial;
}

}  // namespace

Decision decide_almost_free(const Graph& G, int k, DecisionMethod method, const DecisionOptions& options)
{
    if (G.vertex_count() < 1)
        throw PreconditionError("graph must have at least one vertex");
    auto start = std::chrono::steady_clock::now();
    SullivanAlgebra A = encode_shifted(G, k);

    Decision d;
    d.method = method;
    d.k = k;
    std::optional<std::pair<std::vector<int>, Coloring>> witness;
    if (method == DecisionMethod::groebner) {
        PolyIdeal I = pure_ideal(A);
        GroebnerBasis gb = buchberger(I, options.order, {options.step_budget});
        d.work = gb.pair_reductions;
        if (!is_zero_dimensional(gb, I.variables.size())) {
            witness = component_witness(G, [&](const Graph& c) { return is_colorable(c, k + 1); });
            if (!witness)
                throw Error("internal inconsistency: positive-dimensional ideal but no (k+1)-colourable component");
        }
    }
    else {
        witness = component_witness(G, [&](const Graph& c) {
            return search_certificate(MorphismVerifier(encode_shifted(c, k)), c.vertex_count(), k, d.work);
        });
    }
    if (witness) {
        d.verdict = Verdict::not_almost_free;
        Graph sub = induced_subgraph(G, witness->first);
        if (!verify_morphism(encode_shifted(sub, k), assignment_from_coloring(witness->second, k)).accepted)
            throw Error("internal inconsistency: witness colouring fails verification");
        d.witness_vertices = std::move(witness->first);
        d.witness = std::move(witness->second);
    }
    else {
        d.verdict = Verdict::almost_free;
    }
    d.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return d;
}

std::string write_decision(const Decision& d, bool porcelain)
{
    char time_ms[32];
    std::snprintf(time_ms, sizeof time_ms, "%.3f", d.seconds * 1000);
    std::string out;
    if (porcelain) {
        out += std::string("verdict=") + to_string(d.verdict) + "\n";
        out += std::string("method=") + to_string(d.method) + "\n";
        out += "k=" + std::to_string(d.k) + "\n";
        out += "work=" + std::to_string(d.work) + "\n";
        out += std::string("time_ms=") + time_ms + "\n";
        if (d.witness) {
            out += "witness=";
            for (std::size_t i = 0; i < d.witness->colors.size(); ++i)
                out += (i ? "," : "") + std::to_string(d.witness->colors[i]);
            out += "\nwitness_vertices=";
            for (std::size_t i = 0; i < d.witness_vertices.size(); ++i)
                out += (i ? "," : "") + std::to_string(d.witness_vertices[i] + 1);
            out += "\n";
        }
        return out;
    }
    out += std::string("verdict: ") + to_string(d.verdict) + "\n";
    out += std::string("method:  ") + to_string(d.method) + "\n";
    out += "k:       " + std::to_string(d.k) + " (" + std::to_string(d.k + 1) + " colours)\n";
    out += "work:    " + std::to_string(d.work) + "\n";
    out += std::string("time:    ") + time_ms + " ms\n";
    if (d.witness) {
        out += "witness:\n";
        for (std::size_t i = 0; i < d.witness->colors.size(); ++i)
            out += "v " + std::to_string(d.witness_vertices[i] + 1) + " " + std::to_string(d.witness->colors[i]) + "\n";
    }
    return out;
}

}  // namespace afree
