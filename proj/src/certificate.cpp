#include "afree/certificate.hpp"

#include "afree/error.hpp"
#include "afree/reduction.hpp"

#include <charconv>
#include <sstream>

namespace afree {

namespace {

std::optional<int> parse_index(std::string_view s)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || v < 1)
        return std::nullopt;
    return v;
}

std::optional<int> parse_vertex_generator(std::string_view name)
{
    if (name.size() < 2 || name[0] != 'x')
        return std::nullopt;
    auto v = parse_index(name.substr(1));
    if (!v)
        return std::nullopt;
    return *v - 1;
}

}  // namespace

std::optional<Edge> parse_edge_generator(std::string_view name)
{
    if (name.size() < 5 || name.substr(0, 2) != "y_")
        return std::nullopt;
    auto rest = name.substr(2);
    auto us = rest.find('_');
    if (us == std::string_view::npos)
        return std::nullopt;
    auto a = parse_index(rest.substr(0, us));
    auto b = parse_index(rest.substr(us + 1));
    if (!a || !b || *a >= *b)
        return std::nullopt;
    return Edge{*a - 1, *b - 1};
}

Assignment assignment_from_coloring(const Coloring& col, int k)
{
    if (k < 1)
        throw PreconditionError("k must be positive");
    Assignment asg;
    asg.m = k + 1;
    for (std::size_t v = 0; v < col.colors.size(); ++v) {
        int c = col.colors[v];
        if (c < 0 || c > k)
            throw PreconditionError("colour " + std::to_string(c) + " of vertex " + std::to_string(v + 1) +
                                    " outside {0.." + std::to_string(k) + "}");
        asg.exponents.emplace(static_cast<int>(v), c);
    }
    return asg;
}

MorphismVerifier::MorphismVerifier(const SullivanAlgebra& A)
{
    const GeneratorSet& gens = *A.generators();
    std::vector<int> vertex_of(gens.size(), -1);
    for (const auto& g : gens.all()) {
        if (g.is_odd())
            continue;
        auto v = parse_vertex_generator(g.name);
        if (g.degree != 2 || !v)
            throw PreconditionError("even generator " + g.name + " is not a degree-2 vertex generator x<i>");
        if (!A.differential(g.id).is_zero())
            throw PreconditionError("vertex generator " + g.name + " has nonzero differential");
        vertex_of[g.id] = *v;
        present_.push_back(*v);
        vertices_ = std::max(vertices_, *v + 1);
    }
    for (const auto& g : gens.all()) {
        if (!g.is_odd())
            continue;
        Relation rel{g.name, parse_edge_generator(g.name), {}};
        for (const auto& [mono, c] : A.differential(g.id).terms()) {
            Term t{c, {}};
            std::uint32_t zdeg = 0;
            bool vanishes = false;
            for (const auto& f : mono.factors()) {
                if (vertex_of[f.id] < 0) {
                    vanishes = true;  // odd generators map to 0
                    break;
                }
                t.powers.emplace_back(vertex_of[f.id], f.exponent);
                zdeg += f.exponent;
            }
            if (vanishes)
                continue;
            if (rel.by_z_degree.size() <= zdeg)
                rel.by_z_degree.resize(zdeg + 1);
            rel.by_z_degree[zdeg].push_back(std::move(t));
        }
        if (!rel.by_z_degree.empty())
            relations_.push_back(std::move(rel));
    }
}

VerificationResult MorphismVerifier::check(const Assignment& asg) const
{
    if (asg.m < 1)
        throw PreconditionError("root order must be positive");
    std::vector<int> e(static_cast<std::size_t>(vertices_), 0);
    for (int v : present_) {
        auto it = asg.exponents.find(v);
        if (it == asg.exponents.end())
            throw PreconditionError("missing assignment for x" + std::to_string(v + 1));
        e[static_cast<std::size_t>(v)] = it->second;
    }
    CyclotomicField field(asg.m);
    for (const auto& rel : relations_) {
        for (const auto& group : rel.by_z_degree) {
            if (group.empty())
                continue;
            // Σ c·ζ^{Σ p_i e_i}: one slot per power of ζ, then a single reduction mod Φ_m.
            std::vector<Rational> acc(static_cast<std::size_t>(asg.m), Rational(0));
            for (const auto& t : group) {
                long s = 0;
                for (const auto& [v, p] : t.powers)
                    s += static_cast<long>(p) * e[static_cast<std::size_t>(v)];
                acc[static_cast<std::size_t>(((s % asg.m) + asg.m) % asg.m)] += t.coef;
            }
            if (!field.reduce(std::move(acc)).is_zero()) {
                VerificationResult r;
                r.failing_generator = rel.generator;
                r.failing_edge = rel.edge;
                r.reason = "d " + rel.generator + " does not vanish under the assignment";
                if (rel.edge)
                    r.reason += " (edge " + std::to_string(rel.edge->a + 1) + "," +
                                std::to_string(rel.edge->b + 1) + ")";
                return r;
            }
        }
    }
    return {true, "all differentials vanish", std::nullopt, std::nullopt};
}

bool MorphismVerifier::accepts(const std::vector<int>& e, int m) const
{
    CyclotomicField field(m);
    std::vector<Rational> acc(static_cast<std::size_t>(m));
    for (const auto& rel : relations_)
        for (const auto& group : rel.by_z_degree) {
            if (group.empty())
                continue;
            std::fill(acc.begin(), acc.end(), Rational(0));
            for (const auto& t : group) {
                long s = 0;
                for (const auto& [v, p] : t.powers)
                    s += static_cast<long>(p) * e[static_cast<std::size_t>(v)];
                acc[static_cast<std::size_t>(((s % m) + m) % m)] += t.coef;
            }
            if (!field.reduce(acc).is_zero())
                return false;
        }
    return true;
}

VerificationResult verify_morphism(const SullivanAlgebra& A, const Assignment& asg)
{
    return MorphismVerifier(A).check(asg);
}

bool verify_is_proper_iff(const Coloring& col, const Graph& G, int k)
{
    auto A = encode_shifted(G, k);
    bool algebraic = verify_morphism(A, assignment_from_coloring(col, k)).accepted;
    return algebraic == is_proper(G, col);
}

Assignment Certificate::assignment() const
{
    Assignment asg;
    asg.m = k + 1;
    for (const auto& [v, x] : values) {
        if (x < 0 || x > k)
            throw PreconditionError("value " + std::to_string(x) + " of vertex " + std::to_string(v + 1) +
                                    " outside {0.." + std::to_string(k) + "}");
        asg.exponents.emplace(v, x);
    }
    return asg;
}

Certificate parse_certificate(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::optional<Certificate> cert;
    std::optional<char> kind;
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#' || head == "c")
            continue;
        if (!cert) {
            std::string karg;
            if (head != "cert" || !(ls >> karg) || karg.rfind("k=", 0) != 0)
                throw ParseError(lineno, "expected header 'cert k=<k>'");
            auto k = parse_index(std::string_view(karg).substr(2));
            if (!k)
                throw ParseError(lineno, "bad k in certificate header");
            cert.emplace();
            cert->k = *k;
            continue;
        }
        if (head != "v" && head != "e")
            throw ParseError(lineno, "expected 'v <vertex> <color>' or 'e <vertex> <exponent>'");
        if (kind && *kind != head[0])
            throw ParseError(lineno, "certificate mixes 'v' and 'e' lines");
        kind = head[0];
        long long vertex = 0, value = 0;
        std::string rest;
        if (!(ls >> vertex >> value) || (ls >> rest))
            throw ParseError(lineno, "expected two integers");
        if (vertex < 1 || vertex > 10'000'000)
            throw ParseError(lineno, "vertex index out of range");
        if (value < 0 || value > cert->k)
            throw ParseError(lineno, "value out of range {0.." + std::to_string(cert->k) + "}");
        if (!cert->values.emplace(static_cast<int>(vertex - 1), static_cast<int>(value)).second)
            throw ParseError(lineno, "vertex " + std::to_string(vertex) + " listed twice");
    }
    if (!cert)
        throw ParseError(0, "missing header 'cert k=<k>'");
    cert->form = kind == 'e' ? Certificate::Form::raw : Certificate::Form::coloring;
    return *cert;
}

std::string write_certificate(const Certificate& cert)
{
    std::string out = "cert k=" + std::to_string(cert.k) + "\n";
    char tag = cert.form == Certificate::Form::raw ? 'e' : 'v';
    for (const auto& [v, x] : cert.values)
        out += std::string(1, tag) + " " + std::to_string(v + 1) + " " + std::to_string(x) + "\n";
    return out;
}

Certificate certificate_from_coloring(const Coloring& col, int k)
{
    Certificate c;
    c.k = k;
    c.form = Certificate::Form::coloring;
    for (std::size_t v = 0; v < col.colors.size(); ++v)
        c.values.emplace(static_cast<int>(v), col.colors[v]);
    return c;
}

}  // namespace afree
