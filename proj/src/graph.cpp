#include "afree/graph.hpp"

#include "afree/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace afree {

Graph::Graph(int vertices) : n_(vertices), adj_(static_cast<std::size_t>(std::max(vertices, 0)))
{
    if (vertices < 0)
        throw PreconditionError("negative vertex count");
}

void Graph::add_edge(int a, int b)
{
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
        throw PreconditionError("vertex out of range");
    if (a == b)
        throw PreconditionError("loop at vertex " + std::to_string(a + 1));
    if (a > b)
        std::swap(a, b);
    Edge e{a, b};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e)
        return;
    edges_.insert(it, e);
    adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
    adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
}

bool Graph::has_edge(int a, int b) const
{
    if (a > b)
        std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

Graph parse_dimacs(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::optional<Graph> g;
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind == "c")
            continue;
        if (kind == "p") {
            if (g)
                throw ParseError(lineno, "duplicate 'p' line");
            std::string format;
            long long n = -1, m = -1;
            if (!(ls >> format >> n >> m) || (format != "edge" && format != "col"))
                throw ParseError(lineno, "expected 'p edge <n> <m>'");
            if (n < 1 || n > 1'000'000 || m < 0)
                throw ParseError(lineno, "vertex count must be positive");
            g.emplace(static_cast<int>(n));
        }
        else if (kind == "e") {
            if (!g)
                throw ParseError(lineno, "edge before 'p' line");
            long long u = 0, v = 0;
            std::string rest;
            if (!(ls >> u >> v) || (ls >> rest))
                throw ParseError(lineno, "expected 'e <u> <v>'");
            if (u < 1 || v < 1 || u > g->vertex_count() || v > g->vertex_count())
                throw ParseError(lineno, "vertex index out of range");
            if (u == v)
                throw ParseError(lineno, "loop edge at vertex " + std::to_string(u));
            g->add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
        }
        else {
            throw ParseError(lineno, "unknown line type '" + kind + "'");
        }
    }
    if (!g)
        throw ParseError(0, "missing 'p edge <n> <m>' line");
    return std::move(*g);
}

std::string write_dimacs(const Graph& g)
{
    std::string out = "p edge " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& e : g.edges())
        out += "e " + std::to_string(e.a + 1) + " " + std::to_string(e.b + 1) + "\n";
    return out;
}

bool is_proper(const Graph& g, const Coloring& c)
{
    if (c.colors.size() != static_cast<std::size_t>(g.vertex_count()))
        return false;
    return std::none_of(g.edges().begin(), g.edges().end(),
                        [&](const Edge& e) { return c.colors[e.a] == c.colors[e.b]; });
}

namespace {

bool extend(const Graph& g, const std::vector<int>& order, std::size_t pos, int colors, std::vector<int>& col)
{
    if (pos == order.size())
        return true;
    int v = order[pos];
    for (int c = 0; c < colors; ++c) {
        bool clash = std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                                 [&](int u) { return col[u] == c; });
        if (clash)
            continue;
        col[v] = c;
        if (extend(g, order, pos + 1, colors, col))
            return true;
    }
    col[v] = -1;
    return false;
}

}  // namespace

std::optional<Coloring> is_colorable(const Graph& g, int colors)
{
    if (colors < 1)
        throw PreconditionError("number of colours must be positive");
    std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.neighbors(a).size() > g.neighbors(b).size(); });
    std::vector<int> col(order.size(), -1);
    if (!extend(g, order, 0, colors, col))
        return std::nullopt;
    return Coloring{std::move(col)};
}

bool is_connected(const Graph& g)
{
    if (g.vertex_count() <= 1)
        return true;
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (!seen[u]) {
                seen[u] = true;
                ++count;
                stack.push_back(u);
            }
    }
    return count == g.vertex_count();
}

ValidationReport validate(const Graph& g, bool require_connected)
{
    ValidationReport r;
    for (const auto& e : g.edges())
        if (e.a == e.b)
            r.issues.push_back("loop at vertex " + std::to_string(e.a + 1));
    for (std::size_t i = 1; i < g.edges().size(); ++i)
        if (g.edges()[i] == g.edges()[i - 1])
            r.issues.push_back("duplicate edge");
    if (require_connected && !is_connected(g))
        r.issues.push_back("graph is disconnected");
    return r;
}

std::vector<std::vector<int>> connected_components(const Graph& g)
{
    std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0)
            continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (int u : g.neighbors(v))
                if (comp[static_cast<std::size_t>(u)] < 0) {
                    comp[static_cast<std::size_t>(u)] = id;
                    stack.push_back(u);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices)
{
    std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.vertex_count() || index[static_cast<std::size_t>(v)] >= 0)
            throw PreconditionError("induced subgraph needs distinct vertices of the graph");
        index[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    Graph h(static_cast<int>(vertices.size()));
    for (const auto& e : g.edges())
        if (index[static_cast<std::size_t>(e.a)] >= 0 && index[static_cast<std::size_t>(e.b)] >= 0)
            h.add_edge(index[static_cast<std::size_t>(e.a)], index[static_cast<std::size_t>(e.b)]);
    return h;
}

std::string write_coloring(const Coloring& c)
{
    std::string out;
    for (std::size_t v = 0; v < c.colors.size(); ++v)
        out += "v " + std::to_string(v + 1) + " " + std::to_string(c.colors[v]) + "\n";
    return out;
}

namespace graphs {

Graph complete(int n)
{
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            g.add_edge(a, b);
    return g;
}

Graph cycle(int n)
{
    Graph g(n);
    for (int a = 0; a < n; ++a)
        if (n > 1 && a != (a + 1) % n)
            g.add_edge(a, (a + 1) % n);
    return g;
}

Graph path(int n)
{
    Graph g(n);
    for (int a = 0; a + 1 < n; ++a)
        g.add_edge(a, a + 1);
    return g;
}

Graph edgeless(int n) { return Graph(n); }

Graph random(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng))
                g.add_edge(a, b);
    return g;
}

Graph planted_colorable(int n, int colors, double p, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> pick(0, colors - 1);
    std::vector<int> hidden(static_cast<std::size_t>(n));
    for (auto& c : hidden)
        c = pick(rng);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (hidden[a] != hidden[b] && coin(rng))
                g.add_edge(a, b);
    return g;
}

Graph from_mask(int n, unsigned long long mask)
{
    Graph g(n);
    int bit = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++bit)
            if (mask >> bit & 1ULL)
                g.add_edge(a, b);
    return g;
}

}  // namespace graphs

}  // namespace afree
