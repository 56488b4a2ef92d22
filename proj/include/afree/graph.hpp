#pragma once

// Undirected simple graphs and the brute-force colouring oracle.
//
// Vertices are 0-based in the API and 1-based in every text format
// (DIMACS, colouring files, generator names).

#include "afree/algebra.hpp"

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace afree {

struct Edge {
    int a;  // a < b
    int b;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
public:
    explicit Graph(int vertices = 0);

    /// Adds {a, b}; duplicates are ignored. Throws PreconditionError on a loop
    /// or an out-of-range vertex.
    void add_edge(int a, int b);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    /// Sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int a, int b) const;

    friend bool operator==(const Graph& x, const Graph& y) { return x.n_ == y.n_ && x.edges_ == y.edges_; }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// colors[v] for each vertex v.
struct Coloring {
    std::vector<int> colors;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Parses DIMACS .col text ("c" comments, one "p edge n m" line, "e u v" lines).
/// Throws ParseError with the line number.
Graph parse_dimacs(std::string_view text);
std::string write_dimacs(const Graph& g);

bool is_proper(const Graph& g, const Coloring& c);

/// A proper colouring with at most `colors` colours, or nullopt. Backtracking
/// over vertices in decreasing-degree order, colours tried ascending.
std::optional<Coloring> is_colorable(const Graph& g, int colors);

/// Reports disconnectedness when `require_connected` is set.
ValidationReport validate(const Graph& g, bool require_connected);
bool is_connected(const Graph& g);

/// Vertex sets of the connected components, each ascending, ordered by their
/// smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// The subgraph on `vertices`; vertex vertices[i] becomes vertex i.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// "v <vertex> <color>" lines, vertices 1-based.
std::string write_coloring(const Coloring& c);

namespace graphs {

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph edgeless(int n);
/// Erdős–Rényi G(n, p).
Graph random(int n, double p, std::mt19937_64& rng);
/// Random graph with a hidden proper colouring using `colors` classes.
Graph planted_colorable(int n, int colors, double p, std::mt19937_64& rng);
/// The graph on n vertices whose edges are the set bits of `mask` in
/// lexicographic pair order (0,1), (0,2), ..., (n-2,n-1).
Graph from_mask(int n, unsigned long long mask);

}  // namespace graphs

}  // namespace afree
