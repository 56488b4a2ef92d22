#pragma once

// Encoders from graphs to pure Sullivan algebras, and the almost-freeness
// decision for the torus actions realising them.
//
// Shifted family (k ≥ 2): deg x_i = 2, d x_i = 0, and per edge (a,b)
//   deg y_(a,b) = 2k−1,  d y_(a,b) = Σ_{l=0}^{k} x_a^{k−l} x_b^l.
// Its cohomology is finite-dimensional iff the graph is not (k+1)-colourable,
// and finite-dimensional equivariant cohomology is equivalent to the action
// being almost free.
//
// Original family (k ≥ 3): the same with k replaced by k−1.

#include "afree/algebra.hpp"
#include "afree/graph.hpp"
#include "afree/polynomial.hpp"

#include <optional>
#include <string>

namespace afree {

enum class EncodingVariant { original, shifted };

struct EncodingParams {
    EncodingVariant variant = EncodingVariant::shifted;
    int k = 2;
};

std::string vertex_generator_name(int vertex);
std::string edge_generator_name(const Edge& e);

/// Throws PreconditionError for k < 2.
SullivanAlgebra encode_shifted(const Graph& G, int k);
/// Throws PreconditionError for k < 3.
SullivanAlgebra encode_original(const Graph& G, int k);
SullivanAlgebra encode(const Graph& G, const EncodingParams& params);

enum class Verdict { almost_free, not_almost_free };
enum class DecisionMethod { groebner, certificate_search };

const char* to_string(Verdict v);
const char* to_string(DecisionMethod m);
/// "groebner" or "certificate_search" (also "certificate-search").
DecisionMethod parse_decision_method(const std::string& name);

struct Decision {
    Verdict verdict = Verdict::almost_free;
    /// Present iff not_almost_free, always verified. witness->colors[i] is the
    /// colour of witness_vertices[i]; the other vertices are sent to 0.
    std::optional<Coloring> witness;
    /// All vertices when G is (k+1)-colourable, otherwise one colourable
    /// connected component.
    std::vector<int> witness_vertices;
    DecisionMethod method = DecisionMethod::groebner;
    int k = 2;
    double seconds = 0;
    /// Gröbner: S-pair reductions. Certificate search: assignments examined.
    std::size_t work = 0;
};

struct DecisionOptions {
    MonomialOrder order = MonomialOrder::grevlex;
    std::size_t step_budget = 1'000'000;
};

/// Decides almost-freeness of the action encoded by encode_shifted(G, k).
/// Requires k ≥ 2 and at least one vertex.
///
/// The encoded algebra is the tensor product of the algebras of the connected
/// components, so the action is almost free iff no component is
/// (k+1)-colourable. For connected graphs this is "G is not (k+1)-colourable".
Decision decide_almost_free(const Graph& G, int k, DecisionMethod method, const DecisionOptions& options = {});

/// Human-readable report, or key=value lines when `porcelain` is set.
std::string write_decision(const Decision& d, bool porcelain);

}  // namespace afree
