#pragma once

// Polynomial-time verification of colouring certificates.
//
// A certificate prescribes x_i ↦ ζ^{e_i}·z on the degree-2 generators of an
// encoded algebra, with ζ a primitive (k+1)-th root of unity and z of degree 2.
// Odd generators go to 0, so the map commutes with differentials exactly when
// every d y vanishes under the substitution in ℚ(ζ)[z].

#include "afree/algebra.hpp"
#include "afree/cyclotomic.hpp"
#include "afree/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace afree {

/// Vertex (0-based) → exponent in {0, …, m−1}.
struct Assignment {
    int m = 0;
    std::map<int, int> exponents;
};

/// m = k+1, e_i = colour of vertex i. Throws PreconditionError for a colour
/// outside {0, …, k}. Propriety is not checked here.
Assignment assignment_from_coloring(const Coloring& col, int k);

struct VerificationResult {
    bool accepted = false;
    std::string reason;
    /// Name of the first generator whose differential does not vanish.
    std::optional<std::string> failing_generator;
    /// Set when that generator is an edge generator y_<a>_<b>.
    std::optional<Edge> failing_edge;
};

/// Preprocessed form of an encoded algebra: for each odd generator the image
/// of its differential as (coefficient, x-exponent vector) terms grouped by
/// z-degree. Throws PreconditionError if the algebra is not of that shape
/// (even generators of degree 2 named x<i> with zero differential).
class MorphismVerifier {
public:
    explicit MorphismVerifier(const SullivanAlgebra& A);

    int vertex_count() const { return vertices_; }

    /// Throws PreconditionError when a vertex has no exponent.
    VerificationResult check(const Assignment& asg) const;

    /// Same check with a dense exponent vector (one per vertex); no coverage
    /// check and no failure details beyond accepted/rejected.
    bool accepts(const std::vector<int>& exponents, int m) const;

private:
    struct Term {
        Rational coef;
        std::vector<std::pair<int, std::uint32_t>> powers;  // (vertex, exponent)
    };
    struct Relation {
        std::string generator;
        std::optional<Edge> edge;
        std::vector<std::vector<Term>> by_z_degree;
    };
    int vertices_ = 0;
    std::vector<int> present_;
    std::vector<Relation> relations_;
};

VerificationResult verify_morphism(const SullivanAlgebra& A, const Assignment& asg);

/// verify_morphism(encode_shifted(G,k), assignment_from_coloring(col,k)).accepted
/// == is_proper(G, col). Returns true when both sides agree.
bool verify_is_proper_iff(const Coloring& col, const Graph& G, int k);

/// Certificate file: "cert k=<k>" then "v <vertex> <color>" lines (colouring
/// form) or "e <vertex> <exponent>" lines (raw form), vertices 1-based.
struct Certificate {
    enum class Form { coloring, raw };
    int k = 0;
    Form form = Form::coloring;
    std::map<int, int> values;  // 0-based vertex → colour or exponent

    Assignment assignment() const;
};

/// Throws ParseError with the line number.
Certificate parse_certificate(std::string_view text);
std::string write_certificate(const Certificate& cert);
Certificate certificate_from_coloring(const Coloring& col, int k);

/// Parses "y_<a>_<b>" (1-based) into a 0-based edge.
std::optional<Edge> parse_edge_generator(std::string_view name);

}  // namespace afree
