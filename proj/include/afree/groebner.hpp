#pragma once

// Finite-dimensionality decision for pure Sullivan algebras Λ(x) ⊗ Λ(y) with
// d x = 0 and d y ∈ ℚ[x]: the cohomology is finite-dimensional exactly when
// ℚ[x]/(d y) is, which a Gröbner basis decides.
//
// Variables carry cohomological degree 2; all Gröbner computations use the
// ordinary polynomial degree.

#include "afree/algebra.hpp"
#include "afree/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace afree {

struct PolyIdeal {
    std::vector<std::string> variables;
    std::vector<Poly> generators;  // canonical under grevlex, homogeneous
};

/// Ideal generated by the differentials of the odd generators of a pure
/// algebra. Variables are the even generators, which must all have degree 2
/// and zero differential; throws PreconditionError otherwise.
PolyIdeal pure_ideal(const SullivanAlgebra& A);

struct GroebnerBasis {
    MonomialOrder order = MonomialOrder::grevlex;
    std::size_t variables = 0;
    std::vector<Poly> polys;  // reduced, monic, sorted by increasing leading monomial
    std::size_t pair_reductions = 0;
};

struct BuchbergerOptions {
    /// Maximum number of S-pair reductions before BudgetExceeded is thrown.
    std::size_t step_budget = 1'000'000;
};

/// Reduced Gröbner basis (Buchberger with the Gebauer–Möller pair criteria,
/// normal selection strategy). Afterwards every input generator is checked to
/// reduce to zero.
GroebnerBasis buchberger(const PolyIdeal& I, MonomialOrder order = MonomialOrder::grevlex,
                         const BuchbergerOptions& options = {});

/// Remainder of f modulo the basis.
Poly normal_form(const PolyRing& R, const Poly& f, const std::vector<Poly>& basis);

/// True iff every variable has a pure power among the leading monomials.
bool is_zero_dimensional(const GroebnerBasis& gb, std::size_t variables);

/// dim (ℚ[x]/I)^n for cohomological degrees n = 0..cutoff, counted as standard
/// monomials. Odd degrees are zero.
std::vector<std::size_t> quotient_hilbert(const PolyIdeal& I, const GroebnerBasis& gb, int cutoff);

/// Highest cohomological degree carrying a standard monomial, when the quotient
/// is finite-dimensional.
std::optional<int> quotient_top_degree(const GroebnerBasis& gb, std::size_t variables);

/// Gröbner basis dump: header "groebner order=<order> vars=<n>" then one
/// polynomial per line in the algebra polynomial syntax.
std::string write_groebner(const GroebnerBasis& gb, const std::vector<std::string>& names);

/// Σ deg(odd) − Σ (deg(even) − 1): the top degree of the cohomology of an
/// elliptic pure algebra.
int formal_dimension_estimate(const SullivanAlgebra& A);

/// formal_dimension_estimate + 6, at least 0.
int default_cohomology_cutoff(const SullivanAlgebra& A);

/// dim H^n(A) for n = 0..cutoff from ranks of differential_matrix.
/// Throws BudgetExceeded when a graded piece exceeds `basis_budget`.
std::vector<std::size_t> cohomology_dims(const SullivanAlgebra& A, int cutoff,
                                         std::size_t basis_budget = 200'000);

}  // namespace afree
