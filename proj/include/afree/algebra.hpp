#pragma once

// Free graded-commutative algebras Λ(V) over ℚ with a degree +1 differential.
//
// Even-degree generators are polynomial variables, odd-degree generators are
// exterior variables. Monomials are stored in a single normal form: factors
// sorted by generator id, odd generators with exponent 1. Every product
// is brought back to that form and the Koszul sign is counted during the merge.

#include "afree/linalg.hpp"
#include "afree/rational.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace afree {

using GenId = std::uint32_t;

struct Generator {
    GenId id = 0;
    std::string name;
    int degree = 0;

    bool is_odd() const { return degree % 2 != 0; }
};

/// An ordered, immutable list of generators. Position in the list is the id.
class GeneratorSet {
public:
    GeneratorSet() = default;

    /// Appends a generator. Throws PreconditionError on a duplicate or
    /// malformed name, or a non-positive degree.
    GenId add(std::string name, int degree);

    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](GenId id) const { return gens_[id]; }
    const std::vector<Generator>& all() const { return gens_; }
    std::optional<GenId> find(std::string_view name) const;

    friend bool operator==(const GeneratorSet& a, const GeneratorSet& b);

private:
    std::vector<Generator> gens_;
    std::unordered_map<std::string, GenId> by_name_;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

/// True when both pointers denote the same list of generators.
bool same_universe(const GeneratorSetPtr& a, const GeneratorSetPtr& b);

struct Factor {
    GenId id;
    std::uint32_t exponent;

    friend bool operator==(const Factor&, const Factor&) = default;
};

class Monomial {
public:
    /// The unit monomial 1.
    Monomial() = default;

    static Monomial power(const GeneratorSet& gens, GenId id, std::uint32_t exponent = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    int degree() const { return degree_; }
    bool is_unit() const { return factors_.empty(); }
    /// Number of generator factors counted with multiplicity.
    std::uint32_t length() const;
    std::uint32_t exponent(GenId id) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

private:
    friend struct MonomialOps;
    std::vector<Factor> factors_;
    int degree_ = 0;
};

/// Graded lexicographic order: total degree first, then exponent vectors
/// compared by generator id, larger exponent on the smaller id first.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Product of two monomials in normal form. The sign is 0 when a repeated odd
/// generator annihilates the product, otherwise ±1.
std::pair<int, Monomial> multiply(const GeneratorSet& gens, const Monomial& a, const Monomial& b);

/// Monomial from factors with strictly increasing ids and valid exponents.
Monomial make_monomial(const GeneratorSet& gens, std::vector<Factor> factors);

class Element {
public:
    using Terms = std::map<Monomial, Rational, MonomialLess>;

    explicit Element(GeneratorSetPtr gens);
    /// Zero coefficients are dropped.
    Element(GeneratorSetPtr gens, Terms terms);

    static Element scalar(GeneratorSetPtr gens, const Rational& c);
    static Element generator(GeneratorSetPtr gens, GenId id);
    static Element monomial(GeneratorSetPtr gens, Monomial m, const Rational& c = 1);

    const GeneratorSetPtr& generators() const { return gens_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;

    /// Degree of a nonzero homogeneous element, nullopt otherwise.
    std::optional<int> degree() const;

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Rational& c, const Element& a);
    friend bool operator==(const Element& a, const Element& b);

private:
    GeneratorSetPtr gens_;
    Terms terms_;
};

/// Graded-commutative product. Throws StructuralError when the operands live
/// over different generator sets.
Element multiply(const Element& a, const Element& b);
inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

struct ValidationReport {
    std::vector<std::string> issues;

    bool ok() const { return issues.empty(); }
};

/// Generators together with the images of the differential on them.
/// Construction performs no checks; use check_well_formed.
class SullivanAlgebra {
public:
    /// `differentials` is indexed by generator id; missing entries are zero.
    SullivanAlgebra(GeneratorSetPtr gens, std::vector<Element> differentials);

    const GeneratorSetPtr& generators() const { return gens_; }
    std::size_t size() const { return gens_->size(); }
    const Element& differential(GenId id) const { return diffs_[id]; }
    Element generator(GenId id) const { return Element::generator(gens_, id); }
    /// Throws PreconditionError for an unknown name.
    Element generator(std::string_view name) const;
    Element zero() const { return Element(gens_); }

    friend bool operator==(const SullivanAlgebra& a, const SullivanAlgebra& b);

private:
    GeneratorSetPtr gens_;
    std::vector<Element> diffs_;
};

/// Two-phase construction: declare generators, then assign differentials over
/// the frozen generator set.
class SullivanAlgebraBuilder {
public:
    GenId add_generator(std::string name, int degree);
    /// Freezes the generator list; later add_generator calls throw.
    const GeneratorSetPtr& generators();
    void set_differential(GenId id, Element image);
    SullivanAlgebra build();

private:
    std::shared_ptr<GeneratorSet> pending_ = std::make_shared<GeneratorSet>();
    GeneratorSetPtr frozen_;
    std::map<GenId, Element> diffs_;
};

/// Extends the generator images to a derivation of degree +1.
Element apply_differential(const SullivanAlgebra& A, const Element& e);

/// Every violated invariant: degree +1, d² = 0 on generators, foreign or
/// dangling generator references.
ValidationReport check_well_formed(const SullivanAlgebra& A);

/// Monomials of total degree n in graded lexicographic order.
/// Throws BudgetExceeded if more than `budget` monomials would be produced.
std::vector<Monomial> monomial_basis(const SullivanAlgebra& A, int n,
                                     std::size_t budget = std::numeric_limits<std::size_t>::max());
std::vector<Monomial> monomial_basis(const GeneratorSet& gens, int n,
                                     std::size_t budget = std::numeric_limits<std::size_t>::max());

/// Matrix of d: Λ^n → Λ^{n+1} in the monomial bases (columns = source basis).
SparseMatrix differential_matrix(const SullivanAlgebra& A, int n,
                                 std::size_t budget = std::numeric_limits<std::size_t>::max());

struct SquareZeroReport {
    bool ok = true;
    /// Highest n for which M(n+1)·M(n) was formed; -1 if none.
    int checked_through = -1;
    /// First degree whose product is nonzero.
    std::optional<int> failing_degree;
    /// Set when a graded piece exceeded the budget before max_degree.
    std::optional<int> stopped_at;
    std::size_t largest_basis = 0;
};

/// Forms M(n+1)·M(n) for n = 0..max_degree and checks that it vanishes. Stops
/// early (stopped_at set, ok unchanged) when a basis exceeds `budget`.
SquareZeroReport check_square_zero_matrices(const SullivanAlgebra& A, int max_degree, std::size_t budget);

}  // namespace afree
