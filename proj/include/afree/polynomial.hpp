#pragma once

// Commutative multivariate polynomials over ℚ with dense exponent vectors.
// Terms are kept sorted in decreasing order for the ring's monomial order.

#include "afree/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace afree {

enum class MonomialOrder { grevlex, grlex, lex };

const char* to_string(MonomialOrder order);
/// Accepts "grevlex", "grlex", "lex". Throws std::invalid_argument otherwise.
MonomialOrder parse_monomial_order(const std::string& name);

using Exponents = std::vector<std::uint32_t>;

struct PolyTerm {
    Exponents exps;
    Rational coef;
};

struct Poly {
    std::vector<PolyTerm> terms;  // decreasing, nonzero coefficients

    bool is_zero() const { return terms.empty(); }
    const PolyTerm& leading() const { return terms.front(); }
};

std::uint32_t total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);
bool coprime(const Exponents& a, const Exponents& b);

class PolyRing {
public:
    PolyRing(std::size_t variables, MonomialOrder order) : n_(variables), order_(order) {}

    std::size_t variables() const { return n_; }
    MonomialOrder order() const { return order_; }

    /// Negative, zero or positive as a <, =, > b.
    int compare(const Exponents& a, const Exponents& b) const;

    /// Sorts and merges arbitrary terms into canonical form.
    Poly normalize(std::vector<PolyTerm> terms) const;

    Poly constant(const Rational& c) const;
    Poly variable(std::size_t i) const;

    Poly add(const Poly& a, const Poly& b) const;
    Poly sub(const Poly& a, const Poly& b) const;
    Poly mul(const Poly& a, const Poly& b) const;
    Poly scale(const Poly& a, const Rational& c) const;
    /// c · x^shift · a; the order is multiplicative so no re-sorting is needed.
    Poly shift(const Poly& a, const Exponents& shift, const Rational& c) const;
    /// Divides by the leading coefficient.
    Poly monic(const Poly& a) const;

private:
    std::size_t n_;
    MonomialOrder order_;
};

/// Terms joined with " + " / " - ", variables named by `names`, e.g. "x1^2 + x1*x2".
std::string format_poly(const Poly& p, const std::vector<std::string>& names);

}  // namespace afree
