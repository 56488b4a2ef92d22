#pragma once

// ℚ(ζ_m) as ℚ[x]/Φ_m(x). Elements are coefficient vectors of length φ(m).

#include "afree/rational.hpp"

#include <vector>

namespace afree {

/// Coefficients of Φ_m, constant term first. Computed by dividing x^m − 1 by
/// Φ_d for every proper divisor d of m.
std::vector<Integer> cyclotomic_polynomial(int m);

class CyclotomicField;

class CyclotomicScalar {
public:
    int order() const { return m_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const;

    friend CyclotomicScalar operator+(const CyclotomicScalar& a, const CyclotomicScalar& b);
    friend CyclotomicScalar operator-(const CyclotomicScalar& a, const CyclotomicScalar& b);
    friend bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b) = default;

private:
    friend class CyclotomicField;
    CyclotomicScalar(int m, std::vector<Rational> c) : m_(m), coeffs_(std::move(c)) {}
    int m_;
    std::vector<Rational> coeffs_;
};

class CyclotomicField {
public:
    /// Throws PreconditionError for m < 1.
    explicit CyclotomicField(int m);

    int order() const { return m_; }
    int degree() const { return static_cast<int>(phi_.size()) - 1; }
    const std::vector<Integer>& modulus() const { return phi_; }

    CyclotomicScalar zero() const;
    CyclotomicScalar from_rational(const Rational& q) const;
    /// ζ^e for any integer e.
    CyclotomicScalar zeta_power(long e) const;
    /// Reduces Σ v[i] x^i modulo Φ_m.
    CyclotomicScalar reduce(std::vector<Rational> v) const;
    CyclotomicScalar multiply(const CyclotomicScalar& a, const CyclotomicScalar& b) const;

private:
    int m_;
    std::vector<Integer> phi_;  // monic
};

}  // namespace afree
