#include "afree/cyclotomic.hpp"

#include "afree/error.hpp"

#include <map>
#include <stdexcept>

namespace afree {

namespace {

// Exact division of polynomials with integer coefficients by a monic divisor.
std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer>& den)
{
    std::size_t dn = den.size() - 1;
    std::vector<Integer> q(num.size() - dn, Integer(0));
    for (std::size_t i = num.size(); i-- > dn;) {
        Integer c = num[i];
        if (c == 0)
            continue;
        q[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j)
            num[i - dn + j] -= c * den[j];
    }
    for (const auto& r : num)
        if (r != 0)
            throw std::logic_error("cyclotomic division left a remainder");
    return q;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int m)
{
    if (m < 1)
        throw PreconditionError("cyclotomic order must be positive");
    static thread_local std::map<int, std::vector<Integer>> cache;
    if (auto it = cache.find(m); it != cache.end())
        return it->second;
    std::vector<Integer> p(static_cast<std::size_t>(m) + 1, Integer(0));
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0)
            p = divide_exact(std::move(p), cyclotomic_polynomial(d));
    cache.emplace(m, p);
    return p;
}

bool CyclotomicScalar::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

CyclotomicScalar operator+(const CyclotomicScalar& a, const CyclotomicScalar& b)
{
    if (a.m_ != b.m_)
        throw StructuralError("cyclotomic scalars of different orders");
    auto c = a.coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b.coeffs_[i];
    return {a.m_, std::move(c)};
}

CyclotomicScalar operator-(const CyclotomicScalar& a, const CyclotomicScalar& b)
{
    if (a.m_ != b.m_)
        throw StructuralError("cyclotomic scalars of different orders");
    auto c = a.coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] -= b.coeffs_[i];
    return {a.m_, std::move(c)};
}

CyclotomicField::CyclotomicField(int m) : m_(m), phi_(cyclotomic_polynomial(m)) {}

CyclotomicScalar CyclotomicField::zero() const
{
    return {m_, std::vector<Rational>(static_cast<std::size_t>(degree()), Rational(0))};
}

CyclotomicScalar CyclotomicField::from_rational(const Rational& q) const
{
    auto z = zero();
    if (!z.coeffs_.empty())
        z.coeffs_[0] = q;
    return z;
}

CyclotomicScalar CyclotomicField::zeta_power(long e) const
{
    long r = ((e % m_) + m_) % m_;
    std::vector<Rational> v(static_cast<std::size_t>(r) + 1, Rational(0));
    v[static_cast<std::size_t>(r)] = 1;
    return reduce(std::move(v));
}

CyclotomicScalar CyclotomicField::reduce(std::vector<Rational> v) const
{
    std::size_t d = phi_.size() - 1;
    for (std::size_t i = v.size(); i-- > d;) {
        if (v[i] == 0)
            continue;
        Rational c = v[i];
        for (std::size_t j = 0; j <= d; ++j)
            v[i - d + j] -= c * phi_[j];
    }
    v.resize(d, Rational(0));
    return {m_, std::move(v)};
}

CyclotomicScalar CyclotomicField::multiply(const CyclotomicScalar& a, const CyclotomicScalar& b) const
{
    if (a.m_ != m_ || b.m_ != m_)
        throw StructuralError("cyclotomic scalar from a different field");
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i] != 0)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return reduce(std::move(v));
}

}  // namespace afree
