#include "afree/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace afree {

const char* to_string(MonomialOrder order)
{
    switch (order) {
    case MonomialOrder::grevlex:
        return "grevlex";
    case MonomialOrder::grlex:
        return "grlex";
    case MonomialOrder::lex:
        return "lex";
    }
    return "?";
}

MonomialOrder parse_monomial_order(const std::string& name)
{
    if (name == "grevlex")
        return MonomialOrder::grevlex;
    if (name == "grlex")
        return MonomialOrder::grlex;
    if (name == "lex")
        return MonomialOrder::lex;
    throw std::invalid_argument("unknown monomial order '" + name + "'");
}

std::uint32_t total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool divides(const Exponents& a, const Exponents& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Exponents lcm(const Exponents& a, const Exponents& b)
{
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = std::max(a[i], b[i]);
    return out;
}

bool coprime(const Exponents& a, const Exponents& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i])
            return false;
    return true;
}

int PolyRing::compare(const Exponents& a, const Exponents& b) const
{
    if (order_ != MonomialOrder::lex) {
        auto da = total_degree(a), db = total_degree(b);
        if (da != db)
            return da < db ? -1 : 1;
    }
    if (order_ == MonomialOrder::grevlex) {
        for (std::size_t i = n_; i-- > 0;)
            if (a[i] != b[i])
                return a[i] > b[i] ? -1 : 1;
        return 0;
    }
    for (std::size_t i = 0; i < n_; ++i)
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    return 0;
}

Poly PolyRing::normalize(std::vector<PolyTerm> terms) const
{
    std::sort(terms.begin(), terms.end(),
              [this](const PolyTerm& x, const PolyTerm& y) { return compare(x.exps, y.exps) > 0; });
    Poly out;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Rational sum = terms[i].coef;
        while (j < terms.size() && terms[j].exps == terms[i].exps)
            sum += terms[j++].coef;
        if (sum != 0)
            out.terms.push_back({std::move(terms[i].exps), std::move(sum)});
        i = j;
    }
    return out;
}

Poly PolyRing::constant(const Rational& c) const
{
    Poly p;
    if (c != 0)
        p.terms.push_back({Exponents(n_, 0), c});
    return p;
}

Poly PolyRing::variable(std::size_t i) const
{
    Exponents e(n_, 0);
    e.at(i) = 1;
    Poly p;
    p.terms.push_back({std::move(e), 1});
    return p;
}

namespace {

template <class F>
Poly merge(const PolyRing& R, const Poly& a, const Poly& b, F&& combine_b)
{
    Poly out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        int c = i == a.terms.size()   ? -1
                : j == b.terms.size() ? 1
                                      : R.compare(a.terms[i].exps, b.terms[j].exps);
        if (c > 0) {
            out.terms.push_back(a.terms[i++]);
        }
        else if (c < 0) {
            out.terms.push_back({b.terms[j].exps, combine_b(b.terms[j].coef)});
            ++j;
        }
        else {
            Rational s = a.terms[i].coef + combine_b(b.terms[j].coef);
            if (s != 0)
                out.terms.push_back({a.terms[i].exps, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Poly PolyRing::add(const Poly& a, const Poly& b) const
{
    return merge(*this, a, b, [](const Rational& c) { return c; });
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const
{
    return merge(*this, a, b, [](const Rational& c) { return Rational(-c); });
}

Poly PolyRing::scale(const Poly& a, const Rational& c) const
{
    Poly out;
    if (c == 0)
        return out;
    out.terms.reserve(a.terms.size());
    for (const auto& t : a.terms)
        out.terms.push_back({t.exps, t.coef * c});
    return out;
}

Poly PolyRing::shift(const Poly& a, const Exponents& s, const Rational& c) const
{
    Poly out;
    if (c == 0)
        return out;
    out.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) {
        Exponents e = t.exps;
        for (std::size_t i = 0; i < n_; ++i)
            e[i] += s[i];
        out.terms.push_back({std::move(e), t.coef * c});
    }
    return out;
}

Poly PolyRing::mul(const Poly& a, const Poly& b) const
{
    std::vector<PolyTerm> terms;
    terms.reserve(a.terms.size() * b.terms.size());
    for (const auto& x : a.terms)
        for (const auto& y : b.terms) {
            Exponents e = x.exps;
            for (std::size_t i = 0; i < n_; ++i)
                e[i] += y.exps[i];
            terms.push_back({std::move(e), x.coef * y.coef});
        }
    return normalize(std::move(terms));
}

Poly PolyRing::monic(const Poly& a) const
{
    if (a.is_zero() || a.leading().coef == 1)
        return a;
    return scale(a, 1 / a.leading().coef);
}

std::string format_poly(const Poly& p, const std::vector<std::string>& names)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& t : p.terms) {
        bool negative = t.coef < 0;
        Rational mag = negative ? Rational(-t.coef) : t.coef;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (!t.exps[i])
                continue;
            if (!mono.empty())
                mono += '*';
            mono += names.at(i);
            if (t.exps[i] > 1)
                mono += '^' + std::to_string(t.exps[i]);
        }
        if (mono.empty())
            out += to_string(mag);
        else
            out += (mag != 1 ? to_string(mag) + "*" : std::string()) + mono;
    }
    return out;
}

}  // namespace afree
