#include "afree/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace afree {

Rational SparseMatrix::at(std::size_t row, std::size_t col) const
{
    const auto& c = columns.at(col);
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const auto& entry, std::size_t r) { return entry.first < r; });
    if (it != c.end() && it->first == row)
        return it->second;
    return 0;
}

bool SparseMatrix::is_zero() const
{
    return std::all_of(columns.begin(), columns.end(), [](const SparseVector& c) { return c.empty(); });
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols != b.rows)
        throw std::invalid_argument("matrix shapes do not compose");
    SparseMatrix out(a.rows, b.cols);
    for (std::size_t j = 0; j < b.cols; ++j) {
        std::map<std::size_t, Rational> acc;
        for (const auto& [k, bkj] : b.columns[j])
            for (const auto& [i, aik] : a.columns[k])
                acc[i] += aik * bkj;
        for (auto& [i, v] : acc)
            if (v != 0)
                out.columns[j].emplace_back(i, std::move(v));
    }
    return out;
}

namespace {

using IntVector = std::vector<std::pair<std::size_t, Integer>>;

void make_primitive(IntVector& v)
{
    if (v.empty())
        return;
    Integer g = 0;
    for (const auto& [_, c] : v) {
        g = gcd(g, c);
        if (g == 1)
            break;
    }
    if (v.front().second < 0)
        g = -g;
    if (g != 1)
        for (auto& [_, c] : v)
            c /= g;
}

IntVector to_integer_vector(const SparseVector& v)
{
    Integer l = 1;
    for (const auto& [_, c] : v)
        l = lcm(l, denominator(c));
    IntVector out;
    out.reserve(v.size());
    for (const auto& [i, c] : v)
        if (c != 0)
            out.emplace_back(i, Integer(numerator(c) * (l / denominator(c))));
    make_primitive(out);
    return out;
}

// v ← p·v − v_lead·pivot, where p is the pivot's leading coefficient.
IntVector eliminate(const IntVector& v, const IntVector& pivot)
{
    const Integer& p = pivot.front().second;
    const Integer& q = v.front().second;
    Integer g = gcd(p, q);
    Integer sp = p / g, sq = q / g;
    IntVector out;
    out.reserve(v.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < v.size() && v[i].first < pivot[j].first)) {
            out.emplace_back(v[i].first, Integer(sp * v[i].second));
            ++i;
        }
        else if (i == v.size() || pivot[j].first < v[i].first) {
            out.emplace_back(pivot[j].first, Integer(-sq * pivot[j].second));
            ++j;
        }
        else {
            Integer c = sp * v[i].second - sq * pivot[j].second;
            if (c != 0)
                out.emplace_back(v[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    make_primitive(out);
    return out;
}

}  // namespace

bool Echelon::insert(const SparseVector& v)
{
    IntVector w = to_integer_vector(v);
    while (!w.empty()) {
        auto it = pivots_.find(w.front().first);
        if (it == pivots_.end()) {
            pivots_.emplace(w.front().first, std::move(w));
            return true;
        }
        w = eliminate(w, it->second);
    }
    return false;
}

std::size_t rank(const SparseMatrix& m)
{
    // Row rank equals column rank; columns are the natural unit here.
    Echelon e;
    for (const auto& c : m.columns)
        e.insert(c);
    return e.rank();
}

std::vector<std::vector<Rational>> kernel_basis(const DenseMatrix& m, std::size_t cols)
{
    DenseMatrix a = m;
    for (auto& row : a)
        if (row.size() != cols)
            throw std::invalid_argument("ragged matrix");
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[r]);
        Rational inv = 1 / a[r][c];
        for (auto& x : a[r])
            x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end())
            continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            v[pivot_cols[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace afree
