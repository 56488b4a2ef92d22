#include "afree/certificate.hpp"
#include "afree/cyclotomic.hpp"
#include "afree/error.hpp"
#include "afree/reduction.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numeric>

using namespace afree;

namespace {

// Φ_m from its primitive roots in floating point, rounded to integers.
std::vector<long> numeric_cyclotomic(int m)
{
    std::vector<std::complex<double>> p{1.0};
    for (int j = 1; j <= m; ++j) {
        if (std::gcd(j, m) != 1)
            continue;
        auto root = std::polar(1.0, 2 * M_PI * j / m);
        std::vector<std::complex<double>> q(p.size() + 1, 0.0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i + 1] += p[i];
            q[i] -= root * p[i];
        }
        p = std::move(q);
    }
    std::vector<long> out;
    for (auto c : p)
        out.push_back(std::lround(c.real()));
    return out;
}

std::optional<std::string> parse_failure(const std::string& text)
{
    try {
        parse_certificate(text);
    }
    catch (const ParseError& e) {
        return std::string(e.what());
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("cyclotomic polynomials match their roots")
{
    for (int m = 1; m <= 30; ++m) {
        auto phi = cyclotomic_polynomial(m);
        auto oracle = numeric_cyclotomic(m);
        REQUIRE(phi.size() == oracle.size());
        for (std::size_t i = 0; i < phi.size(); ++i)
            REQUIRE(phi[i] == oracle[i]);
    }
}

TEST_CASE("cyclotomic field arithmetic")
{
    CyclotomicField f(3);
    CHECK(f.degree() == 2);
    auto z = f.zeta_power(1);
    CHECK((f.from_rational(1) + z + f.zeta_power(2)).is_zero());
    CHECK(f.zeta_power(3) == f.from_rational(1));
    CHECK(f.zeta_power(-1) == f.zeta_power(2));
    CHECK(f.multiply(z, z) == f.zeta_power(2));

    for (int m = 2; m <= 12; ++m) {
        CyclotomicField g(m);
        auto sum = g.zero();
        for (int e = 0; e < m; ++e)
            sum = sum + g.zeta_power(e);
        CHECK(sum.is_zero());
        CHECK(g.zeta_power(m) == g.from_rational(1));
        CHECK_FALSE((g.zeta_power(1) - g.from_rational(1)).is_zero());
    }
    CHECK_THROWS_AS(CyclotomicField(0), PreconditionError);
}

TEST_CASE("verifier on the triangle")
{
    auto A = encode_shifted(graphs::complete(3), 2);
    auto ok = verify_morphism(A, assignment_from_coloring({{0, 1, 2}}, 2));
    CHECK(ok.accepted);

    auto bad = verify_morphism(A, assignment_from_coloring({{0, 0, 1}}, 2));
    CHECK_FALSE(bad.accepted);
    REQUIRE(bad.failing_edge);
    CHECK(*bad.failing_edge == Edge{0, 1});
    CHECK(bad.failing_generator == "y_1_2");

    Assignment missing{3, {{0, 0}, {1, 1}}};
    CHECK_THROWS_AS(verify_morphism(A, missing), PreconditionError);
    CHECK_THROWS_AS(assignment_from_coloring({{0, 3, 1}}, 2), PreconditionError);
}

TEST_CASE("proper colourings of C5 are accepted")
{
    auto g = graphs::cycle(5);
    auto col = is_colorable(g, 3);
    REQUIRE(col);
    CHECK(verify_is_proper_iff(*col, g, 2));
    CHECK(verify_morphism(encode_shifted(g, 2), assignment_from_coloring(*col, 2)).accepted);
}

TEST_CASE("verifier agrees with propriety on every colouring")
{
    for (int k : {2, 3}) {
        for (int n = 1; n <= (k == 2 ? 4 : 3); ++n) {
            const unsigned long long masks = 1ULL << testing::pair_count(n);
            for (unsigned long long mask = 0; mask < masks; ++mask) {
                auto g = graphs::from_mask(n, mask);
                std::vector<int> c(static_cast<std::size_t>(n), 0);
                while (true) {
                    REQUIRE(verify_is_proper_iff({c}, g, k));
                    int i = 0;
                    while (i < n && ++c[static_cast<std::size_t>(i)] == k + 1)
                        c[static_cast<std::size_t>(i++)] = 0;
                    if (i == n)
                        break;
                }
            }
        }
    }
}

TEST_CASE("fast path matches the detailed check")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        auto g = graphs::random(7, 0.4, rng);
        auto A = encode_shifted(g, 2);
        MorphismVerifier v(A);
        std::vector<int> e(7);
        for (auto& x : e)
            x = std::uniform_int_distribution<int>(0, 2)(rng);
        Assignment asg{3, {}};
        for (int j = 0; j < 7; ++j)
            asg.exponents[j] = e[static_cast<std::size_t>(j)];
        REQUIRE(v.accepts(e, 3) == v.check(asg).accepted);
        REQUIRE(v.accepts(e, 3) == is_proper(g, {e}));
    }
}

TEST_CASE("certificate files")
{
    auto cert = parse_certificate("cert k=2\nv 1 0\nv 2 1\nv 3 2\n");
    CHECK(cert.k == 2);
    CHECK(cert.form == Certificate::Form::coloring);
    CHECK(cert.values.size() == 3);
    CHECK(write_certificate(cert) == "cert k=2\nv 1 0\nv 2 1\nv 3 2\n");
    CHECK(parse_certificate(write_certificate(cert)).values == cert.values);

    auto raw = parse_certificate("cert k=2\ne 1 2\ne 2 0\n");
    CHECK(raw.form == Certificate::Form::raw);
    CHECK(raw.assignment().exponents.at(0) == 2);

    CHECK(certificate_from_coloring({{1, 0}}, 2).values == std::map<int, int>{{0, 1}, {1, 0}});

    CHECK(parse_failure("v 1 0\n"));
    CHECK(parse_failure("cert k=x\n"));
    CHECK(parse_failure("cert k=2\nv 1 0\nv 1 1\n"));
    CHECK(parse_failure("cert k=2\nv 1 0\ne 2 1\n"));
    CHECK(parse_failure("cert k=2\nv 0 0\n"));
    CHECK(parse_failure("cert k=2\nv 1 3\n"));
    auto msg = parse_failure("cert k=2\nv 1 0\nbogus\n");
    REQUIRE(msg);
    CHECK(msg->rfind("line 3", 0) == 0);
}

TEST_CASE("edge generator names")
{
    CHECK(parse_edge_generator("y_2_5") == Edge{1, 4});
    CHECK_FALSE(parse_edge_generator("x1"));
    CHECK_FALSE(parse_edge_generator("y_2"));
    CHECK_FALSE(parse_edge_generator("y_0_1"));
}
