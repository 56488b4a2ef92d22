#include "afree/algebra.hpp"
#include "afree/algebra_io.hpp"
#include "afree/error.hpp"
#include "afree/linalg.hpp"
#include "afree/reduction.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace afree;

namespace {

SullivanAlgebra toy()
{
    // x1, x2 even; y1, y2, y3 odd.
    return read_algebra("sullivan v1\n"
                        "gen x1 2\ngen x2 2\ngen y1 3\ngen y2 3\ngen y3 5\n"
                        "d y1 = x1^2\nd y2 = x1*x2\nd y3 = x1*x2^2\n");
}

Element el(const SullivanAlgebra& A, const char* text) { return parse_element(A.generators(), text); }

}  // namespace

TEST_CASE("rationals are exact and canonical")
{
    CHECK(to_string(parse_rational("6/-4") == Rational(-3, 2) ? Rational(1) : Rational(0)) == "1");
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    Rational third(1, 3);
    CHECK(third + third + third == 1);
}

TEST_CASE("generator sets validate names and degrees")
{
    GeneratorSet g;
    CHECK(g.add("x1", 2) == 0);
    CHECK(g.add("y_1_2", 3) == 1);
    CHECK_THROWS_AS(g.add("x1", 2), PreconditionError);
    CHECK_THROWS_AS(g.add("bad name", 2), PreconditionError);
    CHECK_THROWS_AS(g.add("1x", 2), PreconditionError);
    CHECK_THROWS_AS(g.add("z", 0), PreconditionError);
    CHECK(g.find("y_1_2") == GenId{1});
    CHECK_FALSE(g.find("nope"));
    CHECK(g[1].is_odd());
}

TEST_CASE("graded commutativity of generators")
{
    auto A = toy();
    Element y1 = A.generator("y1"), y2 = A.generator("y2"), x1 = A.generator("x1"), x2 = A.generator("x2");
    CHECK(format_element(y1 * y2) == "y1*y2");
    CHECK(format_element(y2 * y1) == "-y1*y2");
    CHECK((y1 * y1).is_zero());
    CHECK(format_element((x1 + x2) * (x1 + x2)) == "x1^2 + 2*x1*x2 + x2^2");
    CHECK(x2 * y1 == y1 * x2);
    CHECK(el(A, "y2*x1*y1") == -(x1 * y1 * y2));
}

TEST_CASE("elements over different generator sets do not mix")
{
    auto A = toy();
    auto B = encode_shifted(graphs::complete(2), 2);
    CHECK_THROWS_AS(A.generator("x1") * B.generator("x1"), StructuralError);
    CHECK_THROWS_AS(A.generator("x1") + B.generator("x1"), StructuralError);
    // Equal generator lists count as the same universe.
    CHECK_NOTHROW(A.generator("x1") * toy().generator("x1"));
}

TEST_CASE("differential follows Leibniz on the encoded edge")
{
    Graph g(2);
    g.add_edge(0, 1);
    auto A = encode_shifted(g, 2);
    Element y = A.generator("y_1_2"), xa = A.generator("x1");
    CHECK(format_element(apply_differential(A, y)) == "x1^2 + x1*x2 + x2^2");
    CHECK(format_element(apply_differential(A, xa * y)) == "x1^3 + x1^2*x2 + x1*x2^2");
    for (GenId id = 0; id < A.size(); ++id)
        CHECK(apply_differential(A, apply_differential(A, A.generator(id))).is_zero());
}

TEST_CASE("Leibniz and graded commutativity on random elements")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> deg(0, 9);
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        auto A = testing::random_algebra(rng, 5);
        for (int i = 0; i < 10; ++i) {
            int p = deg(rng), q = deg(rng);
            Element a = testing::random_homogeneous(A, p, rng), b = testing::random_homogeneous(A, q, rng);
            Rational sign = (p * q) % 2 ? -1 : 1;
            REQUIRE(a * b == sign * (b * a));
            Rational s = p % 2 ? -1 : 1;
            REQUIRE(apply_differential(A, a * b) ==
                    apply_differential(A, a) * b + s * (a * apply_differential(A, b)));
            Element c = testing::random_homogeneous(A, deg(rng), rng);
            REQUIRE((a * b) * c == a * (b * c));
            ++checked;
        }
    }
    CHECK(checked == 300);
}

TEST_CASE("check_well_formed reports each violation")
{
    CHECK(check_well_formed(encode_shifted(graphs::complete(3), 2)).ok());

    SullivanAlgebraBuilder b;
    auto x1 = b.add_generator("x1", 2);
    auto x2 = b.add_generator("x2", 2);
    b.set_differential(x1, Element::generator(b.generators(), x2));
    auto report = check_well_formed(b.build());
    REQUIRE(report.issues.size() == 1);
    CHECK(report.issues[0].find("degree") != std::string::npos);

    SullivanAlgebraBuilder c;
    auto g = c.add_generator("g", 1);
    auto h = c.add_generator("h", 2);
    auto u = c.add_generator("u", 3);
    c.set_differential(g, Element::generator(c.generators(), h));
    c.set_differential(h, Element::generator(c.generators(), u));
    auto r2 = check_well_formed(c.build());
    bool d_squared = false;
    for (const auto& issue : r2.issues)
        d_squared = d_squared || issue.find("d^2") != std::string::npos;
    CHECK(d_squared);
    (void)u;

    auto A = toy();
    auto B = encode_shifted(graphs::complete(2), 2);
    SullivanAlgebra mixed(A.generators(), {A.zero(), A.zero(), B.generator("x1") * B.generator("x1")});
    CHECK_FALSE(check_well_formed(mixed).ok());
}

TEST_CASE("monomial basis")
{
    auto A = encode_shifted(graphs::complete(2), 2);
    auto names = [&](int n) {
        std::vector<std::string> out;
        for (const auto& m : monomial_basis(A, n))
            out.push_back(format_element(Element::monomial(A.generators(), m)));
        return out;
    };
    CHECK(names(2) == std::vector<std::string>{"x1", "x2"});
    CHECK(names(3) == std::vector<std::string>{"y_1_2"});
    CHECK(names(4) == std::vector<std::string>{"x1^2", "x1*x2", "x2^2"});
    CHECK(names(1).empty());
    CHECK(monomial_basis(A, 0).size() == 1);
    CHECK_THROWS_AS(monomial_basis(A, 40, 10), BudgetExceeded);
}

TEST_CASE("basis sizes agree with the generating function")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto A = testing::random_algebra(rng, 6);
        auto expect = testing::basis_counts(*A.generators(), 18);
        for (int n = 0; n <= 18; ++n) {
            auto basis = monomial_basis(A, n);
            REQUIRE(basis.size() == expect[static_cast<std::size_t>(n)]);
            for (std::size_t i = 1; i < basis.size(); ++i)
                REQUIRE(MonomialLess{}(basis[i - 1], basis[i]));
            for (const auto& m : basis)
                REQUIRE(m.degree() == n);
        }
    }
}

TEST_CASE("differential matrices")
{
    auto A = encode_shifted(graphs::complete(2), 2);
    auto m3 = differential_matrix(A, 3);
    REQUIRE(m3.rows == 3);
    REQUIRE(m3.cols == 1);
    CHECK(m3.at(0, 0) == 1);
    CHECK(m3.at(1, 0) == 1);
    CHECK(m3.at(2, 0) == 1);
    auto m1 = differential_matrix(A, 1);
    CHECK(m1.cols == 0);
    CHECK(rank(m1) == 0);

    auto report = check_square_zero_matrices(encode_shifted(graphs::cycle(4), 2), 16, 100000);
    CHECK(report.ok);
    CHECK(report.checked_through == 16);

    SullivanAlgebraBuilder c;
    auto g = c.add_generator("g", 1);
    auto h = c.add_generator("h", 2);
    auto u = c.add_generator("u", 3);
    c.set_differential(g, Element::generator(c.generators(), h));
    c.set_differential(h, Element::generator(c.generators(), u));
    auto bad = check_square_zero_matrices(c.build(), 4, 1000);
    CHECK_FALSE(bad.ok);
    CHECK(bad.failing_degree == 1);
}

TEST_CASE("exact rank and kernel")
{
    // Columns (1,2,3), (2,4,6), (0,1,1): rank 2.
    SparseMatrix m(3, 3);
    m.columns[0] = {{0, 1}, {1, 2}, {2, 3}};
    m.columns[1] = {{0, 2}, {1, 4}, {2, 6}};
    m.columns[2] = {{1, 1}, {2, 1}};
    CHECK(rank(m) == 2);

    DenseMatrix d{{1, 2, 0}, {2, 4, 1}, {3, 6, 1}};
    auto ker = kernel_basis(d, 3);
    REQUIRE(ker.size() == 1);
    for (const auto& row : d) {
        Rational s = 0;
        for (std::size_t j = 0; j < 3; ++j)
            s += row[j] * ker[0][j];
        CHECK(s == 0);
    }

    // Hilbert matrix of order 6 is invertible; large entries keep coefficients honest.
    SparseMatrix h(6, 6);
    for (std::size_t j = 0; j < 6; ++j)
        for (std::size_t i = 0; i < 6; ++i)
            h.columns[j].emplace_back(i, Rational(1, static_cast<int>(i + j + 1)));
    CHECK(rank(h) == 6);
}

TEST_CASE("algebra text format round trip")
{
    auto A = toy();
    std::string text = write_algebra(A);
    auto B = read_algebra(text);
    CHECK(write_algebra(B) == text);
    CHECK(format_element(B.differential(*B.generators()->find("y3"))) == "x1*x2^2");

    auto E = encode_shifted(graphs::complete(4), 3);
    CHECK(write_algebra(read_algebra(write_algebra(E))) == write_algebra(E));
    CHECK(read_algebra(write_algebra(E)) == E);

    auto q = read_algebra("sullivan v1\ngen a 2\ngen b 3\nd b = -1/2*a^2 + 3/4*a*a\n");
    CHECK(format_element(q.differential(1)) == "1/4*a^2");
}

TEST_CASE("algebra reader diagnostics carry line numbers")
{
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            read_algebra(text);
        }
        catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("sullivan v2\n") == 1);
    CHECK(line_of("sullivan v1\ngen x 2\ngen x 2\n") == 3);
    CHECK(line_of("sullivan v1\ngen x 2\nd x = q\n") == 3);
    CHECK(line_of("sullivan v1\n# comment\ngen x 2\ngen y 3\nd y = x^2\nd y = x^2\n") == 6);
    CHECK(line_of("sullivan v1\ngen x 2\nd x = 0\ngen y 3\n") == 4);
    CHECK(line_of("sullivan v1\ngen x two\n") == 2);
    CHECK(line_of("sullivan v1\ngen y 3\nd y = y +\n") == 3);
}
