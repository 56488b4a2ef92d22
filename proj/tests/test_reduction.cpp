#include "afree/algebra_io.hpp"
#include "afree/certificate.hpp"
#include "afree/error.hpp"
#include "afree/reduction.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace afree;

namespace {

// Σ_{l=0}^{k} x_a^{k−l} x_b^l written out by hand in the text syntax.
std::string edge_sum(int a, int b, int k)
{
    std::string s;
    for (int l = 0; l <= k; ++l) {
        std::string term;
        auto power = [](int v, int e) {
            std::string x = "x" + std::to_string(v);
            return e == 1 ? x : x + "^" + std::to_string(e);
        };
        if (k - l > 0)
            term += power(a, k - l);
        if (l > 0)
            term += (term.empty() ? "" : "*") + power(b, l);
        s += (s.empty() ? "" : " + ") + term;
    }
    return s;
}

}  // namespace

TEST_CASE("shifted encoding of an edge")
{
    auto A = encode_shifted(graphs::complete(2), 2);
    CHECK(write_algebra(A) ==
          "sullivan v1\ngen x1 2\ngen x2 2\ngen y_1_2 3\nd x1 = 0\nd x2 = 0\nd y_1_2 = x1^2 + x1*x2 + x2^2\n");
    CHECK(A.generators()->all()[2].degree == 3);
}

TEST_CASE("shifted encoding of K3 with k=3")
{
    auto A = encode_shifted(graphs::complete(3), 3);
    REQUIRE(A.size() == 6);
    for (auto [a, b] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
        std::string name = "y_" + std::to_string(a) + "_" + std::to_string(b);
        auto id = A.generators()->find(name);
        REQUIRE(id);
        CHECK((*A.generators())[*id].degree == 5);
        CHECK(format_element(A.differential(*id)) == edge_sum(a, b, 3));
    }
    CHECK(check_well_formed(A).ok());
}

TEST_CASE("edgeless graphs encode to a zero differential")
{
    auto A = encode_shifted(graphs::edgeless(3), 2);
    CHECK(A.size() == 3);
    for (GenId id = 0; id < A.size(); ++id)
        CHECK(A.differential(id).is_zero());
}

TEST_CASE("encoder preconditions")
{
    CHECK_THROWS_AS(encode_shifted(graphs::complete(3), 1), PreconditionError);
    CHECK_THROWS_AS(encode_original(graphs::complete(3), 2), PreconditionError);
    try {
        encode_shifted(graphs::complete(3), 1);
    }
    catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("k >= 2") != std::string::npos);
    }
}

TEST_CASE("original encoding is the shifted one with k-1")
{
    auto A = encode_original(graphs::complete(2), 3);
    CHECK(format_element(A.differential(2)) == "x1^2 + x1*x2 + x2^2");
    CHECK(A.generators()->all()[2].degree == 3);
    std::mt19937_64 rng(19);
    for (int i = 0; i < 30; ++i) {
        auto g = graphs::random(6, 0.5, rng);
        for (int k : {3, 4, 5})
            REQUIRE(write_algebra(encode_original(g, k)) == write_algebra(encode_shifted(g, k - 1)));
    }
    EncodingParams p{EncodingVariant::original, 4};
    CHECK(encode(graphs::cycle(5), p) == encode_shifted(graphs::cycle(5), 3));
}

TEST_CASE("decisions on small named graphs")
{
    for (auto method : {DecisionMethod::groebner, DecisionMethod::certificate_search}) {
        CAPTURE(to_string(method));
        CHECK(decide_almost_free(graphs::complete(4), 2, method).verdict == Verdict::almost_free);
        CHECK(decide_almost_free(graphs::cycle(5), 2, method).verdict == Verdict::not_almost_free);
        CHECK(decide_almost_free(graphs::complete(5), 3, method).verdict == Verdict::almost_free);
        CHECK(decide_almost_free(graphs::complete(4), 3, method).verdict == Verdict::not_almost_free);
        CHECK(decide_almost_free(graphs::edgeless(1), 2, method).verdict == Verdict::not_almost_free);

        auto d = decide_almost_free(graphs::complete(3), 2, method);
        REQUIRE(d.verdict == Verdict::not_almost_free);
        REQUIRE(d.witness);
        CHECK(is_proper(graphs::complete(3), *d.witness));
        CHECK(verify_morphism(encode_shifted(graphs::complete(3), 2), assignment_from_coloring(*d.witness, 2)).accepted);
        CHECK_FALSE(decide_almost_free(graphs::complete(4), 2, method).witness);
    }
    CHECK_THROWS_AS(decide_almost_free(graphs::complete(3), 1, DecisionMethod::groebner), PreconditionError);
    CHECK_THROWS_AS(decide_almost_free(Graph(0), 2, DecisionMethod::groebner), PreconditionError);
}

TEST_CASE("both decision methods match brute force on graphs with up to 5 vertices")
{
    for (int n = 1; n <= 5; ++n) {
        const unsigned long long masks = 1ULL << testing::pair_count(n);
        for (unsigned long long mask = 0; mask < masks; ++mask) {
            auto g = graphs::from_mask(n, mask);
            // Almost free iff no connected component is 3-colourable.
            bool some_component = false;
            for (const auto& comp : connected_components(g))
                some_component = some_component || testing::brute_force_colorable(induced_subgraph(g, comp), 3);
            auto gb = decide_almost_free(g, 2, DecisionMethod::groebner);
            auto cs = decide_almost_free(g, 2, DecisionMethod::certificate_search);
            REQUIRE((gb.verdict == Verdict::almost_free) == !some_component);
            REQUIRE(cs.verdict == gb.verdict);
            if (is_connected(g))
                REQUIRE((gb.verdict == Verdict::almost_free) == !testing::brute_force_colorable(g, 3));
        }
    }
}

TEST_CASE("disconnected graphs are decided per component")
{
    // K4 plus an isolated vertex: not 3-colourable, but x5 is free.
    Graph g(5);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            g.add_edge(a, b);
    for (auto method : {DecisionMethod::groebner, DecisionMethod::certificate_search}) {
        auto d = decide_almost_free(g, 2, method);
        CHECK(d.verdict == Verdict::not_almost_free);
        CHECK(d.witness_vertices == std::vector<int>{4});
    }
    // Two disjoint K4: almost free.
    Graph h(8);
    for (int off : {0, 4})
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                h.add_edge(off + a, off + b);
    CHECK(decide_almost_free(h, 2, DecisionMethod::groebner).verdict == Verdict::almost_free);
    CHECK(decide_almost_free(h, 2, DecisionMethod::certificate_search).verdict == Verdict::almost_free);
    // Edgeless graphs are trivially colourable; the witness covers every vertex.
    auto e = decide_almost_free(graphs::edgeless(3), 2, DecisionMethod::certificate_search);
    CHECK(e.verdict == Verdict::not_almost_free);
    CHECK(e.witness_vertices == std::vector<int>{0, 1, 2});
}

TEST_CASE("certificate search examines every assignment when none works")
{
    auto d = decide_almost_free(graphs::complete(4), 2, DecisionMethod::certificate_search);
    CHECK(d.work == 81);
}

TEST_CASE("decision report formats")
{
    auto d = decide_almost_free(graphs::complete(3), 2, DecisionMethod::groebner);
    std::string p = write_decision(d, true);
    CHECK(p.find("verdict=NotAlmostFree\n") != std::string::npos);
    CHECK(p.find("method=groebner\n") != std::string::npos);
    CHECK(p.find("witness=0,1,2\n") != std::string::npos);
    CHECK(p.find("witness_vertices=1,2,3\n") != std::string::npos);
    std::string h = write_decision(d, false);
    CHECK(h.find("verdict: NotAlmostFree") != std::string::npos);
    CHECK(h.find("v 3 2") != std::string::npos);
    CHECK(parse_decision_method("certificate-search") == DecisionMethod::certificate_search);
    CHECK_THROWS_AS(parse_decision_method("guess"), std::invalid_argument);
}
