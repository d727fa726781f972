#include "oracles.hpp"

#include "ihara/graph.hpp"
#include "ihara/numeric.hpp"

#include <doctest.h>

#include <cmath>

using namespace ihara;

namespace {

ErrorCode code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

void check_params(const SemiRegularBipartite& s, std::size_t n1, std::size_t n2, std::size_t q1, std::size_t q2)
{
    CHECK(s.n1() == n1);
    CHECK(s.n2() == n2);
    CHECK(s.q1() == q1);
    CHECK(s.q2() == q2);
    CHECK(s.n1() * s.q1() == s.n2() * s.q2());
}

} // namespace

TEST_SUITE("graph")
{
    TEST_CASE("build_graph")
    {
        Graph k2 = build_graph(2, {{0, 1}});
        CHECK(k2.vertex_count() == 2);
        CHECK(k2.edge_count() == 1);

        Graph k4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        for (Vertex v = 0; v < 4; ++v)
            CHECK(k4.degree(v) == 3);
        CHECK(k4 == gen_complete_graph(4));

        CHECK(code_of([] { build_graph(3, {{0, 0}}); }) == ErrorCode::LoopEdge);
        CHECK(code_of([] { build_graph(3, {{0, 3}}); }) == ErrorCode::OutOfRange);
        CHECK(code_of([] { build_graph(3, {{0, 1}, {1, 0}}); }) == ErrorCode::DuplicateEdge);

        Graph g = build_graph(4, {{3, 1}, {2, 0}});
        REQUIRE(g.edges().size() == 2);
        CHECK(g.edges()[0] == Edge{0, 2});
        CHECK(g.edges()[1] == Edge{1, 3});
        CHECK_FALSE(g.connected());
        CHECK(build_graph(1, {}).connected());
    }

    TEST_CASE("matrices of a graph")
    {
        Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
        IntMatrix a = p3.adjacency();
        CHECK(a(0, 1) == 1);
        CHECK(a(0, 2) == 0);
        CHECK(p3.q_matrix()(1, 1) == 1);
        CHECK(p3.q_matrix()(0, 0) == 0);
        CHECK(p3.laplacian()(1, 1) == 2);
        CHECK(p3.laplacian()(1, 0) == -1);
    }

    TEST_CASE("detect_semiregular")
    {
        SemiRegularBipartite k23 = detect_semiregular(gen_complete_bipartite(2, 3).graph());
        check_params(k23, 2, 3, 3, 2);
        CHECK(k23.epsilon() == 6);

        SemiRegularBipartite c6 = detect_semiregular(gen_cycle(6));
        check_params(c6, 3, 3, 2, 2);
        CHECK(c6.epsilon() == 6);
        CHECK(c6.part1().front() == 0);

        // Larger part listed first in the input still normalizes.
        Graph k32 = build_graph(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
        SemiRegularBipartite s = detect_semiregular(k32);
        check_params(s, 2, 3, 3, 2);
        CHECK(s.part1() == std::vector<Vertex>{3, 4});

        CHECK(code_of([] { detect_semiregular(gen_complete_graph(3)); }) == ErrorCode::NotBipartite);
        CHECK(code_of([] { detect_semiregular(build_graph(4, {{0, 1}, {1, 2}, {2, 3}})); }) ==
              ErrorCode::NotSemiRegular);
        CHECK(code_of([] { detect_semiregular(build_graph(4, {{0, 1}, {2, 3}})); }) == ErrorCode::Disconnected);
        CHECK(code_of([] { detect_semiregular(build_graph(1, {})); }) == ErrorCode::InvalidArgument);
    }

    TEST_CASE("biadjacency block")
    {
        SemiRegularBipartite k23 = gen_complete_bipartite(2, 3);
        IntMatrix e = k23.biadjacency();
        CHECK(e.rows() == 2);
        CHECK(e.cols() == 3);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(e(i, j) == 1);
        SemiRegularBipartite crown = gen_crown(4);
        IntMatrix c = crown.biadjacency();
        for (std::size_t i = 0; i < 4; ++i) {
            Integer row = 0;
            for (std::size_t j = 0; j < 4; ++j)
                row += c(i, j);
            CHECK(row == 3);
        }
    }

    TEST_CASE("join")
    {
        Graph k2 = gen_complete_graph(2);
        CHECK(join(k2, k2) == gen_complete_graph(4));
        CHECK(join(gen_complete_bipartite(1, 1).graph(), gen_complete_bipartite(1, 1).graph()) ==
              gen_complete_graph(4));
        Graph big = join(gen_complete_bipartite(2, 3).graph(), gen_complete_bipartite(2, 3).graph());
        CHECK(big.vertex_count() == 10);
        CHECK(big.edge_count() == 37);
        CHECK(code_of([] { join(Graph{}, gen_complete_graph(2)); }) == ErrorCode::InvalidArgument);
    }

    TEST_CASE("join edge count on random graphs")
    {
        std::mt19937 rng(41);
        std::uniform_int_distribution<int> size(1, 8);
        std::bernoulli_distribution coin(0.4);
        for (int trial = 0; trial < 50; ++trial) {
            auto random_graph = [&] {
                std::size_t n = static_cast<std::size_t>(size(rng));
                std::vector<std::pair<Vertex, Vertex>> e;
                for (Vertex a = 0; a < n; ++a)
                    for (Vertex b = a + 1; b < n; ++b)
                        if (coin(rng))
                            e.emplace_back(a, b);
                return build_graph(n, e);
            };
            Graph a = random_graph();
            Graph b = random_graph();
            Graph j = join(a, b);
            CHECK(j.vertex_count() == a.vertex_count() + b.vertex_count());
            CHECK(j.edge_count() == a.edge_count() + b.edge_count() + a.vertex_count() * b.vertex_count());
            CHECK(j.connected());
        }
    }

    TEST_CASE("complete bipartite generator")
    {
        SemiRegularBipartite a = gen_complete_bipartite(2, 3);
        CHECK(a.graph().vertex_count() == 5);
        CHECK(a.graph().edge_count() == 6);
        check_params(a, 2, 3, 3, 2);
        CHECK(gen_complete_bipartite(1, 1).graph() == gen_complete_graph(2));
        SemiRegularBipartite c = gen_complete_bipartite(3, 3);
        CHECK(c.graph().edge_count() == 9);
        check_params(c, 3, 3, 3, 3);
        check_params(gen_complete_bipartite(4, 1), 1, 4, 4, 1);
    }

    TEST_CASE("even cycle generator")
    {
        CHECK(gen_even_cycle(2).graph() == gen_cycle(4));
        CHECK(gen_even_cycle(3).graph() == gen_cycle(6));
        SemiRegularBipartite c8 = gen_even_cycle(4);
        check_params(c8, 4, 4, 2, 2);
        std::vector<double> ev = jacobi_eigen(to_real(c8.graph().adjacency()));
        CHECK(std::fabs(ev.front() - 2) < 1e-9);
        for (std::size_t i = 0; i < ev.size(); ++i)
            CHECK(std::fabs(ev[i] + ev[ev.size() - 1 - i]) < 1e-9);
        CHECK(code_of([] { gen_even_cycle(1); }) == ErrorCode::InvalidArgument);
    }

    TEST_CASE("crown generator")
    {
        SemiRegularBipartite c3 = gen_crown(3);
        Graph c6 = gen_cycle(6);
        CHECK(c3.graph().edge_count() == 6);
        for (Vertex v = 0; v < 6; ++v)
            CHECK(c3.graph().degree(v) == 2);
        CHECK(c3.graph().connected());
        CHECK(charpoly(c3.graph().adjacency()) == charpoly(c6.adjacency()));

        SemiRegularBipartite c4 = gen_crown(4);
        CHECK(c4.graph().vertex_count() == 8);
        CHECK(c4.graph().edge_count() == 12);
        check_params(c4, 4, 4, 3, 3);
        SemiRegularBipartite c5 = gen_crown(5);
        CHECK(c5.graph().vertex_count() == 10);
        CHECK(c5.graph().edge_count() == 20);
        CHECK(code_of([] { gen_crown(2); }) == ErrorCode::InvalidArgument);
    }

    TEST_CASE("subdivision generator")
    {
        SemiRegularBipartite s = gen_subdivision(gen_complete_graph(4));
        check_params(s, 4, 6, 3, 2);
        CHECK(s.epsilon() == 12);
        SemiRegularBipartite p = gen_subdivision(gen_petersen());
        check_params(p, 10, 15, 3, 2);
        CHECK(p.graph().vertex_count() == 25);
        CHECK(code_of([] { gen_subdivision(gen_cycle(5)); }) == ErrorCode::NotRegular);
        CHECK(code_of([] { gen_subdivision(build_graph(3, {{0, 1}, {1, 2}})); }) == ErrorCode::NotRegular);
    }

    TEST_CASE("detection reproduces generator parameters")
    {
        auto same = [](const SemiRegularBipartite& s) {
            SemiRegularBipartite d = detect_semiregular(s.graph());
            CHECK(d.n1() == s.n1());
            CHECK(d.n2() == s.n2());
            CHECK(d.q1() == s.q1());
            CHECK(d.q2() == s.q2());
            CHECK(d.part1() == s.part1());
        };
        for (std::size_t k = 2; k <= 8; ++k) {
            same(gen_even_cycle(k));
            for (std::size_t b = 1; b <= k; ++b)
                same(gen_complete_bipartite(b, k));
            if (k >= 3)
                same(gen_crown(k));
            if (k >= 4)
                same(gen_subdivision(gen_complete_graph(k)));
        }
        same(gen_subdivision(gen_petersen()));
    }

    TEST_CASE("relabeling")
    {
        std::mt19937 rng(43);
        Graph g = gen_petersen();
        auto perm = oracle::random_permutation(rng, g.vertex_count());
        Graph h = g.relabeled(perm);
        CHECK(h.edge_count() == g.edge_count());
        for (const auto& e : g.edges())
            CHECK(h.has_edge(perm[e.u], perm[e.v]));
        CHECK_THROWS_AS(g.relabeled({0, 1}), Error);
    }
}
