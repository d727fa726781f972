#include "oracles.hpp"

#include "ihara/joinform.hpp"
#include "ihara/numeric.hpp"
#include "ihara/zeta.hpp"

#include <doctest.h>

#include <cmath>

using namespace ihara;

namespace {

Graph complete_multipartite(std::vector<std::size_t> parts)
{
    std::vector<std::size_t> owner;
    for (std::size_t p = 0; p < parts.size(); ++p)
        owner.insert(owner.end(), parts[p], p);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex a = 0; a < owner.size(); ++a)
        for (Vertex b = a + 1; b < owner.size(); ++b)
            if (owner[a] != owner[b])
                e.emplace_back(a, b);
    return build_graph(owner.size(), e);
}

/// The same factor under a random vertex relabeling.
SemiRegularBipartite shuffled(const SemiRegularBipartite& s, unsigned seed)
{
    std::mt19937 rng(seed);
    auto perm = oracle::random_permutation(rng, s.graph().vertex_count());
    std::vector<Vertex> a;
    std::vector<Vertex> b;
    for (Vertex v : s.part1())
        a.push_back(perm[v]);
    for (Vertex v : s.part2())
        b.push_back(perm[v]);
    return SemiRegularBipartite::from_parts(s.graph().relabeled(perm), a, b);
}

} // namespace

TEST_SUITE("joinform")
{
    TEST_CASE("join parameters")
    {
        SemiRegularBipartite k11 = gen_complete_bipartite(1, 1);
        JoinParams p = join_params(k11, k11);
        CHECK(p.nu1 == 2);
        CHECK(p.nu2 == 2);
        CHECK(p.eps1 == 1);
        CHECK(p.eps2 == 1);
        CHECK(p.q1 == 1);
        CHECK(p.q4 == 1);
        CHECK(p.k1 == 1);
        CHECK(p.k2 == 1);

        SemiRegularBipartite k23 = gen_complete_bipartite(2, 3);
        JoinParams r = join_params(k23, k23);
        CHECK(r.nu1 == 5);
        CHECK(r.eps1 == 6);
        CHECK(r.q1 == 3);
        CHECK(r.q2 == 2);
        CHECK(r.k1 == 1);

        SemiRegularBipartite c6 = gen_even_cycle(3);
        JoinParams c = join_params(c6, c6);
        CHECK(c.nu1 == 6);
        CHECK(c.eps1 == 6);
        CHECK(c.q1 == 2);
        // Positive eigenvalues of C6 are 2, 1, 1.
        CHECK(c.k1 == 3);
    }

    TEST_CASE("factor spectrum")
    {
        FactorSpectrum k23 = factor_spectrum(gen_complete_bipartite(2, 3));
        CHECK(k23.p_nonzero == IntPoly{-6, 1});
        CHECK(k23.k == 1);
        CHECK(k23.zero_mult == 3);

        FactorSpectrum k11 = factor_spectrum(gen_complete_bipartite(1, 1));
        CHECK(k11.p_nonzero == IntPoly{-1, 1});
        CHECK(k11.zero_mult == 0);

        FactorSpectrum c8 = factor_spectrum(gen_even_cycle(4));
        // Squares of 2cos(2 pi j / 8) over the positive ones: 4, 2, 2.
        CHECK(c8.k == 3);
        CHECK(c8.p_nonzero == IntPoly{-4, 1} * IntPoly{-2, 1}.pow(2));
        CHECK(c8.zero_mult == 2);
    }

    TEST_CASE("factor spectrum invariants over the corpus")
    {
        for (const auto& f : corpus_factors()) {
            FactorSpectrum s = factor_spectrum(f.graph);
            CHECK(s.p_nonzero[0] != 0);
            CHECK(s.p_nonzero.degree() == static_cast<long>(s.k));
            RootSet r = real_roots(s.p_nonzero);
            REQUIRE_FALSE(r.real.empty());
            CHECK(std::fabs(r.real.front() - static_cast<double>(f.graph.q1() * f.graph.q2())) < 1e-8);
        }
    }

    TEST_CASE("quartic")
    {
        SemiRegularBipartite k11 = gen_complete_bipartite(1, 1);
        IntPoly f = quartic_f(join_params(k11, k11));
        CHECK(f == IntPoly{-3, -8, -6, 0, 1});
        CHECK(f == IntPoly{-3, 1} * IntPoly{1, 1}.pow(3));

        SemiRegularBipartite k23 = gen_complete_bipartite(2, 3);
        CHECK(quartic_f(join_params(k23, k23)) == IntPoly{-108, -120, -37, 0, 1});

        auto factors = corpus_factors();
        for (const auto& pair : corpus({})) {
            IntPoly g = quartic_f(join_params(factors[pair.first].graph, factors[pair.second].graph));
            CHECK(g[3] == 0);
            CHECK(g[0] < 0);
        }
    }

    TEST_CASE("join spectrum")
    {
        SemiRegularBipartite k11 = gen_complete_bipartite(1, 1);
        JoinSpectrum s = spectrum_closed_form(k11, k11);
        CHECK(s.identity_holds);
        std::vector<double> num = jacobi_eigen(to_real(gen_complete_graph(4).adjacency()));
        REQUIRE(s.eigenvalues.size() == 4);
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(std::fabs(s.eigenvalues[i] - num[i]) < 1e-8);
        CHECK(std::fabs(s.eigenvalues[0] - 3) < 1e-8);

        SemiRegularBipartite k23 = gen_complete_bipartite(2, 3);
        JoinSpectrum t = spectrum_closed_form(k23, k23);
        REQUIRE(t.eigenvalues.size() == 10);
        CHECK(std::count(t.eigenvalues.begin(), t.eigenvalues.end(), 0.0) == 6);
        std::vector<double> num10 = jacobi_eigen(to_real(join(k23.graph(), k23.graph()).adjacency()));
        for (std::size_t i = 0; i < 10; ++i)
            CHECK(std::fabs(t.eigenvalues[i] - num10[i]) < 1e-6);

        SemiRegularBipartite c6 = gen_even_cycle(3);
        JoinSpectrum u = spectrum_closed_form(c6, c6);
        const auto zeros = std::count(u.eigenvalues.begin(), u.eigenvalues.end(), 0.0);
        CHECK(zeros == 12 - 2 * 3 - 2 * 3);
    }

    TEST_CASE("closed-form zeta")
    {
        SemiRegularBipartite k11 = gen_complete_bipartite(1, 1);
        ClosedFormZeta z = zeta_closed_form(k11, k11);
        CHECK(z.identity_holds);
        CHECK(z.zeta_reciprocal == *zeta_reciprocal(gen_complete_graph(4)).polynomial);

        SemiRegularBipartite k23 = gen_complete_bipartite(2, 3);
        ClosedFormZeta w = zeta_closed_form(k23, k23);
        CHECK(w.exponent == 27);
        Graph g = join(k23.graph(), k23.graph());
        CHECK(w.exponent == static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count()));
        CHECK(w.x1 == IntPoly{1, 0, 7});
        CHECK(w.zeta_reciprocal == *zeta_reciprocal(g).polynomial);
    }

    TEST_CASE("spanning trees of joins")
    {
        SemiRegularBipartite k11 = gen_complete_bipartite(1, 1);
        CHECK(tau_closed_form(k11, k11) == 16);
        SemiRegularBipartite k23 = gen_complete_bipartite(2, 3);
        CHECK(tau_closed_form(k23, k23) == spanning_trees(join(k23.graph(), k23.graph())));
        SemiRegularBipartite s = gen_subdivision(gen_complete_graph(4));
        CHECK(tau_closed_form(s, k23) == spanning_trees(join(s.graph(), k23.graph())));
    }

    TEST_CASE("complete multipartite count")
    {
        CHECK(tau_complete_multipartite(1, 1, 1, 1) == 16);
        CHECK(tau_complete_multipartite(2, 3, 2, 3) == Integer(100) * 49 * 8 * 49 * 8);
        CHECK(tau_complete_multipartite(2, 3, 2, 3) == spanning_trees(complete_multipartite({2, 3, 2, 3})));
        CHECK(tau_complete_multipartite(1, 2, 1, 2) == spanning_trees(complete_multipartite({1, 2, 1, 2})));
        CHECK_THROWS_AS(tau_complete_multipartite(0, 1, 1, 1), Error);
    }

    TEST_CASE("cycle join count")
    {
        CycleJoinTau a = tau_cycle_join(2, 2);
        CHECK(a.matrix_tree == 82944);
        CHECK(a.j_indexed_matches);
        CycleJoinTau b = tau_cycle_join(3, 3);
        CHECK(b.matrix_tree == 1575296100);
        CHECK(b.j_indexed_matches);
        CycleJoinTau c = tau_cycle_join(2, 3);
        CHECK(c.j_indexed_matches);
        CHECK(tau_cycle_join(3, 2).matrix_tree == c.matrix_tree);
        CHECK_THROWS_AS(tau_cycle_join(1, 3), Error);
    }

    TEST_CASE("no symmetric root pairs")
    {
        SemiRegularBipartite k11 = gen_complete_bipartite(1, 1);
        CHECK(no_symmetric_roots_check(join_params(k11, k11)));
        SemiRegularBipartite k23 = gen_complete_bipartite(2, 3);
        CHECK(no_symmetric_roots_check(join_params(k23, k23)));
        JoinParams fake;
        fake.q1 = fake.q2 = fake.q3 = fake.q4 = 0;
        CHECK_FALSE(no_symmetric_roots_check(fake));
    }

    TEST_CASE("zeta equality against cospectrality")
    {
        SemiRegularBipartite g1 = gen_complete_bipartite(2, 3);
        SemiRegularBipartite c8 = gen_even_cycle(4);
        CospectralReport same = cospectral_iff_zeta(g1, c8, c8);
        CHECK(same.zeta_equal);
        CHECK(same.charpoly_equal);

        CospectralReport iso = cospectral_iff_zeta(g1, c8, shuffled(c8, 3));
        CHECK(iso.zeta_equal);
        CHECK(iso.charpoly_equal);

        CospectralReport diff =
            cospectral_iff_zeta(g1, gen_complete_bipartite(1, 5), gen_complete_bipartite(2, 4));
        CHECK_FALSE(diff.zeta_equal);
        CHECK_FALSE(diff.charpoly_equal);
    }

    TEST_CASE("corpus")
    {
        auto factors = corpus_factors();
        CHECK(factors.size() == 20);
        for (const auto& f : factors) {
            SemiRegularBipartite d = detect_semiregular(f.graph.graph());
            CHECK(d.q1() == f.graph.q1());
        }
        auto pairs = corpus({});
        CHECK(pairs.size() >= 20);
        for (const auto& p : pairs) {
            Graph g = join(factors[p.first].graph.graph(), factors[p.second].graph.graph());
            CHECK(g.connected());
            CHECK(g.vertex_count() <= 60);
        }
        auto small = corpus({12});
        CHECK(small.size() < pairs.size());
        for (const auto& p : small)
            CHECK(factors[p.first].graph.nu() + factors[p.second].graph.nu() <= 12);
    }

    TEST_CASE("verify_join on sample pairs")
    {
        JoinVerification v = verify_join(gen_complete_bipartite(1, 1), gen_complete_bipartite(1, 1));
        CHECK(v.all_pass());
        CHECK(v.tau_closed == 16);
        CHECK(v.tau_northshield.value() == 16);

        JoinVerification w = verify_join(gen_complete_bipartite(2, 3), gen_even_cycle(3));
        CHECK(w.all_pass());
        CHECK(w.errors.empty());
    }
}
