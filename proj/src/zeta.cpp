#include "ihara/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>

namespace ihara {
namespace {

void require_connected(const Graph& g)
{
    if (!g.connected())
        throw Error(ErrorCode::Disconnected, "graph is not connected");
}

IntPoly one_minus_u2() { return IntPoly{1, 0, -1}; }

/// Traces of B^1..B^order by repeated sparse right-multiplication.
template <class Int>
std::vector<Integer> walk_traces(const std::vector<std::vector<std::size_t>>& succ, std::size_t order)
{
    const std::size_t n = succ.size();
    std::vector<Int> cur(n * n, Int(0));
    std::vector<Int> next(n * n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s : succ[i])
            cur[i * n + s] = 1;
    std::vector<Integer> traces;
    traces.reserve(order);
    auto to_integer = [](const Int& x) {
        if constexpr (std::is_same_v<Int, Integer>) {
            return x;
        } else {
            Integer r(static_cast<unsigned long>(x >> 64));
            r <<= 64;
            r += static_cast<unsigned long>(x);
            return r;
        }
    };
    for (std::size_t k = 1; k <= order; ++k) {
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr += cur[i * n + i];
        traces.push_back(to_integer(tr));
        if (k == order)
            break;
        std::fill(next.begin(), next.end(), Int(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                const Int& x = cur[i * n + l];
                if (x == 0)
                    continue;
                for (std::size_t s : succ[l])
                    next[i * n + s] += x;
            }
        std::swap(cur, next);
    }
    return traces;
}

} // namespace

IntPoly bass_poly(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    if (n == 0)
        throw Error(ErrorCode::InvalidArgument, "Bass polynomial of the empty graph");
    Matrix<IntPoly> e(n, n);
    for (Vertex v = 0; v < n; ++v) {
        long q = static_cast<long>(g.degree(v)) - 1;
        e(v, v) = IntPoly{Integer(1), Integer(0), Integer(q)};
        for (Vertex w : g.neighbors(v))
            e(v, w) = IntPoly{Integer(0), Integer(-1)};
    }
    return polymat_det(PolyMatrix(std::move(e), 2 * n));
}

ZetaReciprocal zeta_reciprocal(const Graph& g)
{
    require_connected(g);
    ZetaReciprocal z;
    z.f = bass_poly(g);
    z.exponent = static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1)
            z.warnings.push_back("vertex " + std::to_string(v) +
                                 " has degree 1; the cycle-product reading of the zeta function assumes none");
    if (z.exponent >= 0)
        z.polynomial = one_minus_u2().pow(z.exponent) * z.f;
    return z;
}

HashimotoMatrix hashimoto(const Graph& g)
{
    if (g.vertex_count() == 0)
        throw Error(ErrorCode::InvalidArgument, "Hashimoto matrix of the empty graph");
    HashimotoMatrix h;
    const std::size_t arcs = 2 * g.edge_count();
    h.arcs.reserve(arcs);
    for (const auto& e : g.edges()) {
        h.arcs.push_back({e.u, e.v});
        h.arcs.push_back({e.v, e.u});
    }
    h.matrix = IntMatrix(arcs, arcs);
    for (std::size_t a = 0; a < arcs; ++a)
        for (std::size_t b = 0; b < arcs; ++b)
            if (h.arcs[a].head == h.arcs[b].tail && h.arcs[a].tail != h.arcs[b].head)
                h.matrix(a, b) = 1;
    return h;
}

IntPoly edge_zeta_reciprocal(const Graph& g)
{
    require_connected(g);
    HashimotoMatrix h = hashimoto(g);
    // det(I - uB) = u^N det(u^{-1} I - B)
    return charpoly_multimodular(h.matrix).reverse(h.arcs.size());
}

std::vector<Integer> nb_closed_walk_counts(const Graph& g, std::size_t order)
{
    if (order > 16)
        throw Error(ErrorCode::InvalidArgument, "walk-series order is capped at 16, got " + std::to_string(order));
    if (order == 0)
        return {};
    HashimotoMatrix h = hashimoto(g);
    const std::size_t n = h.arcs.size();
    std::vector<std::vector<std::size_t>> succ(n);
    std::size_t max_out = 0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (sgn(h.matrix(a, b)) != 0)
                succ[a].push_back(b);
        max_out = std::max(max_out, succ[a].size());
    }
    // Entries of B^k are at most max_out^k and the trace adds n of them.
    const double bits = static_cast<double>(order) * std::log2(static_cast<double>(max_out) + 1.0) +
                        std::log2(static_cast<double>(n) + 1.0);
    if (bits < 120.0)
        return walk_traces<unsigned __int128>(succ, order);
    return walk_traces<Integer>(succ, order);
}

RatPoly nb_walk_series(const Graph& g, std::size_t order)
{
    std::vector<Integer> traces = nb_closed_walk_counts(g, order);
    std::vector<Rational> c(order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
        c[k] = Rational(traces[k - 1], Integer(static_cast<unsigned long>(k)));
        c[k].canonicalize();
    }
    return RatPoly(std::move(c));
}

Integer spanning_trees(const Graph& g)
{
    require_connected(g);
    if (g.vertex_count() == 1)
        return 1;
    return bareiss_det(g.laplacian().minor_matrix(0, 0));
}

RatPoly zeta_log_series(const ZetaReciprocal& z, std::size_t order)
{
    if (z.polynomial)
        return series_log(*z.polynomial, order);
    RatPoly base = series_log(one_minus_u2(), order);
    return series_log(z.f, order) + Rational(z.exponent) * base;
}

NorthshieldCheck northshield(const Graph& g)
{
    require_connected(g);
    NorthshieldCheck c;
    c.derivative_at_one = bass_poly(g).derivative().eval(Integer(1));
    long diff = static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count());
    c.expected = Integer(2 * diff) * spanning_trees(g);
    c.holds = (c.derivative_at_one == c.expected);
    return c;
}

bool northshield_check(const Graph& g) { return northshield(g).holds; }

bool bass_hashimoto_match(const ZetaReciprocal& z, const IntPoly& edge_zeta)
{
    if (z.exponent >= 0)
        return one_minus_u2().pow(z.exponent) * z.f == edge_zeta;
    return z.f == one_minus_u2().pow(-z.exponent) * edge_zeta;
}

ZetaReport zeta_report(const Graph& g, std::size_t series_order)
{
    require_connected(g);
    ZetaReport r;
    r.m = g.edge_count();
    r.n = g.vertex_count();
    r.series_order = series_order;
    r.zeta = zeta_reciprocal(g);
    r.tau = spanning_trees(g);
    r.hashimoto_match = bass_hashimoto_match(r.zeta, edge_zeta_reciprocal(g));
    r.series_match = (zeta_log_series(r.zeta, series_order) == nb_walk_series(g, series_order));
    Integer d1 = r.zeta.f.derivative().eval(Integer(1));
    long diff = static_cast<long>(r.m) - static_cast<long>(r.n);
    r.northshield_match = (d1 == Integer(2 * diff) * r.tau);
    return r;
}

} // namespace ihara
