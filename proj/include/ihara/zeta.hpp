#ifndef IHARA_ZETA_HPP
#define IHARA_ZETA_HPP

#include "ihara/graph.hpp"
#include "ihara/matrix.hpp"
#include "ihara/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ihara {

/// f_G(u) = det(I - uA + u^2 Q), computed by polymat_det with bound 2n.
IntPoly bass_poly(const Graph& g);

/// Z_G(u)^{-1} = (1 - u^2)^{m-n} f_G(u). When m < n the reciprocal zeta is a
/// rational function; the polynomial is then left empty and the exponent
/// carries the information.
struct ZetaReciprocal {
    IntPoly f;
    long exponent = 0; ///< m - n
    std::optional<IntPoly> polynomial;
    std::vector<std::string> warnings;

    bool is_polynomial() const noexcept { return polynomial.has_value(); }
};

/// Requires a connected graph (Disconnected otherwise). Degree-1 vertices
/// produce a warning, not an error.
ZetaReciprocal zeta_reciprocal(const Graph& g);

/// Non-backtracking edge matrix. Edge e = (u,v) with u < v yields arcs
/// u->v at index 2e and v->u at index 2e+1.
struct HashimotoMatrix {
    struct Arc {
        Vertex tail;
        Vertex head;
    };
    std::vector<Arc> arcs;
    IntMatrix matrix;
};

HashimotoMatrix hashimoto(const Graph& g);

/// det(I_{2m} - uB), from the characteristic polynomial of B.
IntPoly edge_zeta_reciprocal(const Graph& g);

/// sum_{k=1..order} tr(B^k) u^k / k; order is capped at 16.
RatPoly nb_walk_series(const Graph& g, std::size_t order);

/// tr(B^k) for k = 1..order (index 0 holds k = 1).
std::vector<Integer> nb_closed_walk_counts(const Graph& g, std::size_t order);

/// Matrix-Tree count: det of the Laplacian with row and column 0 removed.
Integer spanning_trees(const Graph& g);

/// -log Z^{-1} truncated at the given order, valid whether or not the
/// reciprocal zeta is a polynomial.
RatPoly zeta_log_series(const ZetaReciprocal& z, std::size_t order);

/// f'_G(1) against 2(m-n) tau(G).
struct NorthshieldCheck {
    Integer derivative_at_one;
    Integer expected;
    bool holds = false;
};

NorthshieldCheck northshield(const Graph& g);
bool northshield_check(const Graph& g);

/// (1 - u^2)^{m-n} f == det(I - uB), in cleared form when m < n.
bool bass_hashimoto_match(const ZetaReciprocal& z, const IntPoly& edge_zeta);

struct ZetaReport {
    std::size_t m = 0;
    std::size_t n = 0;
    ZetaReciprocal zeta;
    Integer tau;
    bool hashimoto_match = false;
    bool series_match = false;
    bool northshield_match = false;
    std::size_t series_order = 0;

    bool all_checks_pass() const noexcept { return hashimoto_match && series_match && northshield_match; }
};

/// Everything above for one connected graph, with every oracle cross-check.
ZetaReport zeta_report(const Graph& g, std::size_t series_order = 12);

} // namespace ihara

#endif // IHARA_ZETA_HPP
