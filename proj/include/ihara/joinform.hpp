#ifndef IHARA_JOINFORM_HPP
#define IHARA_JOINFORM_HPP

#include "ihara/graph.hpp"
#include "ihara/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ihara {

/// Parameters of a join G1 v G2 of two semi-regular bipartite factors.
/// Factor 1 contributes (n1,n2,q1,q2), factor 2 contributes (n3,n4,q3,q4).
struct JoinParams {
    long n1 = 0, n2 = 0, n3 = 0, n4 = 0;
    long q1 = 0, q2 = 0, q3 = 0, q4 = 0;
    long nu1 = 0, nu2 = 0;
    long eps1 = 0, eps2 = 0;
    long k1 = 0, k2 = 0;
};

/// Nonzero part of the spectrum of a factor: p_nonzero is the monic
/// polynomial whose roots are the squares of the k positive eigenvalues.
struct FactorSpectrum {
    IntPoly p_nonzero;
    std::size_t k = 0;
    std::size_t zero_mult = 0;
};

/// charpoly(E E^T) with its factor t^{n1-k} removed.
FactorSpectrum factor_spectrum(const SemiRegularBipartite& g);

JoinParams join_params(const SemiRegularBipartite& g1, const SemiRegularBipartite& g2);

/// lambda^4 - (q1q2 + q3q4 + nu1nu2) lambda^2 - 2(nu1eps2 + nu2eps1) lambda
/// + q1q2q3q4 - 4eps1eps2
IntPoly quartic_f(const JoinParams& p);

struct JoinSpectrum {
    IntPoly charpoly;               ///< characteristic polynomial of A(G1 v G2)
    IntPoly lhs;                    ///< (x^2 - q1q2)(x^2 - q3q4) charpoly
    IntPoly rhs;                    ///< x^z f(x) p1(x^2) p2(x^2)
    bool identity_holds = false;
    std::vector<double> eigenvalues; ///< closed-form multiset, descending
    bool has_complex = false;
};

/// Builds the exact certificate and the numeric multiset; throws
/// IdentityViolation when the certificate fails.
JoinSpectrum spectrum_closed_form(const SemiRegularBipartite& g1, const SemiRegularBipartite& g2);

struct ClosedFormZeta {
    IntPoly x1, x2, x3, x4;
    IntPoly h;  ///< denominator-free h(u)
    IntPoly P1; ///< u^{2k1} p1(x1x2/u^2)
    IntPoly P2; ///< u^{2k2} p2(x3x4/u^2)
    long e1 = 0, e2 = 0, e3 = 0, e4 = 0; ///< exponents of x1..x4
    long exponent = 0;                   ///< exponent of (1 - u^2)
    IntPoly lhs;                         ///< (x1x2 - q1q2u^2)(x3x4 - q3q4u^2) f_G
    IntPoly rhs;                         ///< x1^e1 .. x4^e4 h P1 P2
    bool identity_holds = false;
    IntPoly zeta_reciprocal;             ///< assembled closed form of Z^{-1}
};

/// Throws IdentityViolation when the multiply-through identity fails.
ClosedFormZeta zeta_closed_form(const SemiRegularBipartite& g1, const SemiRegularBipartite& g2);

/// Spanning-tree count from parameters and factor spectra only.
/// Throws ExactDivisionFailure if an eigenvalue product is not integral.
Integer tau_from_spectra(const JoinParams& p, const FactorSpectrum& s1, const FactorSpectrum& s2);

/// As above, checked against the Matrix-Tree count (MismatchWithOracle).
Integer tau_closed_form(const SemiRegularBipartite& g1, const SemiRegularBipartite& g2);

/// tau(K_{m,n,p,q}); all parts must be >= 1.
Integer tau_complete_multipartite(long m, long n, long p, long q);

/// Cosine-product formula for tau(C_{2m} v C_{2n}), evaluated in long double.
/// Two readings of the second product are evaluated: the j-indexed one and
/// the literal one with i bound by the enclosing product.
struct CycleJoinTau {
    long m = 0, n = 0;
    long double j_indexed = 0;
    long double literal = 0;
    Integer matrix_tree;
    bool j_indexed_matches = false; ///< |value - oracle| < 0.4
    bool literal_matches = false;
};

CycleJoinTau tau_cycle_join(long m, long n);

/// gcd(f(x), f(-x)) is a nonzero constant.
bool no_symmetric_roots_check(const JoinParams& p);

struct CospectralReport {
    bool zeta_equal = false;
    bool charpoly_equal = false;
};

/// Compares G1 v G2 against G1 v G2'. Throws BiconditionalViolation when
/// exactly one of the two equalities holds.
CospectralReport cospectral_iff_zeta(const SemiRegularBipartite& g1, const SemiRegularBipartite& g2,
                                     const SemiRegularBipartite& g2p);

struct CorpusFactor {
    std::string name;
    SemiRegularBipartite graph;
};

struct CorpusConfig {
    std::size_t max_vertices = 60;
};

struct CorpusPair {
    std::size_t first = 0;  ///< index into corpus_factors()
    std::size_t second = 0;
};

/// K_{a,b} (a <= b, a+b <= 7), C_4..C_10, crown(3..5), subdivision(K4).
std::vector<CorpusFactor> corpus_factors();

/// Unordered pairs i <= j whose join fits the vertex cap, in index order.
std::vector<CorpusPair> corpus(const CorpusConfig& config);

/// Every identity for one pair, recorded rather than thrown.
struct JoinVerification {
    JoinParams params;
    IntPoly quartic;
    bool quartic_shape = false; ///< no cubic term, negative constant term

    bool spectrum_identity = false;
    bool spectrum_numeric = false;
    double spectrum_max_error = 0;
    std::vector<double> eigenvalues;

    bool zeta_identity = false;
    bool zeta_matches_bass = false;
    long zeta_exponent = 0;

    Integer tau_closed;
    Integer tau_matrix_tree;
    std::optional<Integer> tau_northshield;
    bool tau_agree = false;

    bool no_symmetric_roots = false;

    std::vector<std::string> errors;
    double seconds = 0;

    bool spectrum_pass() const noexcept { return spectrum_identity && spectrum_numeric; }
    bool zeta_pass() const noexcept { return zeta_identity && zeta_matches_bass; }
    bool all_pass() const noexcept
    {
        return quartic_shape && spectrum_pass() && zeta_pass() && tau_agree && no_symmetric_roots && errors.empty();
    }
};

JoinVerification verify_join(const SemiRegularBipartite& g1, const SemiRegularBipartite& g2);

} // namespace ihara

#endif // IHARA_JOINFORM_HPP
