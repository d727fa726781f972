#include "ihara/joinform.hpp"

#include "ihara/numeric.hpp"
#include "ihara/zeta.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

namespace ihara {
namespace {

IntPoly lin(long c0, long c1) { return IntPoly{Integer(c0), Integer(c1)}; }
IntPoly quad(long c0, long c1, long c2) { return IntPoly{Integer(c0), Integer(c1), Integer(c2)}; }

/// x - c in the variable of p's roots.
IntPoly root_factor(long c) { return lin(-c, 1); }

/// u^{2k} p(x / u^2) for p of degree k.
IntPoly homogenize(const IntPoly& p, const IntPoly& x, std::size_t k)
{
    IntPoly result;
    IntPoly xp = IntPoly::constant(1);
    for (std::size_t i = 0; i <= k; ++i) {
        result += p[i] * (xp * IntPoly::monomial(1, 2 * (k - i)));
        xp *= x;
    }
    return result;
}

/// +-sqrt(t) for every root t of the nonzero part except the Perron root.
void append_pm_sqrt(const IntPoly& p_nonzero, long perron_sq, std::vector<double>& out, bool& has_complex)
{
    IntPoly rest = divide_exact(p_nonzero, root_factor(perron_sq));
    if (rest.degree() <= 0)
        return;
    RootSet r = real_roots(rest);
    has_complex = has_complex || r.has_complex;
    for (double t : r.real) {
        double s = std::sqrt(std::max(t, 0.0));
        out.push_back(s);
        out.push_back(-s);
    }
}

struct SpectrumParts {
    JoinParams params;
    FactorSpectrum s1;
    FactorSpectrum s2;
};

SpectrumParts spectrum_parts(const SemiRegularBipartite& g1, const SemiRegularBipartite& g2)
{
    SpectrumParts sp;
    sp.s1 = factor_spectrum(g1);
    sp.s2 = factor_spectrum(g2);
    JoinParams& p = sp.params;
    p.n1 = static_cast<long>(g1.n1());
    p.n2 = static_cast<long>(g1.n2());
    p.q1 = static_cast<long>(g1.q1());
    p.q2 = static_cast<long>(g1.q2());
    p.n3 = static_cast<long>(g2.n1());
    p.n4 = static_cast<long>(g2.n2());
    p.q3 = static_cast<long>(g2.q1());
    p.q4 = static_cast<long>(g2.q2());
    p.nu1 = p.n1 + p.n2;
    p.nu2 = p.n3 + p.n4;
    p.eps1 = p.n1 * p.q1;
    p.eps2 = p.n3 * p.q3;
    p.k1 = static_cast<long>(sp.s1.k);
    p.k2 = static_cast<long>(sp.s2.k);
    return sp;
}

JoinSpectrum build_spectrum(const SpectrumParts& sp, const Graph& joined)
{
    const JoinParams& p = sp.params;
    JoinSpectrum js;
    js.charpoly = charpoly(joined.adjacency());
    IntPoly f = quartic_f(p);
    js.lhs = quad(-p.q1 * p.q2, 0, 1) * quad(-p.q3 * p.q4, 0, 1) * js.charpoly;
    const std::size_t z = static_cast<std::size_t>(p.nu1 - 2 * p.k1 + p.nu2 - 2 * p.k2);
    js.rhs = IntPoly::monomial(1, z) * f * sp.s1.p_nonzero.compose_monomial(1, 2) *
             sp.s2.p_nonzero.compose_monomial(1, 2);
    js.identity_holds = (js.lhs == js.rhs);

    RootSet quartic_roots = real_roots(f);
    js.has_complex = quartic_roots.has_complex;
    js.eigenvalues = quartic_roots.real;
    append_pm_sqrt(sp.s1.p_nonzero, p.q1 * p.q2, js.eigenvalues, js.has_complex);
    append_pm_sqrt(sp.s2.p_nonzero, p.q3 * p.q4, js.eigenvalues, js.has_complex);
    js.eigenvalues.insert(js.eigenvalues.end(), z, 0.0);
    std::sort(js.eigenvalues.begin(), js.eigenvalues.end(), std::greater<>());
    return js;
}

ClosedFormZeta build_zeta(const SpectrumParts& sp, const IntPoly& bass)
{
    const JoinParams& p = sp.params;
    ClosedFormZeta z;
    z.x1 = quad(1, 0, p.q1 + p.nu2 - 1);
    z.x2 = quad(1, 0, p.q2 + p.nu2 - 1);
    z.x3 = quad(1, 0, p.q3 + p.nu1 - 1);
    z.x4 = quad(1, 0, p.q4 + p.nu1 - 1);
    IntPoly d1 = z.x1 * z.x2 - quad(0, 0, p.q1 * p.q2);
    IntPoly d2 = z.x3 * z.x4 - quad(0, 0, p.q3 * p.q4);
    IntPoly a1_num = Integer(p.n3) * (z.x4 + lin(0, p.q3)) + Integer(p.n4) * (z.x3 + lin(0, p.q4));
    IntPoly a2_num = Integer(p.n1) * (z.x2 + lin(0, p.q1)) + Integer(p.n2) * (z.x1 + lin(0, p.q2));
    z.h = d1 * d2 - quad(0, 0, 1) * a1_num * a2_num;
    z.P1 = homogenize(sp.s1.p_nonzero, z.x1 * z.x2, sp.s1.k);
    z.P2 = homogenize(sp.s2.p_nonzero, z.x3 * z.x4, sp.s2.k);
    z.e1 = p.n1 - p.k1;
    z.e2 = p.n2 - p.k1;
    z.e3 = p.n3 - p.k2;
    z.e4 = p.n4 - p.k2;
    z.exponent = p.eps1 + p.eps2 + p.nu1 * p.nu2 - p.nu1 - p.nu2;

    z.lhs = d1 * d2 * bass;
    IntPoly closed = z.x1.pow(z.e1) * z.x2.pow(z.e2) * z.x3.pow(z.e3) * z.x4.pow(z.e4) * z.h * z.P1 * z.P2;
    z.rhs = closed;
    z.identity_holds = (z.lhs == z.rhs);
    if (z.identity_holds)
        z.zeta_reciprocal = IntPoly{1, 0, -1}.pow(z.exponent) * divide_exact(closed, d1 * d2);
    return z;
}

long double cycle_term(long outer, long inner_count, long idx)
{
    const long double pi = std::numbers::pi_v<long double>;
    long double c = std::cos(static_cast<long double>(idx) * pi / static_cast<long double>(inner_count));
    long double b = static_cast<long double>(2 + 2 * outer);
    long double t = b * b - 4 * c * c;
    return t * t;
}

long half_range(long m) { return m % 2 == 1 ? (m - 1) / 2 : (m - 2) / 2; }

} // namespace

FactorSpectrum factor_spectrum(const SemiRegularBipartite& g)
{
    IntMatrix e = g.biadjacency();
    IntPoly cp = charpoly(e * e.transpose());
    FactorSpectrum s;
    const std::size_t zeros = cp.low_order();
    s.p_nonzero = cp.shift_down(zeros);
    s.k = g.n1() - zeros;
    s.zero_mult = g.nu() - 2 * s.k;
    if (s.p_nonzero.degree() != static_cast<long>(s.k))
        throw Error(ErrorCode::ExactDivisionFailure, "nonzero part has unexpected degree");
    return s;
}

JoinParams join_params(const SemiRegularBipartite& g1, const SemiRegularBipartite& g2)
{
    return spectrum_parts(g1, g2).params;
}

IntPoly quartic_f(const JoinParams& p)
{
    Integer c0 = Integer(p.q1 * p.q2) * (p.q3 * p.q4) - Integer(4) * p.eps1 * p.eps2;
    Integer c1 = Integer(-2) * (Integer(p.nu1) * p.eps2 + Integer(p.nu2) * p.eps1);
    Integer c2 = -(Integer(p.q1 * p.q2) + p.q3 * p.q4 + Integer(p.nu1) * p.nu2);
    return IntPoly{c0, c1, c2, Integer(0), Integer(1)};
}

JoinSpectrum spectrum_closed_form(const SemiRegularBipartite& g1, const SemiRegularBipartite& g2)
{
    JoinSpectrum js = build_spectrum(spectrum_parts(g1, g2), join(g1.graph(), g2.graph()));
    if (!js.identity_holds)
        throw Error(ErrorCode::IdentityViolation, "join spectrum identity fails");
    return js;
}

ClosedFormZeta zeta_closed_form(const SemiRegularBipartite& g1, const SemiRegularBipartite& g2)
{
    ClosedFormZeta z = build_zeta(spectrum_parts(g1, g2), bass_poly(join(g1.graph(), g2.graph())));
    if (!z.identity_holds)
        throw Error(ErrorCode::IdentityViolation, "closed-form zeta identity fails");
    return z;
}

Integer tau_from_spectra(const JoinParams& p, const FactorSpectrum& s1, const FactorSpectrum& s2)
{
    auto pw = [](long base, long e) {
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), Integer(base).get_mpz_t(), static_cast<unsigned long>(e));
        return r;
    };
    auto eig_product = [](const IntPoly& poly, long x, long perron_sq) {
        Integer value = poly.eval(Integer(x));
        Integer d = x - perron_sq;
        if (d == 0 || value % d != 0)
            throw Error(ErrorCode::ExactDivisionFailure, "eigenvalue product is not an integer");
        return Integer(value / d);
    };
    const long x1 = (p.q1 + p.nu2) * (p.q2 + p.nu2);
    const long x2 = (p.q3 + p.nu1) * (p.q4 + p.nu1);
    return Integer(p.q1 + p.q2 + p.nu2) * Integer(p.q3 + p.q4 + p.nu1) * pw(p.q1 + p.nu2, p.n1 - p.k1) *
           pw(p.q2 + p.nu2, p.n2 - p.k1) * pw(p.q3 + p.nu1, p.n3 - p.k2) * pw(p.q4 + p.nu1, p.n4 - p.k2) *
           eig_product(s1.p_nonzero, x1, p.q1 * p.q2) * eig_product(s2.p_nonzero, x2, p.q3 * p.q4);
}

Integer tau_closed_form(const SemiRegularBipartite& g1, const SemiRegularBipartite& g2)
{
    SpectrumParts sp = spectrum_parts(g1, g2);
    Integer closed = tau_from_spectra(sp.params, sp.s1, sp.s2);
    Integer oracle = spanning_trees(join(g1.graph(), g2.graph()));
    if (closed != oracle)
        throw Error(ErrorCode::MismatchWithOracle,
                    "closed form gives " + to_decimal(closed) + ", Matrix-Tree gives " + to_decimal(oracle));
    return closed;
}

Integer tau_complete_multipartite(long m, long n, long p, long q)
{
    if (m < 1 || n < 1 || p < 1 || q < 1)
        throw Error(ErrorCode::InvalidArgument, "every part of K_{m,n,p,q} needs at least one vertex");
    auto pw = [](long base, long e) {
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), Integer(base).get_mpz_t(), static_cast<unsigned long>(e));
        return r;
    };
    return pw(m + n + p + q, 2) * pw(m + p + q, n - 1) * pw(n + p + q, m - 1) * pw(p + m + n, q - 1) *
           pw(q + m + n, p - 1);
}

CycleJoinTau tau_cycle_join(long m, long n)
{
    if (m < 2 || n < 2)
        throw Error(ErrorCode::InvalidArgument, "C_{2m} v C_{2n} needs m, n >= 2");
    CycleJoinTau r;
    r.m = m;
    r.n = n;
    r.matrix_tree = spanning_trees(join(gen_even_cycle(static_cast<std::size_t>(m)).graph(),
                                        gen_even_cycle(static_cast<std::size_t>(n)).graph()));

    // The printed cases cover m odd with n even; the other mixed case
    // follows by exchanging the factors.
    long a = m;
    long b = n;
    if (a % 2 == 0 && b % 2 == 1)
        std::swap(a, b);

    long double pre = static_cast<long double>(4 + 2 * a) * static_cast<long double>(4 + 2 * b);
    if (a % 2 == 0)
        pre *= static_cast<long double>((2 + 2 * b) * (2 + 2 * b));
    if (b % 2 == 0)
        pre *= static_cast<long double>((2 + 2 * a) * (2 + 2 * a));
    const long ia = half_range(a);
    const long jb = half_range(b);

    long double first = 1;
    for (long i = 1; i <= ia; ++i)
        first *= cycle_term(b, a, i);
    long double second = 1;
    for (long j = 1; j <= jb; ++j)
        second *= cycle_term(a, b, j);
    r.j_indexed = pre * first * second;

    long double nested = 1;
    for (long i = 1; i <= ia; ++i) {
        nested *= cycle_term(b, a, i);
        for (long j = 1; j <= jb; ++j)
            nested *= cycle_term(a, b, i);
    }
    r.literal = pre * nested;

    const long double oracle = std::stold(to_decimal(r.matrix_tree));
    auto close = [&](long double v) { return std::fabs(v - oracle) < 0.4L; };
    r.j_indexed_matches = close(r.j_indexed);
    r.literal_matches = close(r.literal);
    return r;
}

bool no_symmetric_roots_check(const JoinParams& p)
{
    IntPoly f = quartic_f(p);
    IntPoly g = f.compose_monomial(Integer(-1), 1);
    return gcd(to_rational(f), to_rational(g)).degree() == 0;
}

CospectralReport cospectral_iff_zeta(const SemiRegularBipartite& g1, const SemiRegularBipartite& g2,
                                     const SemiRegularBipartite& g2p)
{
    Graph a = join(g1.graph(), g2.graph());
    Graph b = join(g1.graph(), g2p.graph());
    CospectralReport r;
    ZetaReciprocal za = zeta_reciprocal(a);
    ZetaReciprocal zb = zeta_reciprocal(b);
    r.zeta_equal = za.exponent == zb.exponent && za.f == zb.f;
    r.charpoly_equal = a.vertex_count() == b.vertex_count() && charpoly(a.adjacency()) == charpoly(b.adjacency());
    if (r.zeta_equal != r.charpoly_equal)
        throw Error(ErrorCode::BiconditionalViolation,
                    std::string("zeta equality is ") + (r.zeta_equal ? "true" : "false") +
                        " but spectrum equality is " + (r.charpoly_equal ? "true" : "false"));
    return r;
}

std::vector<CorpusFactor> corpus_factors()
{
    std::vector<CorpusFactor> out;
    for (std::size_t a = 1; a <= 3; ++a)
        for (std::size_t b = a; a + b <= 7; ++b)
            out.push_back({"K" + std::to_string(a) + "," + std::to_string(b), gen_complete_bipartite(a, b)});
    for (std::size_t k = 2; k <= 5; ++k)
        out.push_back({"C" + std::to_string(2 * k), gen_even_cycle(k)});
    for (std::size_t k = 3; k <= 5; ++k)
        out.push_back({"crown" + std::to_string(k), gen_crown(k)});
    out.push_back({"S(K4)", gen_subdivision(gen_complete_graph(4))});
    return out;
}

std::vector<CorpusPair> corpus(const CorpusConfig& config)
{
    std::vector<CorpusFactor> f = corpus_factors();
    std::vector<CorpusPair> out;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i; j < f.size(); ++j)
            if (f[i].graph.nu() + f[j].graph.nu() <= config.max_vertices)
                out.push_back({i, j});
    return out;
}

JoinVerification verify_join(const SemiRegularBipartite& g1, const SemiRegularBipartite& g2)
{
    const auto start = std::chrono::steady_clock::now();
    JoinVerification v;
    SpectrumParts sp = spectrum_parts(g1, g2);
    v.params = sp.params;
    const JoinParams& p = v.params;
    v.quartic = quartic_f(p);
    v.quartic_shape = v.quartic[3] == 0 && v.quartic[0] < 0;

    Graph g = join(g1.graph(), g2.graph());
    auto guarded = [&](const char* what, auto&& body) {
        try {
            body();
        } catch (const Error& e) {
            v.errors.push_back(std::string(what) + ": " + e.what());
        }
    };

    guarded("spectrum", [&] {
        JoinSpectrum js = build_spectrum(sp, g);
        v.spectrum_identity = js.identity_holds;
        v.eigenvalues = js.eigenvalues;
        std::vector<double> numeric = jacobi_eigen(to_real(g.adjacency()));
        if (numeric.size() == js.eigenvalues.size() && !js.has_complex) {
            for (std::size_t i = 0; i < numeric.size(); ++i)
                v.spectrum_max_error = std::max(v.spectrum_max_error, std::fabs(numeric[i] - js.eigenvalues[i]));
            v.spectrum_numeric = v.spectrum_max_error < 1e-6;
        }
    });

    IntPoly bass;
    guarded("zeta", [&] {
        bass = bass_poly(g);
        ClosedFormZeta z = build_zeta(sp, bass);
        v.zeta_identity = z.identity_holds;
        v.zeta_exponent = z.exponent;
        ZetaReciprocal generic = zeta_reciprocal(g);
        v.zeta_matches_bass = z.identity_holds && generic.polynomial && *generic.polynomial == z.zeta_reciprocal;
    });

    guarded("tau", [&] {
        v.tau_matrix_tree = spanning_trees(g);
        v.tau_closed = tau_from_spectra(p, sp.s1, sp.s2);
        const long diff = static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count());
        if (diff != 0 && !bass.is_zero()) {
            Integer d1 = bass.derivative().eval(Integer(1));
            Integer denom = Integer(2 * diff);
            if (d1 % denom == 0)
                v.tau_northshield = Integer(d1 / denom);
        }
        v.tau_agree = v.tau_closed == v.tau_matrix_tree && v.tau_northshield && *v.tau_northshield == v.tau_closed;
    });

    v.no_symmetric_roots = no_symmetric_roots_check(p);
    v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return v;
}

} // namespace ihara
