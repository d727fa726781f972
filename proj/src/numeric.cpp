#include "ihara/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace ihara {

RealMatrix to_real(const IntMatrix& m)
{
    RealMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j).get_d();
    return r;
}

namespace {

double off_diagonal_norm(const RealMatrix& a)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j)
                s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

} // namespace

std::vector<double> jacobi_eigen(const RealMatrix& m)
{
    if (!m.square())
        throw Error(ErrorCode::NotSymmetric, "matrix is not square");
    const std::size_t n = m.rows();
    if (n > 200)
        throw Error(ErrorCode::InvalidArgument, "jacobi_eigen supports n <= 200, got " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::fabs(m(i, j) - m(j, i)) > 1e-12)
                throw Error(ErrorCode::NotSymmetric,
                            "entries (" + std::to_string(i) + "," + std::to_string(j) + ") differ");

    RealMatrix a = m;
    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    for (;; ++sweep) {
        if (off_diagonal_norm(a) < 1e-12)
            break;
        if (sweep == kMaxSweeps)
            throw Error(ErrorCode::NoConvergence, "Jacobi did not converge in 100 sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0)
                    continue;
                // Once the rotation would not change the diagonal in double
                // precision, the entry is dropped outright.
                const double g = 100.0 * std::fabs(apq);
                if (sweep > 3 && std::fabs(a(p, p)) + g == std::fabs(a(p, p)) &&
                    std::fabs(a(q, q)) + g == std::fabs(a(q, q))) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0)
                    t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i)
        eig[i] = a(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

std::vector<std::complex<double>> durand_kerner(const IntPoly& p)
{
    using cplx = std::complex<double>;
    if (p.is_zero())
        throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
    const long deg = p.degree();
    if (deg == 0)
        return {};
    const double lead = p.leading().get_d();
    std::vector<double> a(static_cast<std::size_t>(deg) + 1);
    double max_ratio = 0.0;
    for (long k = 0; k <= deg; ++k) {
        a[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k)].get_d() / lead;
        if (k < deg)
            max_ratio = std::max(max_ratio, std::fabs(a[static_cast<std::size_t>(k)]));
    }
    auto eval = [&](cplx z) {
        cplx acc = 0.0;
        for (long k = deg; k >= 0; --k)
            acc = acc * z + a[static_cast<std::size_t>(k)];
        return acc;
    };

    const double radius = 1.0 + max_ratio;
    const cplx seed(0.4, 0.9);
    std::vector<cplx> z(static_cast<std::size_t>(deg));
    cplx w = 1.0;
    for (auto& zi : z) {
        zi = radius * w;
        w *= seed;
    }

    constexpr int kMaxIter = 1000;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            cplx denom = 1.0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i)
                    denom *= (z[i] - z[j]);
            const cplx step = eval(z[i]) / denom;
            z[i] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
        }
        if (worst < 1e-12)
            return z;
    }
    throw Error(ErrorCode::NoConvergence, "Durand-Kerner did not converge for " + p.to_string());
}

RootSet real_roots(const IntPoly& p)
{
    if (p.is_zero())
        throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
    RootSet out;
    for (const auto& [factor, mult] : square_free_decomposition(p)) {
        for (const auto& z : durand_kerner(factor)) {
            if (std::fabs(z.imag()) < 1e-8)
                out.real.insert(out.real.end(), mult, z.real());
            else
                out.has_complex = true;
        }
    }
    std::sort(out.real.begin(), out.real.end(), std::greater<>());
    return out;
}

} // namespace ihara
