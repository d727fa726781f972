#include "ihara/matrix.hpp"

#include <algorithm>

namespace ihara {

std::size_t row_degree_sum(const Matrix<IntPoly>& m)
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        long best = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            best = std::max(best, m(i, j).degree());
        total += static_cast<std::size_t>(best);
    }
    return total;
}

PolyMatrix::PolyMatrix(Matrix<IntPoly> entries)
    : PolyMatrix(entries, row_degree_sum(entries))
{
}

PolyMatrix::PolyMatrix(Matrix<IntPoly> entries, std::size_t degree_bound)
    : entries_(std::move(entries)), degree_bound_(degree_bound)
{
    if (!entries_.square())
        throw Error(ErrorCode::InvalidArgument, "polynomial matrix is not square");
    std::size_t needed = row_degree_sum(entries_);
    if (degree_bound_ < needed)
        throw Error(ErrorCode::InvalidArgument, "degree bound " + std::to_string(degree_bound_) +
                                                    " below row-degree sum " + std::to_string(needed));
}

IntMatrix PolyMatrix::evaluate(const Integer& t) const
{
    IntMatrix out(entries_.rows(), entries_.cols());
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j)
            out(i, j) = entries_(i, j).eval(t);
    return out;
}

Integer bareiss_det(IntMatrix m)
{
    if (!m.square())
        throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    int sign = 1;
    Integer prev = 1;
    Integer tmp;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(m(p, k)) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = k; j < n; ++j)
                std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        const Integer& pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_mul(tmp.get_mpz_t(), m(i, j).get_mpz_t(), pivot.get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), m(i, k).get_mpz_t(), m(k, j).get_mpz_t());
                mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = pivot;
    }
    Integer det = m(n - 1, n - 1);
    return sign < 0 ? Integer(-det) : det;
}

IntMatrix adjugate(const IntMatrix& m)
{
    if (!m.square())
        throw Error(ErrorCode::InvalidArgument, "adjugate of non-square matrix");
    const std::size_t n = m.rows();
    IntMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Integer cof = bareiss_det(m.minor_matrix(j, i));
            adj(i, j) = ((i + j) % 2 == 0) ? cof : Integer(-cof);
        }
    return adj;
}

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

Rational rational_det(RatMatrix m)
{
    if (!m.square())
        throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(m(p, k)) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != k) {
            for (std::size_t j = k; j < n; ++j)
                std::swap(m(k, j), m(p, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(m(i, k)) == 0)
                continue;
            Rational f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j)
                m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

RatMatrix rational_inverse(const RatMatrix& m)
{
    if (!m.square())
        throw Error(ErrorCode::InvalidArgument, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(a(p, k)) == 0)
            ++p;
        if (p == n)
            throw Error(ErrorCode::InvalidArgument, "matrix is singular");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        Rational s = 1 / a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) *= s;
            inv(k, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || sgn(a(i, k)) == 0)
                continue;
            Rational f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

RatPoly interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys)
{
    if (xs.size() != ys.size())
        throw Error(ErrorCode::InvalidArgument, "interpolation sizes differ");
    const std::size_t n = xs.size();
    // Newton divided differences, in place.
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            Integer dx = xs[i] - xs[i - level];
            if (sgn(dx) == 0)
                throw Error(ErrorCode::InvalidArgument, "interpolation nodes not distinct");
            dd[i] = (dd[i] - dd[i - 1]) / Rational(dx);
        }
    // Expand the Newton form from the innermost coefficient outwards.
    RatPoly result;
    for (std::size_t k = n; k-- > 0;) {
        result = result * RatPoly{Rational(-xs[k]), Rational(1)};
        result += RatPoly::constant(dd[k]);
    }
    return result;
}

IntPoly polymat_det(const PolyMatrix& m)
{
    const std::size_t count = m.degree_bound() + 1;
    std::vector<Integer> xs;
    std::vector<Integer> ys;
    xs.reserve(count);
    ys.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        // 0, 1, -1, 2, -2, ...
        long t = (k % 2 == 1) ? static_cast<long>((k + 1) / 2) : -static_cast<long>(k / 2);
        xs.emplace_back(t);
        ys.push_back(bareiss_det(m.evaluate(xs.back())));
    }
    RatPoly p = interpolate(xs, ys);
    try {
        return to_integral(p);
    } catch (const Error& e) {
        throw Error(ErrorCode::IntegralityViolation,
                    "interpolated determinant is not integral (degree bound " +
                        std::to_string(m.degree_bound()) + "): " + e.what());
    }
}

IntPoly charpoly(const IntMatrix& m)
{
    if (!m.square())
        throw Error(ErrorCode::InvalidArgument, "characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<IntPoly> e(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            e(i, j) = (i == j) ? IntPoly{Integer(-m(i, j)), Integer(1)} : IntPoly::constant(-m(i, j));
    return polymat_det(PolyMatrix(std::move(e), n));
}

IntMatrix eval_matrix_poly(const IntPoly& p, const IntMatrix& m)
{
    if (!m.square())
        throw Error(ErrorCode::InvalidArgument, "matrix polynomial of non-square matrix");
    const std::size_t n = m.rows();
    IntMatrix acc(n, n);
    for (std::size_t k = p.size(); k-- > 0;) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i)
            acc(i, i) += p.coeffs()[k];
    }
    return acc;
}

} // namespace ihara
