#ifndef IHARA_MATRIX_HPP
#define IHARA_MATRIX_HPP

#include "ihara/error.hpp"
#include "ihara/numbers.hpp"
#include "ihara/poly.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ihara {

/// Row-major rectangular matrix with value semantics.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows_ * cols_)
            throw Error(ErrorCode::InvalidArgument, "matrix data size mismatch");
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T>& data() const noexcept { return data_; }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        a.require_same_shape(b);
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            a.data_[k] += b.data_[k];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        a.require_same_shape(b);
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            a.data_[k] -= b.data_[k];
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const T& x = a(i, l);
                if (x == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += x * b(l, j);
            }
        return r;
    }

    friend Matrix operator*(const T& s, Matrix m)
    {
        for (auto& x : m.data_)
            x *= s;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Copy with row r and column c removed.
    Matrix minor_matrix(std::size_t r, std::size_t c) const
    {
        Matrix m(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
            if (i == r)
                continue;
            for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
                if (j == c)
                    continue;
                m(mi, mj++) = (*this)(i, j);
            }
            ++mi;
        }
        return m;
    }

    /// Sub-block [r0, r0+nr) x [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        Matrix m(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }

private:
    void require_same_shape(const Matrix& b) const
    {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using RealMatrix = Matrix<double>;

/// Square matrix of integer polynomials together with an upper bound on the
/// degree of its determinant. The bound may overestimate but must be at
/// least the sum over rows of the largest entry degree.
class PolyMatrix {
public:
    /// Bound defaults to the row-degree sum.
    explicit PolyMatrix(Matrix<IntPoly> entries);
    PolyMatrix(Matrix<IntPoly> entries, std::size_t degree_bound);

    const Matrix<IntPoly>& entries() const noexcept { return entries_; }
    std::size_t degree_bound() const noexcept { return degree_bound_; }
    std::size_t size() const noexcept { return entries_.rows(); }

    /// Integer matrix obtained by substituting t for the variable.
    IntMatrix evaluate(const Integer& t) const;

private:
    Matrix<IntPoly> entries_;
    std::size_t degree_bound_ = 0;
};

std::size_t row_degree_sum(const Matrix<IntPoly>& m);

/// Fraction-free Gaussian elimination. Pivot is the first nonzero entry in
/// the current column; every intermediate division is exact.
Integer bareiss_det(IntMatrix m);

/// Transposed cofactor matrix: m * adjugate(m) = det(m) I.
IntMatrix adjugate(const IntMatrix& m);

/// Exact determinant over Q by Gaussian elimination.
Rational rational_det(RatMatrix m);

/// Exact inverse over Q; throws InvalidArgument when singular.
RatMatrix rational_inverse(const RatMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

/// Determinant polynomial by evaluation at degree_bound + 1 integer points
/// (0, 1, -1, 2, -2, ...) followed by interpolation over Q. A non-integral
/// interpolant raises IntegralityViolation.
IntPoly polymat_det(const PolyMatrix& m);

/// det(xI - m), monic, through polymat_det with degree bound n.
IntPoly charpoly(const IntMatrix& m);

/// det(xI - m) via Hessenberg reduction modulo enough word-size primes to
/// cover a Hadamard-type coefficient bound, recombined by CRT. Suited to
/// large sparse 0/1 matrices where polymat_det would be too slow.
IntPoly charpoly_multimodular(const IntMatrix& m);

/// Unique polynomial of degree < xs.size() through (xs[i], ys[i]); the xs
/// must be distinct.
RatPoly interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys);

/// Substitutes the square matrix m into p (Horner form).
IntMatrix eval_matrix_poly(const IntPoly& p, const IntMatrix& m);

} // namespace ihara

#endif // IHARA_MATRIX_HPP
