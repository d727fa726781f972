#ifndef IHARA_POLY_HPP
#define IHARA_POLY_HPP

#include "ihara/error.hpp"
#include "ihara/numbers.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace ihara {

/// Dense univariate polynomial, coefficient index = degree.
///
/// The coefficient vector is kept normalized: no trailing zeros, and the
/// zero polynomial is the empty vector. Instantiated for Integer (IntPoly)
/// and Rational (RatPoly).
template <class Coeff>
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { normalize(); }
    DensePoly(std::initializer_list<Coeff> coeffs) : c_(coeffs) { normalize(); }

    static DensePoly constant(const Coeff& value) { return DensePoly(std::vector<Coeff>{value}); }

    static DensePoly monomial(const Coeff& value, std::size_t degree)
    {
        std::vector<Coeff> c(degree + 1);
        c[degree] = value;
        return DensePoly(std::move(c));
    }

    /// The polynomial u.
    static DensePoly variable() { return monomial(Coeff(1), 1); }

    bool is_zero() const noexcept { return c_.empty(); }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<Coeff>& coeffs() const noexcept { return c_; }

    /// Coefficient of u^k; zero beyond the degree.
    Coeff operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Coeff(0); }

    const Coeff& leading() const
    {
        if (c_.empty())
            throw Error(ErrorCode::InvalidArgument, "leading coefficient of zero polynomial");
        return c_.back();
    }

    DensePoly& operator+=(const DensePoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        normalize();
        return *this;
    }

    DensePoly& operator-=(const DensePoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        normalize();
        return *this;
    }

    DensePoly& operator*=(const DensePoly& o)
    {
        *this = *this * o;
        return *this;
    }

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }

    friend DensePoly operator-(DensePoly a)
    {
        for (auto& x : a.c_)
            x = -x;
        return a;
    }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (sgn(a.c_[i]) == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return DensePoly(std::move(r));
    }

    friend DensePoly operator*(const Coeff& s, DensePoly p)
    {
        for (auto& x : p.c_)
            x *= s;
        p.normalize();
        return p;
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

    /// Repeated squaring; throws NegativeExponent for e < 0.
    DensePoly pow(long e) const
    {
        if (e < 0)
            throw Error(ErrorCode::NegativeExponent, "polynomial power " + std::to_string(e));
        DensePoly result = constant(Coeff(1));
        DensePoly base = *this;
        while (e > 0) {
            if (e & 1)
                result *= base;
            e >>= 1;
            if (e > 0)
                base = base * base;
        }
        return result;
    }

    DensePoly derivative() const
    {
        if (c_.size() <= 1)
            return {};
        std::vector<Coeff> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * static_cast<unsigned long>(i);
        return DensePoly(std::move(r));
    }

    /// p(scale * u^power).
    DensePoly compose_monomial(const Coeff& scale, std::size_t power) const
    {
        if (is_zero())
            return {};
        if (power == 0)
            return constant(eval(scale));
        std::vector<Coeff> r(power * (c_.size() - 1) + 1);
        Coeff s = 1;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            r[i * power] = c_[i] * s;
            s *= scale;
        }
        return DensePoly(std::move(r));
    }

    /// Horner evaluation at any type the coefficients multiply into.
    template <class T>
    T eval(const T& x) const
    {
        T acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + T(*it);
        return acc;
    }

    /// Drops every term of degree > order.
    DensePoly truncate(std::size_t order) const
    {
        if (c_.size() <= order + 1)
            return *this;
        return DensePoly(std::vector<Coeff>(c_.begin(), c_.begin() + static_cast<long>(order) + 1));
    }

    /// u^n p(1/u); requires n >= degree.
    DensePoly reverse(std::size_t n) const
    {
        if (static_cast<long>(n) < degree())
            throw Error(ErrorCode::InvalidArgument, "reverse length below degree");
        std::vector<Coeff> r(n + 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            r[n - i] = c_[i];
        return DensePoly(std::move(r));
    }

    /// Multiplicity of 0 as a root (index of the lowest nonzero coefficient).
    std::size_t low_order() const
    {
        std::size_t k = 0;
        while (k < c_.size() && sgn(c_[k]) == 0)
            ++k;
        return k;
    }

    /// Divides by u^k; the low k coefficients must be zero.
    DensePoly shift_down(std::size_t k) const
    {
        if (k > low_order() && !is_zero())
            throw Error(ErrorCode::ExactDivisionFailure, "u^" + std::to_string(k) + " does not divide polynomial");
        if (is_zero())
            return {};
        return DensePoly(std::vector<Coeff>(c_.begin() + static_cast<long>(k), c_.end()));
    }

    std::vector<std::string> to_strings() const
    {
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const auto& x : c_)
            out.push_back(x.get_str(10));
        return out;
    }

    /// Human-readable form, highest degree first, e.g. "u^4 - 6*u^2 + 1".
    std::string to_string(char var = 'u') const;

private:
    void normalize()
    {
        while (!c_.empty() && sgn(c_.back()) == 0)
            c_.pop_back();
    }

    std::vector<Coeff> c_;
};

using IntPoly = DensePoly<Integer>;
using RatPoly = DensePoly<Rational>;

extern template class DensePoly<Integer>;
extern template class DensePoly<Rational>;

RatPoly to_rational(const IntPoly& p);

/// Exact conversion back to integers; throws IntegralityViolation if any
/// coefficient has a denominator other than one.
IntPoly to_integral(const RatPoly& p);

/// Quotient and remainder over the rationals; divisor must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// a / b with both remainder zero and integral quotient asserted
/// (ExactDivisionFailure otherwise).
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

RatPoly make_monic(const RatPoly& p);

/// Monic gcd over Q (zero if both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// Content-free integer polynomial with positive leading coefficient.
IntPoly primitive_part(const RatPoly& p);

/// Yun's algorithm: p = c * prod s_i^{m_i} with each s_i square-free,
/// primitive and pairwise coprime. Returns the (s_i, m_i) pairs of positive
/// degree in increasing multiplicity.
std::vector<std::pair<IntPoly, unsigned>> square_free_decomposition(const IntPoly& p);

/// Truncation of -log p(u) to the given order; p(0) must equal 1
/// (ConstantTermNotOne otherwise).
RatPoly series_log(const IntPoly& p, std::size_t order);

} // namespace ihara

#endif // IHARA_POLY_HPP
