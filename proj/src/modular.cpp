#include "ihara/matrix.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

namespace ihara {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Arithmetic modulo a prime p < 2^31 with Barrett reduction of products.
class PrimeField {
public:
    explicit PrimeField(u64 p) : p_(p), m_(static_cast<u64>((static_cast<u128>(1) << 64) / p)) {}

    u64 prime() const noexcept { return p_; }

    // x < 2^62
    u64 reduce(u64 x) const noexcept
    {
        u64 q = static_cast<u64>((static_cast<u128>(x) * m_) >> 64);
        u64 r = x - q * p_;
        return r >= p_ ? r - p_ : r;
    }

    u64 mul(u64 a, u64 b) const noexcept { return reduce(a * b); }
    u64 add(u64 a, u64 b) const noexcept { return a + b >= p_ ? a + b - p_ : a + b; }
    u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p_ - b; }

    u64 pow(u64 b, u64 e) const noexcept
    {
        u64 r = 1;
        while (e) {
            if (e & 1)
                r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    u64 inv(u64 a) const noexcept { return pow(a, p_ - 2); }

private:
    u64 p_;
    u64 m_;
};

bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// Primes below 2^31, descending, deterministic.
class PrimeSequence {
public:
    u64 next()
    {
        do {
            cur_ -= 2;
        } while (!is_prime(cur_));
        return cur_;
    }

private:
    u64 cur_ = (u64{1} << 31) + 1;
};

/// Coefficients of det(xI - H) mod p, low to high, for a square matrix given
/// row-major with entries already reduced.
std::vector<u64> charpoly_mod(std::vector<u64> h, std::size_t n, const PrimeField& f)
{
    auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };

    // Reduce to upper Hessenberg form by elimination similarity transforms.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && at(piv, j) == 0)
            ++piv;
        if (piv == n)
            continue;
        if (piv != j + 1) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(at(piv, c), at(j + 1, c));
            for (std::size_t r = 0; r < n; ++r)
                std::swap(at(r, piv), at(r, j + 1));
        }
        const u64 inv = f.inv(at(j + 1, j));
        for (std::size_t i = j + 2; i < n; ++i) {
            if (at(i, j) == 0)
                continue;
            const u64 c = f.mul(at(i, j), inv);
            u64* ri = &h[i * n];
            const u64* rp = &h[(j + 1) * n];
            for (std::size_t col = j; col < n; ++col)
                ri[col] = f.sub(ri[col], f.mul(c, rp[col]));
            for (std::size_t r = 0; r < n; ++r)
                at(r, j + 1) = f.add(at(r, j + 1), f.mul(c, at(r, i)));
        }
    }

    // p_k = charpoly of the leading k x k block.
    std::vector<std::vector<u64>> p(n + 1);
    p[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<u64> pm(m + 1, 0);
        const std::vector<u64>& prev = p[m - 1];
        const u64 d = at(m - 1, m - 1);
        for (std::size_t k = 0; k < prev.size(); ++k) {
            pm[k + 1] = f.add(pm[k + 1], prev[k]);
            pm[k] = f.sub(pm[k], f.mul(d, prev[k]));
        }
        u64 t = 1;
        for (std::size_t i = 1; i < m; ++i) {
            t = f.mul(t, at(m - i, m - i - 1));
            if (t == 0)
                break;
            const u64 coef = f.mul(t, at(m - i - 1, m - 1));
            if (coef == 0)
                continue;
            const std::vector<u64>& q = p[m - i - 1];
            for (std::size_t k = 0; k < q.size(); ++k)
                pm[k] = f.sub(pm[k], f.mul(coef, q[k]));
        }
        p[m] = std::move(pm);
    }
    return p[n];
}

/// log2 of prod_i (1 + ||row_i||_2), an upper bound on the sum of absolute
/// values of the characteristic polynomial coefficients.
double coefficient_bound_bits(const IntMatrix& m)
{
    double bits = 0.0;
    Integer norm2;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        norm2 = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_addmul(norm2.get_mpz_t(), m(i, j).get_mpz_t(), m(i, j).get_mpz_t());
        if (sgn(norm2) == 0)
            continue;
        long exp = 0;
        double mant = mpz_get_d_2exp(&exp, norm2.get_mpz_t());
        double log2_norm = 0.5 * (std::log2(mant) + static_cast<double>(exp));
        // log2(1 + 2^x) <= max(x, 0) + 1
        bits += (log2_norm < 40.0) ? std::log2(1.0 + std::exp2(log2_norm)) : log2_norm + 1e-9;
    }
    return bits;
}

} // namespace

IntPoly charpoly_multimodular(const IntMatrix& m)
{
    if (!m.square())
        throw Error(ErrorCode::InvalidArgument, "characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return IntPoly::constant(1);

    // Symmetric residues need a modulus above twice the bound; the extra bits
    // absorb floating-point error in the bound itself.
    const double needed_bits = coefficient_bound_bits(m) + 8.0;

    bool small = true;
    std::vector<std::int64_t> entries(n * n);
    for (std::size_t k = 0; k < n * n; ++k) {
        const Integer& x = m.data()[k];
        if (!x.fits_slong_p()) {
            small = false;
            break;
        }
        entries[k] = x.get_si();
    }

    std::vector<Integer> value(n + 1, Integer(0));
    Integer modulus = 1;
    double modulus_bits = 0.0;
    PrimeSequence primes;
    Integer tmp;
    while (modulus_bits < needed_bits) {
        const u64 p = primes.next();
        PrimeField f(p);
        std::vector<u64> h(n * n);
        for (std::size_t k = 0; k < n * n; ++k) {
            if (small) {
                std::int64_t r = entries[k] % static_cast<std::int64_t>(p);
                h[k] = static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
            } else {
                h[k] = mpz_fdiv_ui(m.data()[k].get_mpz_t(), p);
            }
        }
        std::vector<u64> res = charpoly_mod(std::move(h), n, f);

        // Incremental CRT: value += modulus * ((r - value) / modulus mod p).
        const u64 minv = f.inv(mpz_fdiv_ui(modulus.get_mpz_t(), p));
        for (std::size_t k = 0; k <= n; ++k) {
            const u64 cur = mpz_fdiv_ui(value[k].get_mpz_t(), p);
            const u64 t = f.mul(f.sub(res[k], cur), minv);
            mpz_addmul_ui(value[k].get_mpz_t(), modulus.get_mpz_t(), t);
        }
        modulus *= static_cast<unsigned long>(p);
        modulus_bits += std::log2(static_cast<double>(p));
    }

    Integer half = modulus / 2;
    for (auto& v : value)
        if (v > half)
            v -= modulus;
    return IntPoly(std::move(value));
}

} // namespace ihara
