#include "ihara/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ihara {

template class DensePoly<Integer>;
template class DensePoly<Rational>;

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::NotSemiRegular: return "NotSemiRegular";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::IntegralityViolation: return "IntegralityViolation";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorCode::ExactDivisionFailure: return "ExactDivisionFailure";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::MismatchWithOracle: return "MismatchWithOracle";
    case ErrorCode::BiconditionalViolation: return "BiconditionalViolation";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Integer parse_integer(const std::string& text)
{
    std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (start == text.size() ||
        !std::all_of(text.begin() + static_cast<long>(start), text.end(),
                     [](unsigned char ch) { return std::isdigit(ch) != 0; }))
        throw Error(ErrorCode::ParseError, "not a decimal integer: '" + text + "'");
    return Integer(text, 10);
}

template <class Coeff>
std::string DensePoly<Coeff>::to_string(char var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Coeff& x = c_[k];
        if (sgn(x) == 0)
            continue;
        Coeff mag = abs(x);
        if (first)
            os << (sgn(x) < 0 ? "-" : "");
        else
            os << (sgn(x) < 0 ? " - " : " + ");
        first = false;
        bool unit = (mag == 1);
        if (k == 0 || !unit)
            os << mag.get_str(10);
        if (k > 0) {
            if (!unit)
                os << '*';
            os << var;
            if (k > 1)
                os << '^' << k;
        }
    }
    return os.str();
}

RatPoly to_rational(const IntPoly& p)
{
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& x : p.coeffs())
        c.emplace_back(x);
    return RatPoly(std::move(c));
}

IntPoly to_integral(const RatPoly& p)
{
    std::vector<Integer> c;
    c.reserve(p.size());
    for (const auto& x : p.coeffs()) {
        if (x.get_den() != 1)
            throw Error(ErrorCode::IntegralityViolation, "coefficient " + x.get_str() + " is not an integer");
        c.emplace_back(x.get_num());
    }
    return IntPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b)
{
    if (b.is_zero())
        throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    long db = b.degree();
    long da = a.degree();
    if (da < db)
        return {RatPoly{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1));
    const Rational& lead = b.leading();
    for (long k = da - db; k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + db)] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (sgn(q) == 0)
            continue;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b)
{
    auto [q, r] = divmod(to_rational(a), to_rational(b));
    if (!r.is_zero())
        throw Error(ErrorCode::ExactDivisionFailure, "nonzero remainder " + r.to_string());
    try {
        return to_integral(q);
    } catch (const Error&) {
        throw Error(ErrorCode::ExactDivisionFailure, "quotient is not integral: " + q.to_string());
    }
}

RatPoly make_monic(const RatPoly& p)
{
    if (p.is_zero())
        return p;
    Rational inv = 1 / p.leading();
    return inv * p;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b)
{
    RatPoly x = a;
    RatPoly y = b;
    while (!y.is_zero()) {
        RatPoly r = divmod(x, y).second;
        x = std::move(y);
        y = make_monic(r);
    }
    return make_monic(x);
}

IntPoly primitive_part(const RatPoly& p)
{
    if (p.is_zero())
        return {};
    Integer den = 1;
    for (const auto& x : p.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> c;
    c.reserve(p.size());
    Integer g = 0;
    for (const auto& x : p.coeffs()) {
        Integer v = x.get_num() * (den / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        c.push_back(v);
    }
    if (sgn(c.back()) < 0)
        g = -g;
    for (auto& v : c)
        v /= g;
    return IntPoly(std::move(c));
}

std::vector<std::pair<IntPoly, unsigned>> square_free_decomposition(const IntPoly& p)
{
    if (p.degree() <= 0)
        return {};
    std::vector<std::pair<IntPoly, unsigned>> out;
    RatPoly f = to_rational(p);
    RatPoly df = f.derivative();
    RatPoly a = gcd(f, df);
    RatPoly b = divmod(f, a).first;
    RatPoly c = divmod(df, a).first;
    RatPoly d = c - b.derivative();
    unsigned mult = 1;
    while (b.degree() > 0) {
        RatPoly g = gcd(b, d);
        if (g.degree() > 0)
            out.emplace_back(primitive_part(g), mult);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

RatPoly series_log(const IntPoly& p, std::size_t order)
{
    if (p[0] != 1)
        throw Error(ErrorCode::ConstantTermNotOne, "constant term is " + p[0].get_str());
    // L = -log p satisfies p * L' = -p'. Solve for the coefficients of L'
    // term by term (p(0) = 1 so no division is needed).
    std::vector<Rational> dl(order);
    for (std::size_t k = 0; k < order; ++k) {
        Rational acc = -Rational(p[k + 1] * static_cast<unsigned long>(k + 1));
        for (std::size_t j = 1; j <= k && j < p.size(); ++j)
            acc -= Rational(p[j]) * dl[k - j];
        dl[k] = acc;
    }
    std::vector<Rational> l(order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
        l[k] = dl[k - 1] / Rational(static_cast<unsigned long>(k));
        l[k].canonicalize();
    }
    return RatPoly(std::move(l));
}

} // namespace ihara
