#include "msp/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace msp {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients))
{
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients)
{
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, const BigInt& c)
{
    std::vector<BigInt> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t n)
{
    std::vector<BigInt> v(n + 1);
    v[0] = -1;
    v[n] += 1;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::leading() const
{
    if (is_zero()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

BigInt IntPolynomial::coefficient(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& q)
{
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& q)
{
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial IntPolynomial::operator-() const
{
    IntPolynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q)
{
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<BigInt> v(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pow(unsigned e) const
{
    IntPolynomial result{1};
    IntPolynomial base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::string IntPolynomial::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

RationalDivision poly_divmod_rational(const IntPolynomial& p, const IntPolynomial& q)
{
    if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<BigRational> rem;
    for (const auto& c : p.coefficients()) rem.emplace_back(c);
    const long dq = q.degree();
    const BigRational lead(q.leading());
    std::vector<BigRational> quot;
    if (p.degree() >= dq) quot.assign(static_cast<std::size_t>(p.degree() - dq + 1), BigRational(0));
    for (long i = p.degree(); i >= dq; --i) {
        BigRational factor = rem[static_cast<std::size_t>(i)] / lead;
        factor.canonicalize();
        if (factor == 0) continue;
        quot[static_cast<std::size_t>(i - dq)] = factor;
        for (long j = 0; j <= dq; ++j)
            rem[static_cast<std::size_t>(i - dq + j)] -=
                factor * BigRational(q.coefficient(static_cast<std::size_t>(j)));
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    while (!quot.empty() && quot.back() == 0) quot.pop_back();
    for (auto& r : rem) r.canonicalize();
    return {std::move(quot), std::move(rem)};
}

namespace {

IntPolynomial integral_or_throw(const std::vector<BigRational>& v, const char* what)
{
    std::vector<BigInt> out;
    out.reserve(v.size());
    for (const auto& c : v) {
        if (c.get_den() != 1)
            throw ExactnessError(std::string("non-integral coefficient ") + c.get_str() + " in " +
                                 what);
        out.push_back(c.get_num());
    }
    return IntPolynomial(std::move(out));
}

// Fast path for monic divisors: all arithmetic stays in Z.
IntDivision divmod_monic(const IntPolynomial& p, const IntPolynomial& q)
{
    std::vector<BigInt> rem = p.coefficients();
    const long dq = q.degree();
    std::vector<BigInt> quot;
    if (p.degree() >= dq) quot.resize(static_cast<std::size_t>(p.degree() - dq + 1));
    const auto& qc = q.coefficients();
    for (long i = p.degree(); i >= dq; --i) {
        BigInt factor = rem[static_cast<std::size_t>(i)];
        if (factor == 0) continue;
        quot[static_cast<std::size_t>(i - dq)] = factor;
        for (long j = 0; j <= dq; ++j) {
            const BigInt& c = qc[static_cast<std::size_t>(j)];
            if (c != 0) rem[static_cast<std::size_t>(i - dq + j)] -= factor * c;
        }
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

}  // namespace

IntDivision poly_divmod(const IntPolynomial& p, const IntPolynomial& q)
{
    if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (q.is_monic()) return divmod_monic(p, q);
    auto r = poly_divmod_rational(p, q);
    return {integral_or_throw(r.quotient, "quotient"), integral_or_throw(r.remainder, "remainder")};
}

const IntPolynomial& cyclotomic(Period d)
{
    if (d == 0) throw InvalidArgument("cyclotomic: order must be positive");
    static std::shared_mutex mutex;
    // node-based map: references stay valid across later insertions
    static std::unordered_map<Period, IntPolynomial> memo;
    {
        std::shared_lock lock(mutex);
        auto it = memo.find(d);
        if (it != memo.end()) return it->second;
    }
    IntPolynomial result = IntPolynomial::x_pow_minus_one(d);
    for (Period e : divisors(d)) {
        if (e == d) break;
        auto div = poly_divmod(result, cyclotomic(e));
        if (!div.remainder.is_zero()) throw ExactnessError("cyclotomic: inexact division");
        result = std::move(div.quotient);
    }
    std::unique_lock lock(mutex);
    return memo.try_emplace(d, std::move(result)).first->second;
}

BigInt cyclotomic_root_sum(Period m)
{
    const IntPolynomial& phi = cyclotomic(m);
    return -phi.coefficient(static_cast<std::size_t>(phi.degree() - 1));
}

NotQuasiUnipotent::NotQuasiUnipotent(IntPolynomial residual, CyclotomicFactorization partial)
    : Error("not quasi-unipotent: residual factor " + residual.to_string() +
            " has roots off the roots of unity"),
      residual_(std::move(residual)),
      partial_(std::move(partial))
{
}

CyclotomicFactorization cyclotomic_factorization(const IntPolynomial& p)
{
    if (!p.is_monic()) throw NonMonicInput("cyclotomic factorization needs a monic polynomial");
    CyclotomicFactorization out;
    IntPolynomial residual = p;
    const Period deg = static_cast<Period>(p.degree());
    // phi(d) >= sqrt(d/2) bounds every order whose totient fits in deg
    const Period bound = 2 * deg * deg;
    for (Period d = 1; d <= bound && residual.degree() > 0; ++d) {
        if (euler_phi(d) > static_cast<Period>(residual.degree())) continue;
        const IntPolynomial& phi = cyclotomic(d);
        while (residual.degree() >= phi.degree()) {
            auto div = poly_divmod(residual, phi);
            if (!div.remainder.is_zero()) break;
            residual = std::move(div.quotient);
            ++out[d];
        }
    }
    if (residual != IntPolynomial{1}) throw NotQuasiUnipotent(residual, out);
    return out;
}

Period cyclotomic_period(const CyclotomicFactorization& f)
{
    Period out = 1;
    for (const auto& kv : f) out = lcm(out, kv.first);
    return out;
}

std::vector<BigInt> trace_sequence_from_charpoly(const IntPolynomial& p, std::size_t count)
{
    if (!p.is_monic()) throw NonMonicInput("Newton's identities need a monic polynomial");
    const std::size_t n = static_cast<std::size_t>(p.degree());
    // a_i is the coefficient of x^{n-i}
    auto a = [&](std::size_t i) -> BigInt { return i <= n ? p.coefficient(n - i) : BigInt(0); };
    std::vector<BigInt> s(count + 1);
    for (std::size_t m = 1; m <= count; ++m) {
        BigInt v = -a(m) * static_cast<unsigned long>(m);
        for (std::size_t i = 1; i < m && i <= n; ++i) v -= a(i) * s[m - i];
        s[m] = std::move(v);
    }
    s.erase(s.begin());
    return s;
}

}  // namespace msp
