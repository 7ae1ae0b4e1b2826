#include "msp/zeta.hpp"

#include "msp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace msp {

ZetaFactorization::ZetaFactorization(const std::vector<ZetaFactor>& factors)
{
    for (const auto& f : factors) {
        if (f.delta != 1 && f.delta != -1) throw InvalidArgument("zeta factor sign must be +1 or -1");
        if (f.r == 0) throw InvalidArgument("zeta factor degree must be positive");
        exps_[{f.r, f.delta}] += f.m;
    }
    std::erase_if(exps_, [](const auto& kv) { return kv.second == 0; });
}

namespace {

std::string strip_spaces(const std::string& s)
{
    std::string out;
    for (unsigned char c : s)
        if (!std::isspace(c)) out.push_back(static_cast<char>(c));
    // U+2212 MINUS SIGN -> '-'
    for (std::size_t pos; (pos = out.find("\xE2\x88\x92")) != std::string::npos;) out.replace(pos, 3, "-");
    return out;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

BigInt parse_integer(const std::string& s, const std::string& term)
{
    BigInt v;
    if (s.empty() || v.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
        throw ParseError("bad integer '" + s + "' in zeta term '" + term + "'");
    return v;
}

}  // namespace

ZetaFactorization ZetaFactorization::parse(const std::string& text)
{
    const std::string compact = strip_spaces(text);
    std::vector<ZetaFactor> factors;
    if (compact.empty()) return ZetaFactorization();
    for (const std::string& term : split(compact, ';')) {
        if (term.empty()) continue;
        const auto parts = split(term, ',');
        if (parts.size() != 3) throw ParseError("zeta term '" + term + "' must be SIGN,r,m");
        int delta;
        if (parts[0] == "+")
            delta = 1;
        else if (parts[0] == "-")
            delta = -1;
        else
            throw ParseError("zeta term '" + term + "' must start with + or -");
        const BigInt r = parse_integer(parts[1], term);
        if (r <= 0 || !r.fits_ulong_p()) throw ParseError("zeta term '" + term + "' needs r >= 1");
        factors.push_back({delta, r.get_ui(), parse_integer(parts[2], term)});
    }
    return ZetaFactorization(factors);
}

std::vector<ZetaFactor> ZetaFactorization::factors() const
{
    std::vector<ZetaFactor> out;
    for (const auto& [key, m] : exps_) out.push_back({key.second, key.first, m});
    return out;
}

BigInt ZetaFactorization::exponent(int delta, Period r) const
{
    auto it = exps_.find({r, delta});
    return it == exps_.end() ? BigInt(0) : it->second;
}

std::string ZetaFactorization::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors()) {
        os << (first ? "" : ";") << (f.delta > 0 ? '+' : '-') << ',' << f.r << ',' << f.m.get_str();
        first = false;
    }
    return os.str();
}

ZetaFactorization zeta_from_dold(const DoldClass& d)
{
    std::vector<ZetaFactor> factors;
    for (const auto& [k, a] : d.coefficients()) factors.push_back({-1, k, -a});
    return ZetaFactorization(factors);
}

namespace {

// (1 + delta z^r)^m through degree N: generalized binomial coefficients.
PowerSeries binomial_series(int delta, Period r, const BigInt& m, std::size_t degree)
{
    PowerSeries s(degree + 1);
    s[0] = 1;
    BigInt c = 1;  // C(m, j)
    for (std::size_t j = 1; j * r <= degree; ++j) {
        c *= (m - static_cast<unsigned long>(j - 1));
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), j);
        if (c == 0) break;
        s[j * r] = (delta < 0 && j % 2 == 1) ? BigInt(-c) : c;
    }
    return s;
}

PowerSeries truncated_product(const PowerSeries& a, const PowerSeries& b)
{
    const std::size_t n = a.size();
    PowerSeries out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace

PowerSeries series_expand(const ZetaFactorization& f, std::size_t degree)
{
    PowerSeries acc(degree + 1);
    acc[0] = 1;
    for (const auto& factor : f.factors())
        acc = truncated_product(acc, binomial_series(factor.delta, factor.r, factor.m, degree));
    return acc;
}

std::vector<BigInt> lefschetz_from_zeta(const ZetaFactorization& f, std::size_t count)
{
    std::vector<BigInt> out(count);
    for (const auto& factor : f.factors()) {
        // z d/dz [m log(1 + delta z^r)] = m r sum_j (-1)^{j+1} delta^j z^{rj}
        for (std::size_t j = 1; j * factor.r <= count; ++j) {
            int sign = j % 2 == 1 ? 1 : -1;
            if (factor.delta < 0 && j % 2 == 1) sign = -sign;
            const BigInt term = factor.m * static_cast<unsigned long>(factor.r);
            if (sign > 0)
                out[j * factor.r - 1] += term;
            else
                out[j * factor.r - 1] -= term;
        }
    }
    return out;
}

std::map<Period, BigInt> canonicalize(const ZetaFactorization& f)
{
    std::map<Period, BigInt> e;
    for (const auto& factor : f.factors()) {
        if (factor.delta < 0) {
            e[factor.r] += factor.m;  // c_k
        } else {
            // (1 + z^k)^d = (1 - z^{2k})^d (1 - z^k)^{-d}
            e[2 * factor.r] += factor.m;
            e[factor.r] -= factor.m;
        }
    }
    std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
    return e;
}

std::set<Period> mper_from_factorization(const ZetaFactorization& f)
{
    std::set<Period> out;
    for (const auto& [k, ek] : canonicalize(f))
        if (k % 2 == 1) out.insert(k);
    return out;
}

}  // namespace msp
