#include "msp/arith.hpp"

#include "msp/errors.hpp"

#include <numeric>
#include <string>

namespace msp {

int moebius(Period n)
{
    if (n == 0) throw InvalidArgument("moebius: n must be positive");
    int sign = 1;
    for (Period p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

std::vector<Period> divisors(Period n)
{
    if (n == 0) throw InvalidArgument("divisors: n must be positive");
    std::vector<Period> small, large;
    for (Period k = 1; k * k <= n; ++k) {
        if (n % k != 0) continue;
        small.push_back(k);
        if (k != n / k) large.push_back(n / k);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Period euler_phi(Period n)
{
    if (n == 0) throw InvalidArgument("euler_phi: n must be positive");
    Period result = n;
    for (Period p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

Period gcd(Period a, Period b) { return std::gcd(a, b); }
Period lcm(Period a, Period b) { return std::lcm(a, b); }

LefschetzSequence::LefschetzSequence(std::map<Period, BigInt> values)
    : values_(std::move(values))
{
    if (values_.empty()) throw InvalidDomain("Lefschetz sequence: empty domain");
    for (const auto& [n, value] : values_) {
        if (n == 0) throw InvalidDomain("Lefschetz sequence: index 0 is not allowed");
        for (Period k : divisors(n)) {
            if (!values_.count(k)) {
                throw InvalidDomain("Lefschetz sequence: domain not divisor-closed (" +
                                    std::to_string(k) + " divides " + std::to_string(n) +
                                    ")");
            }
        }
    }
}

LefschetzSequence LefschetzSequence::from_prefix(const std::vector<BigInt>& values)
{
    std::map<Period, BigInt> m;
    for (std::size_t i = 0; i < values.size(); ++i) m.emplace(i + 1, values[i]);
    return LefschetzSequence(std::move(m));
}

const BigInt& LefschetzSequence::at(Period n) const
{
    auto it = values_.find(n);
    if (it == values_.end())
        throw InvalidDomain("Lefschetz sequence: " + std::to_string(n) + " outside domain");
    return it->second;
}

std::set<Period> LefschetzSequence::domain() const
{
    std::set<Period> out;
    for (const auto& kv : values_) out.insert(kv.first);
    return out;
}

DoldClass::DoldClass(const std::map<Period, BigInt>& coefficients)
{
    for (const auto& [n, a] : coefficients) set(n, a);
}

BigInt DoldClass::operator[](Period n) const
{
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

void DoldClass::set(Period n, const BigInt& value)
{
    if (n == 0) throw InvalidArgument("Dold class: index 0 is not allowed");
    if (value == 0)
        coeffs_.erase(n);
    else
        coeffs_[n] = value;
}

std::set<Period> DoldClass::support() const
{
    std::set<Period> out;
    for (const auto& kv : coeffs_) out.insert(kv.first);
    return out;
}

std::set<Period> DoldClass::odd_support() const
{
    std::set<Period> out;
    for (const auto& kv : coeffs_)
        if (kv.first % 2 == 1) out.insert(kv.first);
    return out;
}

BigInt DoldClass::weighted_sum() const
{
    BigInt total = 0;
    for (const auto& [n, a] : coeffs_) total += a * static_cast<unsigned long>(n);
    return total;
}

namespace {

BigInt moebius_sum(const LefschetzSequence& seq, Period n)
{
    BigInt total = 0;
    for (Period k : divisors(n)) {
        int mu = moebius(n / k);
        if (mu == 1)
            total += seq.at(k);
        else if (mu == -1)
            total -= seq.at(k);
    }
    return total;
}

}  // namespace

DoldClass dold_coefficients(const LefschetzSequence& seq)
{
    DoldClass out;
    for (const auto& [n, unused] : seq.values()) {
        BigRational a(moebius_sum(seq, n), BigInt(static_cast<unsigned long>(n)));
        a.canonicalize();
        if (a.get_den() != 1)
            throw DoldViolation("a_" + std::to_string(n) + " = " + a.get_str() +
                                " is not an integer");
        out.set(n, a.get_num());
    }
    return out;
}

BigInt lefschetz_from_dold(const DoldClass& d, Period n)
{
    if (n == 0) throw InvalidArgument("lefschetz_from_dold: n must be positive");
    BigInt total = 0;
    for (const auto& [k, a] : d.coefficients())
        if (n % k == 0) total += a * static_cast<unsigned long>(k);
    return total;
}

bool dold_congruence_check(const LefschetzSequence& seq, Period n)
{
    BigInt s = moebius_sum(seq, n);
    return mpz_divisible_ui_p(s.get_mpz_t(), n) != 0;
}

}  // namespace msp
