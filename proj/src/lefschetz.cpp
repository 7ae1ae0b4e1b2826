#include "msp/lefschetz.hpp"

#include "msp/errors.hpp"

namespace msp {

std::string to_string(SurfaceKind kind)
{
    switch (kind) {
    case SurfaceKind::OrientablePreserving: return "preserving";
    case SurfaceKind::OrientableReversing: return "reversing";
    case SurfaceKind::NonOrientable: return "nonorientable";
    }
    return "unknown";
}

SurfaceKind parse_surface_kind(const std::string& name)
{
    if (name == "preserving") return SurfaceKind::OrientablePreserving;
    if (name == "reversing") return SurfaceKind::OrientableReversing;
    if (name == "nonorientable") return SurfaceKind::NonOrientable;
    throw InvalidArgument("unknown surface kind '" + name + "'");
}

std::size_t homology_rank(SurfaceKind kind, std::size_t genus)
{
    if (kind != SurfaceKind::NonOrientable) return 2 * genus;
    if (genus == 0) throw DimensionMismatch("non-orientable surfaces have genus at least 1");
    return genus - 1;
}

HomologyModel::HomologyModel(SurfaceKind kind, IntMatrix matrix, std::size_t genus,
                             Strictness strictness)
    : kind_(kind), matrix_(std::move(matrix)), genus_(genus)
{
    const std::size_t rank = homology_rank(kind, genus);
    if (matrix_.dim() != rank)
        throw DimensionMismatch("genus " + std::to_string(genus) + " " + to_string(kind) +
                                " surface needs a " + std::to_string(rank) + "x" +
                                std::to_string(rank) + " homology matrix, got dimension " +
                                std::to_string(matrix_.dim()));
    if (strictness == Strictness::Strict && !satisfies_form()) {
        throw FormViolation(kind == SurfaceKind::OrientablePreserving
                                ? "matrix is not symplectic"
                                : "matrix is not antisymplectic");
    }
}

long HomologyModel::euler_characteristic() const
{
    const long g = static_cast<long>(genus_);
    return kind_ == SurfaceKind::NonOrientable ? 2 - g : 2 - 2 * g;
}

int HomologyModel::top_degree_trace(unsigned long l) const
{
    switch (kind_) {
    case SurfaceKind::OrientablePreserving: return 1;
    case SurfaceKind::OrientableReversing: return l % 2 == 0 ? 1 : -1;
    case SurfaceKind::NonOrientable: return 0;
    }
    return 0;
}

bool HomologyModel::satisfies_form() const
{
    switch (kind_) {
    case SurfaceKind::OrientablePreserving: return is_symplectic(matrix_);
    case SurfaceKind::OrientableReversing: return is_antisymplectic(matrix_);
    case SurfaceKind::NonOrientable: return true;
    }
    return false;
}

BigInt lefschetz_number(const HomologyModel& m, unsigned long l)
{
    if (l == 0) throw InvalidArgument("lefschetz_number: iterate must be positive");
    return 1 - trace(mat_pow(m.matrix(), l)) + m.top_degree_trace(l);
}

std::vector<BigInt> lefschetz_numbers(const HomologyModel& m, std::size_t count)
{
    std::vector<BigInt> traces = trace_powers(m.matrix(), count);
    for (std::size_t i = 0; i < count; ++i) traces[i] = 1 - traces[i] + m.top_degree_trace(i + 1);
    return traces;
}

AlgebraicPeriods algebraic_periods(const HomologyModel& m)
{
    AlgebraicPeriods out;
    const IntPolynomial chi = charpoly(m.matrix());
    out.cyclotomic = cyclotomic_factorization(chi);
    out.period = cyclotomic_period(out.cyclotomic);

    // Outside the divisors of the cyclotomic orders (and of 2, for the
    // H_0/H_2 terms) every coefficient of the expansion vanishes.
    std::set<Period> candidates{1, 2};
    Period largest = 2;
    for (const auto& kv : out.cyclotomic) {
        for (Period k : divisors(kv.first)) candidates.insert(k);
        largest = std::max(largest, kv.first);
    }
    const std::vector<BigInt> traces = trace_sequence_from_charpoly(chi, largest);
    std::map<Period, BigInt> values;
    for (Period l : candidates) values[l] = 1 - traces[l - 1] + m.top_degree_trace(l);

    out.dold = dold_coefficients(LefschetzSequence(std::move(values)));
    out.periods = out.dold.support();
    return out;
}

std::set<Period> ap_odd(const HomologyModel& m) { return algebraic_periods(m).dold.odd_support(); }

std::set<Period> mper_l(const HomologyModel& m) { return ap_odd(m); }

bool odd_vanishing_check(const HomologyModel& m, unsigned long bound)
{
    if (m.kind() != SurfaceKind::OrientableReversing)
        throw WrongKind("odd vanishing applies to orientation-reversing models only");
    if (!is_antisymplectic(m.matrix())) throw NotAntisymplectic("matrix is not antisymplectic");
    const std::vector<BigInt> ls = lefschetz_numbers(m, bound);
    for (unsigned long l = 1; l <= bound; l += 2)
        if (ls[l - 1] != 0) return false;
    return true;
}

std::string PeriodGuarantee::statement() const
{
    if (kind == GuaranteeKind::Odd)
        return std::to_string(n) + " in Per(h) for every transversal h in the class";
    return std::to_string(n) + " in Per(h) or " + std::to_string(n / 2) +
           " in Per(h) for every transversal h in the class";
}

std::vector<PeriodGuarantee> periodic_point_certificate(const DoldClass& d)
{
    std::vector<PeriodGuarantee> out;
    for (Period n : d.support()) {
        if (n % 2 == 1)
            out.push_back({n, GuaranteeKind::Odd, {n}});
        else
            out.push_back({n, GuaranteeKind::Either, {n, n / 2}});
    }
    return out;
}

}  // namespace msp
