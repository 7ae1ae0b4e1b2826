#pragma once

// Lefschetz numbers of iterates of a surface homeomorphism model, computed
// from its action on first homology, and the derived period data.

#include "msp/arith.hpp"
#include "msp/matrix.hpp"
#include "msp/polynomial.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace msp {

enum class SurfaceKind { OrientablePreserving, OrientableReversing, NonOrientable };

std::string to_string(SurfaceKind kind);
/// Accepts "preserving", "reversing", "nonorientable".
SurfaceKind parse_surface_kind(const std::string& name);

enum class Strictness { Lenient, Strict };

/// Surface kind, genus, and the integer matrix of the induced map on
/// rational first homology (dimension 2g orientable, g-1 non-orientable).
class HomologyModel {
public:
    /// Throws DimensionMismatch when the matrix size does not fit the genus,
    /// and FormViolation in strict mode when the matrix is not symplectic
    /// (preserving) or antisymplectic (reversing).
    HomologyModel(SurfaceKind kind, IntMatrix matrix, std::size_t genus,
                  Strictness strictness = Strictness::Lenient);

    SurfaceKind kind() const { return kind_; }
    const IntMatrix& matrix() const { return matrix_; }
    std::size_t genus() const { return genus_; }

    /// 2 - 2g orientable, 2 - g non-orientable.
    long euler_characteristic() const;

    /// Trace of the induced map on H_2 for the l-th iterate: 1, (-1)^l, or 0.
    int top_degree_trace(unsigned long l) const;

    /// Whether the form predicate for the kind holds (always true for
    /// non-orientable models).
    bool satisfies_form() const;

    friend bool operator==(const HomologyModel&, const HomologyModel&) = default;

private:
    SurfaceKind kind_;
    IntMatrix matrix_;
    std::size_t genus_;
};

/// Expected homology rank for a kind and genus; throws DimensionMismatch for
/// a non-orientable genus 0.
std::size_t homology_rank(SurfaceKind kind, std::size_t genus);

/// L_l = 1 - tr(A^l) + eps^l (orientable), 1 - tr(A^l) (non-orientable).
BigInt lefschetz_number(const HomologyModel& m, unsigned long l);

/// L_1..L_count.
std::vector<BigInt> lefschetz_numbers(const HomologyModel& m, std::size_t count);

struct AlgebraicPeriods {
    CyclotomicFactorization cyclotomic;
    /// lcm of the cyclotomic orders; A^period = I when the map is periodic
    /// on homology.
    Period period = 1;
    DoldClass dold;
    std::set<Period> periods;
};

/// Dold class and support of a quasi-unipotent model. Throws
/// NotQuasiUnipotent when the characteristic polynomial has a
/// non-cyclotomic factor.
AlgebraicPeriods algebraic_periods(const HomologyModel& m);

std::set<Period> ap_odd(const HomologyModel& m);

/// Minimal set of Lefschetz periods; coincides with the odd algebraic periods.
std::set<Period> mper_l(const HomologyModel& m);

/// True iff L_l = 0 for every odd l <= bound. Throws WrongKind unless the
/// model is orientation-reversing, NotAntisymplectic if its matrix is not.
bool odd_vanishing_check(const HomologyModel& m, unsigned long bound);

enum class GuaranteeKind {
    /// n is a minimal period of every transversal map in the class.
    Odd,
    /// n or n/2 is a minimal period of every transversal map in the class.
    Either,
};

struct PeriodGuarantee {
    Period n;
    GuaranteeKind kind;
    std::vector<Period> periods;
    std::string statement() const;

    friend bool operator==(const PeriodGuarantee&, const PeriodGuarantee&) = default;
};

std::vector<PeriodGuarantee> periodic_point_certificate(const DoldClass& d);

}  // namespace msp
