#pragma once

// Explicit homology models realizing a prescribed finite set of algebraic
// periods on orientable (orientation-preserving or -reversing) and
// non-orientable closed surfaces.
//
// A surface is assembled from pieces Sigma_n, each carrying a periodic map
// of order tau(n) that cyclically permutes its handles. Only the induced
// action on first homology is built; the pieces are kept as metadata.

#include "msp/arith.hpp"
#include "msp/lefschetz.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace msp {

/// Finite nonempty set of positive integers.
class TargetSet {
public:
    /// Throws EmptyTarget for an empty set, InvalidArgument for 0.
    explicit TargetSet(std::set<Period> elements);
    TargetSet(std::initializer_list<Period> elements) : TargetSet(std::set<Period>(elements)) {}

    const std::set<Period>& elements() const { return elements_; }
    bool contains(Period n) const { return elements_.count(n) != 0; }
    bool all_even() const;

    friend bool operator==(const TargetSet&, const TargetSet&) = default;

private:
    std::set<Period> elements_;
};

struct PieceSpec {
    Period n;
    Period tau;
    unsigned copies;

    friend bool operator==(const PieceSpec&, const PieceSpec&) = default;
};

enum class ReversingMode {
    /// The literal construction: pieces over A' (A with 2 toggled).
    Faithful,
    /// Pieces over A \ {2}, plus a diag(1, -1) handle when 2 is not in A,
    /// so that the achieved support is exactly A.
    Corrected,
};

std::string to_string(ReversingMode mode);
ReversingMode parse_reversing_mode(const std::string& name);

struct SurfaceModel {
    TargetSet target;
    SurfaceKind kind;
    std::optional<ReversingMode> mode;
    std::size_t genus;
    std::vector<PieceSpec> pieces;
    HomologyModel model;
    /// Recomputed from the model, never copied from the construction.
    DoldClass achieved;
    /// Human-readable deviation notes; nonempty iff support(achieved) != target.
    std::vector<std::string> flags;

    std::set<Period> achieved_periods() const { return achieved.support(); }
    bool matches_target() const { return achieved.support() == target.elements(); }

    friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

SurfaceModel realize_orientable_preserving(const TargetSet& target);

/// Throws OddTargetUnrealizable when the target contains an odd number.
SurfaceModel realize_orientable_reversing(const TargetSet& target,
                                          ReversingMode mode = ReversingMode::Corrected);

SurfaceModel realize_nonorientable(const TargetSet& target);

/// Dispatches on kind; mode is used for the reversing case only.
SurfaceModel realize(const TargetSet& target, SurfaceKind kind,
                     ReversingMode mode = ReversingMode::Corrected);

/// Throws TargetMismatch unless the achieved support equals the target.
void require_target(const SurfaceModel& model);

/// Multiplicity-aware constructions: copies[n] pieces Sigma_n of order n.

/// Orientation-preserving map on S_g, g = sum n * copies[n]; each piece adds
/// the a-cycle and b-cycle permutation blocks P_n (+) P_n.
HomologyModel orientable_model_from_multiplicities(const std::map<Period, unsigned>& copies);

/// Map on N_g, g = sum n * copies[n] >= 1, acting on the torsion-free
/// quotient of H_1. One basis circle of the smallest piece is dropped; if
/// that piece has order n0 >= 2 its block becomes companion_cycle_quotient(n0).
HomologyModel nonorientable_model_from_multiplicities(const std::map<Period, unsigned>& copies);

/// The paired block of an orientation-reversing piece of order tau: handles
/// a_j, a'_j (j mod tau) with a_j -> a'_{j+1}, a'_j -> a_{j+1}, likewise for
/// b, and a sign flip on the second copy's b-coordinates. Dimension 4 tau,
/// written in its own symplectic basis.
IntMatrix reversing_pair_block(Period tau);

}  // namespace msp
