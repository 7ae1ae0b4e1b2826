#include "msp/realize.hpp"

#include "msp/errors.hpp"

#include <sstream>

namespace msp {

TargetSet::TargetSet(std::set<Period> elements) : elements_(std::move(elements))
{
    if (elements_.empty()) throw EmptyTarget("target set must be nonempty");
    if (elements_.count(0)) throw InvalidArgument("target set elements must be positive");
}

bool TargetSet::all_even() const
{
    for (Period n : elements_)
        if (n % 2 != 0) return false;
    return true;
}

std::string to_string(ReversingMode mode)
{
    return mode == ReversingMode::Faithful ? "faithful" : "corrected";
}

ReversingMode parse_reversing_mode(const std::string& name)
{
    if (name == "faithful") return ReversingMode::Faithful;
    if (name == "corrected") return ReversingMode::Corrected;
    throw InvalidArgument("unknown reversing mode '" + name + "'");
}

namespace {

std::string format_set(const std::set<Period>& s)
{
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (Period n : s) {
        os << (first ? "" : ",") << n;
        first = false;
    }
    os << "}";
    return os.str();
}

// A with the element `pivot` toggled.
std::set<Period> toggled(const TargetSet& target, Period pivot)
{
    std::set<Period> out = target.elements();
    if (!out.erase(pivot)) out.insert(pivot);
    return out;
}

SurfaceModel finish(const TargetSet& target, std::optional<ReversingMode> mode,
                    std::vector<PieceSpec> pieces, HomologyModel model)
{
    DoldClass achieved = algebraic_periods(model).dold;
    std::vector<std::string> flags;
    if (achieved.support() != target.elements()) {
        flags.push_back("achieved algebraic periods " + format_set(achieved.support()) +
                        " differ from target " + format_set(target.elements()));
    }
    const std::size_t genus = model.genus();
    const SurfaceKind kind = model.kind();
    return SurfaceModel{target,          kind,     mode, genus, std::move(pieces), std::move(model),
                        std::move(achieved), std::move(flags)};
}

}  // namespace

HomologyModel orientable_model_from_multiplicities(const std::map<Period, unsigned>& copies)
{
    std::vector<IntMatrix> blocks;
    std::size_t genus = 0;
    for (const auto& [n, count] : copies) {
        const IntMatrix p = cyclic_permutation(n);
        const IntMatrix block = block_diag(std::vector<IntMatrix>{p, p});
        for (unsigned c = 0; c < count; ++c) {
            blocks.push_back(block);
            genus += n;
        }
    }
    return HomologyModel(SurfaceKind::OrientablePreserving, symplectic_sum(blocks), genus,
                         Strictness::Strict);
}

HomologyModel nonorientable_model_from_multiplicities(const std::map<Period, unsigned>& copies)
{
    std::size_t genus = 0;
    for (const auto& [n, count] : copies) genus += n * count;
    if (genus == 0) throw InvalidArgument("non-orientable construction needs at least one handle");

    std::vector<IntMatrix> blocks;
    bool dropped = false;
    for (const auto& [n, count] : copies) {
        for (unsigned c = 0; c < count; ++c) {
            if (!dropped) {
                dropped = true;
                if (n == 1) continue;  // the dropped fixed circle
                blocks.push_back(companion_cycle_quotient(n));
            } else {
                blocks.push_back(cyclic_permutation(n));
            }
        }
    }
    return HomologyModel(SurfaceKind::NonOrientable, block_diag(blocks), genus);
}

IntMatrix reversing_pair_block(Period tau)
{
    if (tau == 0) throw InvalidArgument("reversing piece order must be positive");
    const std::size_t t = tau;
    // swap-shift on (a_1..a_t, a'_1..a'_t)
    IntMatrix q(2 * t);
    for (std::size_t j = 0; j < t; ++j) {
        q(t + (j + 1) % t, j) = 1;
        q((j + 1) % t, t + j) = 1;
    }
    const IntMatrix straight = block_diag(std::vector<IntMatrix>{q, q});
    std::vector<BigInt> signs(4 * t, BigInt(1));
    for (std::size_t j = 3 * t; j < 4 * t; ++j) signs[j] = -1;
    const IntMatrix d = IntMatrix::diagonal(signs);
    return d * straight * d;
}

SurfaceModel realize_orientable_preserving(const TargetSet& target)
{
    std::map<Period, unsigned> copies;
    std::vector<PieceSpec> pieces;
    for (Period n : toggled(target, 1)) {
        copies[n] = 1;
        pieces.push_back({n, n, 1});
    }
    return finish(target, std::nullopt, std::move(pieces),
                  orientable_model_from_multiplicities(copies));
}

SurfaceModel realize_orientable_reversing(const TargetSet& target, ReversingMode mode)
{
    if (!target.all_even())
        throw OddTargetUnrealizable(
            "orientation-reversing maps have no odd algebraic periods; target " +
            format_set(target.elements()) + " is not a subset of 2N");

    std::set<Period> piece_labels = mode == ReversingMode::Faithful ? toggled(target, 2)
                                                                    : [&] {
                                                                          auto s = target.elements();
                                                                          s.erase(2);
                                                                          return s;
                                                                      }();
    std::vector<IntMatrix> blocks;
    std::vector<PieceSpec> pieces;
    std::size_t genus = 0;
    for (Period n : piece_labels) {
        const Period tau = n % 4 == 0 ? n : n / 2;
        blocks.push_back(reversing_pair_block(tau));
        pieces.push_back({n, tau, 2});
        genus += 2 * tau;
    }
    if (mode == ReversingMode::Corrected && !target.contains(2)) {
        blocks.push_back(IntMatrix::from_rows({{1, 0}, {0, -1}}));
        pieces.push_back({2, 1, 1});
        genus += 1;
    }
    HomologyModel model(SurfaceKind::OrientableReversing, symplectic_sum(blocks), genus,
                        Strictness::Strict);
    return finish(target, mode, std::move(pieces), std::move(model));
}

SurfaceModel realize_nonorientable(const TargetSet& target)
{
    if (target.elements() == std::set<Period>{1}) {
        // identity of the projective plane
        HomologyModel model(SurfaceKind::NonOrientable, IntMatrix(0), 1);
        return finish(target, std::nullopt, {{1, 1, 1}}, std::move(model));
    }
    std::map<Period, unsigned> copies;
    std::vector<PieceSpec> pieces;
    for (Period n : toggled(target, 1)) {
        // Sigma_1 is a genus-2 piece with the identity, i.e. two fixed circles
        const Period tau = n == 1 ? 2 : n;
        pieces.push_back({n, tau, 1});
        if (n == 1)
            copies[1] += 2;
        else
            copies[n] += 1;
    }
    return finish(target, std::nullopt, std::move(pieces),
                  nonorientable_model_from_multiplicities(copies));
}

SurfaceModel realize(const TargetSet& target, SurfaceKind kind, ReversingMode mode)
{
    switch (kind) {
    case SurfaceKind::OrientablePreserving: return realize_orientable_preserving(target);
    case SurfaceKind::OrientableReversing: return realize_orientable_reversing(target, mode);
    case SurfaceKind::NonOrientable: return realize_nonorientable(target);
    }
    throw InvalidArgument("unknown surface kind");
}

void require_target(const SurfaceModel& model)
{
    if (!model.matches_target())
        throw TargetMismatch(model.flags.empty() ? "achieved periods differ from target"
                                                 : model.flags.front());
}

}  // namespace msp
