#pragma once

// JSON serialization of models, analyses, zeta data and census reports.
// Keys are sorted; integers outside +-2^53 are written as decimal strings
// and both forms are accepted on input.

#include "msp/census.hpp"
#include "msp/lefschetz.hpp"
#include "msp/realize.hpp"
#include "msp/zeta.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>

namespace msp::report {

using Json = nlohmann::json;

Json to_json(const BigInt& v);
/// Accepts JSON integers and decimal strings. Throws ParseError.
BigInt big_from_json(const Json& j);

Json to_json(const IntMatrix& m);
/// {"dim": n, "rows": [[...], ...]}. Throws ParseError.
IntMatrix matrix_from_json(const Json& j);

Json to_json(const IntPolynomial& p);
Json to_json(const DoldClass& d);
/// {"n": a_n, ...}. Throws ParseError.
DoldClass dold_from_json(const Json& j);

Json to_json(const std::set<Period>& s);
Json to_json(const CyclotomicFactorization& f);
Json to_json(const std::vector<PeriodGuarantee>& certificates);

struct AnalysisOptions {
    bool strict = true;
    /// Length of the printed Lefschetz sequence; default 2 * period.
    std::optional<std::size_t> max_iter;
};

enum class Verdict { Ok, NotQuasiUnipotent, FormViolation };

struct Analysis {
    Json json;
    Verdict verdict = Verdict::Ok;
};

/// Full analysis of a model: L-sequence, Dold class, period sets, form
/// predicates, odd vanishing (reversing) and certificates. Data that needs
/// quasi-unipotence is omitted when it fails.
Analysis analyze(const HomologyModel& model, const AnalysisOptions& options = {});

/// Analysis fields plus target, mode, pieces, achieved periods and flags.
Json to_json(const SurfaceModel& s);

Json zeta_factors_json(const ZetaFactorization& f);
Json to_json(const CensusReport& r);

/// Indented "key: value" rendering of a JSON report, same content.
void write_text(std::ostream& os, const Json& j);

}  // namespace msp::report
