#include "msp/report.hpp"

#include "msp/errors.hpp"

#include <ostream>

namespace msp::report {

namespace {

const BigInt& exact_double_limit()
{
    static const BigInt limit = BigInt(1) << 53;
    return limit;
}

}  // namespace

Json to_json(const BigInt& v)
{
    if (abs(v) <= exact_double_limit()) return Json(v.get_si());
    return Json(v.get_str());
}

BigInt big_from_json(const Json& j)
{
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return BigInt(j.get<unsigned long>());
        return BigInt(j.get<long>());
    }
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        BigInt v;
        if (!s.empty() && s[0] == '+') s.erase(0, 1);
        if (s.empty() || v.set_str(s, 10) != 0) throw ParseError("not a decimal integer: '" + j.get<std::string>() + "'");
        return v;
    }
    throw ParseError("expected an integer, got " + j.dump());
}

Json to_json(const IntMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (const auto& e : m.row(i)) row.push_back(to_json(e));
        rows.push_back(std::move(row));
    }
    return Json{{"dim", m.dim()}, {"rows", std::move(rows)}};
}

IntMatrix matrix_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("dim") || !j.contains("rows"))
        throw ParseError("matrix file must be an object with \"dim\" and \"rows\"");
    if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 0)
        throw ParseError("matrix \"dim\" must be a nonnegative integer");
    const auto dim = j["dim"].get<std::size_t>();
    const Json& rows = j["rows"];
    if (!rows.is_array() || rows.size() != dim)
        throw ParseError("matrix \"rows\" must hold " + std::to_string(dim) + " rows");
    std::vector<BigInt> entries;
    entries.reserve(dim * dim);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != dim)
            throw ParseError("every matrix row must hold " + std::to_string(dim) + " entries");
        for (const auto& e : row) entries.push_back(big_from_json(e));
    }
    return IntMatrix(dim, std::move(entries));
}

Json to_json(const IntPolynomial& p)
{
    Json out = Json::array();
    for (const auto& c : p.coefficients()) out.push_back(to_json(c));
    return out;
}

Json to_json(const DoldClass& d)
{
    Json out = Json::object();
    for (const auto& [n, a] : d.coefficients()) out[std::to_string(n)] = to_json(a);
    return out;
}

DoldClass dold_from_json(const Json& j)
{
    if (!j.is_object()) throw ParseError("Dold class must be a JSON object {\"n\": a_n}");
    DoldClass d;
    for (const auto& [key, value] : j.items()) {
        std::size_t pos = 0;
        unsigned long n = 0;
        try {
            n = std::stoul(key, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != key.size() || n == 0) throw ParseError("Dold class key '" + key + "' is not a positive integer");
        d.set(n, d[n] + big_from_json(value));
    }
    return d;
}

Json to_json(const std::set<Period>& s)
{
    Json out = Json::array();
    for (Period n : s) out.push_back(n);
    return out;
}

Json to_json(const CyclotomicFactorization& f)
{
    Json out = Json::object();
    for (const auto& [d, m] : f) out[std::to_string(d)] = m;
    return out;
}

Json to_json(const std::vector<PeriodGuarantee>& certificates)
{
    Json out = Json::array();
    for (const auto& c : certificates) {
        out.push_back({{"n", c.n},
                       {"kind", c.kind == GuaranteeKind::Odd ? "odd" : "either"},
                       {"periods", c.periods},
                       {"statement", c.statement()}});
    }
    return out;
}

Analysis analyze(const HomologyModel& model, const AnalysisOptions& options)
{
    Analysis out;
    Json& j = out.json;
    const IntMatrix& a = model.matrix();
    const IntPolynomial chi = charpoly(a);
    j["kind"] = to_string(model.kind());
    j["genus"] = model.genus();
    j["euler_characteristic"] = model.euler_characteristic();
    j["matrix"] = to_json(a);
    j["charpoly"] = to_json(chi);
    j["charpoly_string"] = chi.to_string();
    j["strict"] = options.strict;

    Json forms = Json::object();
    if (model.kind() != SurfaceKind::NonOrientable) {
        forms["symplectic"] = is_symplectic(a);
        forms["antisymplectic"] = is_antisymplectic(a);
    }
    j["forms"] = forms;
    if (options.strict && !model.satisfies_form()) out.verdict = Verdict::FormViolation;

    std::optional<AlgebraicPeriods> ap;
    try {
        ap = algebraic_periods(model);
    } catch (const NotQuasiUnipotent& e) {
        j["quasi_unipotent"] = false;
        j["residual_factor"] = to_json(e.residual());
        j["cyclotomic"] = to_json(e.partial());
        if (out.verdict == Verdict::Ok) out.verdict = Verdict::NotQuasiUnipotent;
    }
    const std::size_t iterations =
        options.max_iter.value_or(ap ? static_cast<std::size_t>(2 * ap->period) : std::size_t{12});
    Json ls = Json::array();
    for (const auto& l : lefschetz_numbers(model, iterations)) ls.push_back(to_json(l));
    j["lefschetz"] = std::move(ls);

    if (ap) {
        j["quasi_unipotent"] = true;
        j["cyclotomic"] = to_json(ap->cyclotomic);
        j["period"] = ap->period;
        j["dold"] = to_json(ap->dold);
        j["algebraic_periods"] = to_json(ap->periods);
        j["ap_odd"] = to_json(ap->dold.odd_support());
        j["mper_l"] = to_json(mper_from_factorization(zeta_from_dold(ap->dold)));
        j["euler_check"] = ap->dold.weighted_sum() == model.euler_characteristic();
        j["certificates"] = to_json(periodic_point_certificate(ap->dold));
        if (model.kind() == SurfaceKind::OrientableReversing) {
            j["odd_vanishing"] = is_antisymplectic(a) ? Json(odd_vanishing_check(model, 2 * ap->period))
                                                      : Json(nullptr);
        }
    }
    static const char* names[] = {"ok", "NotQuasiUnipotent", "FormViolation"};
    j["verdict"] = names[static_cast<int>(out.verdict)];
    return out;
}

Json to_json(const SurfaceModel& s)
{
    Json j = analyze(s.model).json;
    j["target"] = to_json(s.target.elements());
    j["achieved"] = to_json(s.achieved_periods());
    j["dold"] = to_json(s.achieved);
    j["mode"] = s.mode ? Json(to_string(*s.mode)) : Json(nullptr);
    Json pieces = Json::array();
    for (const auto& p : s.pieces) pieces.push_back({{"n", p.n}, {"tau", p.tau}, {"copies", p.copies}});
    j["pieces"] = std::move(pieces);
    j["flags"] = s.flags;
    j["deviation"] = !s.matches_target();
    return j;
}

Json zeta_factors_json(const ZetaFactorization& f)
{
    Json out = Json::array();
    for (const auto& factor : f.factors())
        out.push_back({{"delta", factor.delta}, {"r", factor.r}, {"m", to_json(factor.m)}});
    return out;
}

Json to_json(const CensusReport& r)
{
    Json j;
    j["genus"] = r.genus;
    j["exact_count"] = to_json(r.exact_count);
    j["hr_estimate"] = r.hr_estimate;
    j["ratio"] = r.ratio;
    j["statement"] = "at least " + r.exact_count.get_str() +
                     " conjugacy classes of genus-" + std::to_string(r.genus) +
                     " mapping classes contain Morse-Smale diffeomorphisms (lower bound)";
    if (r.correspondence) {
        j["correspondence"] = *r.correspondence == Correspondence::Orientable ? "orientable" : "nonorientable";
        Json classes = Json::array();
        for (const auto& e : r.classes) classes.push_back({{"partition", e.partition.parts()}, {"dold", to_json(e.dold)}});
        j["classes"] = std::move(classes);
    }
    return j;
}

namespace {

bool is_scalar_array(const Json& j)
{
    for (const auto& e : j)
        if (e.is_structured()) return false;
    return true;
}

void write_text_at(std::ostream& os, const Json& j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, value] : j.items()) {
        os << pad << key << ":";
        if (value.is_object() && !value.empty()) {
            os << "\n";
            write_text_at(os, value, indent + 2);
        } else if (value.is_array() && !value.empty() && !is_scalar_array(value)) {
            os << "\n";
            for (const auto& item : value) {
                if (item.is_object()) {
                    os << pad << "  -\n";
                    write_text_at(os, item, indent + 4);
                } else {
                    os << pad << "  - " << item.dump() << "\n";
                }
            }
        } else if (value.is_string()) {
            os << " " << value.get<std::string>() << "\n";
        } else {
            os << " " << value.dump() << "\n";
        }
    }
}

}  // namespace

void write_text(std::ostream& os, const Json& j) { write_text_at(os, j, 0); }

}  // namespace msp::report
