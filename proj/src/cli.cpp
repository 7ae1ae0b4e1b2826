#include "msp/cli.hpp"

#include "msp/errors.hpp"
#include "msp/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace msp::cli {

namespace {

using report::Json;

enum class Format { Json, Text };

void emit(std::ostream& out, const Json& j, Format format)
{
    if (format == Format::Json)
        out << j.dump(2) << "\n";
    else
        report::write_text(out, j);
}

std::set<Period> parse_set(const std::string& text)
{
    std::set<Period> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::erase_if(item, [](unsigned char c) { return std::isspace(c); });
        if (item.empty()) continue;
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || v == 0 || item[0] == '-')
            throw ParseError("--set element '" + item + "' is not a positive integer");
        out.insert(v);
    }
    if (out.empty()) throw ParseError("--set must list at least one positive integer");
    return out;
}

// Inline JSON when the argument starts with '{', otherwise a file path.
Json load_json(const std::string& arg)
{
    const auto first = arg.find_first_not_of(" \t\r\n");
    try {
        if (first != std::string::npos && arg[first] == '{') return Json::parse(arg);
        std::ifstream in(arg);
        if (!in) throw ParseError("cannot open '" + arg + "'");
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in '") + arg + "': " + e.what());
    }
}

Format parse_format(const std::string& s) { return s == "text" ? Format::Text : Format::Json; }

struct ModelArgs {
    std::string matrix_path;
    std::string kind = "preserving";
    std::optional<std::size_t> genus;
};

HomologyModel load_model(const ModelArgs& a)
{
    const IntMatrix m = report::matrix_from_json(load_json(a.matrix_path));
    const SurfaceKind kind = parse_surface_kind(a.kind);
    std::size_t genus;
    if (a.genus)
        genus = *a.genus;
    else
        genus = kind == SurfaceKind::NonOrientable ? m.dim() + 1 : m.dim() / 2;
    return HomologyModel(kind, m, genus);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Algebraic periods of surface homeomorphism models", "msperiods"};
    app.require_subcommand(1);
    std::string format_name = "json";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    // realize
    auto* realize_cmd = app.add_subcommand("realize", "Build a model with prescribed algebraic periods");
    std::string set_text, kind_text, mode_text = "corrected";
    bool strict_realize = false;
    realize_cmd->add_option("--set", set_text, "Target periods, e.g. 2,3")->required();
    realize_cmd->add_option("--kind", kind_text, "preserving | reversing | nonorientable")
        ->required()
        ->check(CLI::IsMember({"preserving", "reversing", "nonorientable"}));
    auto* mode_opt = realize_cmd->add_option("--mode", mode_text, "faithful | corrected (reversing only)")
                         ->check(CLI::IsMember({"faithful", "corrected"}));
    realize_cmd->add_flag("--strict", strict_realize, "Fail when achieved periods differ from the target");

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a homology model");
    ModelArgs analyze_args;
    bool no_strict = false;
    std::optional<std::size_t> max_iter;
    analyze_cmd->add_option("--matrix", analyze_args.matrix_path, "Matrix JSON file")->required();
    analyze_cmd->add_option("--kind", analyze_args.kind, "preserving | reversing | nonorientable")
        ->required()
        ->check(CLI::IsMember({"preserving", "reversing", "nonorientable"}));
    analyze_cmd->add_option("--genus", analyze_args.genus, "Surface genus (default: inferred from dim)");
    analyze_cmd->add_flag("--no-strict", no_strict, "Skip (anti)symplectic form checks");
    analyze_cmd->add_option("--max-iter", max_iter, "Length of the printed Lefschetz sequence")
        ->check(CLI::PositiveNumber);

    // zeta
    auto* zeta_cmd = app.add_subcommand("zeta", "Lefschetz zeta function factorizations");
    std::string zeta_dold, zeta_factors;
    bool want_canonical = false, want_mper = false;
    std::optional<std::size_t> series_degree, lefschetz_count;
    auto* dold_opt = zeta_cmd->add_option("--dold", zeta_dold, "Dold class JSON file or inline object");
    auto* factors_opt = zeta_cmd->add_option("--factors", zeta_factors, "Factors \"SIGN,r,m;...\"");
    dold_opt->excludes(factors_opt);
    zeta_cmd->add_flag("--canonicalize", want_canonical, "Exponents of the (1 - z^k) representation");
    zeta_cmd->add_option("--series", series_degree, "Expand through degree N")->check(CLI::PositiveNumber);
    zeta_cmd->add_option("--lefschetz", lefschetz_count, "Recover L_1..L_N")->check(CLI::PositiveNumber);
    zeta_cmd->add_flag("--mper", want_mper, "Minimal set of Lefschetz periods");

    // census
    auto* census_cmd = app.add_subcommand("census", "Partition census of Morse-Smale mapping classes");
    std::size_t census_genus = 0;
    bool list_partitions = false;
    std::string correspondence = "orientable";
    std::optional<std::size_t> limit;
    census_cmd->add_option("--genus", census_genus, "Genus g >= 1")->required()->check(CLI::PositiveNumber);
    census_cmd->add_flag("--list-partitions", list_partitions, "List the Dold class of every partition");
    census_cmd->add_option("--correspondence", correspondence, "orientable | nonorientable")
        ->check(CLI::IsMember({"orientable", "nonorientable"}));
    census_cmd->add_option("--limit", limit, "Maximum number of listed classes");

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "Periodic-point guarantees for transversal maps");
    std::string certify_dold;
    ModelArgs certify_args;
    bool certify_no_strict = false;
    auto* cdold_opt = certify_cmd->add_option("--dold", certify_dold, "Dold class JSON file or inline object");
    auto* cmatrix_opt = certify_cmd->add_option("--matrix", certify_args.matrix_path, "Matrix JSON file");
    cdold_opt->excludes(cmatrix_opt);
    certify_cmd->add_option("--kind", certify_args.kind, "preserving | reversing | nonorientable")
        ->check(CLI::IsMember({"preserving", "reversing", "nonorientable"}));
    certify_cmd->add_option("--genus", certify_args.genus, "Surface genus (default: inferred from dim)");
    certify_cmd->add_flag("--no-strict", certify_no_strict, "Skip (anti)symplectic form checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? Success : UsageError;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return UsageError;
    }
    const Format format = parse_format(format_name);

    try {
        if (*realize_cmd) {
            const SurfaceKind kind = parse_surface_kind(kind_text);
            if (mode_opt->count() && kind != SurfaceKind::OrientableReversing) {
                err << "error: --mode applies to --kind reversing only\n";
                return UsageError;
            }
            const TargetSet target(parse_set(set_text));
            std::optional<SurfaceModel> realized;
            try {
                realized = realize(target, kind, parse_reversing_mode(mode_text));
            } catch (const OddTargetUnrealizable& e) {
                err << "error: " << e.what() << "\n";
                return Unrealizable;
            }
            const SurfaceModel& model = *realized;
            emit(out, report::to_json(model), format);
            if (strict_realize && !model.matches_target()) {
                err << "error: strict mode: " << model.flags.front() << "\n";
                return StrictMismatch;
            }
            return Success;
        }

        if (*analyze_cmd) {
            const HomologyModel model = load_model(analyze_args);
            report::AnalysisOptions options;
            options.strict = !no_strict;
            options.max_iter = max_iter;
            const auto analysis = report::analyze(model, options);
            emit(out, analysis.json, format);
            switch (analysis.verdict) {
            case report::Verdict::Ok: return Success;
            case report::Verdict::NotQuasiUnipotent: return NotQuasiUnipotent;
            case report::Verdict::FormViolation: return ModelMismatch;
            }
            return Success;
        }

        if (*zeta_cmd) {
            if (dold_opt->count() == factors_opt->count()) {
                err << "error: zeta needs exactly one of --dold or --factors\n";
                return UsageError;
            }
            const ZetaFactorization f = dold_opt->count()
                                            ? zeta_from_dold(report::dold_from_json(load_json(zeta_dold)))
                                            : ZetaFactorization::parse(zeta_factors);
            Json j;
            j["factors"] = f.to_string();
            j["factor_list"] = report::zeta_factors_json(f);
            if (want_canonical) {
                Json canon = Json::object();
                for (const auto& [k, e] : canonicalize(f)) canon[std::to_string(k)] = report::to_json(e);
                j["canonical"] = std::move(canon);
            }
            if (series_degree) {
                Json s = Json::array();
                for (const auto& c : series_expand(f, *series_degree)) s.push_back(report::to_json(c));
                j["series"] = std::move(s);
            }
            if (lefschetz_count) {
                Json s = Json::array();
                for (const auto& c : lefschetz_from_zeta(f, *lefschetz_count)) s.push_back(report::to_json(c));
                j["lefschetz"] = std::move(s);
            }
            if (want_mper) j["mper"] = report::to_json(mper_from_factorization(f));
            emit(out, j, format);
            return Success;
        }

        if (*census_cmd) {
            CensusOptions options;
            options.list_classes = list_partitions;
            options.correspondence =
                correspondence == "nonorientable" ? Correspondence::NonOrientable : Correspondence::Orientable;
            options.limit = limit;
            emit(out, report::to_json(census(census_genus, options)), format);
            return Success;
        }

        if (*certify_cmd) {
            if (cdold_opt->count() == cmatrix_opt->count()) {
                err << "error: certify needs exactly one of --dold or --matrix\n";
                return UsageError;
            }
            Json j;
            DoldClass dold;
            if (cdold_opt->count()) {
                dold = report::dold_from_json(load_json(certify_dold));
            } else {
                const HomologyModel model = load_model(certify_args);
                if (!certify_no_strict && !model.satisfies_form()) {
                    err << "error: matrix fails the form check for kind " << certify_args.kind << "\n";
                    return ModelMismatch;
                }
                try {
                    dold = algebraic_periods(model).dold;
                } catch (const msp::NotQuasiUnipotent& e) {
                    j["verdict"] = "NotQuasiUnipotent";
                    j["residual_factor"] = report::to_json(e.residual());
                    emit(out, j, format);
                    return NotQuasiUnipotent;
                }
                j["kind"] = certify_args.kind;
                j["genus"] = model.genus();
            }
            j["dold"] = report::to_json(dold);
            j["certificates"] = report::to_json(periodic_point_certificate(dold));
            emit(out, j, format);
            return Success;
        }
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << "\n";
        return ModelMismatch;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }
    return UsageError;
}

}  // namespace msp::cli
