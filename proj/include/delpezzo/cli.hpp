#pragma once

// Command-line front end, separated from main() so tests can drive it
// in-process.  Commands:
//
//   lines    --degree N [--quadric]                 one line class per row
//   conics   --degree N [--quadric]                 one conic class per row
//   classify --degree N [--quadric] --class STR     one JSON report
//            [--quality FILE]
//   census   --family canonical|cubic-a|cubic-b     TSV (default) or JSON
//            --max P [--output json|tsv]            lines
//   sweep    --degree N [--quadric] --coeff-bound B invariant sweep, prints
//                                                   violations (expect none)
//
// Exit status: 0 success, 1 invalid input, 2 internal inconsistency.

#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "delpezzo/census.hpp"
#include "delpezzo/classifier.hpp"
#include "delpezzo/curves.hpp"
#include "delpezzo/surface.hpp"
#include "delpezzo/sweep.hpp"

namespace delpezzo {

struct CliConfig {
    std::string command;        // lines | conics | classify | census | sweep
    int degree = 0;             // 3-fold degree n, 1..8
    bool quadric = false;       // use the quadric model for degree 8
    std::string class_text;     // classify: curve class in the text format
    std::string quality_file;   // classify/sweep: explicit line-quality JSON
    std::string output;         // "json" or "tsv"; empty = command default
    Int max_param = -1;         // census: largest family parameter
    std::string family;         // census: canonical | cubic-a | cubic-b
    Int coeff_bound = -1;       // sweep: coefficient box bound
};

namespace cli_detail {

inline SurfaceModel model_for(const CliConfig& config) {
    if (config.degree < 1 || config.degree > 8)
        throw out_of_range_error("--degree must be in 1..8, got " +
                                 std::to_string(config.degree));
    if (config.quadric) {
        if (config.degree != 8)
            throw validation_error("--quadric requires --degree 8");
        return SurfaceModel::quadric();
    }
    return SurfaceModel::blow_up_p2(9 - config.degree);
}

inline ExplicitQuality parse_quality_value(const std::string& text) {
    if (text == "good") return ExplicitQuality{LineQuality::Good, 1};
    if (text == "bad" || text == "bad(1,-1)") return ExplicitQuality{LineQuality::Bad, 1};
    if (text == "bad(2,-2)") return ExplicitQuality{LineQuality::Bad, 2};
    if (text == "bad(3,-3)") return ExplicitQuality{LineQuality::Bad, 3};
    throw validation_error("line quality must be \"good\", \"bad\", \"bad(2,-2)\" or "
                           "\"bad(3,-3)\", got \"" + text + "\"");
}

inline LineQualityPolicy load_policy(const CliConfig& config, const SurfaceModel& model) {
    if (config.quality_file.empty()) return LineQualityPolicy::general_section();
    std::ifstream in(config.quality_file);
    if (!in) throw validation_error("cannot open quality file '" + config.quality_file + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("quality file '" + config.quality_file + "': " + e.what());
    }
    if (!j.is_object())
        throw validation_error("quality file '" + config.quality_file +
                               "' must hold a JSON object mapping class strings to qualities");
    std::map<std::vector<Int>, ExplicitQuality> entries;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string())
            throw validation_error("quality for line '" + key + "' must be a string");
        DivisorClass cls = parse_divisor(model, key);
        entries[cls.coeffs()] = parse_quality_value(value.get<std::string>());
    }
    return LineQualityPolicy::explicit_map(std::move(entries));
}

inline int run_enumeration(const CliConfig& config, std::ostream& out) {
    SurfaceModel model = model_for(config);
    std::vector<std::string> rows;
    if (config.command == "lines") {
        for (const auto& line : enumerate_lines(model)) rows.push_back(format_divisor(line.cls));
    } else {
        for (const auto& conic : enumerate_conics(model))
            rows.push_back(format_divisor(conic.cls));
    }
    if (config.output == "json") {
        nlohmann::ordered_json j = rows;
        out << j.dump(2) << '\n';
    } else {
        for (const auto& row : rows) out << row << '\n';
    }
    return 0;
}

inline int run_classify(const CliConfig& config, std::ostream& out) {
    SurfaceModel model = model_for(config);
    if (config.class_text.empty())
        throw validation_error("classify requires --class");
    ThreefoldContext ctx(config.degree, model, load_policy(config, model));
    DivisorClass cls = parse_divisor(model, config.class_text);
    ClassificationReport report = classify(ctx, validate_curve_class(ctx, cls));
    out << report_to_json(report).dump(2) << '\n';
    return 0;
}

inline int run_census(const CliConfig& config, std::ostream& out) {
    FamilyKind kind;
    if (config.family == "canonical") kind = FamilyKind::CanonicalDP;
    else if (config.family == "cubic-a") kind = FamilyKind::CubicA;
    else if (config.family == "cubic-b") kind = FamilyKind::CubicB;
    else
        throw validation_error("--family must be canonical, cubic-a or cubic-b, got '" +
                               config.family + "'");
    auto rows = census_table(kind, config.max_param);
    if (config.output == "json")
        out << census_jsonl(rows);
    else
        out << census_tsv(rows);
    return 0;
}

inline int run_sweep(const CliConfig& config, std::ostream& out, std::ostream& err) {
    SurfaceModel model = model_for(config);
    if (config.coeff_bound < 0)
        throw validation_error("sweep requires --coeff-bound >= 0");
    ThreefoldContext ctx(config.degree, model, load_policy(config, model));
    auto violations = sweep_box(ctx, config.coeff_bound);
    for (const auto& v : violations) out << v << '\n';
    if (!violations.empty()) {
        err << "sweep: " << violations.size() << " violation(s)\n";
        return 2;
    }
    return 0;
}

}  // namespace cli_detail

inline int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.command == "lines" || config.command == "conics")
            return cli_detail::run_enumeration(config, out);
        if (config.command == "classify") return cli_detail::run_classify(config, out);
        if (config.command == "census") return cli_detail::run_census(config, out);
        if (config.command == "sweep") return cli_detail::run_sweep(config, out, err);
        throw validation_error("unknown command '" + config.command + "'");
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace delpezzo
