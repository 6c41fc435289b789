#pragma once

// Named curve families with generically non-reduced (or counterexample)
// behavior, and bulk emission of their invariants:
//
//   * CanonicalDP(n), 1 <= n <= 7: the bianticanonical family -2K + 2l on
//     the degree-n section, l the first enumerated line; d = 2n+2, g = n+2.
//   * CubicA(lambda): (lambda+6; lambda+1,1,1,1,1,0) on the cubic surface,
//     d = 2*lambda+13, g = 2d-16.
//   * CubicB(lambda): (lambda+6; lambda+2,1,1,1,1,0) on the cubic surface,
//     d = 2*lambda+12, g = (3/2)d-9.
//   * V7Counterexample: -2K + 2*(l-e1-e2) on the degree-7 section, whose
//     unique disjoint line is bad.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "delpezzo/classifier.hpp"
#include "delpezzo/curves.hpp"
#include "delpezzo/surface.hpp"

namespace delpezzo {

enum class FamilyKind { CanonicalDP, CubicA, CubicB, V7Counterexample };

struct FamilySpec {
    FamilyKind kind;
    Int param = 0;  // n for CanonicalDP, lambda for the cubic families

    static FamilySpec canonical_dp(Int n) { return FamilySpec{FamilyKind::CanonicalDP, n}; }
    static FamilySpec cubic_a(Int lambda) { return FamilySpec{FamilyKind::CubicA, lambda}; }
    static FamilySpec cubic_b(Int lambda) { return FamilySpec{FamilyKind::CubicB, lambda}; }
    static FamilySpec v7_counterexample() { return FamilySpec{FamilyKind::V7Counterexample, 0}; }
};

struct ResolvedFamily {
    ThreefoldContext ctx;
    CurveClass curve;
};

inline ResolvedFamily resolve_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::CanonicalDP: {
            if (spec.param < 1 || spec.param > 7)
                throw out_of_range_error(
                    "canonical family needs a 3-fold degree in 1..7 (degree-8 sections carry "
                    "no line), got " + std::to_string(spec.param));
            int n = static_cast<int>(spec.param);
            ThreefoldContext ctx(n, SurfaceModel::blow_up_p2(9 - n));
            const auto& lines = enumerate_lines(ctx.surface());
            if (lines.empty()) throw internal_error("no line on " + ctx.surface().name());
            DivisorClass cls =
                -2 * canonical_class(ctx.surface()) + 2 * lines.front().cls;
            return ResolvedFamily{ctx, validate_curve_class(ctx, cls)};
        }
        case FamilyKind::CubicA:
        case FamilyKind::CubicB: {
            if (spec.param < 0)
                throw out_of_range_error("cubic family parameter must be >= 0, got " +
                                         std::to_string(spec.param));
            Int lambda = spec.param;
            ThreefoldContext ctx(3, SurfaceModel::blow_up_p2(6));
            Int b1 = (spec.kind == FamilyKind::CubicA) ? lambda + 1 : lambda + 2;
            DivisorClass cls(ctx.surface(), {lambda + 6, b1, 1, 1, 1, 1, 0});
            return ResolvedFamily{ctx, validate_curve_class(ctx, cls)};
        }
        case FamilyKind::V7Counterexample: {
            ThreefoldContext ctx(7, SurfaceModel::blow_up_p2(2));
            DivisorClass line_l0(ctx.surface(), {1, 1, 1});
            DivisorClass cls = -2 * canonical_class(ctx.surface()) + 2 * line_l0;
            return ResolvedFamily{ctx, validate_curve_class(ctx, cls)};
        }
    }
    throw internal_error("unhandled family kind");
}

struct CensusRow {
    Int param;
    Int d;
    Int g;
    Int chi_ideal;
    Int m;
    std::optional<Int> dim_W;
    Int expected_dim;
    Int tangent_dim;
    ComponentStatus component_status;
};

inline CensusRow census_row(const FamilySpec& spec) {
    ResolvedFamily family = resolve_family(spec);
    ClassificationReport report = classify(family.ctx, family.curve);
    return CensusRow{spec.param,          report.d,           report.g,
                     report.chi_ideal,    report.m_total,     report.dim_W,
                     report.expected_dim, report.tangent_dim, report.component_status};
}

// Rows for parameters 1..max_param (CanonicalDP) or 0..max_param (cubics),
// ascending.  The V7 counterexample is a single curve, not a range.
inline std::vector<CensusRow> census_table(FamilyKind family, Int max_param) {
    if (family == FamilyKind::V7Counterexample)
        throw out_of_range_error("the V7 counterexample is a single curve, not a census range");
    Int first = (family == FamilyKind::CanonicalDP) ? 1 : 0;
    if (max_param < first)
        throw out_of_range_error("census upper parameter must be >= " + std::to_string(first) +
                                 ", got " + std::to_string(max_param));
    std::vector<CensusRow> rows;
    for (Int p = first; p <= max_param; ++p)
        rows.push_back(census_row(FamilySpec{family, p}));
    return rows;
}

inline std::string census_dim_w_text(const CensusRow& row) {
    return row.dim_W ? std::to_string(*row.dim_W) : "unknown";
}

// Tab-separated table with a header row and LF line endings.
inline std::string census_tsv(const std::vector<CensusRow>& rows) {
    std::string out =
        "param\td\tg\tchi_ideal\tm\tdim_W\texpected_dim\ttangent_dim\tcomponent_status\n";
    for (const auto& row : rows) {
        out += std::to_string(row.param) + '\t' + std::to_string(row.d) + '\t' +
               std::to_string(row.g) + '\t' + std::to_string(row.chi_ideal) + '\t' +
               std::to_string(row.m) + '\t' + census_dim_w_text(row) + '\t' +
               std::to_string(row.expected_dim) + '\t' + std::to_string(row.tangent_dim) + '\t' +
               to_string(row.component_status) + '\n';
    }
    return out;
}

// JSON-lines: one object per row, same keys and order as the TSV columns.
inline std::string census_jsonl(const std::vector<CensusRow>& rows) {
    std::string out;
    for (const auto& row : rows) {
        nlohmann::ordered_json j;
        j["param"] = row.param;
        j["d"] = row.d;
        j["g"] = row.g;
        j["chi_ideal"] = row.chi_ideal;
        j["m"] = row.m;
        if (row.dim_W)
            j["dim_W"] = *row.dim_W;
        else
            j["dim_W"] = "unknown";
        j["expected_dim"] = row.expected_dim;
        j["tangent_dim"] = row.tangent_dim;
        j["component_status"] = to_string(row.component_status);
        out += j.dump();
        out += '\n';
    }
    return out;
}

}  // namespace delpezzo
