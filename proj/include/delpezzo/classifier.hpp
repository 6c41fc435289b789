#pragma once

// Hilbert-scheme classification of a curve class C on a hyperplane section S
// of a del Pezzo 3-fold V of degree n.  Inputs are the lattice data of S, the
// class of C, and the geometric quality (good/bad) of the lines of S inside
// V; outputs are the numeric invariants and three verdicts:
//
//   * stably_degenerate: do all small deformations of C stay on a member of
//     the family of hyperplane sections?
//   * hilb_smooth: is the Hilbert scheme of V smooth at [C]?
//   * component_status: is the family W traced out by (C on a moving S) a
//     maximal, generically smooth / generically non-reduced component?
//
// The decision tree keys off chi_ideal = chi(I_C(S)), the S-normality defect
// h1_ideal = h1(I_C(S)) = h1(S, -K-C), and the qualities of the lines of S
// disjoint from C.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "delpezzo/core.hpp"
#include "delpezzo/curves.hpp"
#include "delpezzo/obstruction.hpp"
#include "delpezzo/surface.hpp"

namespace delpezzo {

enum class Verdict { Yes, No, Inconclusive };

enum class ComponentStatus {
    MaximalGenericallySmooth,
    MaximalGenericallyNonReduced,
    NotMaximal,
    Inconclusive,
};

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Inconclusive: return "inconclusive";
    }
    throw internal_error("unhandled verdict");
}

inline std::string to_string(ComponentStatus s) {
    switch (s) {
        case ComponentStatus::MaximalGenericallySmooth: return "maximal_generically_smooth";
        case ComponentStatus::MaximalGenericallyNonReduced:
            return "maximal_generically_non_reduced";
        case ComponentStatus::NotMaximal: return "not_maximal";
        case ComponentStatus::Inconclusive: return "inconclusive";
    }
    throw internal_error("unhandled component status");
}

inline std::string to_string(LineQuality q) {
    return q == LineQuality::Good ? "good" : "bad";
}

// Quality assignment for one line under an explicit policy.  bad_type is the
// splitting type of the normal bundle for a bad line: 1 for O(1)+O(-1), 2
// for O(2)+O(-2) (possible only on 3-folds of degree <= 2), 3 for O(3)+O(-3)
// (degree 1 only).  The lattice cannot see the type; it is validated
// metadata.  Ignored for good lines.
struct ExplicitQuality {
    LineQuality quality = LineQuality::Good;
    int bad_type = 1;
};

class LineQualityPolicy {
public:
    static LineQualityPolicy general_section() { return LineQualityPolicy(true, {}); }

    static LineQualityPolicy explicit_map(std::map<std::vector<Int>, ExplicitQuality> entries) {
        return LineQualityPolicy(false, std::move(entries));
    }

    bool is_general_section() const { return general_; }

    // Keyed by coefficient tuple so the map needs no model to compare.
    const std::map<std::vector<Int>, ExplicitQuality>& entries() const { return entries_; }

private:
    LineQualityPolicy(bool general, std::map<std::vector<Int>, ExplicitQuality> entries)
        : general_(general), entries_(std::move(entries)) {}

    bool general_;
    std::map<std::vector<Int>, ExplicitQuality> entries_;
};

class ThreefoldContext {
public:
    ThreefoldContext(int n, SurfaceModel surface,
                     LineQualityPolicy policy = LineQualityPolicy::general_section())
        : n_(n), surface_(surface), policy_(std::move(policy)) {
        if (n_ < 1 || n_ > 8)
            throw out_of_range_error("3-fold degree must be in 1..8, got " + std::to_string(n_));
        if (surface_.degree() != n_)
            throw model_mismatch_error("surface " + surface_.name() + " has degree " +
                                       std::to_string(surface_.degree()) +
                                       ", context requires degree " + std::to_string(n_));
        validate_policy();
    }

    int n() const { return n_; }
    const SurfaceModel& surface() const { return surface_; }
    const LineQualityPolicy& policy() const { return policy_; }

    // Quality of a line of the surface inside the 3-fold.  Explicit entries
    // win; anything else follows the general-section rule: every line is
    // good except, on the degree-7 3-fold, the line l-e1-e2, whose plane
    // meets the center of the blow-up V7 -> P3.
    LineQuality quality(const LineClass& line) const {
        if (!policy_.is_general_section()) {
            auto it = policy_.entries().find(line.cls.coeffs());
            if (it != policy_.entries().end()) return it->second.quality;
        }
        return general_section_quality(line);
    }

private:
    LineQuality general_section_quality(const LineClass& line) const {
        if (n_ != 7) return LineQuality::Good;
        return line.cls.coeffs() == std::vector<Int>{1, 1, 1} ? LineQuality::Bad
                                                              : LineQuality::Good;
    }

    void validate_policy() {
        if (policy_.is_general_section()) return;
        const auto& lines = enumerate_lines(surface_);
        for (const auto& [tuple, quality] : policy_.entries()) {
            DivisorClass cls(surface_, tuple);
            bool known = false;
            for (const auto& line : lines)
                if (line.cls == cls) known = true;
            if (!known)
                throw validation_error("line quality entry " + format_divisor(cls) +
                                       " is not a line on " + surface_.name());
            if (quality.quality == LineQuality::Bad) {
                if (quality.bad_type < 1 || quality.bad_type > 3)
                    throw validation_error("bad line type must be 1, 2 or 3, got " +
                                           std::to_string(quality.bad_type));
                if (quality.bad_type == 2 && n_ > 2)
                    throw validation_error("bad line of type (2,-2) requires 3-fold degree <= 2");
                if (quality.bad_type == 3 && n_ != 1)
                    throw validation_error("bad line of type (3,-3) requires 3-fold degree 1");
            }
        }
    }

    int n_;
    SurfaceModel surface_;
    LineQualityPolicy policy_;
};

// A curve class that passed the smooth-member criterion, with degree and
// genus cached.
struct CurveClass {
    DivisorClass cls;
    Int d;
    Int g;
};

// Criterion for |C| to contain a smooth connected curve: effective, no fixed
// lines, and either C^2 > 0 or C itself a line or conic class.
inline CurveClass validate_curve_class(const ThreefoldContext& ctx, const DivisorClass& cls) {
    if (cls.model() != ctx.surface())
        throw model_mismatch_error("curve class lives on " + cls.model().name() +
                                   ", context surface is " + ctx.surface().name());
    if (!is_effective(cls))
        throw not_effective_error("class " + format_divisor(cls) + " on " +
                                  ctx.surface().name() + " is not effective");
    Int self = intersect(cls, cls);
    Int d = curve_degree(cls);
    bool is_line = (self == -1 && d == 1);
    bool is_conic = (self == 0 && d == 2);
    // A line or conic class is its own smooth connected member; everything
    // else must be base-locus free with positive self-intersection.
    if (!is_line && !is_conic) {
        auto decomposition = fixed_part(cls);
        if (!decomposition.fixed.empty()) {
            std::string offenders;
            for (const auto& [line, mult] : decomposition.fixed) {
                if (!offenders.empty()) offenders += ", ";
                offenders += std::to_string(mult) + " x " + format_divisor(line.cls);
            }
            throw has_fixed_part_error("class " + format_divisor(cls) + " has fixed part " +
                                       offenders);
        }
        if (self <= 0)
            throw not_irreducible_error(
                "class " + format_divisor(cls) + " with self-intersection " +
                std::to_string(self) +
                " is not a line or conic class; no smooth connected member");
    }
    Int g = arithmetic_genus(cls);
    if (g < 0)
        throw internal_error("negative genus " + std::to_string(g) + " for valid curve class " +
                             format_divisor(cls));
    return CurveClass{cls, d, g};
}

// chi(I_C(S)) = chi(O_V(S)) - chi(O_C(S)) = (n+2) - (d+1-g); nonnegative
// iff g >= d-n.
inline Int chi_ideal(const ThreefoldContext& ctx, const CurveClass& C) {
    return ctx.n() + 2 - (C.d + 1 - C.g);
}

// h1(I_C(S)) = h1(S, N_{S/V}(-C)) = h1(S, -K-C).
inline Int h1_ideal(const ThreefoldContext& ctx, const CurveClass& C) {
    (void)ctx;
    return h1(-canonical_class(C.cls.model()) - C.cls);
}

// S-normality: the sections of N_{S/V} restrict onto C surjectively, i.e.
// h1_ideal = 0.  In the regime g >= 2, chi_ideal >= 1 this must agree with
// "no line of S is disjoint from C"; disagreement is an internal error.
inline bool is_s_normal(const ThreefoldContext& ctx, const CurveClass& C) {
    bool normal = (h1_ideal(ctx, C) == 0);
    if (C.g >= 2 && chi_ideal(ctx, C) >= 1) {
        bool no_disjoint = disjoint_lines(C.cls).empty();
        if (normal != no_disjoint)
            throw internal_error("S-normality criteria disagree for class " +
                                 format_divisor(C.cls) + ": h1_ideal " +
                                 (normal ? "0" : "> 0") + " but disjoint lines " +
                                 (no_disjoint ? "absent" : "present"));
    }
    return normal;
}

struct DimensionData {
    std::optional<Int> dim_W;  // unset when the embedding regime fails
    Int flag_dim;              // dimension d+g+n of the flag-scheme component
    Int tangent_dim;           // h0 of the normal bundle of C in V
};

// dim W = d+g+n whenever the projection from the flag scheme is a closed
// embedding (g >= 2 or d >= n+1); the flag dimension itself is unconditional.
// tangent_dim = h0(N_{C/V}) = (d+g-1) + h0(-K|_C) via the normal bundle
// sequence, using h1(N_{C/S}) = 0.
inline DimensionData dims(const ThreefoldContext& ctx, const CurveClass& C) {
    DimensionData data;
    data.flag_dim = C.d + C.g + ctx.n();
    if (C.g >= 2 || C.d >= ctx.n() + 1) data.dim_W = data.flag_dim;
    data.tangent_dim = (C.d + C.g - 1) + anticanonical_restriction_dims(C.cls).h0_restricted;
    return data;
}

struct DisjointLineReport {
    LineClass line;
    LineQuality quality;
};

struct ClassificationReport {
    Int d = 0;
    Int g = 0;
    int n = 0;
    Int chi_ideal = 0;
    Int h1_ideal = 0;
    std::vector<DisjointLineReport> disjoint_lines;
    int m_total = 0;
    int m_good = 0;
    int m_bad = 0;
    int obstruction_rank = 0;  // rank of the reduced obstruction model = m_good
    bool s_normal = false;
    Verdict stably_degenerate = Verdict::Inconclusive;
    Verdict hilb_smooth = Verdict::Inconclusive;
    std::optional<Int> dim_W;
    Int flag_dim = 0;
    Int expected_dim = 0;
    Int tangent_dim = 0;
    ComponentStatus component_status = ComponentStatus::Inconclusive;
    std::vector<std::string> notes;
};

inline ClassificationReport classify(const ThreefoldContext& ctx, const CurveClass& C) {
    ClassificationReport report;
    report.d = C.d;
    report.g = C.g;
    report.n = ctx.n();
    report.chi_ideal = chi_ideal(ctx, C);
    report.h1_ideal = h1_ideal(ctx, C);

    for (const auto& line : disjoint_lines(C.cls)) {
        LineQuality q = ctx.quality(line);
        report.disjoint_lines.push_back(DisjointLineReport{line, q});
        ++report.m_total;
        (q == LineQuality::Good ? report.m_good : report.m_bad)++;
    }
    report.obstruction_rank = report.m_good;
    report.s_normal = is_s_normal(ctx, C);

    DimensionData dimension = dims(ctx, C);
    report.dim_W = dimension.dim_W;
    report.flag_dim = dimension.flag_dim;
    report.expected_dim = 2 * C.d;
    report.tangent_dim = dimension.tangent_dim;

    Int h1_restricted = anticanonical_restriction_dims(C.cls).h1_restricted;

    if (report.chi_ideal < 1) {
        // Deforming C sweeps out more moduli than curves-on-sections can
        // provide: never stably degenerate, and the section family is not a
        // maximal component.
        report.stably_degenerate = Verdict::No;
        report.component_status = ComponentStatus::NotMaximal;
        report.hilb_smooth = Verdict::Inconclusive;
    } else if (report.m_bad == 0) {
        // All disjoint lines good: the reduced obstruction is injective, so
        // every deformation of C stays on a section; W is a maximal
        // component, non-reduced exactly when C fails S-normality.
        report.stably_degenerate = Verdict::Yes;
        report.hilb_smooth = (report.h1_ideal == 0) ? Verdict::Yes : Verdict::No;
        report.component_status = (report.h1_ideal == 0)
                                      ? ComponentStatus::MaximalGenericallySmooth
                                      : ComponentStatus::MaximalGenericallyNonReduced;
    } else {
        // A bad disjoint line breaks the injectivity of the obstruction
        // model; the method proves nothing either way.
        report.stably_degenerate = Verdict::Inconclusive;
        report.component_status = ComponentStatus::Inconclusive;
        report.hilb_smooth = (report.m_good > 0 && C.g >= 2) ? Verdict::No : Verdict::Inconclusive;
    }

    // Unobstructedness short-circuit: h1(-K|_C) = 0 (in particular whenever
    // g <= 1) makes the Hilbert scheme smooth of expected dimension at [C],
    // whatever the line qualities.  It can upgrade Inconclusive, and it must
    // never contradict a definite No.
    if (h1_restricted == 0) {
        if (report.hilb_smooth == Verdict::No)
            throw internal_error("h1(-K|_C) = 0 for class " + format_divisor(C.cls) +
                                 " contradicts a negative smoothness verdict");
        report.hilb_smooth = Verdict::Yes;
    }

    // The one family known to escape the inconclusive bad-line branch: the
    // bianticanonical curve through the bad line on the degree-7 3-fold.
    if (ctx.n() == 7 && C.cls.coeffs() == std::vector<Int>{8, 4, 4}) {
        for (const auto& entry : report.disjoint_lines) {
            if (entry.line.cls.coeffs() == std::vector<Int>{1, 1, 1} &&
                entry.quality == LineQuality::Bad) {
                report.notes.push_back(
                    "known counterexample: a general deformation of this curve moves off the "
                    "hyperplane-section locus, so the family is not stably degenerate even "
                    "though chi_ideal >= 1");
            }
        }
    }

    return report;
}

inline ClassificationReport classify(const ThreefoldContext& ctx, const DivisorClass& cls) {
    return classify(ctx, validate_curve_class(ctx, cls));
}

// Stable JSON rendering: fixed field order, enums as lowercase snake case,
// dim_W as a number or the string "unknown".
inline nlohmann::ordered_json report_to_json(const ClassificationReport& report) {
    nlohmann::ordered_json j;
    j["d"] = report.d;
    j["g"] = report.g;
    j["n"] = report.n;
    j["chi_ideal"] = report.chi_ideal;
    j["h1_ideal"] = report.h1_ideal;
    nlohmann::ordered_json lines = nlohmann::ordered_json::array();
    for (const auto& entry : report.disjoint_lines) {
        nlohmann::ordered_json line;
        line["class"] = format_divisor(entry.line.cls);
        line["quality"] = to_string(entry.quality);
        lines.push_back(line);
    }
    j["disjoint_lines"] = lines;
    j["m_total"] = report.m_total;
    j["m_good"] = report.m_good;
    j["m_bad"] = report.m_bad;
    j["obstruction_rank"] = report.obstruction_rank;
    j["s_normal"] = report.s_normal;
    j["stably_degenerate"] = to_string(report.stably_degenerate);
    j["hilb_smooth"] = to_string(report.hilb_smooth);
    if (report.dim_W)
        j["dim_W"] = *report.dim_W;
    else
        j["dim_W"] = "unknown";
    j["flag_dim"] = report.flag_dim;
    j["expected_dim"] = report.expected_dim;
    j["tangent_dim"] = report.tangent_dim;
    j["component_status"] = to_string(report.component_status);
    j["notes"] = report.notes;
    return j;
}

}  // namespace delpezzo
