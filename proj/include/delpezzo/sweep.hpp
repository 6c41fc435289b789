#pragma once

// Exhaustive invariant sweep over a coefficient box, used by the CLI `sweep`
// command and by the acceptance suite.  For every class with coefficients in
// [0, bound]^rank the checks are:
//
//   (a) on effective classes: h0 - h1 + h2 = chi and chi(D) = chi(K-D);
//   (b) on valid curve classes with g >= 2 and chi_ideal >= 1:
//       h1_ideal = 0  <=>  no disjoint line;
//   (c) on valid curve classes with g >= 1 and chi_ideal >= 1:
//       h1_ideal <= m_total (the restriction sequence to the disjoint lines
//       bounds the defect by the number of lines; rational curves escape the
//       bound, e.g. 4l - 3e_6 on the cubic surface has h1_ideal = 6 with
//       m = 5);
//   (d) on valid curve classes with g >= 2 and chi_ideal >= 1:
//       tangent_dim - dim_W = m_total.
//
// Any violation is reported as a human-readable string; an empty result is
// the expected outcome.

#include <functional>
#include <string>
#include <vector>

#include "delpezzo/classifier.hpp"
#include "delpezzo/curves.hpp"
#include "delpezzo/surface.hpp"

namespace delpezzo {

// Calls visit(D) for every class D with coefficients in [lo, hi]^rank,
// in lexicographic order.
inline void for_each_class_in_box(const SurfaceModel& model, Int lo, Int hi,
                                  const std::function<void(const DivisorClass&)>& visit) {
    int rank = model.rank();
    std::vector<Int> tuple(static_cast<size_t>(rank), lo);
    while (true) {
        visit(DivisorClass(model, tuple));
        int slot = rank - 1;
        while (slot >= 0 && tuple[static_cast<size_t>(slot)] == hi) {
            tuple[static_cast<size_t>(slot)] = lo;
            --slot;
        }
        if (slot < 0) return;
        ++tuple[static_cast<size_t>(slot)];
    }
}

inline std::vector<std::string> sweep_box(const ThreefoldContext& ctx, Int coeff_bound) {
    if (coeff_bound < 0) throw out_of_range_error("sweep coefficient bound must be >= 0");
    std::vector<std::string> violations;
    auto report = [&](const DivisorClass& cls, const std::string& what) {
        violations.push_back("class " + format_divisor(cls) + " on " + ctx.surface().name() +
                             ": " + what);
    };

    for_each_class_in_box(ctx.surface(), 0, coeff_bound, [&](const DivisorClass& D) {
        if (!is_effective(D)) return;

        Int chi = euler_char(D);
        Int sum = h0(D) - h1(D) + h2(D);
        if (sum != chi)
            report(D, "h0-h1+h2 = " + std::to_string(sum) + " differs from chi = " +
                          std::to_string(chi));
        if (chi != euler_char(serre_dual(D)))
            report(D, "chi(D) differs from chi(K-D)");

        CurveClass C{D, 0, 0};
        try {
            C = validate_curve_class(ctx, D);
        } catch (const validation_error&) {
            return;  // not a curve class; lattice checks above still ran
        }

        Int chi_i = chi_ideal(ctx, C);
        Int h1_i = h1_ideal(ctx, C);
        Int m = static_cast<Int>(disjoint_lines(C.cls).size());
        bool regime = (C.g >= 2 && chi_i >= 1);

        if (regime && ((h1_i == 0) != (m == 0)))
            report(D, "regime equivalence fails: h1_ideal = " + std::to_string(h1_i) +
                          ", disjoint lines = " + std::to_string(m));
        if (C.g >= 1 && chi_i >= 1 && h1_i > m)
            report(D, "h1_ideal = " + std::to_string(h1_i) + " exceeds disjoint line count " +
                          std::to_string(m));
        if (regime) {
            DimensionData dimension = dims(ctx, C);
            if (!dimension.dim_W)
                report(D, "dim_W unknown inside the embedding regime");
            else if (dimension.tangent_dim - *dimension.dim_W != m)
                report(D, "tangent_dim - dim_W = " +
                              std::to_string(dimension.tangent_dim - *dimension.dim_W) +
                              " differs from m = " + std::to_string(m));
        }
    });
    return violations;
}

}  // namespace delpezzo
