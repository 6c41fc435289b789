#pragma once

// Curves and linear systems on the surface models: enumeration of lines
// ((-1)-classes) and conics, nef and effectivity decision procedures,
// fixed-part (divisorial base locus) extraction, and exact cohomology
// dimensions h0/h1/h2 of divisor classes.
//
// The decision procedures rest on two classical facts about del Pezzo
// surfaces, used without further comment below:
//   * for r >= 2 the Mori cone is spanned by the finitely many lines, so
//     "D.l >= 0 against every line" decides nefness (P^2, the blow-up in one
//     point and the quadric need their explicit extremal rays instead);
//   * a nef class D has h1 = h2 = 0 (D - K is ample, Kodaira vanishing), so
//     h0 = chi on the nef cone, and an effective class minus its fixed lines
//     is nef with the same h0.

#include <algorithm>
#include <array>
#include <mutex>
#include <utility>
#include <vector>

#include "delpezzo/core.hpp"
#include "delpezzo/surface.hpp"

namespace delpezzo {

// A class with l^2 = -1 and l.(-K) = 1.
struct LineClass {
    DivisorClass cls;

    explicit LineClass(DivisorClass c) : cls(std::move(c)) {
        if (intersect(cls, cls) != -1 || curve_degree(cls) != 1)
            throw internal_error("not a line class: " + format_divisor(cls));
    }

    friend bool operator==(const LineClass& x, const LineClass& y) { return x.cls == y.cls; }
    friend bool operator<(const LineClass& x, const LineClass& y) { return x.cls < y.cls; }
};

// A class with q^2 = 0 and q.(-K) = 2.
struct ConicClass {
    DivisorClass cls;

    explicit ConicClass(DivisorClass c) : cls(std::move(c)) {
        if (intersect(cls, cls) != 0 || curve_degree(cls) != 2)
            throw internal_error("not a conic class: " + format_divisor(cls));
    }

    friend bool operator==(const ConicClass& x, const ConicClass& y) { return x.cls == y.cls; }
    friend bool operator<(const ConicClass& x, const ConicClass& y) { return x.cls < y.cls; }
};

// D = moving + sum m_i * l_i with the moving part nef and the extracted
// lines pairwise disjoint.
struct FixedPartDecomposition {
    DivisorClass moving;
    std::vector<std::pair<LineClass, Int>> fixed;
};

namespace detail {

inline Int isqrt_floor(Int v) {
    Int t = 0;
    while ((t + 1) * (t + 1) <= v) ++t;
    return t;
}

// Depth-first search for all integer vectors (b_1..b_slots) with given sum
// and sum of squares, ascending per coordinate so the output tuples come out
// in lexicographic order.  Pruned by the Cauchy-Schwarz feasibility test
// sum^2 <= slots * square_budget.
inline void search_coefficients(const SurfaceModel& model, std::vector<Int>& tuple, int slot,
                                Int sum_left, Int sq_left, std::vector<DivisorClass>& out) {
    int slots = model.rank() - slot;
    if (slots == 0) {
        if (sum_left == 0 && sq_left == 0) out.push_back(DivisorClass(model, tuple));
        return;
    }
    if (sq_left < 0) return;
    if (static_cast<Wide>(sum_left) * sum_left > static_cast<Wide>(slots) * sq_left) return;
    Int bound = isqrt_floor(sq_left);
    for (Int b = -bound; b <= bound; ++b) {
        tuple[static_cast<size_t>(slot)] = b;
        search_coefficients(model, tuple, slot + 1, sum_left - b, sq_left - b * b, out);
    }
    tuple[static_cast<size_t>(slot)] = 0;
}

// Classes x with x^2 = self_intersection and x.(-K) = anticanonical_degree
// on a BlowUpP2 model: for the tuple (a; b) the two conditions read
// sum b_i = 3a - deg and sum b_i^2 = a^2 - self.  The leading coefficient is
// scanned over [a_min, a_max]; the caller chooses the window one step wider
// than the Cauchy-Schwarz bound and we assert the boundary shells are empty.
inline std::vector<DivisorClass> bounded_class_search(const SurfaceModel& model,
                                                     Int self_intersection,
                                                     Int anticanonical_degree, Int a_min,
                                                     Int a_max) {
    std::vector<DivisorClass> out;
    std::vector<Int> tuple(static_cast<size_t>(model.rank()), 0);
    for (Int a = a_min; a <= a_max; ++a) {
        tuple[0] = a;
        size_t before = out.size();
        search_coefficients(model, tuple, 1, 3 * a - anticanonical_degree,
                            a * a - self_intersection, out);
        if ((a == a_min || a == a_max) && out.size() != before)
            throw internal_error("class search hit the boundary shell a = " + std::to_string(a) +
                                 "; enumeration bound too small");
    }
    return out;
}

inline std::vector<LineClass> compute_lines(const SurfaceModel& model) {
    std::vector<LineClass> lines;
    if (model.kind() == SurfaceKind::Quadric) return lines;  // 2pq = -1 is impossible
    // (3a-1)^2 <= r(a^2+1) forces 0 <= a <= 6; scan one shell wider.
    for (auto& cls : bounded_class_search(model, -1, 1, -1, 7)) lines.push_back(LineClass(cls));
    return lines;
}

inline std::vector<ConicClass> compute_conics(const SurfaceModel& model) {
    std::vector<ConicClass> conics;
    if (model.kind() == SurfaceKind::Quadric) {
        conics.push_back(ConicClass(DivisorClass(model, {0, 1})));
        conics.push_back(ConicClass(DivisorClass(model, {1, 0})));
        return conics;
    }
    // (3a-2)^2 <= r*a^2 forces 0 <= a <= 11; scan one shell wider.
    for (auto& cls : bounded_class_search(model, 0, 2, -1, 12)) conics.push_back(ConicClass(cls));
    return conics;
}

struct ModelCache {
    std::once_flag lines_once;
    std::once_flag conics_once;
    std::vector<LineClass> lines;
    std::vector<ConicClass> conics;
};

inline ModelCache& model_cache(const SurfaceModel& model) {
    static std::array<ModelCache, 10> caches;
    return caches[static_cast<size_t>(model.cache_index())];
}

}  // namespace detail

// All line classes of the model, lexicographically ordered, cached per model.
inline const std::vector<LineClass>& enumerate_lines(const SurfaceModel& model) {
    auto& cache = detail::model_cache(model);
    std::call_once(cache.lines_once, [&] { cache.lines = detail::compute_lines(model); });
    return cache.lines;
}

// All conic classes of the model, lexicographically ordered, cached per model.
inline const std::vector<ConicClass>& enumerate_conics(const SurfaceModel& model) {
    auto& cache = detail::model_cache(model);
    std::call_once(cache.conics_once, [&] { cache.conics = detail::compute_conics(model); });
    return cache.conics;
}

inline bool is_nef(const DivisorClass& D) {
    const SurfaceModel& model = D.model();
    if (model.kind() == SurfaceKind::Quadric) return D.coeff(0) >= 0 && D.coeff(1) >= 0;
    if (model.blowups() == 0) return D.coeff(0) >= 0;
    if (model.blowups() == 1) {
        // Extremal rays of the one-point blow-up: the exceptional curve e1
        // (D.e1 = b1) and the fiber l - e1 (D.(l-e1) = a - b1).  The fiber
        // is not a line, so intersecting against the line list alone would
        // miss it.
        return D.coeff(1) >= 0 && D.coeff(0) - D.coeff(1) >= 0;
    }
    for (const auto& line : enumerate_lines(model))
        if (intersect(D, line.cls) < 0) return false;
    return true;
}

namespace detail {

struct Reduction {
    bool effective = false;
    DivisorClass moving;
    std::vector<std::pair<LineClass, Int>> fixed;
};

// Iteratively subtract (-D.l) * l for lines met negatively, guarded by
// D.(-K) >= 0 after every subtraction.  Each subtraction lowers the
// anticanonical degree by the multiplicity, so the loop terminates, and the
// per-subtraction guard keeps coefficients bounded by the starting degree
// (a between-passes check would let a hopeless class keep growing for a
// whole pass).  An effective class reaches its nef moving part; a
// non-effective class trips the degree guard or stops at a non-nef class
// (possible only on the one-point blow-up).
inline Reduction reduce_to_moving_part(const DivisorClass& D) {
    Reduction result{false, D, {}};
    const SurfaceModel& model = D.model();
    if (model.kind() == SurfaceKind::Quadric) {
        result.effective = D.coeff(0) >= 0 && D.coeff(1) >= 0;
        return result;
    }
    if (model.blowups() == 0) {
        result.effective = D.coeff(0) >= 0;
        return result;
    }
    const auto& lines = enumerate_lines(model);
    DivisorClass cur = D;
    if (curve_degree(cur) < 0) return result;  // not effective
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& line : lines) {
            Int p = intersect(cur, line.cls);
            if (p < 0) {
                cur -= (-p) * line.cls;
                result.fixed.emplace_back(line, -p);
                changed = true;
                if (curve_degree(cur) < 0) return result;  // not effective
            }
        }
    }
    if (curve_degree(cur) < 0 || !is_nef(cur)) return result;
    result.effective = true;
    result.moving = cur;
    return result;
}

}  // namespace detail

inline bool is_effective(const DivisorClass& D) {
    return detail::reduce_to_moving_part(D).effective;
}

// Divisorial base locus: D = moving + sum of fixed lines with multiplicity.
inline FixedPartDecomposition fixed_part(const DivisorClass& D) {
    auto reduction = detail::reduce_to_moving_part(D);
    if (!reduction.effective)
        throw not_effective_error("fixed_part: class " + format_divisor(D) + " on " +
                                  D.model().name() + " is not effective");
    // The extracted lines of an effective class are pairwise disjoint and
    // each line is extracted once; anything else is a bug.
    for (size_t i = 0; i < reduction.fixed.size(); ++i)
        for (size_t j = i + 1; j < reduction.fixed.size(); ++j)
            if (intersect(reduction.fixed[i].first.cls, reduction.fixed[j].first.cls) != 0)
                throw internal_error("fixed lines of effective class " + format_divisor(D) +
                                     " are not pairwise disjoint");
    std::sort(reduction.fixed.begin(), reduction.fixed.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return FixedPartDecomposition{reduction.moving, std::move(reduction.fixed)};
}

// Exact cohomology dimensions.  h0 of an effective class equals chi of its
// nef moving part; h2 is Serre duality; h1 closes the Euler characteristic.
inline Int h0(const DivisorClass& D) {
    auto reduction = detail::reduce_to_moving_part(D);
    if (!reduction.effective) return 0;
    Int value = euler_char(reduction.moving);
    if (value < 1) throw internal_error("chi of nef class " + format_divisor(reduction.moving) +
                                        " is " + std::to_string(value) + " < 1");
    return value;
}

inline Int h2(const DivisorClass& D) { return h0(serre_dual(D)); }

inline Int h1(const DivisorClass& D) {
    Int value = h0(D) + h2(D) - euler_char(D);
    if (value < 0)
        throw internal_error("negative h1 = " + std::to_string(value) + " for class " +
                             format_divisor(D) + " on " + D.model().name());
    return value;
}

// All lines meeting the effective class C in zero, in enumeration order.
inline std::vector<LineClass> disjoint_lines(const DivisorClass& C) {
    if (!is_effective(C))
        throw not_effective_error("disjoint_lines: class " + format_divisor(C) + " on " +
                                  C.model().name() + " is not effective");
    std::vector<LineClass> result;
    for (const auto& line : enumerate_lines(C.model()))
        if (intersect(C, line.cls) == 0) result.push_back(line);
    return result;
}

struct RestrictionDims {
    Int h0_restricted;
    Int h1_restricted;
};

// Dimensions of H^0 and H^1 of the anticanonical bundle restricted to a
// member of |C|, read off the long exact sequence of
// 0 -> O(-K-C) -> O(-K) -> O(-K)|_C -> 0 (h1 and h2 of -K vanish):
//   h0(-K|_C) = h0(-K) - h0(-K-C) + h1(-K-C),   h1(-K|_C) = h2(-K-C).
inline RestrictionDims anticanonical_restriction_dims(const DivisorClass& C) {
    if (!is_effective(C))
        throw not_effective_error("anticanonical_restriction_dims: class " + format_divisor(C) +
                                  " on " + C.model().name() + " is not effective");
    DivisorClass minus_K = -canonical_class(C.model());
    DivisorClass A = minus_K - C;
    Int h0_restricted = h0(minus_K) - h0(A) + h1(A);
    Int h1_restricted = h2(A);
    // Riemann-Roch on the curve: the two dimensions differ by d + 1 - g.
    if (h0_restricted - h1_restricted != curve_degree(C) + 1 - arithmetic_genus(C))
        throw internal_error("restriction dimensions break Riemann-Roch for class " +
                             format_divisor(C));
    return RestrictionDims{h0_restricted, h1_restricted};
}

// Vanishing check h1(-K + 3E - C) = 0 with E the sum of all lines disjoint
// from C; this is the hypothesis under which the reduced obstruction model
// downstream is faithful, exposed as a plain boolean.
inline bool pole_triple_vanishing(const DivisorClass& C) {
    DivisorClass A = -canonical_class(C.model()) - C;
    for (const auto& line : disjoint_lines(C)) A += 3 * line.cls;
    return h1(A) == 0;
}

}  // namespace delpezzo
