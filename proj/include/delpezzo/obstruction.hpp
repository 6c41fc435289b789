#pragma once

// Finite-dimensional model of the reduced obstruction map for a curve C on a
// hyperplane section S, relative to the set E = l_1 + ... + l_m of lines
// disjoint from C.  The space of first-order deformations with a pole along
// E, modulo deformations regular on all of S, is m-dimensional with one basis
// vector per component of E; on that space the obstruction is equivalent to
// the diagonal quadratic map
//
//     (c_1, ..., c_m)  |-->  (c_1^2, ..., c_m^2)
//
// in the coordinates attached to *good* lines (trivial normal bundle in the
// ambient 3-fold).  For a bad line the connecting map may vanish, so its
// component is conservatively modeled as 0; downstream consumers treat that
// as inconclusive rather than as a proof of unobstructedness.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "delpezzo/core.hpp"

namespace delpezzo {

enum class LineQuality { Good, Bad };

// Exact rational number with normalized sign and lowest terms.
struct Rational {
    Int num = 0;
    Int den = 1;

    Rational() = default;
    Rational(Int n) : num(n), den(1) {}
    Rational(Int n, Int d) : num(n), den(d) {
        if (den == 0) throw validation_error("rational with zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Int g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    friend Rational operator*(const Rational& x, const Rational& y) {
        Wide n = static_cast<Wide>(x.num) * y.num;
        Wide d = static_cast<Wide>(x.den) * y.den;
        return Rational(narrow(n, "rational product"), narrow(d, "rational product"));
    }
    friend Rational operator+(const Rational& x, const Rational& y) {
        Wide n = static_cast<Wide>(x.num) * y.den + static_cast<Wide>(y.num) * x.den;
        Wide d = static_cast<Wide>(x.den) * y.den;
        return Rational(narrow(n, "rational sum"), narrow(d, "rational sum"));
    }
    friend Rational operator-(const Rational& x) { return Rational(-x.num, x.den); }
    friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num == y.num && x.den == y.den;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }

    bool is_zero() const { return num == 0; }

    std::string to_string() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// The m-dimensional coefficient space, one basis label per disjoint line.
struct PoleSectionSpace {
    int m = 0;

    explicit PoleSectionSpace(int components) : m(components) {
        if (m < 0) throw validation_error("pole section space with negative dimension");
    }

    std::string basis_label(int i) const { return "v" + std::to_string(i + 1); }
};

// A deformation section with pole coefficients (c_1, ..., c_m) along E.
struct PoleSection {
    PoleSectionSpace space;
    std::vector<Rational> coeffs;

    PoleSection(PoleSectionSpace s, std::vector<Rational> c) : space(s), coeffs(std::move(c)) {
        if (static_cast<int>(coeffs.size()) != space.m)
            throw validation_error("pole section has " + std::to_string(coeffs.size()) +
                                   " coefficients, space dimension is " +
                                   std::to_string(space.m));
    }
};

// Value of the reduced obstruction map, one component per line of E.
struct ObstructionValue {
    std::vector<Rational> components;

    bool is_zero() const {
        for (const auto& c : components)
            if (!c.is_zero()) return false;
        return true;
    }

    friend bool operator==(const ObstructionValue& x, const ObstructionValue& y) {
        return x.components == y.components;
    }
};

// An opaque stand-in for a perturbation of the section by a deformation that
// is regular on all of S (no pole along E).  Such a summand changes none of
// the pole coefficients, which is exactly the translation invariance of the
// reduced obstruction.
struct RegularPerturbation {
    std::uint64_t token = 0;
};

inline ObstructionValue reduced_obstruction(const PoleSection& v,
                                            const std::vector<LineQuality>& quality) {
    if (static_cast<int>(quality.size()) != v.space.m)
        throw validation_error("quality vector length " + std::to_string(quality.size()) +
                               " does not match pole space dimension " +
                               std::to_string(v.space.m));
    ObstructionValue value;
    value.components.reserve(v.coeffs.size());
    for (size_t i = 0; i < v.coeffs.size(); ++i) {
        if (quality[i] == LineQuality::Good)
            value.components.push_back(v.coeffs[i] * v.coeffs[i]);
        else
            value.components.push_back(Rational(0));
    }
    return value;
}

// The reduced obstruction kills no nonzero section exactly when every line is
// good; a bad coordinate direction maps to 0.
inline bool is_injective_reduced_obstruction(const PoleSectionSpace& space,
                                             const std::vector<LineQuality>& quality) {
    if (static_cast<int>(quality.size()) != space.m)
        throw validation_error("quality vector length " + std::to_string(quality.size()) +
                               " does not match pole space dimension " + std::to_string(space.m));
    for (auto q : quality)
        if (q == LineQuality::Bad) return false;
    return true;
}

// ob(v + v')|_E = ob(v)|_E for any regular v': the perturbed section has the
// same pole coefficients, so the two evaluations must agree componentwise.
// The quality flags drop out of the comparison, so the all-good evaluation is
// used on both sides.
inline bool translation_invariance_check(const PoleSection& v, RegularPerturbation perturbation) {
    PoleSection perturbed(v.space, v.coeffs);  // pole part unchanged by construction
    (void)perturbation;
    std::vector<LineQuality> all_good(static_cast<size_t>(v.space.m), LineQuality::Good);
    return reduced_obstruction(perturbed, all_good) == reduced_obstruction(v, all_good);
}

}  // namespace delpezzo
