#pragma once

// Exact integer model of the Picard lattice of every surface that occurs as
// a smooth hyperplane section of a del Pezzo 3-fold:
//
//   * BlowUpP2(r), 0 <= r <= 8: the plane blown up in r general points.
//     Pic has basis (l, e_1, ..., e_r) with l^2 = 1, e_i^2 = -1, mixed
//     products 0.  A class a*l - sum_i b_i*e_i is stored and printed as the
//     tuple (a; b_1, ..., b_r); note the sign convention, under which the
//     i-th exceptional curve e_i is the tuple with b_i = -1.  The canonical
//     class is K = (-3; -1, ..., -1) and the surface degree is K^2 = 9 - r.
//   * Quadric: P^1 x P^1 with basis the two rulings f_1, f_2, f_i^2 = 0,
//     f_1.f_2 = 1; a class p*f_1 + q*f_2 is the bidegree (p, q) and
//     K = (-2, -2), K^2 = 8.
//
// Everything here is a pure function over immutable values.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "delpezzo/core.hpp"

namespace delpezzo {

enum class SurfaceKind { BlowUpP2, Quadric };

class SurfaceModel {
public:
    static SurfaceModel blow_up_p2(int blowups) {
        if (blowups < 0 || blowups > 8)
            throw out_of_range_error("BlowUpP2 blow-up count must be in 0..8, got " +
                                     std::to_string(blowups));
        return SurfaceModel(SurfaceKind::BlowUpP2, blowups);
    }

    static SurfaceModel quadric() { return SurfaceModel(SurfaceKind::Quadric, 0); }

    SurfaceKind kind() const { return kind_; }

    // Number r of blown-up points; only meaningful for BlowUpP2.
    int blowups() const { return blowups_; }

    // Rank of the Picard lattice: r+1 for BlowUpP2, 2 for the quadric.
    int rank() const { return kind_ == SurfaceKind::Quadric ? 2 : blowups_ + 1; }

    // Degree K^2: 9-r for BlowUpP2, 8 for the quadric.
    int degree() const { return kind_ == SurfaceKind::Quadric ? 8 : 9 - blowups_; }

    // Stable small index (0..9) used for per-model caches.
    int cache_index() const { return kind_ == SurfaceKind::Quadric ? 9 : blowups_; }

    friend bool operator==(const SurfaceModel& x, const SurfaceModel& y) {
        return x.kind_ == y.kind_ && x.blowups_ == y.blowups_;
    }
    friend bool operator!=(const SurfaceModel& x, const SurfaceModel& y) { return !(x == y); }

    std::string name() const {
        if (kind_ == SurfaceKind::Quadric) return "Quadric";
        return "BlowUpP2(" + std::to_string(blowups_) + ")";
    }

private:
    SurfaceModel(SurfaceKind kind, int blowups) : kind_(kind), blowups_(blowups) {}

    SurfaceKind kind_;
    int blowups_;
};

class DivisorClass {
public:
    DivisorClass(const SurfaceModel& model, std::vector<Int> coeffs)
        : model_(model), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != model_.rank())
            throw model_mismatch_error("coefficient vector of length " +
                                       std::to_string(coeffs_.size()) + " does not match rank " +
                                       std::to_string(model_.rank()) + " of " + model_.name());
    }

    static DivisorClass zero(const SurfaceModel& model) {
        return DivisorClass(model, std::vector<Int>(model.rank(), 0));
    }

    const SurfaceModel& model() const { return model_; }
    int rank() const { return static_cast<int>(coeffs_.size()); }
    Int coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    DivisorClass& operator+=(const DivisorClass& other) {
        require_same_model(other, "+");
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
        return *this;
    }
    DivisorClass& operator-=(const DivisorClass& other) {
        require_same_model(other, "-");
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
        return *this;
    }
    DivisorClass& operator*=(Int scalar) {
        for (auto& c : coeffs_) c = narrow(static_cast<Wide>(c) * scalar, "scalar multiple");
        return *this;
    }

    friend DivisorClass operator+(DivisorClass x, const DivisorClass& y) { return x += y; }
    friend DivisorClass operator-(DivisorClass x, const DivisorClass& y) { return x -= y; }
    friend DivisorClass operator*(Int scalar, DivisorClass x) { return x *= scalar; }
    friend DivisorClass operator-(DivisorClass x) {
        for (auto& c : x.coeffs_) c = -c;
        return x;
    }

    friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
        return x.model_ == y.model_ && x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const DivisorClass& x, const DivisorClass& y) { return !(x == y); }

    // Lexicographic order on the coefficient tuple; used for deterministic
    // enumeration order and ordered containers.  Only defined within a model.
    friend bool operator<(const DivisorClass& x, const DivisorClass& y) {
        x.require_same_model(y, "<");
        return x.coeffs_ < y.coeffs_;
    }

private:
    void require_same_model(const DivisorClass& other, const char* op) const {
        if (model_ != other.model_)
            throw model_mismatch_error(std::string("divisor classes on ") + model_.name() +
                                       " and " + other.model_.name() + " mixed in '" + op + "'");
    }

    SurfaceModel model_;
    std::vector<Int> coeffs_;
};

// The canonical class of a model together with its anticanonical partner.
struct CanonicalData {
    DivisorClass K;
    DivisorClass minus_K;
    Int degree;  // K.K, equal to the model degree
};

// Symmetric bilinear intersection form.
inline Int intersect(const DivisorClass& D1, const DivisorClass& D2) {
    if (D1.model() != D2.model())
        throw model_mismatch_error("intersect: divisor classes on " + D1.model().name() +
                                   " and " + D2.model().name());
    if (D1.model().kind() == SurfaceKind::Quadric) {
        Wide v = static_cast<Wide>(D1.coeff(0)) * D2.coeff(1) +
                 static_cast<Wide>(D1.coeff(1)) * D2.coeff(0);
        return narrow(v, "intersect");
    }
    Wide v = static_cast<Wide>(D1.coeff(0)) * D2.coeff(0);
    for (int i = 1; i < D1.rank(); ++i) v -= static_cast<Wide>(D1.coeff(i)) * D2.coeff(i);
    return narrow(v, "intersect");
}

inline DivisorClass canonical_class(const SurfaceModel& model) {
    if (model.kind() == SurfaceKind::Quadric) return DivisorClass(model, {-2, -2});
    std::vector<Int> c(static_cast<size_t>(model.rank()), -1);
    c[0] = -3;
    return DivisorClass(model, std::move(c));
}

inline CanonicalData canonical_data(const SurfaceModel& model) {
    DivisorClass K = canonical_class(model);
    Int deg = intersect(K, K);
    if (deg != model.degree())
        throw internal_error("K.K = " + std::to_string(deg) + " differs from model degree " +
                             std::to_string(model.degree()));
    return CanonicalData{K, -K, deg};
}

// Riemann-Roch Euler characteristic chi(D) = D.(D-K)/2 + 1.
inline Int euler_char(const DivisorClass& D) {
    DivisorClass DmK = D - canonical_class(D.model());
    Wide v = intersect(D, DmK);
    return halve_exact(v, "euler_char") + 1;
}

// Degree of a curve class with respect to the anticanonical polarization,
// d = C.(-K); this equals the degree of the curve in the ambient 3-fold.
inline Int curve_degree(const DivisorClass& C) {
    return -intersect(C, canonical_class(C.model()));
}

// Adjunction: g = C.(C+K)/2 + 1 (may be negative for non-curve classes).
inline Int arithmetic_genus(const DivisorClass& C) {
    DivisorClass CpK = C + canonical_class(C.model());
    Wide v = intersect(C, CpK);
    return halve_exact(v, "arithmetic_genus") + 1;
}

// Serre duality partner K - D.
inline DivisorClass serre_dual(const DivisorClass& D) {
    return canonical_class(D.model()) - D;
}

namespace detail {

inline Int parse_int_token(std::string_view token, std::string_view whole) {
    Int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || token.empty())
        throw parse_error("invalid integer '" + std::string(token) + "' in divisor class '" +
                          std::string(whole) + "'");
    return value;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace detail

// Text format: "a;b1,b2,...,br" on BlowUpP2 (just "a" when r = 0) and "p,q"
// on the quadric.  ASCII, signed decimal integers, no interior spaces.
inline DivisorClass parse_divisor(const SurfaceModel& model, std::string_view text) {
    if (model.kind() == SurfaceKind::Quadric) {
        auto parts = detail::split(text, ',');
        if (parts.size() != 2)
            throw parse_error("expected bidegree 'p,q' on the quadric, got '" +
                              std::string(text) + "'");
        return DivisorClass(model, {detail::parse_int_token(parts[0], text),
                                    detail::parse_int_token(parts[1], text)});
    }
    int r = model.blowups();
    auto halves = detail::split(text, ';');
    if (halves.size() > 2)
        throw parse_error("more than one ';' in divisor class '" + std::string(text) + "'");
    std::vector<Int> coeffs;
    coeffs.reserve(static_cast<size_t>(r) + 1);
    coeffs.push_back(detail::parse_int_token(halves[0], text));
    if (halves.size() == 2 && !(r == 0 && halves[1].empty())) {
        for (auto part : detail::split(halves[1], ','))
            coeffs.push_back(detail::parse_int_token(part, text));
    }
    if (static_cast<int>(coeffs.size()) != r + 1)
        throw parse_error("divisor class '" + std::string(text) + "' has " +
                          std::to_string(coeffs.size() - 1) + " blow-up coefficients, expected " +
                          std::to_string(r) + " on " + model.name());
    return DivisorClass(model, std::move(coeffs));
}

inline std::string format_divisor(const DivisorClass& D) {
    std::string out;
    if (D.model().kind() == SurfaceKind::Quadric) {
        out = std::to_string(D.coeff(0)) + "," + std::to_string(D.coeff(1));
        return out;
    }
    out = std::to_string(D.coeff(0));
    if (D.rank() > 1) {
        out += ';';
        for (int i = 1; i < D.rank(); ++i) {
            if (i > 1) out += ',';
            out += std::to_string(D.coeff(i));
        }
    }
    return out;
}

}  // namespace delpezzo
