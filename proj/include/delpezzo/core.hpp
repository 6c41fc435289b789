#pragma once

// Shared integer arithmetic and error taxonomy for the del Pezzo lattice
// library.  All lattice computations are exact: coefficients are 64-bit,
// intermediate products are accumulated in 128 bits and narrowed with an
// overflow check, so every arithmetic result is either correct or an
// internal_error -- never silently wrapped.

#include <limits>
#include <stdexcept>
#include <string>

namespace delpezzo {

using Int = long long;
using Wide = __int128;

// Raised when the library detects a violated internal invariant (parity of a
// Riemann-Roch quantity, negative h1, overflow, disagreeing cross-checks).
// This always signals a bug, not bad user input; the CLI maps it to exit 2.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Base class for all rejections of user-supplied data; CLI maps it to exit 1.
struct validation_error : std::invalid_argument {
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

struct parse_error : validation_error {
    explicit parse_error(const std::string& what) : validation_error(what) {}
};

// Two divisor classes (or a class and an operation) belong to different
// surface models.
struct model_mismatch_error : validation_error {
    explicit model_mismatch_error(const std::string& what) : validation_error(what) {}
};

// A divisor class required to be effective is not.
struct not_effective_error : validation_error {
    explicit not_effective_error(const std::string& what) : validation_error(what) {}
};

// A curve class has a nonempty divisorial base locus (fixed lines).
struct has_fixed_part_error : validation_error {
    explicit has_fixed_part_error(const std::string& what) : validation_error(what) {}
};

// A curve class fails the smooth-irreducible-member criterion
// (self-intersection <= 0 and not a line or conic class).
struct not_irreducible_error : validation_error {
    explicit not_irreducible_error(const std::string& what) : validation_error(what) {}
};

// A family or model parameter is outside its admissible range.
struct out_of_range_error : validation_error {
    explicit out_of_range_error(const std::string& what) : validation_error(what) {}
};

// Narrow a 128-bit intermediate back to Int, throwing on overflow.  With
// |coefficients| <= 10^6 and rank <= 9 every quadratic-form value fits
// comfortably; the check guards against misuse at larger scales.
inline Int narrow(Wide v, const char* context) {
    constexpr Wide lo = std::numeric_limits<Int>::min();
    constexpr Wide hi = std::numeric_limits<Int>::max();
    if (v < lo || v > hi)
        throw internal_error(std::string("integer overflow in ") + context);
    return static_cast<Int>(v);
}

// Exact division by 2 for Riemann-Roch and adjunction; the relevant parities
// always hold on these lattices, so a remainder is an internal error.
inline Int halve_exact(Wide v, const char* context) {
    if (v % 2 != 0)
        throw internal_error(std::string("odd value where parity is guaranteed in ") + context);
    return narrow(v / 2, context);
}

}  // namespace delpezzo
