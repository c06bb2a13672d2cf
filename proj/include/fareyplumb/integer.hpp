#pragma once

// Checked 64-bit integer arithmetic and the diagonal lattice vector type.
//
// Every quantity in this library is an exact integer. Overflow is never
// silently wrapped: the helpers below throw OverflowError instead.

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fareyplumb {

using Int = std::int64_t;

class OverflowError : public std::overflow_error {
  public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Int checked_abs(Int a) {
    if (a == INT64_MIN) throw OverflowError("integer overflow in abs");
    return a < 0 ? -a : a;
}

inline Int gcd(Int a, Int b) { return std::gcd(checked_abs(a), checked_abs(b)); }

/// Inverse of a modulo m, for m >= 1 and gcd(a, m) = 1. Result in [0, m).
Int mod_inverse(Int a, Int m);

/// Floor/ceil of a / b for b > 0.
inline Int floor_div(Int a, Int b) { return a / b - ((a % b != 0) && (a < 0)); }
inline Int ceil_div(Int a, Int b) { return a / b + ((a % b != 0) && (a > 0)); }

/// A vector of H_2(#^n CP^2) written in the orthonormal basis e_1..e_n.
/// Coordinates are stored 0-based: coords[0] is the e_1 coefficient.
struct IntVector {
    std::vector<Int> coords;

    IntVector() = default;
    explicit IntVector(std::size_t rank) : coords(rank, 0) {}
    explicit IntVector(std::vector<Int> c) : coords(std::move(c)) {}
    IntVector(std::initializer_list<Int> c) : coords(c) {}

    std::size_t rank() const { return coords.size(); }
    Int& operator[](std::size_t i) { return coords[i]; }
    Int operator[](std::size_t i) const { return coords[i]; }

    bool is_zero() const {
        for (Int c : coords)
            if (c != 0) return false;
        return true;
    }

    IntVector& operator+=(const IntVector& o);
    IntVector& operator-=(const IntVector& o);

    friend bool operator==(const IntVector&, const IntVector&) = default;
    friend auto operator<=>(const IntVector&, const IntVector&) = default;
};

IntVector operator+(IntVector a, const IntVector& b);
IntVector operator-(IntVector a, const IntVector& b);
IntVector operator*(Int s, const IntVector& v);

/// Standard positive-definite pairing sum_i a_i b_i.
Int dot(const IntVector& a, const IntVector& b);

inline Int norm(const IntVector& a) { return dot(a, a); }

/// Unit vector e_{index+1} in a lattice of the given rank.
IntVector unit(std::size_t rank, std::size_t index);

std::string to_string(const IntVector& v);

}  // namespace fareyplumb
