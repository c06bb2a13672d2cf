#pragma once

// Minus (Hirzebruch-Jung) continued fractions, lens spaces and the
// tridiagonal lattices of linear plumbings.
//
//   [c_1, ..., c_m] = c_1 - 1/(c_2 - 1/(... - 1/c_m))
//
// A linear chain of spheres with squares c_1..c_m has boundary L(p, q) where
// p/q = [c_1, ..., c_m]; the chain's Gram matrix has determinant p.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fareyplumb/integer.hpp"
#include "fareyplumb/matrix.hpp"

namespace fareyplumb {

/// Squares c_1..c_m of a linear plumbing; all entries >= 1, m >= 1.
class Chain {
  public:
    explicit Chain(std::vector<Int> entries);

    const std::vector<Int>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    Int operator[](std::size_t i) const { return entries_[i]; }

    Chain reversed() const;

    friend bool operator==(const Chain&, const Chain&) = default;
    friend auto operator<=>(const Chain&, const Chain&) = default;

  private:
    std::vector<Int> entries_;
};

class DegenerateChain : public std::domain_error {
  public:
    explicit DegenerateChain(const std::string& what) : std::domain_error(what) {}
};

struct Fraction {
    Int p;
    Int q;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Right-to-left evaluation. The result is reduced with q > 0. Throws
/// DegenerateChain if an intermediate denominator vanishes.
Fraction cf_evaluate(const Chain& chain);

/// True iff the chain's Gram matrix is positive definite, i.e. every
/// trailing partial fraction is positive.
bool is_positive_definite(const Chain& chain);

/// Unique expansion with all entries >= 2. Requires p > q >= 1, gcd = 1.
Chain cf_expand(Int p, Int q);

/// L(p, q) together with q^{-1} mod p. L(p, q) and L(p, q^{-1}) are the same
/// oriented manifold; L(p, p - q) is its mirror and compares unequal.
class LensSpace {
  public:
    LensSpace(Int p, Int q);

    Int p() const { return p_; }
    Int q() const { return q_; }
    Int q_inverse() const { return q_inv_; }
    /// {q, q^{-1}} in increasing order (one element when they agree).
    std::vector<Int> q_set() const;
    bool contains(Int q) const;

    /// Orientation reversal, L(p, p - q).
    LensSpace reversed() const { return LensSpace(p_, p_ - q_); }

    friend bool operator==(const LensSpace& a, const LensSpace& b) {
        return a.p_ == b.p_ && a.q_set() == b.q_set();
    }

  private:
    Int p_;
    Int q_;
    Int q_inv_;
};

LensSpace lens_canonical(Int p, Int q);

/// Positive-definite tridiagonal lattice of a chain: diagonal c_i,
/// off-diagonal -1.
class LinearLattice {
  public:
    explicit LinearLattice(Chain chain);
    /// Lattice of cf_expand(p, q).
    LinearLattice(Int p, Int q);

    const Chain& chain() const { return chain_; }
    std::size_t rank() const { return chain_.size(); }
    IntMatrix gram() const;
    Int gram_entry(std::size_t a, std::size_t b) const;
    /// Determinant, computed by elimination from the top-left corner.
    Int det() const { return det_; }

  private:
    Chain chain_;
    Int det_;
};

struct FamilyLens {
    Int p;
    Int q;
};

/// The closed form (16n^2k - 16nk^2 - 12n^2 + 4k^2 + 8n - 2,
/// 16nk - 16k^2 - 12n + 4k + 5) for the integer-slope family. Requires
/// 1 < k < n and gcd(2k - 1, 2n - 1) = 1.
FamilyLens family_lens(Int n, Int k);

bool family_parameters_valid(Int n, Int k);

// Text forms "6,5,4" and "L(110,19)".
std::string to_string(const Chain& c);
std::string to_string(const LensSpace& l);
Chain parse_chain(std::string_view text);
LensSpace parse_lens(std::string_view text);

}  // namespace fareyplumb
