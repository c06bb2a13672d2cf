#pragma once

// Changemaker vectors and the search deciding whether a linear lattice is
// isomorphic to the orthogonal complement of a changemaker in Z^N.
//
// A vector is a changemaker when its absolute values, sorted increasingly,
// satisfy s_i <= 1 + s_1 + ... + s_{i-1}. If L(p, q) is positive integer
// surgery on a knot, the linear lattice of L(p, q) is the orthogonal
// complement of a changemaker of norm p in Z^{rank+1}.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fareyplumb/integer.hpp"
#include "fareyplumb/lens.hpp"
#include "fareyplumb/matrix.hpp"

namespace fareyplumb {

bool is_changemaker(const IntVector& v);

/// Sorted absolute values of v.
std::vector<Int> normalized_entries(const IntVector& v);

/// Where the changemaker condition first fails in the sorted absolute values.
struct ChangemakerViolation {
    std::vector<Int> sorted;
    std::size_t index;  // 0-based position in sorted
    Int value;
    Int bound;          // 1 + sum of the earlier entries
};

std::optional<ChangemakerViolation> changemaker_violation(const IntVector& v);

/// Checks that the closed-form sigma of the integer-slope family at (n, k)
/// is not a changemaker; requires 1 < k < n. Returns the violation found,
/// or nullopt if sigma turned out to be a changemaker.
std::optional<ChangemakerViolation> family_not_changemaker(std::size_t n, std::size_t k);

inline constexpr Int kDefaultMaxP = 600;
inline constexpr std::uint64_t kDefaultMaxNodes = 200'000'000;

/// Nondecreasing nonnegative changemakers of length N with sum of squares p,
/// in lexicographic order. Throws std::length_error if p > max_p.
std::vector<IntVector> enumerate_changemakers(Int p, std::size_t length, Int max_p = kDefaultMaxP);

/// Integral basis of the orthogonal complement of a primitive sigma.
/// Throws std::invalid_argument if sigma is zero or not primitive.
std::vector<IntVector> complement_basis(const IntVector& sigma);
IntMatrix complement_gram(const IntVector& sigma);

struct EmbeddingCertificate {
    IntVector sigma;
    std::vector<IntVector> vectors;
};

/// Independent re-check: sigma is a changemaker with norm det(target),
/// every vector is orthogonal to sigma, and the Gram matrix equals the target's.
bool certificate_valid(const EmbeddingCertificate& cert, const LinearLattice& target);

enum class SearchStatus { Embedded, Exhausted, CapExceeded };

struct SearchLimits {
    Int max_p = kDefaultMaxP;
    std::uint64_t max_nodes = kDefaultMaxNodes;
};

struct EmbeddingResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<EmbeddingCertificate> certificate;
    std::uint64_t nodes = 0;
    /// Number of changemakers examined.
    std::size_t candidates = 0;
};

class SearchInputError : public std::invalid_argument {
  public:
    explicit SearchInputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Searches all changemakers sigma in Z^{rank+1} of norm p for vectors
/// orthogonal to sigma realizing target's Gram matrix. Requires det(target) = p.
EmbeddingResult embeds_as_changemaker_complement(const LinearLattice& target, Int p, const SearchLimits& limits = {});

/// The same search restricted to one sigma.
EmbeddingResult embeds_in_complement_of(const LinearLattice& target, const IntVector& sigma, const SearchLimits& limits = {});

enum class Verdict { Realizable, Obstructed, Inconclusive };

struct OrientationResult {
    Int q;
    Chain chain;
    EmbeddingResult result;
};

struct ObstructionReport {
    LensSpace lens;
    Verdict verdict;
    /// One entry per member of the lens space's q_set.
    std::vector<OrientationResult> orientations;
};

/// Runs the changemaker-complement search on the lattices of both members
/// of q_set for the boundary of a positive-definite chain. Obstructed iff
/// every search is exhausted without finding an embedding.
ObstructionReport surgery_obstruction(const Chain& chain, const SearchLimits& limits = {});
ObstructionReport surgery_obstruction(const LensSpace& lens, const SearchLimits& limits = {});

std::string to_string(Verdict v);
std::string to_string(SearchStatus s);

}  // namespace fareyplumb
