#pragma once

// Delete Sigma_0 from a ring configuration and smooth the intersections of
// Sigma_i with Sigma_{i+1} and of Sigma_j with Sigma_{j+1}, after
// reorienting so those intersections have signs eps_i and eps_j. The result
// is a linear chain of n - 1 spheres whose complement has b_2 = 1; sigma
// generates the image of the complement's second homology.

#include <stdexcept>
#include <string>
#include <vector>

#include "fareyplumb/configuration.hpp"
#include "fareyplumb/integer.hpp"

namespace fareyplumb {

struct SmoothingSpec {
    std::size_t i = 0;
    int eps_i = 1;
    std::size_t j = 0;
    int eps_j = 1;

    friend bool operator==(const SmoothingSpec&, const SmoothingSpec&) = default;
    friend auto operator<=>(const SmoothingSpec&, const SmoothingSpec&) = default;
};

/// Requires 1 <= i < j, j + 1 <= n + 1 and eps in {-1, +1}. When j = i + 1
/// the two pairs share Sigma_j and three spheres merge into one.
bool spec_valid(const SmoothingSpec& spec, std::size_t n);

struct SmoothedChain {
    /// Squares of the linear plumbing, in path order.
    std::vector<Int> chain;
    IntVector sigma;
    /// a = p_i + eps_i p_{i+1}, b = p_j + eps_j p_{j+1}.
    Int a = 0;
    Int b = 0;
    /// gcd(|a|, |b|) = 1.
    bool simply_connected = false;
};

class InvalidSmoothing : public std::invalid_argument {
  public:
    explicit InvalidSmoothing(const std::string& what) : std::invalid_argument(what) {}
};

/// A merged sphere would have square <= 0.
class DegenerateSmoothing : public std::domain_error {
  public:
    explicit DegenerateSmoothing(const std::string& what) : std::domain_error(what) {}
};

SmoothedChain smooth(const RingConfiguration& config, const SmoothingSpec& spec);

/// Valid specs with disjoint pairs (i + 1 < j), or all valid specs when
/// include_adjacent is set; ordered by (i, j, eps_i, eps_j) with eps = +1 first.
std::vector<SmoothingSpec> enumerate_smoothings(const RingConfiguration& config, bool include_adjacent = false);

/// Closed-form sigma for the path 0/1, 1/1, ..., n/1, 1/0 smoothed at
/// (k-1, k) and (n-1, n) with positive signs.
IntVector family_sigma(std::size_t n, std::size_t k);

/// Squares 2^{k-2}, 6, 2^{n-k-2}, 5, n of the same smoothing; for k = n - 1
/// the pairs are adjacent and the chain is 2^{k-2}, 9, n.
std::vector<Int> family_chain(std::size_t n, std::size_t k);

std::string to_string(const SmoothingSpec& s);
SmoothingSpec parse_spec(std::string_view text);

}  // namespace fareyplumb
