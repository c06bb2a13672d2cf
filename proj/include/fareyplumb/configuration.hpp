#pragma once

// Homological model of the ring of n+2 spheres Sigma_0..Sigma_{n+1} in
// #^n CP^2 attached to a Farey path.
//
// Interior slope i (1 <= i <= n) owns the basis vector e_i. The pairing
// e_i . [Sigma_j] is -1 on the diagonal, +1 when slope j is a parent of
// slope i, and 0 otherwise; sphere classes are read off that table and the
// Gram identities are then checked against the ring's intersection pattern.
// The complement of the ring is T^2 x D^2, with meridian gamma_i equal to
// q_i gamma_0 + p_i gamma_{n+1}; only the coefficient pairs are kept here.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fareyplumb/farey.hpp"
#include "fareyplumb/integer.hpp"

namespace fareyplumb {

/// Raised when a constructed configuration violates one of its identities.
/// This indicates a defect in the construction, never bad user input.
class ConfigurationDefect : public std::logic_error {
  public:
    explicit ConfigurationDefect(const std::string& what) : std::logic_error(what) {}
};

struct MeridianCoeffs {
    Int q;
    Int p;
    friend bool operator==(const MeridianCoeffs&, const MeridianCoeffs&) = default;
};

class RingConfiguration {
  public:
    const FareyPath& path() const { return path_; }
    std::size_t n() const { return path_.n(); }
    /// Number of spheres, n + 2.
    std::size_t sphere_count() const { return path_.size(); }

    /// Sigma_j . Sigma_j for 0 <= j <= n+1.
    const std::vector<Int>& squares() const { return squares_; }
    /// e_i . [Sigma_j] for 1 <= i <= n, 0 <= j <= n+1.
    Int pairing(std::size_t i, std::size_t j) const { return classes_.at(j)[i - 1]; }
    /// [Sigma_j] in the e-basis.
    const IntVector& sphere_class(std::size_t j) const { return classes_.at(j); }
    const std::vector<IntVector>& classes() const { return classes_; }
    /// w_0..w_{n+1}; w_0 = w_{n+1} = 0.
    const IntVector& w(std::size_t i) const { return w_.at(i); }
    const std::vector<IntVector>& w_vectors() const { return w_; }
    const std::vector<MeridianCoeffs>& meridian_coeffs() const { return meridians_; }

    /// Index in the path of the left and right parents of interior slope i.
    std::pair<std::size_t, std::size_t> parent_indices(std::size_t i) const { return parent_index_.at(i); }

    /// Re-checks every identity of the configuration and throws
    /// ConfigurationDefect naming the first violated one.
    void verify() const;

  private:
    friend RingConfiguration build(const FareyPath& path);
    explicit RingConfiguration(FareyPath path) : path_(std::move(path)) {}

    FareyPath path_;
    std::vector<Int> squares_;
    std::vector<IntVector> classes_;
    std::vector<IntVector> w_;
    std::vector<MeridianCoeffs> meridians_;
    std::vector<std::pair<std::size_t, std::size_t>> parent_index_;
};

/// Builds and verifies the configuration for a path.
RingConfiguration build(const FareyPath& path);

/// Nonzero coordinates of w_i sorted increasingly, for 1 <= i <= n.
std::vector<Int> weight_components(const RingConfiguration& config, std::size_t i);

}  // namespace fareyplumb
