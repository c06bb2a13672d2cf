#pragma once

// Spheres of large square in #^n CP^2 and the supporting combinatorics:
// the smoothed ring sphere of square 5n - 1, twist-knot concordance
// squares, characteristic classes, and induced paths in the subdivided
// Petersen graph.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fareyplumb/configuration.hpp"
#include "fareyplumb/integer.hpp"

namespace fareyplumb {

struct SmoothedSphere {
    /// Index of the removed square-1 sphere.
    std::size_t removed;
    /// Class of the smoothed sphere in the e-basis.
    IntVector sphere_class;
    Int square;
};

/// For every square-1 sphere: remove it, orient the other n + 1 spheres so
/// consecutive intersections are positive, and smooth all n intersections.
std::vector<SmoothedSphere> smoothed_spheres(const RingConfiguration& config);

/// Square of the fully smoothed sphere; throws ConfigurationDefect if no
/// square-1 sphere exists or the choices disagree.
Int max_smoothed_square(const RingConfiguration& config);

/// Square of the concordance annulus from K_n to K_0 through n punctured
/// copies of CP^2: the step K_m -> K_{m-1} contributes 1 if m is even and 9
/// if m is odd.
Int twist_concordance_square(Int n);

/// Every coordinate odd.
bool is_characteristic(const IntVector& v);

/// True iff no nonzero x with x.x < |x.S| <= t exists.
bool pairing_bound_check(const IntVector& s, Int t);

class SimpleGraph {
  public:
    explicit SimpleGraph(std::size_t vertex_count) : adj_(vertex_count) {}

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    /// Throws std::invalid_argument on loops, duplicates or bad indices.
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const;
    /// Sorted neighbour list.
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
    std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  private:
    std::vector<std::vector<std::size_t>> adj_;
    std::size_t edge_count_ = 0;
};

/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5+i -- 5+(i+2)%5.
SimpleGraph petersen();

/// Petersen graph with vertex 10 + e inserted into its e-th edge (edges in
/// sorted order).
SimpleGraph subdivided_petersen();

bool is_bipartite(const SimpleGraph& g);

/// Lexicographically least sequence of len vertices forming an induced path.
std::optional<std::vector<std::size_t>> find_induced_path(const SimpleGraph& g, std::size_t len);

/// Number of induced paths on len vertices, each counted once (not per direction).
std::uint64_t count_induced_paths(const SimpleGraph& g, std::size_t len);

bool is_induced_path(const SimpleGraph& g, const std::vector<std::size_t>& path);

// Edge-list text: first line is the vertex count, then one "u v" per line;
// blank lines and lines starting with '#' are ignored.
SimpleGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const SimpleGraph& g);

}  // namespace fareyplumb
