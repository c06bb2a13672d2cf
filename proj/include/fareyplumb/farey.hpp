#pragma once

// Slopes of the Farey graph and paths 0/1 < ... < 1/0 through Farey neighbors.

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fareyplumb/integer.hpp"

namespace fareyplumb {

/// A reduced nonnegative rational num/den, or 1/0.
class Slope {
  public:
    /// Validates and stores num/den. Throws std::invalid_argument unless
    /// num, den >= 0, (num, den) != (0, 0) and gcd(num, den) = 1.
    Slope(Int num, Int den);

    static Slope zero() { return Slope(0, 1); }
    static Slope infinity() { return Slope(1, 0); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_infinity() const { return den_ == 0; }

    friend bool operator==(const Slope&, const Slope&) = default;
    friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

  private:
    Int num_;
    Int den_;
};

/// Farey distance |a.num * b.den - a.den * b.num|.
Int distance(const Slope& a, const Slope& b);

/// a < b and distance(a, b) = 1.
bool precedes(const Slope& a, const Slope& b);

/// (a.num + b.num) / (a.den + b.den).
Slope mediant(const Slope& a, const Slope& b);

struct Parents {
    Slope left;
    Slope right;
    friend bool operator==(const Parents&, const Parents&) = default;
};

/// Left and right parents by Stern-Brocot descent. Throws std::invalid_argument
/// for 0/1 and 1/0.
Parents parents(const Slope& s);

enum class PathErrorKind { WrongEndpoints, NotIncreasing, NotNeighbors, NoInteriorSlopes };

class PathError : public std::invalid_argument {
  public:
    PathError(PathErrorKind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    PathErrorKind kind() const { return kind_; }

  private:
    PathErrorKind kind_;
};

/// A validated sequence 0/1 = s_0 < s_1 < ... < s_{n+1} = 1/0 with consecutive
/// slopes Farey neighbors and n >= 1.
class FareyPath {
  public:
    /// Equivalent to validate_path.
    explicit FareyPath(std::vector<Slope> slopes);

    /// Number of interior slopes.
    std::size_t n() const { return slopes_.size() - 2; }
    std::size_t size() const { return slopes_.size(); }
    const Slope& operator[](std::size_t i) const { return slopes_[i]; }
    const std::vector<Slope>& slopes() const { return slopes_; }

    friend bool operator==(const FareyPath&, const FareyPath&) = default;
    friend auto operator<=>(const FareyPath& a, const FareyPath& b) {
        return a.slopes_ <=> b.slopes_;
    }

  private:
    std::vector<Slope> slopes_;
};

FareyPath validate_path(std::vector<Slope> slopes);

/// The path 0/1, 1/1, 2/1, ..., n/1, 1/0.
FareyPath integer_family_path(std::size_t n);

inline constexpr std::size_t kDefaultPathCap = 12;

/// Every Farey path with exactly n interior slopes, in lexicographic order.
/// Built by inserting mediants into the paths for n - 1. Throws
/// std::length_error if n exceeds cap.
std::vector<FareyPath> enumerate_paths(std::size_t n, std::size_t cap = kDefaultPathCap);

// Text forms: "p/q" and comma-separated "0/1,1/1,1/0".
std::string to_string(const Slope& s);
std::string to_string(const FareyPath& p);
Slope parse_slope(std::string_view text);
FareyPath parse_path(std::string_view text);

}  // namespace fareyplumb
