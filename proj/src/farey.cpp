#include "fareyplumb/farey.hpp"

#include <charconv>
#include <set>

#include "text.hpp"

namespace fareyplumb {

Slope::Slope(Int num, Int den) : num_(num), den_(den) {
    if (num < 0 || den < 0) throw std::invalid_argument("slope: negative entries");
    if (num == 0 && den == 0) throw std::invalid_argument("slope: 0/0");
    if (gcd(num, den) != 1) throw std::invalid_argument("slope: not reduced");
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
}

Int distance(const Slope& a, const Slope& b) {
    return checked_abs(checked_sub(checked_mul(a.num(), b.den()), checked_mul(a.den(), b.num())));
}

bool precedes(const Slope& a, const Slope& b) { return a < b && distance(a, b) == 1; }

Slope mediant(const Slope& a, const Slope& b) {
    return Slope(checked_add(a.num(), b.num()), checked_add(a.den(), b.den()));
}

Parents parents(const Slope& s) {
    if (s.is_zero() || s.is_infinity()) throw std::invalid_argument("parents: 0/1 and 1/0 have no parents");
    Slope left = Slope::zero();
    Slope right = Slope::infinity();
    // Consecutive descent steps in one direction are taken as a single jump.
    for (;;) {
        Slope m = mediant(left, right);
        if (m == s) return {left, right};
        // above > 0 since left < s, below > 0 since s < right.
        Int above = checked_sub(checked_mul(s.num(), left.den()), checked_mul(s.den(), left.num()));
        Int below = checked_sub(checked_mul(s.den(), right.num()), checked_mul(s.num(), right.den()));
        if (s < m) {
            Int k = (below - 1) / above;
            right = Slope(checked_add(checked_mul(k, left.num()), right.num()),
                          checked_add(checked_mul(k, left.den()), right.den()));
        } else {
            Int k = (above - 1) / below;
            left = Slope(checked_add(left.num(), checked_mul(k, right.num())),
                         checked_add(left.den(), checked_mul(k, right.den())));
        }
    }
}

FareyPath::FareyPath(std::vector<Slope> slopes) : slopes_(std::move(slopes)) {
    if (slopes_.size() < 2 || slopes_.front() != Slope::zero() || slopes_.back() != Slope::infinity())
        throw PathError(PathErrorKind::WrongEndpoints, "path must start at 0/1 and end at 1/0");
    for (std::size_t i = 0; i + 1 < slopes_.size(); ++i) {
        if (!(slopes_[i] < slopes_[i + 1]))
            throw PathError(PathErrorKind::NotIncreasing,
                            "path not increasing at " + to_string(slopes_[i]) + ", " + to_string(slopes_[i + 1]));
        if (distance(slopes_[i], slopes_[i + 1]) != 1)
            throw PathError(PathErrorKind::NotNeighbors,
                            "not Farey neighbors: " + to_string(slopes_[i]) + ", " + to_string(slopes_[i + 1]));
    }
    if (slopes_.size() == 2) throw PathError(PathErrorKind::NoInteriorSlopes, "path needs at least one interior slope");
}

FareyPath validate_path(std::vector<Slope> slopes) { return FareyPath(std::move(slopes)); }

FareyPath integer_family_path(std::size_t n) {
    std::vector<Slope> s;
    s.reserve(n + 2);
    for (std::size_t k = 0; k <= n; ++k) s.emplace_back(static_cast<Int>(k), 1);
    s.push_back(Slope::infinity());
    return FareyPath(std::move(s));
}

std::vector<FareyPath> enumerate_paths(std::size_t n, std::size_t cap) {
    if (n < 1) throw std::invalid_argument("enumerate_paths: n must be at least 1");
    if (n > cap) throw std::length_error("enumerate_paths: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    // A path is a sorted slope sequence, so the sequence itself is the
    // canonical form; the set removes paths reached by different insertion orders.
    std::set<std::vector<Slope>> level{{Slope::zero(), Slope::infinity()}};
    for (std::size_t step = 0; step < n; ++step) {
        std::set<std::vector<Slope>> next;
        for (const auto& path : level) {
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                std::vector<Slope> grown;
                grown.reserve(path.size() + 1);
                grown.insert(grown.end(), path.begin(), path.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                grown.push_back(mediant(path[i], path[i + 1]));
                grown.insert(grown.end(), path.begin() + static_cast<std::ptrdiff_t>(i) + 1, path.end());
                next.insert(std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<FareyPath> out;
    out.reserve(level.size());
    for (const auto& p : level) out.emplace_back(p);
    return out;
}

std::string to_string(const Slope& s) { return std::to_string(s.num()) + "/" + std::to_string(s.den()); }

std::string to_string(const FareyPath& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += to_string(p[i]);
    }
    return out;
}

Slope parse_slope(std::string_view text) {
    text = detail::trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) throw std::invalid_argument("slope must look like p/q: '" + std::string(text) + "'");
    Int num = detail::parse_int(text.substr(0, slash));
    Int den = detail::parse_int(text.substr(slash + 1));
    return Slope(num, den);
}

FareyPath parse_path(std::string_view text) {
    std::vector<Slope> slopes;
    for (auto piece : detail::split(text, ',')) slopes.push_back(parse_slope(piece));
    return FareyPath(std::move(slopes));
}

}  // namespace fareyplumb
