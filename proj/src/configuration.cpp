#include "fareyplumb/configuration.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fareyplumb {

namespace {

[[noreturn]] void defect(const RingConfiguration& c, const std::string& what) {
    throw ConfigurationDefect("configuration " + to_string(c.path()) + ": " + what);
}

}  // namespace

RingConfiguration build(const FareyPath& path) {
    RingConfiguration c(path);
    const std::size_t n = path.n();
    const std::size_t count = n + 2;

    c.squares_.resize(count);
    for (std::size_t i = 0; i < count; ++i)
        c.squares_[i] = distance(path[(i + count - 1) % count], path[(i + 1) % count]);

    std::map<Slope, std::size_t> index_of;
    for (std::size_t i = 0; i < count; ++i) index_of.emplace(path[i], i);

    c.parent_index_.assign(count, {0, 0});
    for (std::size_t i = 1; i <= n; ++i) {
        auto [left, right] = parents(path[i]);
        auto l = index_of.find(left);
        auto r = index_of.find(right);
        if (l == index_of.end() || r == index_of.end())
            defect(c, "parents of " + to_string(path[i]) + " are not on the path");
        c.parent_index_[i] = {l->second, r->second};
    }

    c.classes_.assign(count, IntVector(n));
    for (std::size_t i = 1; i <= n; ++i) {
        c.classes_[i][i - 1] = -1;
        auto [l, r] = c.parent_index_[i];
        c.classes_[l][i - 1] = 1;
        c.classes_[r][i - 1] = 1;
    }

    // Parents have strictly smaller num + den, so that order resolves the recursion.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{1});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return path[a].num() + path[a].den() < path[b].num() + path[b].den();
    });
    c.w_.assign(count, IntVector(n));
    for (std::size_t i : order) {
        auto [l, r] = c.parent_index_[i];
        c.w_[i] = c.w_[l] + c.w_[r] + unit(n, i - 1);
    }

    c.meridians_.reserve(count);
    for (std::size_t i = 0; i < count; ++i) c.meridians_.push_back({path[i].den(), path[i].num()});

    c.verify();
    return c;
}

void RingConfiguration::verify() const {
    const std::size_t n = this->n();
    const std::size_t count = n + 2;
    const auto& path = path_;

    for (std::size_t i = 0; i < count; ++i) {
        if (squares_[i] != distance(path[(i + count - 1) % count], path[(i + 1) % count]))
            defect(*this, "square of sphere " + std::to_string(i) + " disagrees with the Farey distance");
    }

    for (std::size_t i = 1; i <= n; ++i) {
        auto [left, right] = parents(path[i]);
        for (std::size_t j = 0; j < count; ++j) {
            Int expected = (i == j) ? -1 : ((path[j] == left || path[j] == right) ? 1 : 0);
            if (pairing(i, j) != expected)
                defect(*this, "pairing e_" + std::to_string(i) + " . Sigma_" + std::to_string(j) + " is wrong");
        }
    }

    for (std::size_t j = 0; j < count; ++j) {
        for (std::size_t k = j; k < count; ++k) {
            Int expected = 0;
            if (j == k) expected = squares_[j];
            else if (k == j + 1) expected = -1;
            else if (j == 0 && k == count - 1) expected = 1;
            if (dot(classes_[j], classes_[k]) != expected)
                defect(*this, "Gram entry (" + std::to_string(j) + "," + std::to_string(k) + ") is " +
                                  std::to_string(dot(classes_[j], classes_[k])) + ", expected " + std::to_string(expected));
        }
    }

    if (!w_.front().is_zero() || !w_.back().is_zero()) defect(*this, "w_0 and w_{n+1} must vanish");
    for (std::size_t i = 1; i <= n; ++i) {
        auto [l, r] = parent_index_[i];
        if (w_[i] != w_[l] + w_[r] + unit(n, i - 1)) defect(*this, "w recursion fails at " + std::to_string(i));
        for (std::size_t j = 0; j < count; ++j) {
            Int expected = 0;
            if (i == j) expected = -1;
            else if (j == 0) expected = path[i].den();
            else if (j == count - 1) expected = path[i].num();
            if (dot(w_[i], classes_[j]) != expected)
                defect(*this, "w_" + std::to_string(i) + " . Sigma_" + std::to_string(j) + " is wrong");
        }
    }

    Int total = 0;
    for (Int s : squares_) total = checked_add(total, s);
    if (total != checked_mul(3, static_cast<Int>(n))) defect(*this, "total square is not 3n");

    for (std::size_t i = 0; i < count; ++i) {
        if (meridians_[i].q != path[i].den() || meridians_[i].p != path[i].num())
            defect(*this, "meridian coefficients disagree with the path");
    }
}

std::vector<Int> weight_components(const RingConfiguration& config, std::size_t i) {
    if (i < 1 || i > config.n()) throw std::out_of_range("weight_components: index must lie in 1..n");
    std::vector<Int> out;
    for (Int c : config.w(i).coords)
        if (c != 0) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fareyplumb
