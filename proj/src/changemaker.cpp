#include "fareyplumb/changemaker.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fareyplumb/smoothing.hpp"

namespace fareyplumb {

std::vector<Int> normalized_entries(const IntVector& v) {
    std::vector<Int> s;
    s.reserve(v.rank());
    for (Int c : v.coords) s.push_back(checked_abs(c));
    std::sort(s.begin(), s.end());
    return s;
}

std::optional<ChangemakerViolation> changemaker_violation(const IntVector& v) {
    auto sorted = normalized_entries(v);
    Int prefix = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        Int bound = checked_add(prefix, 1);
        if (sorted[i] > bound) return ChangemakerViolation{sorted, i, sorted[i], bound};
        prefix = checked_add(prefix, sorted[i]);
    }
    return std::nullopt;
}

bool is_changemaker(const IntVector& v) { return !changemaker_violation(v).has_value(); }

std::optional<ChangemakerViolation> family_not_changemaker(std::size_t n, std::size_t k) {
    return changemaker_violation(family_sigma(n, k));
}

namespace {

Int isqrt(Int x) {
    Int r = static_cast<Int>(std::sqrt(static_cast<double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

void changemakers_rec(std::vector<Int>& cur, std::size_t length, Int remaining, Int prefix, std::vector<IntVector>& out) {
    const std::size_t slots = length - cur.size();
    if (slots == 0) {
        if (remaining == 0) out.emplace_back(cur);
        return;
    }
    Int lo = cur.empty() ? 0 : cur.back();
    Int hi = std::min(prefix + 1, isqrt(remaining));
    for (Int x = lo; x <= hi; ++x) {
        // Every later entry is at least x.
        if (x * x * static_cast<Int>(slots) > remaining && x > 0) break;
        cur.push_back(x);
        changemakers_rec(cur, length, remaining - x * x, prefix + x, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<IntVector> enumerate_changemakers(Int p, std::size_t length, Int max_p) {
    if (p < 1) throw std::invalid_argument("enumerate_changemakers: p must be positive");
    if (length < 1) throw std::invalid_argument("enumerate_changemakers: length must be positive");
    if (p > max_p) throw std::length_error("enumerate_changemakers: p = " + std::to_string(p) + " exceeds cap " + std::to_string(max_p));
    std::vector<IntVector> out;
    std::vector<Int> cur;
    cur.reserve(length);
    changemakers_rec(cur, length, p, 0, out);
    return out;
}

std::vector<IntVector> complement_basis(const IntVector& sigma) {
    const std::size_t n = sigma.rank();
    if (n == 0 || sigma.is_zero()) throw std::invalid_argument("complement_basis: sigma must be nonzero");
    Int g = 0;
    for (Int c : sigma.coords) g = gcd(g, c);
    if (g != 1) throw std::invalid_argument("complement_basis: sigma " + to_string(sigma) + " is not primitive");

    // Unimodular column operations driving sigma . col to (0, ..., 0, +-1);
    // the first n - 1 columns then span the complement.
    std::vector<IntVector> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(unit(n, i));
    std::vector<Int> s = sigma.coords;
    for (std::size_t k = 1; k < n; ++k) {
        while (s[k - 1] != 0) {
            if (s[k] == 0) {
                std::swap(cols[k - 1], cols[k]);
                std::swap(s[k - 1], s[k]);
            } else if (checked_abs(s[k - 1]) >= checked_abs(s[k])) {
                Int t = s[k - 1] / s[k];
                cols[k - 1] -= t * cols[k];
                s[k - 1] -= t * s[k];
            } else {
                Int t = s[k] / s[k - 1];
                cols[k] -= t * cols[k - 1];
                s[k] -= t * s[k - 1];
            }
        }
    }
    cols.pop_back();
    return cols;
}

IntMatrix complement_gram(const IntVector& sigma) { return gram_matrix(complement_basis(sigma)); }

bool certificate_valid(const EmbeddingCertificate& cert, const LinearLattice& target) {
    if (cert.sigma.rank() != target.rank() + 1 || cert.vectors.size() != target.rank()) return false;
    if (!is_changemaker(cert.sigma) || norm(cert.sigma) != target.det()) return false;
    for (const auto& v : cert.vectors) {
        if (v.rank() != cert.sigma.rank() || dot(v, cert.sigma) != 0) return false;
    }
    return gram_matrix(cert.vectors) == target.gram();
}

namespace {

struct CapReached {};

// Backtracking over bases of sigma-perp with the target's Gram matrix.
//
// Symmetry: coordinates carrying equal sigma entries may be permuted, and
// coordinates where sigma vanishes may be negated, without moving sigma.
// Coordinates untouched by every vector chosen so far are therefore
// interchangeable, so the next vector may be assumed nonincreasing on the
// untouched coordinates of each block (and nonnegative there when the block
// is sigma's zero block). The first vector is also fixed up to global sign.
class EmbeddingSearch {
  public:
    EmbeddingSearch(const LinearLattice& target, const IntVector& sigma, std::uint64_t& nodes, std::uint64_t max_nodes)
        : target_(target), sigma_(sigma), nodes_(nodes), max_nodes_(max_nodes), touched_(sigma.rank(), 0) {
        block_.resize(sigma.rank());
        std::map<Int, int> ids;
        for (std::size_t i = 0; i < sigma.rank(); ++i) {
            auto [it, _] = ids.emplace(sigma[i], static_cast<int>(ids.size()));
            block_[i] = it->second;
        }
    }

    std::optional<std::vector<IntVector>> run() {
        if (place(0)) return chosen_;
        return std::nullopt;
    }

  private:
    const std::vector<IntVector>& candidates(Int norm_value) {
        auto it = by_norm_.find(norm_value);
        if (it != by_norm_.end()) return it->second;
        std::vector<IntVector> out;
        IntVector cur(sigma_.rank());
        std::vector<Int> tail_sigma_sq(sigma_.rank() + 1, 0);
        for (std::size_t i = sigma_.rank(); i-- > 0;) tail_sigma_sq[i] = tail_sigma_sq[i + 1] + sigma_[i] * sigma_[i];
        generate(cur, 0, norm_value, 0, tail_sigma_sq, out);
        return by_norm_.emplace(norm_value, std::move(out)).first->second;
    }

    // Lexicographically decreasing enumeration of vectors with the given
    // norm orthogonal to sigma.
    void generate(IntVector& cur, std::size_t idx, Int remaining, Int partial_dot, const std::vector<Int>& tail_sq,
                  std::vector<IntVector>& out) {
        if (idx == cur.rank()) {
            if (remaining == 0 && partial_dot == 0) out.push_back(cur);
            return;
        }
        // Cauchy-Schwarz: the tail can contribute at most sqrt(remaining * tail_sq).
        if (static_cast<__int128>(partial_dot) * partial_dot > static_cast<__int128>(remaining) * tail_sq[idx]) return;
        Int bound = isqrt(remaining);
        for (Int x = bound; x >= -bound; --x) {
            cur[idx] = x;
            generate(cur, idx + 1, remaining - x * x, partial_dot + x * sigma_[idx], tail_sq, out);
        }
        cur[idx] = 0;
    }

    bool canonical_on_untouched(const IntVector& v) const {
        const std::size_t n = v.rank();
        std::vector<std::optional<Int>> last(static_cast<std::size_t>(*std::max_element(block_.begin(), block_.end())) + 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (touched_[i]) continue;
            if (sigma_[i] == 0 && v[i] < 0) return false;
            auto& prev = last[static_cast<std::size_t>(block_[i])];
            if (prev && v[i] > *prev) return false;
            prev = v[i];
        }
        return true;
    }

    IntVector canonical_form(IntVector v) const {
        std::map<int, std::vector<Int>> values;
        for (std::size_t i = 0; i < v.rank(); ++i) {
            if (sigma_[i] == 0) v[i] = checked_abs(v[i]);
            values[block_[i]].push_back(v[i]);
        }
        for (auto& [_, vals] : values) std::sort(vals.begin(), vals.end(), std::greater<>());
        std::map<int, std::size_t> pos;
        for (std::size_t i = 0; i < v.rank(); ++i) v[i] = values[block_[i]][pos[block_[i]]++];
        return v;
    }

    bool place(std::size_t level) {
        if (level == target_.rank()) return true;
        for (const auto& x : candidates(target_.gram_entry(level, level))) {
            bool ok = true;
            for (std::size_t l = 0; l < level && ok; ++l) ok = dot(x, chosen_[l]) == target_.gram_entry(level, l);
            if (!ok || !canonical_on_untouched(x)) continue;
            if (level == 0 && x < canonical_form(-1 * x)) continue;
            if (++nodes_ > max_nodes_) throw CapReached{};
            chosen_.push_back(x);
            for (std::size_t i = 0; i < x.rank(); ++i) touched_[i] += (x[i] != 0);
            if (place(level + 1)) return true;
            for (std::size_t i = 0; i < x.rank(); ++i) touched_[i] -= (x[i] != 0);
            chosen_.pop_back();
        }
        return false;
    }

    const LinearLattice& target_;
    IntVector sigma_;
    std::uint64_t& nodes_;
    std::uint64_t max_nodes_;
    std::vector<int> block_;
    std::vector<int> touched_;
    std::vector<IntVector> chosen_;
    std::map<Int, std::vector<IntVector>> by_norm_;
};

EmbeddingResult search_one(const LinearLattice& target, const IntVector& sigma, std::uint64_t& nodes, std::uint64_t max_nodes) {
    EmbeddingResult r;
    r.candidates = 1;
    try {
        EmbeddingSearch search(target, sigma, nodes, max_nodes);
        if (auto found = search.run()) {
            r.status = SearchStatus::Embedded;
            r.certificate = EmbeddingCertificate{sigma, std::move(*found)};
        } else {
            r.status = SearchStatus::Exhausted;
        }
    } catch (const CapReached&) {
        r.status = SearchStatus::CapExceeded;
    }
    r.nodes = nodes;
    return r;
}

}  // namespace

EmbeddingResult embeds_in_complement_of(const LinearLattice& target, const IntVector& sigma, const SearchLimits& limits) {
    if (sigma.rank() != target.rank() + 1)
        throw SearchInputError("sigma must have rank " + std::to_string(target.rank() + 1));
    std::uint64_t nodes = 0;
    return search_one(target, sigma, nodes, limits.max_nodes);
}

EmbeddingResult embeds_as_changemaker_complement(const LinearLattice& target, Int p, const SearchLimits& limits) {
    if (target.det() != p)
        throw SearchInputError("target determinant " + std::to_string(target.det()) + " differs from p = " + std::to_string(p));
    EmbeddingResult result;
    if (p > limits.max_p) {
        result.status = SearchStatus::CapExceeded;
        return result;
    }
    std::uint64_t nodes = 0;
    for (const auto& sigma : enumerate_changemakers(p, target.rank() + 1, limits.max_p)) {
        EmbeddingResult one = search_one(target, sigma, nodes, limits.max_nodes);
        ++result.candidates;
        result.nodes = nodes;
        if (one.status == SearchStatus::Embedded) {
            result.status = SearchStatus::Embedded;
            result.certificate = std::move(one.certificate);
            return result;
        }
        if (one.status == SearchStatus::CapExceeded) {
            result.status = SearchStatus::CapExceeded;
            return result;
        }
    }
    result.status = SearchStatus::Exhausted;
    return result;
}

ObstructionReport surgery_obstruction(const LensSpace& lens, const SearchLimits& limits) {
    ObstructionReport report{lens, Verdict::Obstructed, {}};
    bool any_capped = false;
    for (Int q : lens.q_set()) {
        Chain chain = cf_expand(lens.p(), q);
        EmbeddingResult r = embeds_as_changemaker_complement(LinearLattice(chain), lens.p(), limits);
        if (r.status == SearchStatus::Embedded) report.verdict = Verdict::Realizable;
        if (r.status == SearchStatus::CapExceeded) any_capped = true;
        report.orientations.push_back({q, std::move(chain), std::move(r)});
    }
    if (report.verdict != Verdict::Realizable && any_capped) report.verdict = Verdict::Inconclusive;
    return report;
}

ObstructionReport surgery_obstruction(const Chain& chain, const SearchLimits& limits) {
    if (!is_positive_definite(chain)) throw std::invalid_argument("surgery_obstruction: chain " + to_string(chain) + " is not positive definite");
    Fraction f = cf_evaluate(chain);
    if (f.p < 2) throw std::invalid_argument("surgery_obstruction: chain " + to_string(chain) + " does not bound a lens space");
    return surgery_obstruction(LensSpace(f.p, f.q % f.p), limits);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Realizable: return "realizable";
        case Verdict::Obstructed: return "obstructed";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Embedded: return "embedded";
        case SearchStatus::Exhausted: return "exhausted";
        case SearchStatus::CapExceeded: return "cap-exceeded";
    }
    return "?";
}

}  // namespace fareyplumb
