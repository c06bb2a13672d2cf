#include "fareyplumb/lens.hpp"

#include <algorithm>

#include "text.hpp"

namespace fareyplumb {

Chain::Chain(std::vector<Int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("chain must have at least one entry");
    for (Int c : entries_)
        if (c < 1) throw std::invalid_argument("chain entries must be positive");
}

Chain Chain::reversed() const {
    std::vector<Int> r(entries_.rbegin(), entries_.rend());
    return Chain(std::move(r));
}

Fraction cf_evaluate(const Chain& chain) {
    const auto& c = chain.entries();
    // (p, q) are the determinants of the trailing minors of length k and k-1.
    Int p = c.back();
    Int q = 1;
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        if (p == 0) throw DegenerateChain("chain " + to_string(chain) + " has a zero intermediate denominator");
        Int next = checked_sub(checked_mul(c[k], p), q);
        q = p;
        p = next;
    }
    Int g = gcd(p, q);
    p /= g;
    q /= g;
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

bool is_positive_definite(const Chain& chain) {
    const auto& c = chain.entries();
    Int p = c.back();
    Int q = 1;
    if (p <= 0) return false;
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        Int next = checked_sub(checked_mul(c[k], p), q);
        q = p;
        p = next;
        if (p <= 0) return false;
    }
    return true;
}

Chain cf_expand(Int p, Int q) {
    if (!(p > q && q >= 1) || gcd(p, q) != 1)
        throw std::invalid_argument("cf_expand: need p > q >= 1 coprime, got " + std::to_string(p) + "/" + std::to_string(q));
    std::vector<Int> out;
    while (q != 0) {
        Int c = ceil_div(p, q);
        out.push_back(c);
        Int r = checked_sub(checked_mul(c, q), p);
        p = q;
        q = r;
    }
    return Chain(std::move(out));
}

LensSpace::LensSpace(Int p, Int q) : p_(p), q_(q) {
    if (p < 2 || q < 1 || q >= p || gcd(p, q) != 1)
        throw std::invalid_argument("lens space needs p >= 2, 1 <= q < p, gcd(p,q) = 1; got L(" + std::to_string(p) + "," +
                                    std::to_string(q) + ")");
    q_inv_ = mod_inverse(q, p);
}

std::vector<Int> LensSpace::q_set() const {
    if (q_ == q_inv_) return {q_};
    return {std::min(q_, q_inv_), std::max(q_, q_inv_)};
}

bool LensSpace::contains(Int q) const { return q == q_ || q == q_inv_; }

LensSpace lens_canonical(Int p, Int q) { return LensSpace(p, q); }

LinearLattice::LinearLattice(Chain chain) : chain_(std::move(chain)) {
    // Leading principal minors D_k = c_k D_{k-1} - D_{k-2}.
    Int prev = 1, cur = chain_[0];
    for (std::size_t k = 1; k < chain_.size(); ++k) {
        Int next = checked_sub(checked_mul(chain_[k], cur), prev);
        prev = cur;
        cur = next;
    }
    det_ = cur;
}

LinearLattice::LinearLattice(Int p, Int q) : LinearLattice(cf_expand(p, q)) {}

Int LinearLattice::gram_entry(std::size_t a, std::size_t b) const {
    if (a == b) return chain_[a];
    if (a + 1 == b || b + 1 == a) return -1;
    return 0;
}

IntMatrix LinearLattice::gram() const {
    IntMatrix g(rank(), rank());
    for (std::size_t a = 0; a < rank(); ++a)
        for (std::size_t b = 0; b < rank(); ++b) g(a, b) = gram_entry(a, b);
    return g;
}

bool family_parameters_valid(Int n, Int k) { return 1 < k && k < n && gcd(2 * k - 1, 2 * n - 1) == 1; }

FamilyLens family_lens(Int n, Int k) {
    if (!(1 < k && k < n)) throw std::invalid_argument("family_lens: need 1 < k < n");
    if (gcd(2 * k - 1, 2 * n - 1) != 1)
        throw std::invalid_argument("family_lens: gcd(2k-1, 2n-1) = " + std::to_string(gcd(2 * k - 1, 2 * n - 1)) + " != 1");
    auto m = [](std::initializer_list<Int> xs) {
        Int r = 1;
        for (Int x : xs) r = checked_mul(r, x);
        return r;
    };
    Int p = 0;
    p = checked_add(p, m({16, n, n, k}));
    p = checked_sub(p, m({16, n, k, k}));
    p = checked_sub(p, m({12, n, n}));
    p = checked_add(p, m({4, k, k}));
    p = checked_add(p, m({8, n}));
    p = checked_sub(p, 2);
    Int q = 0;
    q = checked_add(q, m({16, n, k}));
    q = checked_sub(q, m({16, k, k}));
    q = checked_sub(q, m({12, n}));
    q = checked_add(q, m({4, k}));
    q = checked_add(q, 5);
    return {p, q};
}

std::string to_string(const Chain& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

std::string to_string(const LensSpace& l) { return "L(" + std::to_string(l.p()) + "," + std::to_string(l.q()) + ")"; }

Chain parse_chain(std::string_view text) {
    std::vector<Int> entries;
    for (auto piece : detail::split(detail::trim(text), ',')) entries.push_back(detail::parse_int(piece));
    return Chain(std::move(entries));
}

LensSpace parse_lens(std::string_view text) {
    text = detail::trim(text);
    if (text.size() < 6 || text.substr(0, 2) != "L(" || text.back() != ')')
        throw std::invalid_argument("lens space must look like L(p,q): '" + std::string(text) + "'");
    auto parts = detail::split(text.substr(2, text.size() - 3), ',');
    if (parts.size() != 2) throw std::invalid_argument("lens space must look like L(p,q): '" + std::string(text) + "'");
    return LensSpace(detail::parse_int(parts[0]), detail::parse_int(parts[1]));
}

}  // namespace fareyplumb
