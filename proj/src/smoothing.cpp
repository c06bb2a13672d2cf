#include "fareyplumb/smoothing.hpp"

#include "text.hpp"

namespace fareyplumb {

bool spec_valid(const SmoothingSpec& s, std::size_t n) {
    auto sign_ok = [](int e) { return e == 1 || e == -1; };
    return sign_ok(s.eps_i) && sign_ok(s.eps_j) && s.i >= 1 && s.i < s.j && s.j + 1 <= n + 1;
}

SmoothedChain smooth(const RingConfiguration& config, const SmoothingSpec& spec) {
    const std::size_t n = config.n();
    if (!spec_valid(spec, n))
        throw InvalidSmoothing("smoothing " + to_string(spec) + " is not valid for n = " + std::to_string(n));
    const auto& sq = config.squares();
    const auto& path = config.path();

    SmoothedChain out;
    for (std::size_t m = 1; m <= n + 1; ++m) {
        if (m != spec.i && m != spec.j) {
            out.chain.push_back(sq[m]);
            continue;
        }
        // Absorb Sigma_{m+1}, and Sigma_{m+2} too when the two pairs share it.
        Int merged = sq[m];
        while (m == spec.i || m == spec.j) {
            int eps = (m == spec.i) ? spec.eps_i : spec.eps_j;
            merged = checked_add(checked_add(merged, sq[m + 1]), 2 * eps);
            ++m;
        }
        if (merged <= 0)
            throw DegenerateSmoothing("smoothing " + to_string(spec) + " of " + to_string(path) +
                                      " produces a sphere of square " + std::to_string(merged));
        out.chain.push_back(merged);
    }

    out.a = checked_add(path[spec.i].num(), checked_mul(spec.eps_i, path[spec.i + 1].num()));
    out.b = checked_add(path[spec.j].num(), checked_mul(spec.eps_j, path[spec.j + 1].num()));
    IntVector first = config.w(spec.i) + spec.eps_i * config.w(spec.i + 1);
    IntVector second = config.w(spec.j) + spec.eps_j * config.w(spec.j + 1);
    out.sigma = out.b * first - out.a * second;
    out.simply_connected = gcd(out.a, out.b) == 1;
    return out;
}

std::vector<SmoothingSpec> enumerate_smoothings(const RingConfiguration& config, bool include_adjacent) {
    const std::size_t n = config.n();
    const std::size_t gap = include_adjacent ? 1 : 2;
    std::vector<SmoothingSpec> out;
    for (std::size_t i = 1; i + gap + 1 <= n + 1; ++i)
        for (std::size_t j = i + gap; j + 1 <= n + 1; ++j)
            for (int ei : {1, -1})
                for (int ej : {1, -1}) out.push_back({i, ei, j, ej});
    return out;
}

IntVector family_sigma(std::size_t n, std::size_t k) {
    if (!(1 < k && k < n)) throw std::invalid_argument("family_sigma: need 1 < k < n");
    const Int nn = static_cast<Int>(n), kk = static_cast<Int>(k);
    IntVector s(n);
    for (std::size_t m = 1; m <= k - 1; ++m) s[m - 1] = 4 * (nn - kk);
    s[k - 1] = 2 * nn - 4 * kk + 1;
    for (std::size_t m = k + 1; m <= n - 1; ++m) s[m - 1] = -(4 * kk - 2);
    s[n - 1] = -(2 * kk - 1);
    return s;
}

std::vector<Int> family_chain(std::size_t n, std::size_t k) {
    if (!(1 < k && k < n)) throw std::invalid_argument("family_chain: need 1 < k < n");
    std::vector<Int> c(k - 2, 2);
    if (k + 1 == n) {
        // The smoothed pairs share Sigma_k, so the 6 and the 5 fuse: 2 + 2 + 1 + 2 + 2.
        c.push_back(9);
    } else {
        c.push_back(6);
        c.insert(c.end(), n - k - 2, 2);
        c.push_back(5);
    }
    c.push_back(static_cast<Int>(n));
    return c;
}

std::string to_string(const SmoothingSpec& s) {
    auto sign = [](int e) { return e > 0 ? "+" : "-"; };
    return std::to_string(s.i) + sign(s.eps_i) + "," + std::to_string(s.j) + sign(s.eps_j);
}

SmoothingSpec parse_spec(std::string_view text) {
    auto parts = detail::split(detail::trim(text), ',');
    if (parts.size() != 2) throw std::invalid_argument("smoothing spec must look like 'i+,j-': '" + std::string(text) + "'");
    auto one = [&](std::string_view p, std::size_t& idx, int& eps) {
        p = detail::trim(p);
        if (p.empty() || (p.back() != '+' && p.back() != '-'))
            throw std::invalid_argument("smoothing index needs a trailing sign: '" + std::string(p) + "'");
        eps = p.back() == '+' ? 1 : -1;
        Int v = detail::parse_int(p.substr(0, p.size() - 1));
        if (v < 0) throw std::invalid_argument("negative smoothing index");
        idx = static_cast<std::size_t>(v);
    };
    SmoothingSpec s;
    one(parts[0], s.i, s.eps_i);
    one(parts[1], s.j, s.eps_j);
    return s;
}

}  // namespace fareyplumb
