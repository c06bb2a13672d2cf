#include "fareyplumb/spheres.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fareyplumb {

std::vector<SmoothedSphere> smoothed_spheres(const RingConfiguration& config) {
    const std::size_t count = config.sphere_count();
    std::vector<SmoothedSphere> out;
    for (std::size_t removed = 0; removed < count; ++removed) {
        if (config.squares()[removed] != 1) continue;
        // Walk the remaining spheres around the ring; each next sign makes
        // its intersection with the previous sphere positive.
        std::size_t prev = (removed + 1) % count;
        int prev_sign = 1;
        IntVector total = config.sphere_class(prev);
        for (std::size_t step = 2; step < count; ++step) {
            std::size_t cur = (removed + step) % count;
            Int pair = dot(config.sphere_class(prev), config.sphere_class(cur));
            int sign = (prev_sign * pair > 0) ? 1 : -1;
            total += sign * config.sphere_class(cur);
            prev = cur;
            prev_sign = sign;
        }
        Int square = norm(total);
        out.push_back({removed, std::move(total), square});
    }
    return out;
}

Int max_smoothed_square(const RingConfiguration& config) {
    auto spheres = smoothed_spheres(config);
    if (spheres.empty()) throw ConfigurationDefect("configuration " + to_string(config.path()) + " has no sphere of square 1");
    for (const auto& s : spheres)
        if (s.square != spheres.front().square)
            throw ConfigurationDefect("smoothed square depends on the removed sphere in " + to_string(config.path()));
    return spheres.front().square;
}

Int twist_concordance_square(Int n) {
    if (n < 0) throw std::invalid_argument("twist_concordance_square: n must be nonnegative");
    Int total = 0;
    for (Int m = 1; m <= n; ++m) {
        Int linking = (m % 2 == 0) ? 1 : 3;
        total = checked_add(total, linking * linking);
    }
    return total;
}

bool is_characteristic(const IntVector& v) {
    return std::all_of(v.coords.begin(), v.coords.end(), [](Int c) { return c % 2 != 0; });
}

namespace {

// Visits every nonzero x with x.x <= max_norm; stops early if visit returns false.
template <class Visit>
bool for_each_short_vector(IntVector& x, std::size_t idx, Int remaining, bool nonzero, Visit& visit) {
    if (idx == x.rank()) return nonzero ? visit(x) : true;
    for (Int c = 0; c * c <= remaining; ++c) {
        for (Int sign : {1, -1}) {
            if (c == 0 && sign < 0) continue;
            x[idx] = sign * c;
            if (!for_each_short_vector(x, idx + 1, remaining - c * c, nonzero || c != 0, visit)) return false;
        }
    }
    x[idx] = 0;
    return true;
}

}  // namespace

bool pairing_bound_check(const IntVector& s, Int t) {
    if (t < 0) throw std::invalid_argument("pairing_bound_check: t must be nonnegative");
    if (t <= 1 || s.rank() == 0) return true;
    // x.x < |x.S| <= t forces x.x <= t - 1.
    IntVector x(s.rank());
    auto visit = [&](const IntVector& v) {
        Int pair = checked_abs(dot(v, s));
        return !(norm(v) < pair && pair <= t);
    };
    return for_each_short_vector(x, 0, t - 1, false, visit);
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= adj_.size() || v >= adj_.size()) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (adjacent(u, v)) throw std::invalid_argument("duplicate edge");
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const {
    const auto& a = adj_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (std::size_t v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

SimpleGraph petersen() {
    SimpleGraph g(10);
    for (std::size_t i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

SimpleGraph subdivided_petersen() {
    SimpleGraph base = petersen();
    auto edges = base.edges();
    SimpleGraph g(base.vertex_count() + edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        g.add_edge(edges[e].first, base.vertex_count() + e);
        g.add_edge(base.vertex_count() + e, edges[e].second);
    }
    return g;
}

bool is_bipartite(const SimpleGraph& g) {
    std::vector<int> colour(g.vertex_count(), -1);
    for (std::size_t start = 0; start < g.vertex_count(); ++start) {
        if (colour[start] != -1) continue;
        colour[start] = 0;
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : g.neighbors(v)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    stack.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Extends an induced path one vertex at a time. blocked[v] counts path
// vertices adjacent to v; a new vertex is admissible iff it is adjacent to
// the current end and to nothing else on the path.
class InducedPathSearch {
  public:
    InducedPathSearch(const SimpleGraph& g, std::size_t len) : g_(g), len_(len), on_path_(g.vertex_count(), false), blocked_(g.vertex_count(), 0) {}

    template <class Found>
    void run(Found& found) {
        for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
            push(v);
            bool more = extend(found);
            pop();
            if (!more) return;
        }
    }

  private:
    void push(std::size_t v) {
        path_.push_back(v);
        on_path_[v] = true;
        for (std::size_t w : g_.neighbors(v)) ++blocked_[w];
    }
    void pop() {
        std::size_t v = path_.back();
        path_.pop_back();
        on_path_[v] = false;
        for (std::size_t w : g_.neighbors(v)) --blocked_[w];
    }

    template <class Found>
    bool extend(Found& found) {
        if (path_.size() == len_) return found(path_);
        for (std::size_t w : g_.neighbors(path_.back())) {
            if (on_path_[w] || blocked_[w] != 1) continue;
            push(w);
            bool more = extend(found);
            pop();
            if (!more) return false;
        }
        return true;
    }

    const SimpleGraph& g_;
    std::size_t len_;
    std::vector<std::size_t> path_;
    std::vector<bool> on_path_;
    std::vector<int> blocked_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_induced_path(const SimpleGraph& g, std::size_t len) {
    if (len < 1) throw std::invalid_argument("find_induced_path: len must be at least 1");
    std::optional<std::vector<std::size_t>> witness;
    auto found = [&](const std::vector<std::size_t>& p) {
        witness = p;
        return false;
    };
    InducedPathSearch(g, len).run(found);
    return witness;
}

std::uint64_t count_induced_paths(const SimpleGraph& g, std::size_t len) {
    if (len < 1) throw std::invalid_argument("count_induced_paths: len must be at least 1");
    std::uint64_t directed = 0;
    auto found = [&](const std::vector<std::size_t>&) {
        ++directed;
        return true;
    };
    InducedPathSearch(g, len).run(found);
    return len == 1 ? directed : directed / 2;
}

bool is_induced_path(const SimpleGraph& g, const std::vector<std::size_t>& path) {
    for (std::size_t a = 0; a < path.size(); ++a) {
        if (path[a] >= g.vertex_count()) return false;
        for (std::size_t b = a + 1; b < path.size(); ++b) {
            if (path[a] == path[b]) return false;
            if (g.adjacent(path[a], path[b]) != (b == a + 1)) return false;
        }
    }
    return true;
}

SimpleGraph read_edge_list(std::istream& in) {
    std::string line;
    std::optional<SimpleGraph> g;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream row(line);
        if (!g) {
            long long count;
            if (!(row >> count) || count < 0) throw std::invalid_argument("edge list: bad vertex count line '" + line + "'");
            g.emplace(static_cast<std::size_t>(count));
            continue;
        }
        long long u, v;
        if (!(row >> u >> v) || u < 0 || v < 0) throw std::invalid_argument("edge list: bad edge line '" + line + "'");
        g->add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    if (!g) throw std::invalid_argument("edge list: missing vertex count");
    return std::move(*g);
}

void write_edge_list(std::ostream& out, const SimpleGraph& g) {
    out << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace fareyplumb
