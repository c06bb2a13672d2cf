#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "fareyplumb/changemaker.hpp"
#include "fareyplumb/configuration.hpp"
#include "fareyplumb/farey.hpp"
#include "fareyplumb/json.hpp"
#include "fareyplumb/lens.hpp"
#include "fareyplumb/parallel.hpp"
#include "fareyplumb/smoothing.hpp"
#include "fareyplumb/spheres.hpp"

namespace fareyplumb::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string format = "tsv";
    std::string out;
    std::size_t max_n = 8;
    Int max_p = kDefaultMaxP;
    std::uint64_t max_nodes = kDefaultMaxNodes;
    unsigned jobs = 1;

    SearchLimits limits() const { return {max_p, max_nodes}; }
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Table {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
    std::vector<std::pair<std::string, json>> summary;
    int exit_code = kSuccess;

    void add(std::vector<json> row) { rows.push_back(std::move(row)); }
};

std::string cell_text(const json& v) {
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        bool nested = !v.empty() && v.front().is_array();
        std::string s = nested ? "" : "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += nested ? ";" : ",";
            s += cell_text(v[i]);
        }
        return nested ? s : s + ")";
    }
    return v.dump();
}

void render(const Table& t, const std::string& format, std::ostream& os) {
    if (format == "json") {
        json rows = json::array();
        for (const auto& r : t.rows) {
            json obj = json::object();
            for (std::size_t c = 0; c < t.columns.size(); ++c) obj[t.columns[c]] = r[c];
            rows.push_back(std::move(obj));
        }
        json summary = json::object();
        for (const auto& [k, v] : t.summary) summary[k] = v;
        json doc{{"command", t.command}, {"columns", t.columns}, {"rows", rows}, {"summary", summary}};
        os << doc.dump(2) << '\n';
        return;
    }
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "\t" : "") << t.columns[c];
    os << '\n';
    for (const auto& r : t.rows) {
        for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "\t" : "") << cell_text(r[c]);
        os << '\n';
    }
    for (const auto& [k, v] : t.summary) os << "# " << k << '\t' << cell_text(v) << '\n';
}

json vec(const IntVector& v) { return json(v.coords); }

json vectors(const std::vector<IntVector>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(vec(v));
    return a;
}

void require_n(std::size_t n, const RunConfig& cfg) {
    if (n < 1) throw UsageError("n must be at least 1");
    if (n > cfg.max_n) throw UsageError("n = " + std::to_string(n) + " exceeds --max-n " + std::to_string(cfg.max_n));
}

Table cmd_paths(std::size_t n, const RunConfig& cfg) {
    require_n(n, cfg);
    Table t{"paths", {"index", "path", "squares"}, {}, {}, kSuccess};
    auto paths = enumerate_paths(n, cfg.max_n);
    for (std::size_t i = 0; i < paths.size(); ++i) t.add({i, to_string(paths[i]), build(paths[i]).squares()});
    t.summary.emplace_back("count", paths.size());
    return t;
}

Table cmd_config(const std::string& path_text) {
    RingConfiguration c = build(parse_path(path_text));
    Table t{"config", {"j", "slope", "square", "class", "w", "meridian"}, {}, {}, kSuccess};
    for (std::size_t j = 0; j < c.sphere_count(); ++j) {
        const auto& m = c.meridian_coeffs()[j];
        t.add({j, to_string(c.path()[j]), c.squares()[j], vec(c.sphere_class(j)), vec(c.w(j)), json{m.q, m.p}});
    }
    t.summary.emplace_back("path", to_string(c.path()));
    t.summary.emplace_back("total_square", std::accumulate(c.squares().begin(), c.squares().end(), Int{0}));
    return t;
}

// p and q of a chain's boundary when it is a lens space, otherwise null.
std::pair<json, json> boundary(const std::vector<Int>& entries) {
    Chain chain(entries);
    if (!is_positive_definite(chain)) return {nullptr, nullptr};
    Fraction f = cf_evaluate(chain);
    if (f.p < 2) return {f.p, nullptr};
    return {f.p, f.q % f.p};
}

Table cmd_smooth(const std::string& path_text, const std::string& spec_text) {
    RingConfiguration c = build(parse_path(path_text));
    SmoothingSpec spec = parse_spec(spec_text);
    SmoothedChain s = smooth(c, spec);
    auto [p, q] = boundary(s.chain);
    Table t{"smooth", {"path", "spec", "chain", "sigma", "a", "b", "simply_connected", "p", "q", "changemaker"}, {}, {}, kSuccess};
    t.add({to_string(c.path()), to_string(spec), s.chain, vec(s.sigma), s.a, s.b, s.simply_connected, p, q, is_changemaker(s.sigma)});
    return t;
}

Table cmd_family(const RunConfig& cfg) {
    if (cfg.max_n < 3) throw UsageError("family needs --max-n of at least 3");
    std::vector<std::pair<std::size_t, std::size_t>> work;
    for (std::size_t n = 3; n <= cfg.max_n; ++n)
        for (std::size_t k = 2; k < n; ++k)
            if (family_parameters_valid(static_cast<Int>(n), static_cast<Int>(k))) work.emplace_back(n, k);

    auto rows = parallel_map(work, cfg.jobs, [&](const std::pair<std::size_t, std::size_t>& nk) {
        auto [n, k] = nk;
        RingConfiguration config = build(integer_family_path(n));
        SmoothedChain s = smooth(config, {k - 1, 1, n - 1, 1});
        Fraction f = cf_evaluate(Chain(s.chain));
        FamilyLens fl = family_lens(static_cast<Int>(n), static_cast<Int>(k));
        bool consistent = s.chain == family_chain(n, k) && f.p == fl.p && s.sigma == family_sigma(n, k) &&
                          (static_cast<__int128>(fl.q) * f.q) % fl.p == 1 && norm(s.sigma) == f.p;
        ObstructionReport report = surgery_obstruction(Chain(s.chain), cfg.limits());
        return std::vector<json>{n, k, s.chain, f.p, fl.q, f.q, vec(s.sigma), is_changemaker(s.sigma), to_string(report.verdict), consistent};
    });

    Table t{"family", {"n", "k", "chain", "p", "q_paper", "q_cf", "sigma", "is_changemaker", "verdict", "consistent"}, {}, {}, kSuccess};
    std::size_t obstructed = 0, inconclusive = 0, inconsistent = 0;
    for (auto& r : rows) {
        if (r[8] == "obstructed") ++obstructed;
        if (r[8] == "inconclusive") ++inconclusive;
        if (!r[9].get<bool>()) ++inconsistent;
        t.add(std::move(r));
    }
    t.summary.emplace_back("rows", t.rows.size());
    t.summary.emplace_back("obstructed", obstructed);
    t.summary.emplace_back("inconclusive", inconclusive);
    t.summary.emplace_back("inconsistent", inconsistent);
    if (inconclusive) t.exit_code = kInconclusive;
    if (inconsistent) t.exit_code = kInternal;
    return t;
}

Table cmd_survey(std::size_t n, bool obstruct, const RunConfig& cfg) {
    require_n(n, cfg);
    struct Item {
        FareyPath path;
        SmoothingSpec spec;
    };
    std::vector<Item> work;
    for (const auto& path : enumerate_paths(n, cfg.max_n)) {
        RingConfiguration config = build(path);
        for (const auto& spec : enumerate_smoothings(config)) work.push_back({path, spec});
    }
    auto rows = parallel_map(work, cfg.jobs, [&](const Item& item) -> std::optional<std::vector<json>> {
        RingConfiguration config = build(item.path);
        SmoothedChain s;
        try {
            s = smooth(config, item.spec);
        } catch (const DegenerateSmoothing&) {
            return std::nullopt;
        }
        if (!s.simply_connected) return std::nullopt;
        auto [p, q] = boundary(s.chain);
        json verdict = nullptr;
        if (obstruct && !q.is_null()) verdict = to_string(surgery_obstruction(Chain(s.chain), cfg.limits()).verdict);
        return std::vector<json>{to_string(item.path), to_string(item.spec), s.chain, p, q, vec(s.sigma), norm(s.sigma),
                                 is_changemaker(s.sigma), verdict};
    });

    Table t{"survey", {"path", "spec", "chain", "p", "q", "sigma", "sigma_norm", "changemaker", "verdict"}, {}, {}, kSuccess};
    std::size_t changemakers = 0, inconclusive = 0;
    for (auto& r : rows) {
        if (!r) continue;
        if ((*r)[7].get<bool>()) ++changemakers;
        if ((*r)[8] == "inconclusive") ++inconclusive;
        t.add(std::move(*r));
    }
    t.summary.emplace_back("rows", t.rows.size());
    t.summary.emplace_back("changemaker", changemakers);
    t.summary.emplace_back("non_changemaker", t.rows.size() - changemakers);
    if (obstruct) t.summary.emplace_back("inconclusive", inconclusive);
    if (inconclusive) t.exit_code = kInconclusive;
    return t;
}

bool looks_like_lens(const std::string& s) { return s.rfind("L(", 0) == 0; }

Table cmd_lens(const std::string& input) {
    Table t{"lens", {"chain", "p", "q", "lens", "q_set", "reversed"}, {}, {}, kSuccess};
    if (looks_like_lens(input)) {
        LensSpace l = parse_lens(input);
        for (Int q : l.q_set())
            t.add({cf_expand(l.p(), q).entries(), l.p(), q, to_string(LensSpace(l.p(), q)), l.q_set(), to_string(l.reversed())});
        return t;
    }
    Chain chain = parse_chain(input);
    Fraction f = cf_evaluate(chain);
    if (is_positive_definite(chain) && f.p >= 2) {
        LensSpace l(f.p, f.q % f.p);
        t.add({chain.entries(), f.p, f.q, to_string(l), l.q_set(), to_string(l.reversed())});
    } else {
        t.add({chain.entries(), f.p, f.q, nullptr, nullptr, nullptr});
    }
    return t;
}

Table cmd_obstruct(const std::string& input, const RunConfig& cfg) {
    ObstructionReport r = looks_like_lens(input) ? surgery_obstruction(parse_lens(input), cfg.limits())
                                                 : surgery_obstruction(parse_chain(input), cfg.limits());
    Table t{"obstruct", {"lens", "q", "chain", "status", "sigma", "vectors", "changemakers", "nodes"}, {}, {}, kSuccess};
    for (const auto& o : r.orientations) {
        json sigma = nullptr, vs = nullptr;
        if (o.result.certificate) {
            sigma = vec(o.result.certificate->sigma);
            vs = vectors(o.result.certificate->vectors);
        }
        t.add({to_string(LensSpace(r.lens.p(), o.q)), o.q, o.chain.entries(), to_string(o.result.status), sigma, vs,
               o.result.candidates, o.result.nodes});
    }
    t.summary.emplace_back("verdict", to_string(r.verdict));
    if (r.verdict == Verdict::Inconclusive) t.exit_code = kInconclusive;
    return t;
}

Table cmd_spheres_max(std::size_t n, const RunConfig& cfg) {
    require_n(n, cfg);
    auto paths = enumerate_paths(n, cfg.max_n);
    auto squares = parallel_map(paths, cfg.jobs, [](const FareyPath& p) { return max_smoothed_square(build(p)); });
    Int lo = *std::min_element(squares.begin(), squares.end());
    Int hi = *std::max_element(squares.begin(), squares.end());
    Table t{"spheres max", {"n", "configurations", "min_square", "max_square", "five_n_minus_one"}, {}, {}, kSuccess};
    t.add({n, paths.size(), lo, hi, 5 * static_cast<Int>(n) - 1});
    if (lo != hi || hi != 5 * static_cast<Int>(n) - 1) t.exit_code = kInternal;
    return t;
}

Table cmd_spheres_twist(Int n) {
    if (n < 0) throw UsageError("twist needs n >= 0");
    Table t{"spheres twist", {"n", "square"}, {}, {}, kSuccess};
    for (Int m = 0; m <= n; ++m) t.add({m, twist_concordance_square(m)});
    return t;
}

Table cmd_spheres_petersen(std::size_t len, bool count) {
    if (len < 1) throw UsageError("petersen needs a length of at least 1");
    SimpleGraph g = subdivided_petersen();
    Table t{"spheres petersen", {"vertices", "found", "witness", "count"}, {}, {}, kSuccess};
    for (std::size_t l : {len, len + 1}) {
        auto w = find_induced_path(g, l);
        json witness = nullptr;
        if (w) witness = *w;
        json c = nullptr;
        if (count) c = count_induced_paths(g, l);
        t.add({l, w.has_value(), witness, c});
    }
    t.summary.emplace_back("graph_vertices", g.vertex_count());
    t.summary.emplace_back("graph_edges", g.edge_count());
    return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Farey-path sphere configurations in connected sums of CP^2, their lens space boundaries and "
                 "changemaker obstructions."};
    app.name("fareyplumb");
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file mirroring the long flags; flags win");

    RunConfig cfg;
    std::string seed_free;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--out", cfg.out, "Write output to this file");
    app.add_option("--max-n", cfg.max_n, "Largest n for enumerations")->check(CLI::PositiveNumber);
    app.add_option("--max-p", cfg.max_p, "Largest p for embedding searches")->check(CLI::PositiveNumber);
    app.add_option("--max-nodes", cfg.max_nodes, "Node budget per embedding search")->check(CLI::PositiveNumber);
    app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed-free", seed_free, "Reserved; nothing is random. Must not be given a value")->expected(0, 1);

    std::size_t n = 0;
    Int twist_n = 0;
    std::string path_text, spec_text, input;
    bool obstruct = false, count = false;

    auto* paths = app.add_subcommand("paths", "List every Farey path with n interior slopes");
    paths->add_option("n", n, "Number of interior slopes")->required();
    auto* config = app.add_subcommand("config", "Ring configuration of a path such as 0/1,1/1,1/0");
    config->add_option("path", path_text)->required();
    auto* smooth_cmd = app.add_subcommand("smooth", "Delete Sigma_0 and smooth two intersections, e.g. '1+,3+'");
    smooth_cmd->add_option("path", path_text)->required();
    smooth_cmd->add_option("spec", spec_text)->required();
    auto* family = app.add_subcommand("family", "Integer-slope family table for 2 <= k < n <= --max-n");
    auto* survey = app.add_subcommand("survey", "All simply connected smoothings of all paths with n interior slopes");
    survey->add_option("n", n)->required();
    survey->add_flag("--obstruct", obstruct, "Also run the changemaker-complement search on every row");
    auto* lens = app.add_subcommand("lens", "Continued fraction of a chain '6,5,4' or expansion of 'L(p,q)'");
    lens->add_option("input", input)->required();
    auto* obstruct_cmd = app.add_subcommand("obstruct", "Changemaker-complement search for a chain or L(p,q)");
    obstruct_cmd->add_option("input", input)->required();
    auto* spheres = app.add_subcommand("spheres", "Large-square sphere computations");
    spheres->require_subcommand(1);
    auto* sp_max = spheres->add_subcommand("max", "Square of the fully smoothed ring sphere over all paths");
    sp_max->add_option("n", n)->required();
    auto* sp_twist = spheres->add_subcommand("twist", "Twist-knot concordance squares for 0..n");
    sp_twist->add_option("n", twist_n)->required();
    auto* sp_petersen = spheres->add_subcommand("petersen", "Induced path search in the subdivided Petersen graph");
    sp_petersen->add_option("len", n)->required();
    sp_petersen->add_flag("--count", count, "Also count induced paths");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }
    if (app.count("--seed-free") && !seed_free.empty()) {
        err << "--seed-free is reserved and takes no value\n";
        return kUsage;
    }

    Table table;
    try {
        if (*paths) table = cmd_paths(n, cfg);
        else if (*config) table = cmd_config(path_text);
        else if (*smooth_cmd) table = cmd_smooth(path_text, spec_text);
        else if (*family) table = cmd_family(cfg);
        else if (*survey) table = cmd_survey(n, obstruct, cfg);
        else if (*lens) table = cmd_lens(input);
        else if (*obstruct_cmd) table = cmd_obstruct(input, cfg);
        else if (*sp_max) table = cmd_spheres_max(n, cfg);
        else if (*sp_twist) table = cmd_spheres_twist(twist_n);
        else if (*sp_petersen) table = cmd_spheres_petersen(n, count);
    } catch (const ConfigurationDefect& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return kInternal;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    if (cfg.out.empty()) {
        render(table, cfg.format, out);
    } else {
        std::ofstream file(cfg.out);
        if (!file) {
            err << "cannot open " << cfg.out << '\n';
            return kUsage;
        }
        render(table, cfg.format, file);
    }
    return table.exit_code;
}

}  // namespace fareyplumb::cli
