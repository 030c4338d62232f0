#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "mcent/baselines.hpp"
#include "mcent/eval.hpp"
#include "mcent/graph.hpp"
#include "mcent/kshell.hpp"
#include "mcent/mcentrality.hpp"
#include "mcent/sir.hpp"

namespace mcent::cli {

namespace {

using json = nlohmann::json;

struct CommonOptions {
    std::string input;
    bool no_lcc = false;
    std::string output_dir;  // empty -> stdout
    std::string format = "csv";
    int precision = 6;
    unsigned threads = 0;
    std::uint64_t seed = 0;
};

std::string fmt(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

// A table of rows; rendered as CSV or a JSON array of objects.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void render(std::ostream& os, const std::string& format) const {
        if (format == "json") {
            json arr = json::array();
            for (const auto& r : rows) {
                json obj;
                for (std::size_t c = 0; c < columns.size(); ++c) obj[columns[c]] = r[c];
                arr.push_back(obj);
            }
            os << arr.dump(2) << '\n';
            return;
        }
        for (std::size_t c = 0; c < columns.size(); ++c)
            os << columns[c] << (c + 1 < columns.size() ? "," : "");
        os << '\n';
        for (const auto& r : rows) {
            for (std::size_t c = 0; c < r.size(); ++c)
                os << r[c] << (c + 1 < r.size() ? "," : "");
            os << '\n';
        }
    }
};

// Writes a table to <output-dir>/<name>.<ext>, or to `out` when no dir set.
bool emit(const Table& t, const CommonOptions& opt, const std::string& name,
          std::ostream& out, std::ostream& err) {
    if (opt.output_dir.empty()) {
        t.render(out, opt.format);
        return true;
    }
    std::filesystem::create_directories(opt.output_dir);
    std::string ext = opt.format == "json" ? ".json" : ".csv";
    auto path = std::filesystem::path(opt.output_dir) / (name + ext);
    std::ofstream f(path);
    if (!f) {
        err << "error: cannot write " << path.string() << '\n';
        return false;
    }
    t.render(f, opt.format);
    return static_cast<bool>(f);
}

Graph load_graph(const CommonOptions& opt, std::ostream& err) {
    auto report = parse_edge_list_file(opt.input);
    if (report.dropped_self_loops || report.dropped_duplicates)
        err << "warning: dropped " << report.dropped_self_loops << " self-loops and "
            << report.dropped_duplicates << " duplicate edges\n";
    if (opt.no_lcc) return std::move(report.graph);
    return largest_connected_component(report.graph);
}

struct MethodParams {
    std::optional<double> mu;
    node_t radius = 3;
    node_t ell = 3;
    double teleport = 0.15;
    std::string preference = "degree";
};

std::vector<double> method_scores(const Graph& g, const std::string& method,
                                  const MethodParams& p) {
    if (method == "m") return m_centrality(g, p.mu).scores;
    if (method == "deltad") return delta_d(g);
    if (method == "kshell") {
        auto core = kcore_decomposition(g);
        return {core.begin(), core.end()};
    }
    if (method == "degree") return degree_centrality(g).scores;
    if (method == "gravity") return gravity(g, p.radius).scores;
    if (method == "ci") return collective_influence(g, p.ell).scores;
    if (method == "clusterrank") return cluster_rank(g).scores;
    if (method == "dil") return dil(g).scores;
    if (method == "ppr")
        return personalized_pagerank(g, p.teleport,
                                     p.preference == "uniform" ? PprPreference::uniform
                                                               : PprPreference::degree)
            .scores;
    throw graph_error("unknown method: " + method);
}

const std::vector<std::string> kAllMethods = {
    "m", "kshell", "deltad", "degree", "gravity", "ci", "clusterrank", "dil", "ppr"};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("input,--input", opt.input, "edge list file")->required();
    cmd->add_flag("--no-lcc", opt.no_lcc,
                  "operate on the full graph instead of the largest component");
    cmd->add_option("--output-dir", opt.output_dir,
                    "write one file per result instead of stdout");
    cmd->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--precision", opt.precision, "significant digits in output")
        ->check(CLI::Range(1, 17));
    cmd->add_option("--threads", opt.threads, "worker threads (0 = hardware)");
    cmd->add_option("--seed", opt.seed, "master RNG seed");
}

void add_method_params(CLI::App* cmd, MethodParams& mp) {
    cmd->add_option("--mu", mp.mu, "weight override for the m method, in [0,1]")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--radius", mp.radius, "gravity cutoff distance");
    cmd->add_option("--ell", mp.ell, "collective influence frontier distance");
    cmd->add_option("--teleport", mp.teleport, "pagerank teleport probability");
    cmd->add_option("--preference", mp.preference, "pagerank jump preference")
        ->check(CLI::IsMember({"degree", "uniform"}));
}

// ---- subcommand bodies ----

int cmd_stats(const CommonOptions& opt, const std::string& formula, std::ostream& out,
              std::ostream& err) {
    Graph full = [&] {
        auto report = parse_edge_list_file(opt.input);
        if (report.dropped_self_loops || report.dropped_duplicates)
            err << "warning: dropped " << report.dropped_self_loops << " self-loops and "
                << report.dropped_duplicates << " duplicate edges\n";
        return std::move(report.graph);
    }();
    Graph g = opt.no_lcc ? std::move(full) : largest_connected_component(full);
    // giant size is a property of the raw graph, so recompute stats on it when
    // LCC extraction is on: the LCC's own giant is trivially itself.
    auto s = graph_stats(g, formula == "hmf" ? ThresholdFormula::hmf
                                             : ThresholdFormula::hmf_corrected);
    Table t;
    t.columns = {"n", "m", "mean_degree", "max_degree", "mean_degree_sq",
                 "max_coreness", "giant_size", "beta_th"};
    t.rows.push_back({std::to_string(s.n), std::to_string(s.m),
                      fmt(s.mean_degree, opt.precision), std::to_string(s.max_degree),
                      fmt(s.mean_degree_sq, opt.precision), std::to_string(s.max_coreness),
                      std::to_string(s.giant_size), fmt(s.beta_th, opt.precision)});
    return emit(t, opt, "stats", out, err) ? 0 : 1;
}

int cmd_rank(const CommonOptions& opt, const std::vector<std::string>& methods,
             const MethodParams& mp, std::size_t top, std::ostream& out,
             std::ostream& err) {
    Graph g = load_graph(opt, err);
    bool all_ok = true;
    for (const auto& method : methods) {
        Table t;
        if (method == "m") {
            auto mc = m_centrality(g, mp.mu);
            auto ranking = rank_nodes(mc.scores);
            t.columns = {"label", "ks", "delta_d", "m_score", "rank"};
            std::size_t limit = top ? std::min(top, ranking.order.size())
                                    : ranking.order.size();
            for (std::size_t i = 0; i < limit; ++i) {
                node_t u = ranking.order[i];
                t.rows.push_back({g.label(u), std::to_string(mc.coreness[u]),
                                  fmt(mc.dd[u], opt.precision),
                                  fmt(mc.scores[u], opt.precision),
                                  std::to_string(ranking.rank[u])});
            }
        } else {
            auto scores = method_scores(g, method, mp);
            auto ranking = rank_nodes(scores);
            t.columns = {"label", "score", "rank"};
            std::size_t limit = top ? std::min(top, ranking.order.size())
                                    : ranking.order.size();
            for (std::size_t i = 0; i < limit; ++i) {
                node_t u = ranking.order[i];
                t.rows.push_back({g.label(u), fmt(scores[u], opt.precision),
                                  std::to_string(ranking.rank[u])});
            }
        }
        all_ok = emit(t, opt, "rank_" + method, out, err) && all_ok;
    }
    return all_ok ? 0 : 1;
}

int cmd_mu_sweep(const CommonOptions& opt, std::vector<double> mus, std::size_t top,
                 std::ostream& out, std::ostream& err) {
    Graph g = load_graph(opt, err);
    if (mus.empty()) throw graph_error("mu sweep needs at least one value");
    Table t;
    t.columns = {"rank"};
    std::vector<std::vector<node_t>> orders;
    for (double mu : mus) {
        t.columns.push_back("mu_" + fmt(mu, 3));
        orders.push_back(rank_nodes(m_centrality(g, mu).scores).order);
    }
    std::size_t limit = top ? std::min<std::size_t>(top, g.node_count()) : g.node_count();
    for (std::size_t r = 0; r < limit; ++r) {
        std::vector<std::string> row{std::to_string(r + 1)};
        for (const auto& ord : orders) row.push_back(g.label(ord[r]));
        t.rows.push_back(std::move(row));
    }
    return emit(t, opt, "mu_sweep", out, err) ? 0 : 1;
}

int cmd_attack(const CommonOptions& opt, const std::vector<std::string>& methods,
               const MethodParams& mp, std::size_t steps, const std::string& order_file,
               bool original_n, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(opt, err);
    bool all_ok = true;

    auto run_one = [&](const std::string& name, const std::vector<node_t>& order) {
        std::size_t k = std::min(steps, order.size());
        auto report = efficiency_decline(g, order, k, original_n);
        Table t;
        t.columns = {"step", "removed_label", "components", "eta", "nu"};
        for (const auto& st : report.steps)
            t.rows.push_back({std::to_string(st.removed_count), st.removed_label,
                              std::to_string(st.components), fmt(st.eta, opt.precision),
                              fmt(st.nu, opt.precision)});
        all_ok = emit(t, opt, "attack_" + name, out, err) && all_ok;
    };

    if (!order_file.empty()) {
        std::ifstream f(order_file);
        if (!f) throw graph_error("cannot open order file: " + order_file);
        std::vector<node_t> order;
        std::string label;
        while (f >> label) {
            auto u = g.index_of(label);
            if (!u) throw graph_error("order file names unknown node: " + label);
            order.push_back(*u);
        }
        run_one("order", order);
    } else {
        for (const auto& method : methods) {
            auto scores = method_scores(g, method, mp);
            run_one(method, rank_nodes(scores).order);
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_sir(const CommonOptions& opt, const std::vector<std::string>& methods,
            const MethodParams& mp, std::vector<double> fractions, std::size_t runs,
            const std::string& formula, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(opt, err);
    SirConfig cfg;
    cfg.runs = runs;
    cfg.master_seed = opt.seed;
    BetaGrid grid;
    if (!fractions.empty()) grid.fractions = std::move(fractions);
    double beta_th = epidemic_threshold(g, formula == "hmf" ? ThresholdFormula::hmf
                                                            : ThresholdFormula::hmf_corrected);
    std::vector<MethodScores> ms;
    for (const auto& method : methods)
        ms.push_back({method, method_scores(g, method, mp)});

    auto rows = sir_correlation_sweep(g, ms, grid, cfg, beta_th, opt.threads);
    Table t;
    t.columns = {"method", "beta", "beta_frac", "tau"};
    for (const auto& r : rows)
        t.rows.push_back({r.method, fmt(r.beta, opt.precision),
                          fmt(r.beta_fraction, opt.precision),
                          r.degenerate ? "0" : fmt(r.tau, opt.precision)});
    return emit(t, opt, "sir", out, err) ? 0 : 1;
}

int cmd_rbo(const CommonOptions& opt, const std::string& method,
            const std::string& against, const MethodParams& mp, std::vector<double> ps,
            std::size_t depth, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(opt, err);
    auto rx = rank_nodes(method_scores(g, method, mp));
    auto ry = rank_nodes(method_scores(g, against, mp));
    if (ps.empty()) ps = {0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    if (depth == 0) depth = g.node_count();
    Table t;
    t.columns = {"p", "rbo"};
    for (double p : ps) {
        double v = rbo(rx, ry, {p, depth});
        t.rows.push_back({fmt(p, opt.precision), fmt(v, opt.precision)});
    }
    return emit(t, opt, "rbo_" + method + "_vs_" + against, out, err) ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"node influence ranking and spreading evaluation"};
    app.require_subcommand(1);
    app.set_config("--config");

    CommonOptions opt;
    if (const char* env = std::getenv("MCENT_OUTPUT_DIR")) opt.output_dir = env;

    MethodParams mp;
    std::vector<std::string> methods{"m"};
    std::vector<double> mus, fractions, ps;
    std::size_t top = 0, steps = 15, runs = 100, depth = 0;
    std::string formula = "hmf_corrected", order_file, against = "ppr";
    bool original_n = false;

    auto* stats = app.add_subcommand("stats", "dataset summary statistics");
    add_common(stats, opt);
    stats->add_option("--threshold-formula", formula, "hmf or hmf_corrected")
        ->check(CLI::IsMember({"hmf", "hmf_corrected"}));

    auto* rank = app.add_subcommand("rank", "rank nodes by a centrality method");
    add_common(rank, opt);
    add_method_params(rank, mp);
    rank->add_option("--method", methods, "one or more methods")
        ->check(CLI::IsMember(kAllMethods));
    rank->add_option("--top", top, "limit output rows");

    auto* sweep = app.add_subcommand("mu-sweep", "top nodes across a mu grid");
    add_common(sweep, opt);
    sweep->add_option("--mu-list", mus, "mu values")->delimiter(',');
    sweep->add_option("--top", top, "rows to show (default 15)");

    auto* attack = app.add_subcommand("attack", "targeted-removal efficiency decline");
    add_common(attack, opt);
    add_method_params(attack, mp);
    attack->add_option("--method", methods, "removal-order methods")
        ->check(CLI::IsMember(kAllMethods));
    attack->add_option("--steps", steps, "number of nodes to remove");
    attack->add_option("--order", order_file, "file with removal order labels");
    attack->add_flag("--original-n", original_n,
                     "keep the intact node count in the efficiency denominator");

    auto* sir = app.add_subcommand("sir", "SIR spreading correlation sweep");
    add_common(sir, opt);
    add_method_params(sir, mp);
    sir->add_option("--method,--methods", methods, "centrality methods")
        ->check(CLI::IsMember(kAllMethods));
    sir->add_option("--beta-frac", fractions, "fractions of beta_th")->delimiter(',');
    sir->add_option("--runs", runs, "simulations per node");
    sir->add_option("--threshold-formula", formula, "hmf or hmf_corrected")
        ->check(CLI::IsMember({"hmf", "hmf_corrected"}));

    auto* rbo_cmd = app.add_subcommand("rbo", "rank-biased overlap between methods");
    add_common(rbo_cmd, opt);
    add_method_params(rbo_cmd, mp);
    std::string rbo_method = "m";
    rbo_cmd->add_option("--method", rbo_method, "first ranking method");
    rbo_cmd->add_option("--against", against, "second ranking method")
        ->check(CLI::IsMember(kAllMethods));
    rbo_cmd->add_option("--p", ps, "persistence values")->delimiter(',');
    rbo_cmd->add_option("--depth", depth, "evaluation depth (default n)");

    std::vector<const char*> argv;
    argv.push_back("mcent");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream dummy;
        int code = app.exit(e, dummy, dummy);
        (code == 0 ? out : err) << dummy.str();
        return code;
    }

    if (steps == 0 && attack->parsed()) {
        // steps=0 still yields the baseline nu=0 row
    }

    try {
        if (stats->parsed()) return cmd_stats(opt, formula, out, err);
        if (rank->parsed()) return cmd_rank(opt, methods, mp, top, out, err);
        if (sweep->parsed()) return cmd_mu_sweep(opt, mus, top ? top : 15, out, err);
        if (attack->parsed())
            return cmd_attack(opt, methods, mp, steps, order_file, original_n, out, err);
        if (sir->parsed()) return cmd_sir(opt, methods, mp, fractions, runs, formula, out, err);
        if (rbo_cmd->parsed()) return cmd_rbo(opt, rbo_method, against, mp, ps, depth, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand selected\n";
    return 1;
}

}  // namespace mcent::cli
