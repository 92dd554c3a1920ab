#include "xxnet/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xxnet/analysis.hpp"
#include "xxnet/chain.hpp"
#include "xxnet/errors.hpp"
#include "xxnet/io.hpp"
#include "xxnet/lpa.hpp"
#include "xxnet/metrics.hpp"
#include "xxnet/network.hpp"
#include "xxnet/oracle.hpp"
#include "xxnet/sector_state.hpp"
#include "xxnet/two_spin.hpp"

namespace xxnet {
namespace cli {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

void write_table(std::ostream& os, const Table& table, const std::string& format) {
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& row : table.rows) {
            ordered_json obj;
            for (std::size_t c = 0; c < table.headers.size(); ++c) obj[table.headers[c]] = row[c];
            rows.push_back(std::move(obj));
        }
        os << rows.dump(2) << '\n';
        return;
    }
    for (std::size_t c = 0; c < table.headers.size(); ++c)
        os << (c ? "," : "") << table.headers[c];
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
        os << '\n';
    }
}

class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) : path_(path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ValidationError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return path_.empty() ? std::cout : file_; }
    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ofstream file_;
};

void write_sidecar(const std::string& out_path, ordered_json meta) {
    if (out_path.empty()) return;  // sidecars only accompany file output
    meta["tool"] = "xxnet";
    meta["version"] = kToolVersion;
    std::ofstream f(out_path + ".meta.json");
    if (!f) throw ValidationError("cannot open sidecar file: " + out_path + ".meta.json");
    f << meta.dump(2) << '\n';
}

struct StateSelection {
    int n = 0;
    int k = 0;
    std::optional<double> b;
};

/// Resolves the mutually exclusive --k/--b selection. Field resolution
/// happens once here; everything downstream runs on the integer sector.
StateSelection resolve_state(int n, std::optional<int> k, std::optional<double> b,
                             bool floor_convention = false) {
    if (k.has_value() == b.has_value())
        throw ValidationError("exactly one of --k and --b must be given");
    StateSelection sel;
    sel.n = n;
    if (k) {
        if (*k < 0 || *k > n) throw ValidationError("--k outside [0, n]");
        sel.k = *k;
    } else {
        sel.b = *b;
        sel.k = floor_convention ? sector_for_field_floor(n, *b) : sector_for_field(n, *b);
    }
    return sel;
}

int cmd_crossings(int n, const std::string& out, const std::string& format) {
    Table t;
    t.headers = {"k", "B_k"};
    const auto fields = level_crossing_fields(n);
    for (int k = 1; k <= n; ++k)
        t.rows.push_back({std::to_string(k), format_g17(fields[static_cast<std::size_t>(k - 1)])});
    OutputTarget target(out);
    write_table(target.stream(), t, format);
    write_sidecar(out, {{"subcommand", "crossings"}, {"n", n}});
    return 0;
}

int cmd_network(const StateSelection& sel, double tau, const std::string& out) {
    const WeightedNetwork net = build_network(sel.n, sel.k, tau);
    const EdgeList edges = to_edge_list(net);
    OutputTarget target(out);
    write_edge_list(target.stream(), edges);
    write_sidecar(out, {{"subcommand", "network"},
                        {"n", sel.n},
                        {"k", sel.k},
                        {"tau", tau},
                        {"edges", edges.edges.size()}});
    return 0;
}

int cmd_metrics(const StateSelection& sel, double tau, const std::string& out,
                const std::string& format) {
    const WeightedNetwork net = build_network(sel.n, sel.k, tau);
    const NodeMetrics m = node_metrics(net);
    Table t;
    t.headers = {"node", "d", "s", "Y", "c", "cw"};
    for (int v = 0; v < sel.n; ++v) {
        const auto u = static_cast<std::size_t>(v);
        t.rows.push_back({std::to_string(v + 1), std::to_string(m.degree[u]),
                          format_g17(m.strength[u]),
                          m.disparity_defined[u] ? format_g17(m.disparity[u]) : "NA",
                          format_g17(m.clustering[u]), format_g17(m.weighted_clustering[u])});
    }
    OutputTarget target(out);
    write_table(target.stream(), t, format);
    write_sidecar(out, {{"subcommand", "metrics"}, {"n", sel.n}, {"k", sel.k}, {"tau", tau}});
    return 0;
}

int cmd_communities(const StateSelection& sel, double tau, bool weighted, bool include_isolated,
                    const std::string& out, const std::string& format) {
    const WeightedNetwork net = build_network(sel.n, sel.k, tau);
    LpaOptions opt;
    opt.weighted = weighted;
    opt.include_isolated = include_isolated;
    const Labeling lab = lpa_detect(net, opt);
    const CommunityCensus census = community_census(lab);

    Table t;
    t.headers = {"node", "label"};
    for (int v = 0; v < sel.n; ++v)
        t.rows.push_back({std::to_string(v + 1), std::to_string(lab.label[static_cast<std::size_t>(v)])});
    OutputTarget target(out);
    write_table(target.stream(), t, format);

    ordered_json census_json;
    census_json["n_c"] = census.n_c;
    census_json["sizes"] = census.sizes;
    census_json["mean_size"] = census.mean_size;
    ordered_json hist;
    for (const auto& [size, count] : census.size_histogram) hist[std::to_string(size)] = count;
    census_json["size_histogram"] = std::move(hist);
    census_json["isolated_nodes"] = census.isolated_nodes;
    census_json["weighted"] = weighted;
    census_json["include_isolated"] = include_isolated;
    if (out.empty()) {
        std::cout << census_json.dump(2) << '\n';
    } else {
        std::ofstream f(out + ".census.json");
        if (!f) throw ValidationError("cannot open census file");
        f << census_json.dump(2) << '\n';
    }
    write_sidecar(out, {{"subcommand", "communities"},
                        {"n", sel.n},
                        {"k", sel.k},
                        {"tau", tau},
                        {"weighted", weighted},
                        {"include_isolated", include_isolated}});
    return 0;
}

int cmd_scan_degree(int n, int k_lo, int k_hi, double tau, const std::string& out,
                    const std::string& format, int n_peaks) {
    ScanOptions opt;
    opt.tau = tau;
    const ScanSeries scan = scan_over_k(n, k_lo, k_hi, opt);
    std::vector<double> mean_d;
    for (const auto& rec : scan.records) mean_d.push_back(rec.mean_degree);
    const std::vector<double> dd =
        mean_d.size() >= 3 ? central_diff(mean_d) : std::vector<double>(mean_d.size(), 0.0);

    Table t;
    t.headers = {"k", "k_over_n", "b_mid", "mean_d", "sigma_d", "delta_mean_d", "mean_s", "mean_Y"};
    for (std::size_t r = 0; r < scan.records.size(); ++r) {
        const ScanRecord& rec = scan.records[r];
        t.rows.push_back({std::to_string(rec.k), format_g17(static_cast<double>(rec.k) / n),
                          format_g17(rec.b_mid), format_g17(rec.mean_degree),
                          format_g17(rec.sigma_degree), format_g17(dd[r]),
                          format_g17(rec.mean_strength),
                          rec.disparity_defined ? format_g17(rec.mean_disparity) : "NA"});
    }
    OutputTarget target(out);
    write_table(target.stream(), t, format);

    ordered_json meta{{"subcommand", "scan-degree"}, {"n", n},
                      {"k_min", k_lo},              {"k_max", k_hi},
                      {"tau", tau}};
    if (n_peaks > 0) {
        const TransitionSet peaks = find_transitions(scan, n_peaks);
        ordered_json pj = ordered_json::array();
        for (const auto& p : peaks.peaks)
            pj.push_back({{"m", p.m}, {"k", p.k_peak}, {"B", p.b_m}, {"height", p.height}});
        meta["transitions"] = std::move(pj);
    }
    write_sidecar(out, std::move(meta));
    return 0;
}

int cmd_scan_communities(int n, int k_lo, int k_hi, double tau, bool weighted, bool unweighted,
                         const std::string& out, const std::string& format) {
    ScanOptions opt;
    opt.tau = tau;
    opt.weighted_communities = weighted;
    opt.unweighted_communities = unweighted;
    const ScanSeries scan = scan_over_k(n, k_lo, k_hi, opt);
    Table t;
    t.headers = {"k", "k_over_n", "b_mid", "n_c_weighted", "n_c_unweighted"};
    for (const auto& rec : scan.records)
        t.rows.push_back({std::to_string(rec.k), format_g17(static_cast<double>(rec.k) / n),
                          format_g17(rec.b_mid),
                          rec.n_c_weighted >= 0 ? std::to_string(rec.n_c_weighted) : "NA",
                          rec.n_c_unweighted >= 0 ? std::to_string(rec.n_c_unweighted) : "NA"});
    OutputTarget target(out);
    write_table(target.stream(), t, format);
    write_sidecar(out, {{"subcommand", "scan-communities"},
                        {"n", n},
                        {"k_min", k_lo},
                        {"k_max", k_hi},
                        {"tau", tau},
                        {"weighted", weighted},
                        {"unweighted", unweighted}});
    return 0;
}

int cmd_wasserstein(int n, int k_lo, int k_hi, double tau, const std::string& out,
                    const std::string& format) {
    Table t;
    t.headers = {"k", "b_mid", "mean_W", "pairs", "excluded_nodes"};
    std::vector<MeanPairwiseWasserstein> results(static_cast<std::size_t>(k_hi - k_lo + 1));
    for (int k = k_lo; k <= k_hi; ++k) {
        const WeightedNetwork net = build_network(n, k, tau);
        results[static_cast<std::size_t>(k - k_lo)] = mean_pairwise_wasserstein(net);
    }
    for (int k = k_lo; k <= k_hi; ++k) {
        const auto& r = results[static_cast<std::size_t>(k - k_lo)];
        t.rows.push_back({std::to_string(k), format_g17(sector_field_midpoint(n, k)),
                          format_g17(r.mean), std::to_string(r.pairs),
                          std::to_string(r.excluded_nodes)});
    }
    OutputTarget target(out);
    write_table(target.stream(), t, format);
    write_sidecar(out, {{"subcommand", "wasserstein"},
                        {"n", n},
                        {"k_min", k_lo},
                        {"k_max", k_hi},
                        {"tau", tau}});
    return 0;
}

int cmd_profile(int n, double b, int n_center, double tau, const std::string& out,
                const std::string& format) {
    const ClusteringProfile prof = clustering_profile(n, b, n_center, tau);
    Table t;
    t.headers = {"site", "centered_position", "cw"};
    for (std::size_t r = 0; r < prof.sites.size(); ++r)
        t.rows.push_back({std::to_string(prof.sites[r]), format_g17(prof.centered_positions[r]),
                          format_g17(prof.values[r])});
    OutputTarget target(out);
    write_table(target.stream(), t, format);
    write_sidecar(out, {{"subcommand", "profile"},
                        {"n", n},
                        {"b", b},
                        {"k", prof.k},
                        {"n_center", n_center},
                        {"tau", tau},
                        {"mean_central", prof.mean_central},
                        {"sector_convention", "k = floor((n+1) arccos(b)/pi)"}});
    return 0;
}

int cmd_period(const std::string& s_text, int n_min, int n_max, int n_center, double tau,
               bool predict_only, const std::string& out, const std::string& format) {
    const ParsedRational s = parse_rational(s_text);
    const PeriodPrediction pred = period_prediction({s.num, s.den});
    const double b = std::cos(M_PI * static_cast<double>(pred.q) / static_cast<double>(pred.p));

    ordered_json result{{"s_c", s_text},
                        {"p", pred.p},
                        {"q", pred.q},
                        {"f", pred.f},
                        {"group_size", pred.group_size},
                        {"B", b},
                        {"predicted_period", pred.p}};
    if (!predict_only) {
        if (n_min < 1 || n_max < n_min) throw ValidationError("bad --n-min/--n-max range");
        std::vector<double> series;
        Table t;
        t.headers = {"N", "k", "mean_central_cw"};
        for (int n = n_min; n <= n_max; ++n) {
            const ClusteringProfile prof = clustering_profile(n, b, std::min(n_center, n), tau);
            series.push_back(prof.mean_central);
            t.rows.push_back(
                {std::to_string(n), std::to_string(prof.k), format_g17(prof.mean_central)});
        }
        OutputTarget target(out);
        write_table(target.stream(), t, format);
        const auto detected = detect_period(series);
        if (detected)
            result["detected_period"] = *detected;
        else
            result["detected_period"] = nullptr;
    }
    if (out.empty()) {
        std::cout << result.dump(2) << '\n';
    } else {
        std::ofstream f(out + ".period.json");
        if (!f) throw ValidationError("cannot open period file");
        f << result.dump(2) << '\n';
    }
    write_sidecar(out, {{"subcommand", "period"},
                        {"s_c", s_text},
                        {"n_min", n_min},
                        {"n_max", n_max},
                        {"n_center", n_center},
                        {"tau", tau},
                        {"sector_convention", "k = floor((n+1) arccos(b)/pi)"}});
    return 0;
}

int cmd_oracle_check(int max_n, const std::string& out) {
    double worst_rdm = 0.0, worst_conc = 0.0;
    int worst_n = 0, worst_k = 0, worst_i = 0, worst_j = 0;
    for (int n = 2; n <= max_n; ++n) {
        for (int k = 0; k <= n; ++k) {
            const SectorState st = build_sector_state(n, k);
            const WeightedNetwork net = build_network(n, k);
            const oracle::StateVector sv = oracle::full_state(n, k);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    const Eigen::Matrix4d rho = oracle::rdm_from_state(sv, i, j);
                    const TwoSpinState ts = two_spin_rdm(st, i, j);
                    const double rdm_dev =
                        (rho - ts.density()).cwiseAbs().maxCoeff();
                    const double conc_dev = std::abs(oracle::wootters_concurrence(rho) -
                                                     net.weight(i, j));
                    if (std::max(rdm_dev, conc_dev) > std::max(worst_rdm, worst_conc)) {
                        worst_n = n;
                        worst_k = k;
                        worst_i = i;
                        worst_j = j;
                    }
                    worst_rdm = std::max(worst_rdm, rdm_dev);
                    worst_conc = std::max(worst_conc, conc_dev);
                }
        }
    }
    const bool pass = worst_rdm < 1e-10 && worst_conc < 1e-10;
    ordered_json report{{"max_n", max_n},
                        {"max_rdm_deviation", worst_rdm},
                        {"max_concurrence_deviation", worst_conc},
                        {"worst_case", {{"n", worst_n}, {"k", worst_k}, {"i", worst_i}, {"j", worst_j}}},
                        {"tolerance", 1e-10},
                        {"pass", pass}};
    OutputTarget target(out);
    target.stream() << report.dump(2) << '\n';
    return pass ? 0 : 2;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Concurrence-network analysis of open XX chain ground states"};
    app.require_subcommand(1);

    // shared option storage
    int n = 0, k_opt = -1, k_lo = 0, k_hi = -1, n_center = 16, n_min = 0, n_max = 0;
    int n_peaks = 0, max_n = 12;
    double b_opt = 0.0, tau = 1e-10;
    bool has_k = false, has_b = false;
    bool comm_weighted = true, scan_weighted = false, scan_unweighted = false;
    bool include_isolated = false, predict_only = false;
    std::string out, format = "csv", s_text;

    auto add_state_opts = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "number of spins")->required();
        cmd->add_option("--k", k_opt, "sector index")->each([&](const std::string&) { has_k = true; });
        cmd->add_option("--b", b_opt, "magnetic field")->each([&](const std::string&) { has_b = true; });
        cmd->add_option("--tau", tau, "separability tolerance (default 1e-10)");
        cmd->add_option("--out", out, "output file (default stdout)");
        cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_range_opts = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "number of spins")->required();
        cmd->add_option("--k-min", k_lo, "first sector (default 0)");
        cmd->add_option("--k-max", k_hi, "last sector (default n)");
        cmd->add_option("--tau", tau, "separability tolerance (default 1e-10)");
        cmd->add_option("--out", out, "output file (default stdout)");
        cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* crossings = app.add_subcommand("crossings", "level-crossing fields B_k");
    crossings->add_option("--n", n, "number of spins")->required();
    crossings->add_option("--out", out, "output file (default stdout)");
    crossings->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    CLI::App* network = app.add_subcommand("network", "concurrence network edge list");
    add_state_opts(network);

    CLI::App* metrics = app.add_subcommand("metrics", "per-node local measures");
    add_state_opts(metrics);

    CLI::App* communities = app.add_subcommand("communities", "label-propagation communities");
    add_state_opts(communities);
    communities->add_flag("--weighted,!--unweighted", comm_weighted,
                          "use edge weights in label frequencies (default on)");
    communities->add_flag("--include-isolated", include_isolated,
                          "count isolated nodes as singleton communities");

    CLI::App* scan_degree = app.add_subcommand("scan-degree", "degree observables per sector");
    add_range_opts(scan_degree);
    scan_degree->add_option("--peaks", n_peaks, "also report this many transition peaks");

    CLI::App* scan_comm = app.add_subcommand("scan-communities", "community counts per sector");
    add_range_opts(scan_comm);
    scan_comm->add_flag("--weighted", scan_weighted, "weighted label propagation");
    scan_comm->add_flag("--unweighted", scan_unweighted, "unweighted label propagation");

    CLI::App* wass = app.add_subcommand("wasserstein",
                                        "mean pairwise Wasserstein distance per sector");
    add_range_opts(wass);

    CLI::App* profile = app.add_subcommand("profile", "central weighted-clustering profile");
    profile->add_option("--n", n, "number of spins")->required();
    profile->add_option("--b", b_opt, "magnetic field in (0, 1)")->required();
    profile->add_option("--n-center", n_center, "central spins in the profile (default 16)");
    profile->add_option("--tau", tau, "separability tolerance");
    profile->add_option("--out", out, "output file (default stdout)");
    profile->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    CLI::App* period = app.add_subcommand("period", "size-periodicity analysis");
    period->add_option("--s", s_text, "mean community size as a rational, e.g. 3.5 or 7/2")
        ->required();
    period->add_option("--n-min", n_min, "first chain size");
    period->add_option("--n-max", n_max, "last chain size");
    period->add_option("--n-center", n_center, "central spins averaged (default 100)");
    period->add_option("--tau", tau, "separability tolerance");
    period->add_flag("--predict-only", predict_only, "skip the numerical size scan");
    period->add_option("--out", out, "output file (default stdout)");
    period->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    CLI::App* oracle_check = app.add_subcommand("oracle-check",
                                                "certify solver against the brute-force oracle");
    oracle_check->add_option("--max-n", max_n, "largest chain size (default 12)");
    oracle_check->add_option("--out", out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::ostringstream msg;
        msg << e.what();
        std::cerr << json{{"error", {{"type", "cli"}, {"message", msg.str()}}}}.dump() << '\n';
        return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
    }

    try {
        const std::optional<int> k_arg = has_k ? std::optional<int>(k_opt) : std::nullopt;
        const std::optional<double> b_arg = has_b ? std::optional<double>(b_opt) : std::nullopt;
        if (crossings->parsed()) return cmd_crossings(n, out, format);
        if (network->parsed()) return cmd_network(resolve_state(n, k_arg, b_arg), tau, out);
        if (metrics->parsed())
            return cmd_metrics(resolve_state(n, k_arg, b_arg), tau, out, format);
        if (communities->parsed())
            return cmd_communities(resolve_state(n, k_arg, b_arg), tau, comm_weighted,
                                   include_isolated, out, format);
        if (scan_degree->parsed())
            return cmd_scan_degree(n, k_lo, k_hi < 0 ? n : k_hi, tau, out, format, n_peaks);
        if (scan_comm->parsed()) {
            if (!scan_weighted && !scan_unweighted) scan_weighted = scan_unweighted = true;
            return cmd_scan_communities(n, k_lo, k_hi < 0 ? n : k_hi, tau, scan_weighted,
                                        scan_unweighted, out, format);
        }
        if (wass->parsed()) return cmd_wasserstein(n, k_lo, k_hi < 0 ? n : k_hi, tau, out, format);
        if (profile->parsed()) return cmd_profile(n, b_opt, n_center, tau, out, format);
        if (period->parsed()) {
            if (!period->count("--n-center")) n_center = 100;
            return cmd_period(s_text, n_min, n_max, n_center, tau, predict_only || n_min == 0,
                              out, format);
        }
        if (oracle_check->parsed()) return cmd_oracle_check(max_n, out);
        throw ValidationError("no subcommand");
    } catch (const DegenerateFieldError& e) {
        std::cerr << json{{"error", {{"type", "degenerate_field"}, {"message", e.what()}}}}.dump()
                  << '\n';
        return 2;
    } catch (const SizeCapError& e) {
        std::cerr << json{{"error", {{"type", "size_cap"}, {"message", e.what()}}}}.dump() << '\n';
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << json{{"error", {{"type", "convergence"}, {"message", e.what()}}}}.dump()
                  << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << json{{"error", {{"type", "validation"}, {"message", e.what()}}}}.dump()
                  << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"type", "internal"}, {"message", e.what()}}}}.dump() << '\n';
        return 1;
    }
}

}  // namespace cli
}  // namespace xxnet
