// sgshape: enumerate numerical semigroups by genus or Frobenius number,
// compute scaled shape statistics, heat maps, two-segment regression
// aggregates, closed-form order-statistic oracles, and exact-weight samples.

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgs/cache.hpp"
#include "sgs/enumerate.hpp"
#include "sgs/errors.hpp"
#include "sgs/families.hpp"
#include "sgs/montecarlo.hpp"
#include "sgs/oracle.hpp"
#include "sgs/regress.hpp"
#include "sgs/shape.hpp"

namespace {

using namespace sgs;

std::string fixed6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string iso_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

struct ScaleArgs {
    int genus = -1;
    int frobenius = -1;
    int to = -1;

    void add_to(CLI::App* cmd, bool with_range = false) {
        cmd->add_option("-g,--genus", genus, "genus");
        cmd->add_option("-F,--frobenius", frobenius, "Frobenius number");
        if (with_range) cmd->add_option("--to", to, "compute a range of scales up to this value");
    }
    Convention conv() const {
        if ((genus < 0) == (frobenius < 0))
            throw CLI::ValidationError("exactly one of --genus/--frobenius is required");
        return genus >= 0 ? Convention::Genus : Convention::Frobenius;
    }
    int scale() const { return genus >= 0 ? genus : frobenius; }
};

struct EngineArgs {
    int threads = 1;
    int split_depth = 8;
    std::uint64_t node_budget = 10'000'000'000ull;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--threads", threads, "worker threads (0 = auto)");
        cmd->add_option("--split-depth", split_depth, "tree depth of the parallel task split");
        cmd->add_option("--node-budget", node_budget, "abort after this many tree nodes");
    }
    EnumOptions options() const { return EnumOptions{split_depth, threads, node_budget}; }
};

std::optional<std::ofstream> open_out(const std::string& path) {
    if (path.empty()) return std::nullopt;
    std::ofstream f(path);
    if (!f) fail(Errc::IoError, "cannot open output file " + path);
    return f;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
}

TableRow row_for(int scale, Convention conv, const EnumOptions& opts, const std::string& cache_path,
                 std::map<int, TableRow>& cached) {
    if (auto it = cached.find(scale); it != cached.end()) return it->second;
    TableRow row = aggregate(scale, conv, opts);
    if (!cache_path.empty()) append_cache(cache_path, cache_record_for(row, iso_now()));
    cached.emplace(scale, row);
    return row;
}

std::map<int, TableRow> load_cached_rows(const std::string& cache_path, Convention conv) {
    std::map<int, TableRow> out;
    if (cache_path.empty()) return out;
    const char* kind = conv == Convention::Genus ? "genus_row" : "frob_row";
    for (const auto& rec : read_cache(cache_path)) {
        if (rec.kind == kind) out.emplace(rec.scale, row_from_cache(rec));
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"numerical semigroup shape statistics"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    auto* cmd_count = app.add_subcommand("count", "count semigroups with a given genus or Frobenius number");
    ScaleArgs count_scale;
    EngineArgs count_engine;
    count_scale.add_to(cmd_count);
    count_engine.add_to(cmd_count);

    auto* cmd_enum = app.add_subcommand("enumerate", "list semigroups, one text form per line");
    ScaleArgs enum_scale;
    EngineArgs enum_engine;
    std::string enum_out;
    enum_scale.add_to(cmd_enum);
    enum_engine.add_to(cmd_enum);
    cmd_enum->add_option("--out", enum_out, "write to a file instead of stdout");

    auto* cmd_heat = app.add_subcommand("heatmap", "accumulate the (k, a_k) heat map over a full population");
    ScaleArgs heat_scale;
    EngineArgs heat_engine;
    std::string heat_out;
    bool heat_pgm = false, heat_log = false;
    heat_scale.add_to(cmd_heat);
    heat_engine.add_to(cmd_heat);
    cmd_heat->add_option("--out", heat_out, "output file (default stdout)");
    cmd_heat->add_flag("--pgm", heat_pgm, "emit a plain PGM image instead of CSV");
    cmd_heat->add_flag("--log", heat_log, "log-scaled PGM pixels");

    auto* cmd_regress = app.add_subcommand("regress", "two-segment regression aggregates per scale");
    ScaleArgs reg_scale;
    EngineArgs reg_engine;
    bool reg_csv = false;
    std::string reg_cache, reg_out;
    reg_scale.add_to(cmd_regress, true);
    reg_engine.add_to(cmd_regress);
    cmd_regress->add_flag("--csv", reg_csv, "CSV rows: scale,count,i_cut,right,six means");
    cmd_regress->add_option("--cache", reg_cache, "JSON-lines aggregate cache to reuse/extend");
    cmd_regress->add_option("--out", reg_out, "output file (default stdout)");

    auto* cmd_incr = app.add_subcommand("increments", "per-scale differences of the regression aggregates");
    ScaleArgs incr_scale;
    EngineArgs incr_engine;
    bool incr_csv = false;
    std::string incr_cache, incr_out;
    incr_scale.add_to(cmd_incr, true);
    incr_engine.add_to(cmd_incr);
    cmd_incr->add_flag("--csv", incr_csv, "CSV rows");
    cmd_incr->add_option("--cache", incr_cache, "JSON-lines aggregate cache to reuse/extend");
    cmd_incr->add_option("--out", incr_out, "output file (default stdout)");

    auto* cmd_shape = app.add_subcommand("shape", "evaluate the scaled shape function of one semigroup");
    std::string shape_elems, shape_gaps, shape_conv = "genus";
    std::vector<double> shape_alphas;
    bool shape_sup = false, shape_limit = false;
    cmd_shape->add_option("--elements", shape_elems, "semigroup text form, e.g. \"0,4,5,7->\"");
    cmd_shape->add_option("--gaps", shape_gaps, "comma-separated gap set");
    cmd_shape->add_option("--convention", shape_conv, "genus | frobenius")
        ->check(CLI::IsMember({"genus", "frobenius"}));
    cmd_shape->add_option("--alpha", shape_alphas, "evaluation points in [0,1]");
    cmd_shape->add_flag("--sup", shape_sup, "print the sup distance to the limit shape");
    cmd_shape->add_flag("--limit", shape_limit, "evaluate the limit shape instead of a semigroup");

    auto* cmd_oracle = app.add_subcommand("oracle", "closed-form order-statistic moments");
    std::string oracle_family = "order-stat";
    int o_universe = 0, o_subset = 0, o_k = 1, o_g = 0, o_m = 0, o_l = 0, o_frob = 0;
    std::string o_a1, o_a2;
    cmd_oracle->add_option("--family", oracle_family, "order-stat | depth2 | depth3 | frob2 | frob3")
        ->check(CLI::IsMember({"order-stat", "depth2", "depth3", "frob2", "frob3"}));
    cmd_oracle->add_option("-N,--universe", o_universe, "universe size (order-stat)");
    cmd_oracle->add_option("-n,--subset", o_subset, "subset size (order-stat)");
    cmd_oracle->add_option("-k", o_k, "order-statistic index")->required();
    cmd_oracle->add_option("-g,--genus", o_g, "genus");
    cmd_oracle->add_option("-m,--mult", o_m, "multiplicity");
    cmd_oracle->add_option("-l", o_l, "F - 2m for the depth-3 genus family");
    cmd_oracle->add_option("-F,--frobenius", o_frob, "Frobenius number");
    cmd_oracle->add_option("--a1", o_a1, "comma-separated A1 window");
    cmd_oracle->add_option("--a2", o_a2, "comma-separated A2 window");

    auto* cmd_sample = app.add_subcommand("sample", "exact-weight uniform draws from depth <= 3 families");
    int sample_g = 0, sample_lmax = 24;
    std::uint64_t sample_seed = 42, sample_trials = 1;
    bool sample_d2only = false, sample_json = false;
    cmd_sample->add_option("-g,--genus", sample_g, "genus")->required();
    cmd_sample->add_option("--lmax", sample_lmax, "depth-3 tail cap (F - 2m <= lmax)");
    cmd_sample->add_option("--seed", sample_seed, "RNG seed (splitmix64)");
    cmd_sample->add_option("--trials", sample_trials, "number of draws");
    cmd_sample->add_flag("--depth2-only", sample_d2only, "restrict to the depth-2 family");
    cmd_sample->add_flag("--json", sample_json, "emit a JSON array");

    auto* cmd_conv = app.add_subcommand("converge", "statistical check of shape convergence across scales");
    std::string conv_by = "genus", conv_scales, conv_out;
    double conv_eps = 0.3;
    std::vector<double> conv_alphas;
    std::uint64_t conv_seed = 42, conv_trials = 100000, conv_threshold = 10'000'000;
    int conv_lmax = 24;
    EngineArgs conv_engine;
    cmd_conv->add_option("--by", conv_by, "genus | frobenius")->check(CLI::IsMember({"genus", "frobenius"}));
    cmd_conv->add_option("--scales", conv_scales, "comma-separated scale grid")->required();
    cmd_conv->add_option("--epsilon", conv_eps, "tail threshold");
    cmd_conv->add_option("--alpha", conv_alphas, "mean-shape evaluation points");
    cmd_conv->add_option("--seed", conv_seed, "RNG seed (splitmix64)");
    cmd_conv->add_option("--trials", conv_trials, "sampler trials per scale");
    cmd_conv->add_option("--threshold", conv_threshold, "full enumeration when the population is at most this");
    cmd_conv->add_option("--lmax", conv_lmax, "depth-3 tail cap for the sampler");
    cmd_conv->add_option("--out", conv_out, "output file (default stdout)");
    conv_engine.add_to(cmd_conv);

    CLI11_PARSE(app, argc, argv);

    if (cmd_count->parsed()) {
        const Convention conv = count_scale.conv();
        const auto n = conv == Convention::Genus ? count_by_genus(count_scale.scale(), count_engine.options())
                                                 : count_by_frobenius(count_scale.scale(), count_engine.options());
        std::cout << u128_to_string(n) << "\n";
        return 0;
    }

    if (cmd_enum->parsed()) {
        const Convention conv = enum_scale.conv();
        auto file = open_out(enum_out);
        std::ostream& os = file ? *file : std::cout;
        EnumOptions opts = enum_engine.options();
        opts.threads = 1;  // keep the output order deterministic
        auto print = [&](const SemigroupView& v) { os << v.materialize().to_string() << "\n"; };
        if (conv == Convention::Genus) {
            visit_by_genus(enum_scale.scale(), print, opts);
        } else {
            visit_by_frobenius(enum_scale.scale(), print, opts);
        }
        return 0;
    }

    if (cmd_heat->parsed()) {
        const Convention conv = heat_scale.conv();
        HeatMap hm = conv == Convention::Genus ? heatmap_by_genus(heat_scale.scale(), heat_engine.options())
                                               : heatmap_by_frobenius(heat_scale.scale(), heat_engine.options());
        auto file = open_out(heat_out);
        std::ostream& os = file ? *file : std::cout;
        if (heat_pgm) {
            hm.write_pgm(os, heat_log);
        } else {
            hm.write_csv(os);
        }
        return 0;
    }

    auto run_rows = [&](const ScaleArgs& scale_args, const EngineArgs& engine,
                        const std::string& cache_path) -> std::vector<TableRow> {
        const Convention conv = scale_args.conv();
        const int from = scale_args.scale();
        const int to = scale_args.to < 0 ? from : scale_args.to;
        if (to < from) throw CLI::ValidationError("--to must be >= the starting scale");
        auto cached = load_cached_rows(cache_path, conv);
        std::vector<TableRow> rows;
        for (int s = from; s <= to; ++s) rows.push_back(row_for(s, conv, engine.options(), cache_path, cached));
        return rows;
    };

    if (cmd_regress->parsed()) {
        auto rows = run_rows(reg_scale, reg_engine, reg_cache);
        auto file = open_out(reg_out);
        std::ostream& os = file ? *file : std::cout;
        for (const auto& row : rows) {
            if (reg_csv) {
                write_row_csv(os, row);
            } else {
                os << (row.conv == Convention::Genus ? "g=" : "F=") << row.scale
                   << " count=" << u128_to_string(row.count) << " i_cut=" << row.icut
                   << " right=" << row.points_right << " m_l=" << fixed6(row.means[0])
                   << " b_l=" << fixed6(row.means[1]) << " r2_l=" << fixed6(row.means[2])
                   << " m_r=" << fixed6(row.means[3]) << " b_r=" << fixed6(row.means[4])
                   << " r2_r=" << fixed6(row.means[5]) << "\n";
            }
        }
        return 0;
    }

    if (cmd_incr->parsed()) {
        auto rows = run_rows(incr_scale, incr_engine, incr_cache);
        auto deltas = increments(rows);
        auto file = open_out(incr_out);
        std::ostream& os = file ? *file : std::cout;
        for (const auto& d : deltas) {
            if (incr_csv) {
                write_delta_csv(os, d);
            } else {
                os << "scale=" << d.scale << " count=" << u128_to_string(d.count) << " d_icut=" << d.d_icut
                   << " d_right=" << d.d_points_right;
                for (double v : d.deltas) os << " " << fixed6(v);
                os << "\n";
            }
        }
        return 0;
    }

    if (cmd_shape->parsed()) {
        const Convention conv = shape_conv == "genus" ? Convention::Genus : Convention::Frobenius;
        if (shape_limit) {
            for (double a : shape_alphas) std::cout << fixed6(limit_shape(a, conv)) << "\n";
            return 0;
        }
        NumericalSemigroup s = !shape_elems.empty()
                                   ? NumericalSemigroup::parse(shape_elems)
                                   : NumericalSemigroup::from_gaps(parse_int_list(shape_gaps));
        for (double a : shape_alphas) std::cout << fixed6(shape_value(s, a, conv)) << "\n";
        if (shape_sup) std::cout << fixed6(sup_distance(s, conv)) << "\n";
        return 0;
    }

    if (cmd_oracle->parsed()) {
        Moments m;
        if (oracle_family == "order-stat") {
            m = order_stat_moments(o_universe, o_subset, o_k);
        } else if (oracle_family == "depth2") {
            m = family_moments(Depth2Genus{o_g, o_m}, o_k);
        } else if (oracle_family == "depth3") {
            m = family_moments(Depth3Fiber{o_g, o_m, o_l, parse_int_list(o_a1), parse_int_list(o_a2)}, o_k);
        } else if (oracle_family == "frob2") {
            m = family_moments(Depth2Frob{o_frob, o_g}, o_k);
        } else {
            m = family_moments(Depth3Frob{o_frob, o_g, o_m, parse_int_list(o_a1), parse_int_list(o_a2)}, o_k);
        }
        std::cout << "mean " << m.mean.to_string() << "\nvariance " << m.variance.to_string() << "\n";
        return 0;
    }

    if (cmd_sample->parsed()) {
        std::vector<std::string> drawn;
        if (sample_d2only) {
            for (std::uint64_t t = 0; t < sample_trials; ++t) {
                SplitMix64 rng = SplitMix64::substream(sample_seed, t);
                drawn.push_back(sample_depth2(sample_g, rng).to_string());
            }
        } else {
            DepthLe3Sampler sampler(sample_g, sample_lmax);
            for (std::uint64_t t = 0; t < sample_trials; ++t) {
                SplitMix64 rng = SplitMix64::substream(sample_seed, t);
                drawn.push_back(sampler.draw(rng).to_string());
            }
        }
        if (sample_json) {
            std::cout << "[";
            for (std::size_t i = 0; i < drawn.size(); ++i) std::cout << (i ? "," : "") << "\"" << drawn[i] << "\"";
            std::cout << "]\n";
        } else {
            for (const auto& d : drawn) std::cout << d << "\n";
        }
        return 0;
    }

    if (cmd_conv->parsed()) {
        ConvergenceConfig cfg;
        cfg.conv = conv_by == "genus" ? Convention::Genus : Convention::Frobenius;
        cfg.scales = parse_int_list(conv_scales);
        cfg.epsilon = conv_eps;
        if (!conv_alphas.empty()) cfg.alphas = conv_alphas;
        cfg.seed = conv_seed;
        cfg.trials = conv_trials;
        cfg.exact_threshold = conv_threshold;
        cfg.l_max = conv_lmax;
        cfg.enum_opts = conv_engine.options();
        ConvergenceReport report = convergence_experiment(cfg);
        auto file = open_out(conv_out);
        std::ostream& os = file ? *file : std::cout;
        os << report_to_json(report);
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sgs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.code() == sgs::Errc::ResourceLimit) return 2;
        if (e.code() == sgs::Errc::IoError) return 3;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
