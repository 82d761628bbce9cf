// wbslope - wideband-slope analysis of K-user Gaussian interference channels
// Copyright (C) 2026 the wbslope authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Command-line front end. Every subcommand is a thin adapter over the
// library: numbers are printed with 17 significant digits, so the output
// equals the library results with no formatting loss.
//
// Exit codes: 0 success, 1 input or I/O error, 2 an optimizer failed to
// converge (results are still written in that case).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wbslope/montecarlo.hpp"
#include "wbslope/outer_bound.hpp"
#include "wbslope/slope_metrics.hpp"
#include "wbslope/version.hpp"

namespace {

using namespace wbslope;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string join17(const std::vector<double>& values, char sep) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += sep;
        s += fmt17(values[i]);
    }
    return s;
}

// ---- channel source -------------------------------------------------------

struct SourceOpts {
    std::vector<std::string> symmetric;  // "k=<int>" "a=<real>"
    std::string channel_path;
};

void add_source_options(CLI::App* cmd, SourceOpts& src) {
    auto* group = cmd->add_option_group("channel source");
    group->add_option("--symmetric", src.symmetric,
                      "inline symmetric channel, two tokens: k=<int> a=<real>")
        ->expected(2);
    group->add_option("--channel", src.channel_path, "channel file (wbslope-channel v1)")
        ->check(CLI::ExistingFile);
    group->require_option(1);
}

std::pair<std::string, std::string> split_kv(const std::string& token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0)
        throw std::runtime_error("expected key=value, got '" + token + "'");
    return {token.substr(0, eq), token.substr(eq + 1)};
}

long long parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("malformed " + what + " '" + text + "'");
    }
}

double parse_real(const std::string& text, const std::string& what) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0')
        throw std::runtime_error("malformed " + what + " '" + text + "'");
    return v;
}

std::vector<double> parse_real_list(const std::string& text, const std::string& what) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        values.push_back(parse_real(item, what));
    if (values.empty()) throw std::runtime_error(what + " list is empty");
    return values;
}

Channel resolve_channel(const SourceOpts& src) {
    if (!src.symmetric.empty()) {
        std::optional<int> k;
        std::optional<double> a;
        for (const std::string& token : src.symmetric) {
            const auto [key, value] = split_kv(token);
            if (key == "k")
                k = static_cast<int>(parse_int(value, "k"));
            else if (key == "a")
                a = parse_real(value, "a");
            else
                throw std::runtime_error("--symmetric takes k=<int> and a=<real>, got '" +
                                         token + "'");
        }
        if (!k || !a) throw std::runtime_error("--symmetric needs both k=<int> and a=<real>");
        return make_symmetric(*k, *a);
    }
    return load_channel(src.channel_path);
}

// ---- output sink ----------------------------------------------------------

struct Sink {
    std::ofstream file;
    std::ostream* out = &std::cout;

    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file " + path);
            out = &file;
        }
    }
    std::ostream& stream() { return *out; }
};

// ---- montecarlo / sweep settings ------------------------------------------

struct McCli {
    ExperimentConfig config;
    std::vector<std::string> settings;  // positional key=value tokens
    std::string a_flag;
    std::string out_path;
    int jobs = 1;

    void finalize() {
        for (const std::string& token : settings) apply(token);
        if (!a_flag.empty()) config.a_values = parse_real_list(a_flag, "a");
        if (config.a_values.empty())
            throw std::runtime_error("no a values given (use a=<list> or --a)");
    }

    void apply(const std::string& token) {
        const auto [key, value] = split_kv(token);
        if (key == "k")
            config.k = static_cast<int>(parse_int(value, "k"));
        else if (key == "a")
            config.a_values = parse_real_list(value, "a");
        else if (key == "samples")
            config.samples = static_cast<int>(parse_int(value, "samples"));
        else if (key == "seed")
            config.seed = static_cast<std::uint64_t>(parse_int(value, "seed"));
        else if (key == "restarts")
            config.restarts = static_cast<int>(parse_int(value, "restarts"));
        else
            throw std::runtime_error("unknown setting '" + key +
                                     "' (known: k, a, samples, seed, restarts)");
    }
};

void add_mc_options(CLI::App* cmd, McCli& mc) {
    cmd->add_option("settings", mc.settings,
                    "experiment settings as key=value (k, a, samples, seed, restarts)");
    cmd->add_option("--a", mc.a_flag, "comma-separated cross-gain values");
    cmd->add_option("--samples", mc.config.samples, "realizations per a value");
    cmd->add_option("--seed", mc.config.seed, "base seed (default 0, never time-based)");
    cmd->add_option("--restarts", mc.config.restarts, "alignment restarts per record");
    cmd->add_option("--jobs", mc.jobs, "worker threads; output bytes do not depend on it");
    cmd->add_option("--out", mc.out_path, "CSV destination (stdout if omitted)");
}

template <typename Rows>
int emit_rows(const Rows& rows, const McCli& mc) {
    if (mc.out_path.empty())
        write_csv(rows, std::cout);
    else
        write_csv(rows, std::filesystem::path(mc.out_path), mc.config);
    return 0;
}

// ---- subcommand bodies ----------------------------------------------------

int run_slope(const SourceOpts& src, const std::string& out_path, const std::string& format) {
    const Channel ch = resolve_channel(src);
    const SlopeReport report = baseline_report(ch);
    Sink sink(out_path);
    std::ostream& os = sink.stream();
    if (format == "csv") {
        os << "k,ebno_min,s0_no_interference,s0_tdma,s0_tin,"
              "delta_s0_no_interference,delta_s0_tdma,delta_s0_tin\n"
           << ch.k << "," << fmt17(report.ebno_min) << "," << fmt17(report.s0_no_interference)
           << "," << fmt17(report.s0_tdma) << "," << fmt17(report.s0_tin) << ","
           << fmt17(report.delta_s0.at("no_interference")) << ","
           << fmt17(report.delta_s0.at("tdma")) << "," << fmt17(report.delta_s0.at("tin"))
           << "\n";
    } else {
        os << "k=" << ch.k << "\n";
        os << "ebno_min=" << fmt17(report.ebno_min) << "\n";
        os << "s0_no_interference=" << fmt17(report.s0_no_interference) << "\n";
        os << "s0_tdma=" << fmt17(report.s0_tdma) << "\n";
        os << "s0_tin=" << fmt17(report.s0_tin) << "\n";
        for (const auto& [scheme, delta] : report.delta_s0)
            os << "delta_s0_" << scheme << "=" << fmt17(delta) << "\n";
    }
    return 0;
}

int run_align(const SourceOpts& src, const AlignmentOptions& opt, const std::string& out_path,
              const std::string& format) {
    const Channel ch = resolve_channel(src);
    const AlignmentResult res = optimize_phases(ch, opt);
    Sink sink(out_path);
    std::ostream& os = sink.stream();
    if (format == "csv") {
        os << "k,cost_star,s0_inta,restarts_used,converged,theta_star\n"
           << ch.k << "," << fmt17(res.cost_star) << "," << fmt17(res.slope) << ","
           << res.restarts_used << "," << (res.converged ? 1 : 0) << ","
           << join17(res.theta_star, ';') << "\n";
    } else {
        os << "k=" << ch.k << "\n";
        os << "cost_star=" << fmt17(res.cost_star) << "\n";
        os << "s0_inta=" << fmt17(res.slope) << "\n";
        os << "theta_star=" << join17(res.theta_star, ',') << "\n";
        os << "restarts_used=" << res.restarts_used << "\n";
        os << "converged=" << (res.converged ? 1 : 0) << "\n";
    }
    return res.converged ? 0 : 2;
}

int run_bound(const SourceOpts& src, const BoundOptions& opt, const std::string& out_path,
              const std::string& format) {
    const Channel ch = resolve_channel(src);
    const OuterBoundResult res = slope_outer_bound(ch, opt);
    Sink sink(out_path);
    std::ostream& os = sink.stream();
    if (format == "csv") {
        os << "k,s0_bound,denominator,kkt_residual,membership,converged\n"
           << ch.k << "," << fmt17(res.slope) << "," << fmt17(res.minimum.value) << ","
           << fmt17(res.minimum.kkt_residual) << "," << (res.membership ? 1 : 0) << ","
           << (res.converged ? 1 : 0) << "\n";
    } else {
        os << "k=" << ch.k << "\n";
        os << "s0_bound=" << fmt17(res.slope) << "\n";
        os << "denominator=" << fmt17(res.minimum.value) << "\n";
        os << "kkt_residual=" << fmt17(res.minimum.kkt_residual) << "\n";
        os << "membership=" << (res.membership ? "pass" : "fail") << "\n";
        os << "converged=" << (res.converged ? 1 : 0) << "\n";
    }
    return res.converged ? 0 : 2;
}

int run_membership(const SourceOpts& src, double power, double p_hi, double tol,
                   const std::string& out_path, const std::string& format) {
    const Channel ch = resolve_channel(src);
    const std::vector<PsdCertificate> certs = check_membership(ch, power, tol);
    std::optional<double> epsilon;
    std::string epsilon_note;
    if (membership_passes(check_membership(ch, 0.0, tol))) {
        try {
            epsilon = max_feasible_power(ch, tol, p_hi);
        } catch (const std::runtime_error&) {
            epsilon_note = "at_least_p_hi";
        }
    } else {
        epsilon_note = "undefined_fails_at_zero";
    }

    Sink sink(out_path);
    std::ostream& os = sink.stream();
    if (format == "csv") {
        os << "j,min_eigenvalue,tolerance,psd,boundary\n";
        for (const PsdCertificate& c : certs)
            os << c.j_index << "," << fmt17(c.min_eigenvalue) << "," << fmt17(c.tolerance)
               << "," << (c.is_psd ? 1 : 0) << "," << (c.at_boundary ? 1 : 0) << "\n";
    } else {
        os << "k=" << ch.k << "\n";
        os << "power=" << fmt17(power) << "\n";
        os << "membership=" << (membership_passes(certs) ? "pass" : "fail") << "\n";
        for (const PsdCertificate& c : certs) {
            os << "min_eigenvalue_j" << c.j_index << "=" << fmt17(c.min_eigenvalue) << "\n";
            os << "psd_j" << c.j_index << "=" << (c.is_psd ? 1 : 0) << "\n";
        }
        if (epsilon)
            os << "epsilon=" << fmt17(*epsilon) << "\n";
        else
            os << "epsilon=" << epsilon_note << " p_hi=" << fmt17(p_hi) << "\n";
    }
    return 0;
}

int run_montecarlo(McCli& mc, bool with_bound) {
    mc.finalize();
    mc.config.include_bound = with_bound;
    const std::vector<SampleRecord> records = run_experiment(mc.config, mc.jobs);
    emit_rows(records, mc);
    for (const SampleRecord& r : records)
        if (!r.converged) return 2;
    return 0;
}

int run_sweep(McCli& mc) {
    mc.finalize();
    const std::vector<SweepRow> rows = median_sweep(mc.config, mc.jobs);
    emit_rows(rows, mc);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wbslope: low-SNR wideband-slope analysis of K-user Gaussian "
                 "interference channels"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("wbslope ") + kVersion);

    SourceOpts slope_src, align_src, bound_src, member_src;
    std::string slope_out, align_out, bound_out, member_out;
    std::string slope_fmt = "text", align_fmt = "text", bound_fmt = "text",
                member_fmt = "text";
    AlignmentOptions align_opt;
    BoundOptions bound_opt;
    double member_power = 0.0, member_p_hi = 10.0, member_tol = 1e-10;
    McCli mc_cli, sweep_cli;
    bool with_bound = false;

    const auto fmt_check = CLI::IsMember({"text", "csv"});

    auto* slope_cmd =
        app.add_subcommand("slope", "closed-form slope report for one channel");
    add_source_options(slope_cmd, slope_src);
    slope_cmd->add_option("--out", slope_out, "write output here instead of stdout");
    slope_cmd->add_option("--format", slope_fmt, "text or csv")->check(fmt_check);

    auto* align_cmd = app.add_subcommand(
        "align", "optimize one-dimensional signaling directions for one channel");
    add_source_options(align_cmd, align_src);
    align_cmd->add_option("--seed", align_opt.seed, "restart seed (default 0)");
    align_cmd->add_option("--restarts", align_opt.restarts, "multi-start count");
    align_cmd->add_option("--tol", align_opt.tol, "gradient-norm tolerance");
    align_cmd->add_option("--out", align_out, "write output here instead of stdout");
    align_cmd->add_option("--format", align_fmt, "text or csv")->check(fmt_check);

    auto* bound_cmd =
        app.add_subcommand("bound", "wideband-slope outer bound for one channel");
    add_source_options(bound_cmd, bound_src);
    bound_cmd->add_option("--seed", bound_opt.seed, "restart seed (default 0)");
    bound_cmd->add_option("--restarts", bound_opt.restarts, "random restart count");
    bound_cmd->add_option("--tol", bound_opt.tol, "KKT residual tolerance");
    bound_cmd->add_option("--out", bound_out, "write output here instead of stdout");
    bound_cmd->add_option("--format", bound_fmt, "text or csv")->check(fmt_check);

    auto* member_cmd = app.add_subcommand(
        "membership", "PSD certificates and maximum feasible power for one channel");
    add_source_options(member_cmd, member_src);
    member_cmd->add_option("--power", member_power, "per-user power for the certificates");
    member_cmd->add_option("--p-hi", member_p_hi, "upper bracket for the power bisection");
    member_cmd->add_option("--tol", member_tol, "relative PSD tolerance");
    member_cmd->add_option("--out", member_out, "write output here instead of stdout");
    member_cmd->add_option("--format", member_fmt, "text or csv")->check(fmt_check);

    auto* mc_cmd = app.add_subcommand(
        "montecarlo", "per-realization slope records over random-phase channels");
    add_mc_options(mc_cmd, mc_cli);
    mc_cmd->add_flag("--with-bound", with_bound, "also compute the outer bound per record");

    auto* sweep_cmd =
        app.add_subcommand("sweep", "median s0_inta versus a, with TIN/TDMA reference");
    add_mc_options(sweep_cmd, sweep_cli);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (slope_cmd->parsed()) return run_slope(slope_src, slope_out, slope_fmt);
        if (align_cmd->parsed()) return run_align(align_src, align_opt, align_out, align_fmt);
        if (bound_cmd->parsed()) return run_bound(bound_src, bound_opt, bound_out, bound_fmt);
        if (member_cmd->parsed())
            return run_membership(member_src, member_power, member_p_hi, member_tol,
                                  member_out, member_fmt);
        if (mc_cmd->parsed()) return run_montecarlo(mc_cli, with_bound);
        if (sweep_cmd->parsed()) return run_sweep(sweep_cli);
    } catch (const std::exception& e) {
        std::cerr << "wbslope: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
