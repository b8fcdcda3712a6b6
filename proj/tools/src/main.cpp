// recon: capacity/crossover calculators, reconciliation Monte-Carlo
// campaigns, efficiency-loss curves, and the reference-number report.
//
// Exit codes: 0 success, 1 runtime or data failure, 2 usage error.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "recon/alist.hpp"
#include "recon/analytics.hpp"
#include "recon/channel.hpp"
#include "recon/reconcile.hpp"

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("RECON_SEED"))
        return std::strtoull(env, nullptr, 0);
    return 0;
}

int cmd_capacity(const std::string& channel, double param) {
    double value = 0.0;
    if (channel == "bsc")
        value = recon::bsc_capacity(param);
    else if (channel == "awgn")
        value = recon::awgn_capacity(param);
    else
        value = recon::biawgn_capacity(param);
    std::printf("# channel=%s param=%.12g\n%.12g\n", channel.c_str(), param, value);
    return 0;
}

int cmd_crossover(double snr, bool approx) {
    std::printf("# snr=%.12g approx=%s\n", snr, approx ? "true" : "false");
    std::printf("%.12g\n", approx ? recon::crossover_approx(snr)
                                  : recon::crossover_from_snr(snr));
    return 0;
}

int cmd_simulate(const std::string& strategy, const std::string& code_path,
                 double snr, unsigned m, long frames, int max_iter,
                 std::uint64_t seed, const std::string& out_path) {
    recon::SessionConfig config;
    config.strategy = strategy == "hd" ? recon::Strategy::Hd : recon::Strategy::Sd;
    config.code = recon::load_alist(code_path);
    config.code_id = std::filesystem::path(code_path).filename().string();
    config.snr = snr;
    config.m = m;
    config.n_frames = frames;
    config.max_iter = max_iter;
    config.seed = seed;
    std::printf(
        "# strategy=%s code=%s n=%d r=%d snr=%.12g m=%u frames=%ld max_iter=%d "
        "seed=%llu\n",
        strategy.c_str(), config.code_id.c_str(), config.code.n_cols,
        config.code.n_rows(), snr, m, frames, max_iter,
        static_cast<unsigned long long>(seed));
    if (m % 2 == 0 && m > 1)
        std::fprintf(stderr,
                     "warning: even repetition factor m=%u; majority ties are "
                     "counted as errors\n",
                     m);
    const recon::TrialStats stats = recon::run_trials(config);
    const std::string json = stats.to_json();
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        out << json << '\n';
    }
    std::printf("%s\n", json.c_str());
    return 0;
}

int cmd_figure1(const std::string& out_path, std::vector<unsigned> m_list,
                int grid) {
    if (m_list.empty()) m_list = recon::kDefaultCurveMs;
    std::printf("# out=%s grid=%d m_list=", out_path.c_str(), grid);
    for (std::size_t i = 0; i < m_list.size(); ++i)
        std::printf("%s%u", i ? "," : "", m_list[i]);
    std::printf("\n");
    const auto curves = recon::figure1_data(m_list, grid);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    out << recon::figure1_csv(curves);
    std::printf("wrote %zu curves x %d points\n", curves.size(), grid);
    return 0;
}

int cmd_report(bool as_json, double tolerance_scale) {
    const auto rows = recon::paper_report(tolerance_scale);
    if (as_json)
        std::printf("%s\n", recon::report_json(rows).c_str());
    else
        std::printf("%s", recon::report_table(rows).c_str());
    for (const auto& row : rows)
        if (!row.pass) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reconciliation toolkit for discretely-modulated CV-QKD"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value config file; flags win");

    auto* cap = app.add_subcommand("capacity", "channel capacity in bits");
    std::string cap_channel;
    double cap_param = 0.0;
    cap->add_option("--channel", cap_channel, "bsc | biawgn | awgn")
        ->required()
        ->check(CLI::IsMember({"bsc", "biawgn", "awgn"}));
    cap->add_option("--param", cap_param, "crossover p (bsc) or snr s")->required();

    auto* cross = app.add_subcommand("crossover", "BSC crossover p(s) of a sign-discretized link");
    double cross_snr = 0.0;
    bool cross_approx = false;
    cross->add_option("--snr", cross_snr, "signal-to-noise ratio")->required();
    cross->add_flag("--approx", cross_approx, "small-s approximation 1/2 - sqrt(s/2pi)");

    auto* sim = app.add_subcommand("simulate", "Monte-Carlo reconciliation campaign");
    std::string sim_strategy, sim_code, sim_out;
    double sim_snr = 0.0;
    unsigned sim_m = 1;
    long sim_frames = 1000;
    int sim_max_iter = 200;
    std::uint64_t sim_seed = default_seed();
    sim->add_option("--strategy", sim_strategy, "hd | sd")
        ->required()
        ->check(CLI::IsMember({"hd", "sd"}));
    sim->add_option("--code", sim_code, "alist parity-check file")->required();
    sim->add_option("--snr", sim_snr, "per-symbol SNR")->required();
    sim->add_option("--m", sim_m, "repetition factor (default 1)");
    sim->add_option("--frames", sim_frames, "frame budget (default 1000)");
    sim->add_option("--max-iter", sim_max_iter, "BP iteration cap (default 200)");
    sim->add_option("--seed", sim_seed, "campaign seed (default $RECON_SEED or 0)");
    sim->add_option("--out", sim_out, "write TrialStats JSON here");

    auto* fig = app.add_subcommand("figure1", "repetition efficiency-loss curves as CSV");
    std::string fig_out = "fig1.csv";
    std::vector<unsigned> fig_m;
    int fig_grid = 200;
    fig->add_option("--out", fig_out, "output CSV path (default fig1.csv)");
    fig->add_option("--m", fig_m, "repetition factors (default 3 5 7 9 11 101 1001)");
    fig->add_option("--grid", fig_grid, "points per curve (default 200)")
        ->check(CLI::PositiveNumber);

    auto* rep = app.add_subcommand("report", "recompute reference numbers; exit 0 iff all pass");
    bool rep_json = false;
    double rep_scale = 1.0;
    rep->add_flag("--json", rep_json, "machine-readable output");
    rep->add_option("--tolerance-scale", rep_scale)->group(""); // testing hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cap->parsed()) return cmd_capacity(cap_channel, cap_param);
        if (cross->parsed()) return cmd_crossover(cross_snr, cross_approx);
        if (sim->parsed())
            return cmd_simulate(sim_strategy, sim_code, sim_snr, sim_m, sim_frames,
                                sim_max_iter, sim_seed, sim_out);
        if (fig->parsed()) return cmd_figure1(fig_out, fig_m, fig_grid);
        if (rep->parsed()) return cmd_report(rep_json, rep_scale);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
