#include "mdms/campaign.hpp"
#include "mdms/config.hpp"
#include "mdms/events.hpp"
#include "mdms/figures.hpp"
#include "mdms/metrics.hpp"
#include "mdms/mission.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"

namespace {

using namespace mdms;

int default_workers() {
    // Explicit --workers wins; otherwise the env var; otherwise all cores.
    if (const char* env = std::getenv("MDMS_WORKERS")) {
        const int k = std::atoi(env);
        if (k >= 1) return k;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

void print_summaries(const ResultStore& store) {
    std::printf("%s\n", summary_csv_header().c_str());
    for (const CellSummary& s : store.summarize())
        std::printf("%s\n", cell_summary_to_csv(s).c_str());
}

int cmd_run(const std::string& config_path, std::optional<int> runs,
            std::optional<std::uint64_t> seed, int workers,
            const std::string& out_dir) {
    CampaignConfig cfg = load_campaign_config(config_path);
    if (runs) cfg.runs = *runs;
    if (seed) cfg.base_seed = *seed;
    cfg.validate();
    std::fprintf(stderr, "campaign %s: %d cells x %d runs, %d workers\n",
                 cfg.name.c_str(), cfg.cell_count(), cfg.runs, workers);
    const ResultStore store = run_campaign(cfg, workers);
    if (!out_dir.empty()) {
        store.save(out_dir);
        std::fprintf(stderr, "wrote %s/{manifest.json,runs.csv,summary.csv}\n",
                     out_dir.c_str());
    }
    print_summaries(store);
    return 0;
}

int cmd_replay(const std::string& store_dir, long long run_id,
               const std::string& events_path) {
    const ResultStore store = ResultStore::load(store_dir);
    const RunRecord rec = replay_run(store.config, run_id, true);

    const RunRow& row = store.rows.at(static_cast<std::size_t>(run_id));
    if (rec.t_nc != row.t_nc || rec.censored != row.censored ||
        rec.t_s.has_value() != row.t_s.has_value() ||
        (rec.t_s && std::abs(*rec.t_s - *row.t_s) > 5e-5)) {
        std::fprintf(stderr,
                     "replay mismatch for run %lld: recorded t_nc=%d got %d\n",
                     run_id, row.t_nc, rec.t_nc);
        return 1;
    }
    const int violations = count_causality_violations(rec);
    if (violations != 0) {
        std::fprintf(stderr, "replay: %d event-log violations\n", violations);
        return 1;
    }

    std::string csv = event_csv_header() + "\n";
    for (const Event& e : rec.events) csv += event_to_csv_row(e) + "\n";
    const std::string path = events_path.empty()
                                 ? store_dir + "/events_run" +
                                       std::to_string(run_id) + ".csv"
                                 : events_path;
    write_text(path, csv);
    const std::string ts =
        rec.t_s ? " t_s=" + std::to_string(*rec.t_s) : std::string();
    std::printf("run %lld: t_nc=%d%s, %zu events, log verified, wrote %s\n",
                run_id, rec.t_nc, ts.c_str(), rec.events.size(), path.c_str());
    return 0;
}

int cmd_summarize(const std::string& store_dir, bool check) {
    const ResultStore store = ResultStore::load(store_dir);
    print_summaries(store);
    if (check) {
        // Recompute-check: summaries derived from runs.csv must equal the
        // summary.csv written at campaign time.
        std::ifstream in(std::filesystem::path(store_dir) / "summary.csv",
                         std::ios::binary);
        if (!in) {
            std::fprintf(stderr, "summarize: no summary.csv to check\n");
            return 1;
        }
        std::string recorded((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
        std::string recomputed = summary_csv_header() + "\n";
        for (const CellSummary& s : store.summarize())
            recomputed += cell_summary_to_csv(s) + "\n";
        if (recorded != recomputed) {
            std::fprintf(stderr, "summarize: summary.csv does not match the "
                                 "per-run rows\n");
            return 1;
        }
        std::fprintf(stderr, "summarize: summary.csv matches recomputation\n");
    }
    return 0;
}

int cmd_figures(const std::string& store_dir, const std::string& figure,
                const std::string& dest) {
    const ResultStore store = ResultStore::load(store_dir);
    const FigureId id = parse_figure_id(figure);
    const std::string csv = emit_figure_data(store, id);
    if (dest.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        write_text(dest, csv);
        std::fprintf(stderr, "wrote %s\n", dest.c_str());
    }
    return 0;
}

int cmd_validate(const std::string& config_path) {
    const CampaignConfig cfg = load_campaign_config(config_path);
    std::printf("ok: %d cells (%zu scenarios x %zu policies x %zu uav counts), "
                "%d runs/cell, seed %llu, hash %s\n",
                cfg.cell_count(), cfg.scenarios.size(), cfg.policies.size(),
                cfg.n_uavs_axis.size(), cfg.runs,
                static_cast<unsigned long long>(cfg.base_seed),
                config_hash(cfg).c_str());
    return 0;
}

int cmd_analytic(double r_prev, double r_conf, double speed, double length,
                 double width, double t_d, double t_max, double step) {
    const double area = length * width;
    const double area_prev = 3.14159265358979323846 * r_prev * r_prev;
    std::printf("t,p_single,p_multi\n");
    for (double t = 0.0; t <= t_max + 1e-9; t += step) {
        const double ps = analytic_pcs(t, r_conf, speed, area);
        const double pm = t < t_d
                              ? analytic_pcs(t, r_conf, speed, area)
                              : analytic_pcm(t, t_d, r_conf, speed, area,
                                             area_prev);
        std::printf("%.1f,%.6f,%.6f\n", t, ps, pm);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decentralized multi-UAV stochastic target search simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string store_dir;
    std::string events_path;
    std::string figure;
    std::string dest;
    std::optional<int> runs_override;
    std::optional<std::uint64_t> seed_override;
    int workers = default_workers();
    long long run_id = 0;
    bool check = true;

    auto* run = app.add_subcommand("run", "Execute a campaign config");
    run->add_option("--config", config_path, "Campaign config file")
        ->required();
    run->add_option("--runs", runs_override, "Override runs per cell");
    run->add_option("--seed", seed_override, "Override the base seed");
    run->add_option("--workers", workers,
                    "Worker threads (default: MDMS_WORKERS or all cores)");
    run->add_option("--out", out_dir, "Directory for manifest and CSVs");

    auto* replay = app.add_subcommand(
        "replay", "Re-execute one run from a saved campaign with event log");
    replay->add_option("--out", store_dir, "Campaign output directory")
        ->required();
    replay->add_option("--run-id", run_id, "Global run id")->required();
    replay->add_option("--events", events_path,
                       "Event CSV path (default: <out>/events_run<id>.csv)");

    auto* summarize =
        app.add_subcommand("summarize", "Recompute per-cell summaries");
    summarize->add_option("--out", store_dir, "Campaign output directory")
        ->required();
    summarize->add_flag("--check,!--no-check", check,
                        "Compare with the stored summary.csv");

    auto* figures = app.add_subcommand("figures", "Emit plot-ready data");
    figures->add_option("--out", store_dir, "Campaign output directory")
        ->required();
    figures->add_option("--figure", figure,
                        "fig4..fig9 or table3..table8")
        ->required();
    figures->add_option("--dest", dest, "Output file (default: stdout)");

    auto* validate =
        app.add_subcommand("validate-config", "Parse and validate a config");
    validate->add_option("--config", config_path, "Campaign config file")
        ->required();

    double r_prev = 2000.0, r_conf = 400.0, speed = 20.0;
    double length = 20000.0, width = 20000.0;
    double t_d = 500.0, t_max = 5000.0, step = 50.0;
    auto* analytic = app.add_subcommand(
        "analytic", "Print the analytic confirmation-probability curves");
    analytic->add_option("--r-detect", r_prev, "Detection radius (disk)");
    analytic->add_option("--r-confirm", r_conf, "Confirmation radius");
    analytic->add_option("--speed", speed, "UAV speed");
    analytic->add_option("--length", length, "Region length");
    analytic->add_option("--width", width, "Region width");
    analytic->add_option("--t-d", t_d, "Detection time for the multi curve");
    analytic->add_option("--t-max", t_max, "Last time point");
    analytic->add_option("--step", step, "Time step between points");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return cmd_run(config_path, runs_override, seed_override, workers,
                           out_dir);
        if (replay->parsed()) return cmd_replay(store_dir, run_id, events_path);
        if (summarize->parsed()) return cmd_summarize(store_dir, check);
        if (figures->parsed()) return cmd_figures(store_dir, figure, dest);
        if (validate->parsed()) return cmd_validate(config_path);
        if (analytic->parsed())
            return cmd_analytic(r_prev, r_conf, speed, length, width, t_d,
                                t_max, step);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
