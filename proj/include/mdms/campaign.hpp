#pragma once

#include "mdms/config.hpp"
#include "mdms/metrics.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace mdms {

inline constexpr const char* kCodeVersion = "1.0.0";
inline constexpr const char* kManifestFormat = "mdms-manifest-v1";

/// One line of runs.csv. Global run id = cell id * runs-per-cell + run
/// index, so rows are cell-major and the id alone locates a run.
struct RunRow {
    long long run_id = 0;
    std::uint64_t seed = 0;
    std::string policy;
    std::string scenario;
    int n_uavs = 0;
    int t_nc = 0;
    std::optional<double> t_s;
    bool censored = false;
};

struct CellSummary {
    CellInfo cell;
    Summary stats;
    FiveNumber box_t_nc{};
    bool box_t_s_defined = false;
    FiveNumber box_t_s{};
};

/// Campaign results bound to the exact config that produced them. save()
/// writes manifest.json (hashed config), runs.csv and summary.csv;
/// load() restores enough to summarize, emit figures and replay runs.
struct ResultStore {
    CampaignConfig config;
    std::vector<RunRow> rows;

    std::vector<double> cell_values(int cell_id, bool completion) const;
    std::vector<CellSummary> summarize() const;
    void save(const std::filesystem::path& dir) const;
    static ResultStore load(const std::filesystem::path& dir);
};

std::string runs_csv_header();
std::string run_row_to_csv(const RunRow& row);
std::string summary_csv_header();
std::string cell_summary_to_csv(const CellSummary& s);

/// Executes every run of every cell, distributed over `workers` threads
/// via a shared work counter. Results are identical for any worker
/// count. A run that throws fails the whole campaign with its cell
/// identified.
ResultStore run_campaign(const CampaignConfig& cfg, int workers = 1);

/// Re-executes one run of a campaign by global run id.
RunRecord replay_run(const CampaignConfig& cfg, long long run_id,
                     bool record_events);

}  // namespace mdms
