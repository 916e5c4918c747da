#pragma once

#include "mdms/mission.hpp"
#include "mdms/region.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace mdms {

/// One sweep-axis scenario: a named target population. `kind` selects a
/// preset layout (fixed / popup / dynamic) or `custom` with an explicit
/// target list; `false_ids` reclassifies some of them as false targets.
struct ScenarioConfig {
    std::string name;
    std::string kind = "fixed";
    double popup_interval = 200.0;
    double dynamic_speed = 5.0;
    double dynamic_lo = -0.2;
    double dynamic_hi = 1.0;
    DynamicDrawMode draw_mode = DynamicDrawMode::PerAxis;
    std::vector<int> false_ids;
    std::vector<TargetSpec> custom_targets;
    std::optional<double> horizon;  // overrides the campaign horizon

    std::vector<TargetSpec> build_targets() const;
};

struct NamedPolicy {
    std::string name;
    PolicySpec spec;
};

/// Identifies one sweep cell. Cells enumerate the cross product
/// scenarios x policies x n_uavs, scenario-major.
struct CellInfo {
    int cell_id = 0;
    std::string scenario;
    std::string policy;
    int n_uavs = 0;
};

struct CampaignConfig {
    std::string name = "campaign";
    Region region{};
    MissionMode mode = MissionMode::Both;
    int runs = 200;
    std::uint64_t base_seed = 0x5EEDBA5EULL;
    double horizon = 1000.0;
    double completion_cap = 50000.0;
    double dt = 0.1;
    double tau = 0.33;
    double uav_speed = 20.0;
    double capture_radius = 20.0;
    double target_step = 0.1;
    std::vector<int> n_uavs_axis{12};
    std::vector<ScenarioConfig> scenarios;
    std::vector<NamedPolicy> policies;

    void validate() const;
    int cell_count() const;
    CellInfo cell_info(int cell_id) const;
    /// Full per-run mission for one cell (validated).
    MissionConfig mission_for(int cell_id) const;
};

/// Per-run seed rule: base seed xor cell id xor run index.
std::uint64_t run_seed(std::uint64_t base_seed, int cell_id, int run_index);

/// Reads a config file, resolving `include` chains (included files load
/// first, the including file's keys win, objects merge recursively).
nlohmann::json load_config_json(const std::filesystem::path& file);

/// Strict parse: unknown keys and type mismatches are errors naming the
/// offending field.
CampaignConfig parse_campaign_config(const nlohmann::json& root);

CampaignConfig load_campaign_config(const std::filesystem::path& file);

/// Effective config with every default materialized; parsing it back
/// yields the same config, and its sorted-key dump is the hashed
/// manifest payload.
nlohmann::json campaign_to_json(const CampaignConfig& cfg);

std::uint64_t fnv1a64(std::string_view data);

/// Hex content hash of the effective config.
std::string config_hash(const CampaignConfig& cfg);

}  // namespace mdms
