#pragma once

#include "mdms/campaign.hpp"

#include <string>

namespace mdms {

/// The plotable artifacts: box-plot figures (efficiency / completeness
/// per scenario over the UAV-count axis) and the summary tables (step
/// sweep, process grids, baseline comparisons).
enum class FigureId {
    Fig4,   // fixed targets, efficiency box plots per n_uavs
    Fig5,   // fixed targets, completeness box plots
    Fig6,   // pop-up targets, efficiency
    Fig7,   // pop-up targets, completeness
    Fig8,   // dynamic targets, efficiency
    Fig9,   // dynamic targets, completeness
    TableIII,   // level-1 step-length sweep
    TableIV,    // level-process grid, fixed targets
    TableV,     // multi-level vs single-sensor baselines
    TableVI,    // level-process grid, pop-up and dynamic targets
    TableVII,   // baseline comparison with false targets present
    TableVIII,  // multi-level vs swarm baselines
};

FigureId parse_figure_id(const std::string& name);
std::string figure_id_name(FigureId id);

/// Renders the figure's data as CSV from a result store. Throws when the
/// store lacks a required scenario, policy or cell, naming what must be
/// swept to produce it.
std::string emit_figure_data(const ResultStore& store, FigureId id);

}  // namespace mdms
