#include "doctest.h"

#include "mdms/figures.hpp"

#include <sstream>
#include <string>
#include <vector>

using namespace mdms;
using nlohmann::json;

namespace {

// Builds a store with fabricated rows, no simulation: each figure is a
// pure function of (config, rows), so known inputs pin its output.
template <typename Fill>
ResultStore fabricate(CampaignConfig cfg, Fill fill) {
    ResultStore store;
    store.config = std::move(cfg);
    const int runs = store.config.runs;
    for (int cell = 0; cell < store.config.cell_count(); ++cell) {
        const CellInfo info = store.config.cell_info(cell);
        for (int r = 0; r < runs; ++r) {
            RunRow row;
            row.run_id = static_cast<long long>(cell) * runs + r;
            row.seed = run_seed(store.config.base_seed, cell, r);
            row.policy = info.policy;
            row.scenario = info.scenario;
            row.n_uavs = info.n_uavs;
            fill(row, cell, r);
            store.rows.push_back(std::move(row));
        }
    }
    return store;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

void expect_figure_error(const ResultStore& store, FigureId id,
                         const std::string& needle) {
    try {
        emit_figure_data(store, id);
        FAIL_CHECK("figure " << figure_id_name(id) << " did not fail");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
}

// Four runs per cell, four policies, UAV axis deliberately unsorted.
CampaignConfig box_config() {
    return parse_campaign_config(json::parse(R"({
        "mission": {"runs": 4, "n_uavs": [12, 6]},
        "scenarios": [{"name": "fixed", "kind": "fixed"}],
        "policies": [{"name": "mdm", "kind": "mdm"},
                     {"name": "us", "kind": "us"},
                     {"name": "bs", "kind": "bs"},
                     {"name": "ls", "kind": "ls"}]
    })"));
}

// cell c, run r: t_nc = 10c + r + 1, t_s = t_nc + 0.5, nothing censored.
ResultStore box_store() {
    return fabricate(box_config(), [](RunRow& row, int cell, int r) {
        row.t_nc = 10 * cell + r + 1;
        row.t_s = row.t_nc + 0.5;
    });
}

}  // namespace

TEST_CASE("figure ids parse case-insensitively and round-trip") {
    const std::vector<std::string> names = {"fig4", "fig5", "fig6",
                                            "fig7", "fig8", "fig9",
                                            "table3", "table4", "table5",
                                            "table6", "table7", "table8"};
    for (const std::string& n : names)
        CHECK(figure_id_name(parse_figure_id(n)) == n);
    CHECK(parse_figure_id("Fig4") == FigureId::Fig4);
    CHECK(parse_figure_id("TABLE5") == FigureId::TableV);
    CHECK_THROWS_AS(parse_figure_id("fig99"), std::invalid_argument);
}

TEST_CASE("box figures emit five-number rows sorted by uav count") {
    const ResultStore store = box_store();
    const auto lines = lines_of(emit_figure_data(store, FigureId::Fig4));

    REQUIRE(lines.size() == 9);  // header + 2 axis points x 4 policies
    CHECK(lines[0] ==
          "figure,scenario,policy,n_uavs,metric,min,q1,median,q3,max,runs,"
          "censored");
    // n_uavs axis is stored [12, 6] but rows come out 6 first.
    // (mdm, 6) is cell 1: counts {11, 12, 13, 14}.
    CHECK(lines[1] ==
          "fig4,fixed,mdm,6,t_nc,11.000000,11.750000,12.500000,13.250000,"
          "14.000000,4,0");
    // (us, 12) is cell 2: counts {21, 22, 23, 24}.
    CHECK(lines[6] ==
          "fig4,fixed,us,12,t_nc,21.000000,21.750000,22.500000,23.250000,"
          "24.000000,4,0");

    const auto ts_lines = lines_of(emit_figure_data(store, FigureId::Fig5));
    CHECK(ts_lines[6] ==
          "fig5,fixed,us,12,t_s,21.500000,22.250000,23.000000,23.750000,"
          "24.500000,4,0");
}

TEST_CASE("completion boxes refuse a fully censored cell") {
    ResultStore store = box_store();
    // Censor every run of cell 1 (mdm, 6 uavs).
    for (int r = 0; r < 4; ++r) {
        RunRow& row = store.rows[static_cast<std::size_t>(4 + r)];
        row.t_s.reset();
        row.censored = true;
    }
    expect_figure_error(store, FigureId::Fig5,
                        "no uncensored completion times");
    // The count metric still works and reports the censoring.
    const auto lines = lines_of(emit_figure_data(store, FigureId::Fig4));
    CHECK(lines[1] ==
          "fig4,fixed,mdm,6,t_nc,11.000000,11.750000,12.500000,13.250000,"
          "14.000000,4,4");
}

TEST_CASE("box figures name what a thin campaign is missing") {
    // No levy baseline.
    const CampaignConfig no_ls = parse_campaign_config(json::parse(R"({
        "mission": {"runs": 1},
        "scenarios": [{"name": "fixed", "kind": "fixed"}],
        "policies": [{"name": "mdm", "kind": "mdm"},
                     {"name": "us", "kind": "us"},
                     {"name": "bs", "kind": "bs"}]
    })"));
    const ResultStore thin =
        fabricate(no_ls, [](RunRow& row, int cell, int) {
            row.t_nc = cell + 1;
        });
    expect_figure_error(thin, FigureId::Fig4, "us, bs, ls");

    // Wrong scenario kind for the requested figure.
    const CampaignConfig popup_only = parse_campaign_config(json::parse(R"({
        "mission": {"runs": 1},
        "scenarios": [{"name": "popup", "kind": "popup"}],
        "policies": [{"name": "mdm", "kind": "mdm"},
                     {"name": "us", "kind": "us"},
                     {"name": "bs", "kind": "bs"},
                     {"name": "ls", "kind": "ls"}]
    })"));
    const ResultStore popup_store =
        fabricate(popup_only, [](RunRow& row, int cell, int) {
            row.t_nc = cell + 1;
        });
    expect_figure_error(popup_store, FigureId::Fig4, "kind fixed");
    CHECK_NOTHROW(emit_figure_data(popup_store, FigureId::Fig6));

    const ResultStore fixed_store = box_store();
    expect_figure_error(fixed_store, FigureId::Fig6, "kind popup");
    expect_figure_error(fixed_store, FigureId::Fig8, "kind dynamic");
}

TEST_CASE("baseline comparison table computes both efficiency conventions") {
    const CampaignConfig cfg = parse_campaign_config(json::parse(R"({
        "mission": {"runs": 1, "n_uavs": 12},
        "scenarios": [{"name": "fixed", "kind": "fixed"}],
        "policies": [{"name": "mdm", "kind": "mdm"},
                     {"name": "us", "kind": "us"},
                     {"name": "bs", "kind": "bs"},
                     {"name": "ls", "kind": "ls"}]
    })"));
    const int t_nc[] = {466, 409, 380, 350};
    const double t_s[] = {4001.0, 7879.0, 8500.0, 9000.0};
    const ResultStore store =
        fabricate(cfg, [&](RunRow& row, int cell, int) {
            row.t_nc = t_nc[cell];
            row.t_s = t_s[cell];
        });

    const auto lines = lines_of(emit_figure_data(store, FigureId::TableV));
    REQUIRE(lines.size() == 4);  // header + one line per baseline
    CHECK(lines[0] ==
          "scenario,n_uavs,policy,baseline,mean_t_nc,mean_t_nc_baseline,aise,"
          "aise_alt,mean_t_s,mean_t_s_baseline,aisc");
    CHECK(lines[1] ==
          "fixed,12,mdm,us,466.000000,409.000000,13.94,12.23,4001.000000,"
          "7879.000000,49.22");
    CHECK(lines[2] ==
          "fixed,12,mdm,bs,466.000000,380.000000,22.63,18.45,4001.000000,"
          "8500.000000,52.93");
    CHECK(lines[3] ==
          "fixed,12,mdm,ls,466.000000,350.000000,33.14,24.89,4001.000000,"
          "9000.000000,55.54");
}

TEST_CASE("swarm comparison table uses the pso family as baselines") {
    const CampaignConfig cfg = parse_campaign_config(json::parse(R"({
        "mission": {"runs": 1, "n_uavs": 12},
        "scenarios": [{"name": "fixed", "kind": "fixed"}],
        "policies": [{"name": "mdm", "kind": "mdm"},
                     {"name": "pso", "kind": "pso"},
                     {"name": "spso", "kind": "spso"},
                     {"name": "arpso", "kind": "arpso"}]
    })"));
    const int t_nc[] = {500, 400, 380, 350};
    const double t_s[] = {4000.0, 6000.0, 6500.0, 7000.0};
    const ResultStore store =
        fabricate(cfg, [&](RunRow& row, int cell, int) {
            row.t_nc = t_nc[cell];
            row.t_s = t_s[cell];
        });

    const auto lines = lines_of(emit_figure_data(store, FigureId::TableVIII));
    REQUIRE(lines.size() == 4);
    CHECK(lines[1] ==
          "fixed,12,mdm,pso,500.000000,400.000000,25.00,20.00,4000.000000,"
          "6000.000000,33.33");

    expect_figure_error(box_store(), FigureId::TableVIII, "swarm baselines");
}

TEST_CASE("false-target table selects only scenarios with false ids") {
    const CampaignConfig cfg = parse_campaign_config(json::parse(R"({
        "mission": {"runs": 1, "n_uavs": 12},
        "scenarios": [{"name": "clean", "kind": "fixed"},
                      {"name": "decoys", "kind": "fixed",
                       "false_ids": [2, 5, 8]}],
        "policies": [{"name": "mdm", "kind": "mdm"},
                     {"name": "us", "kind": "us"},
                     {"name": "bs", "kind": "bs"},
                     {"name": "ls", "kind": "ls"}]
    })"));
    const ResultStore store =
        fabricate(cfg, [](RunRow& row, int cell, int) {
            row.t_nc = 100 + cell;
            row.t_s = 1000.0 + cell;
        });

    const auto lines = lines_of(emit_figure_data(store, FigureId::TableVII));
    REQUIRE(lines.size() == 4);
    for (std::size_t j = 1; j < lines.size(); ++j)
        CHECK(lines[j].rfind("decoys,", 0) == 0);

    expect_figure_error(box_store(), FigureId::TableVII, "false_ids");
}

TEST_CASE("step sweep table labels each mdm policy with its level-1 step") {
    const CampaignConfig cfg = parse_campaign_config(json::parse(R"({
        "mission": {"runs": 1, "n_uavs": 12},
        "scenarios": [{"name": "fixed", "kind": "fixed"}],
        "policies": [{"name": "d10", "kind": "mdm", "delta1": 2000},
                     {"name": "d20", "kind": "mdm", "delta1": 4000}]
    })"));
    const ResultStore store =
        fabricate(cfg, [](RunRow& row, int cell, int) {
            row.t_nc = 100 * (cell + 1);
            row.t_s = 5000.0;
        });

    const auto lines = lines_of(emit_figure_data(store, FigureId::TableIII));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] ==
          "scenario,policy,delta1,delta1_frac_of_l,n_uavs,mean_t_nc,sd_t_nc,"
          "mean_t_s,sd_t_s,censored");
    CHECK(lines[1] ==
          "fixed,d10,2000.0,0.10,12,100.000000,0.000000,5000.000000,0.000000,"
          "0");
    CHECK(lines[2].rfind("fixed,d20,4000.0,0.20,12,200.000000", 0) == 0);
}

TEST_CASE("process grid tables label mdm policies by their level chain") {
    const ResultStore fixed_store = box_store();
    const auto lines =
        lines_of(emit_figure_data(fixed_store, FigureId::TableIV));
    REQUIRE(lines.size() == 3);  // one mdm policy, two axis points
    CHECK(lines[1].rfind("fixed,mdm,levy+brownian,", 0) == 0);

    // The popup and dynamic grid table refuses a fixed-only store.
    expect_figure_error(fixed_store, FigureId::TableVI, "popup, dynamic");

    const CampaignConfig moving = parse_campaign_config(json::parse(R"({
        "mission": {"runs": 1, "n_uavs": 12},
        "scenarios": [{"name": "popup", "kind": "popup"},
                      {"name": "dynamic", "kind": "dynamic"}],
        "policies": [{"name": "mdm", "kind": "mdm"}]
    })"));
    const ResultStore moving_store =
        fabricate(moving, [](RunRow& row, int cell, int) {
            row.t_nc = 10 + cell;
            row.t_s = 100.0 + cell;
        });
    const auto grid = lines_of(emit_figure_data(moving_store, FigureId::TableVI));
    REQUIRE(grid.size() == 3);
    CHECK(grid[1].rfind("popup,mdm,levy+brownian,12,", 0) == 0);
    CHECK(grid[2].rfind("dynamic,mdm,levy+brownian,12,", 0) == 0);

    expect_figure_error(
        fabricate(parse_campaign_config(json::parse(R"({
            "mission": {"runs": 1},
            "scenarios": [{"name": "fixed", "kind": "fixed"}],
            "policies": [{"name": "us", "kind": "us"}]
        })")),
                  [](RunRow& row, int, int) { row.t_nc = 1; }),
        FigureId::TableIV, "mdm");
}
