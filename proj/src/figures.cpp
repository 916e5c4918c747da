#include "mdms/figures.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace mdms {
namespace {

std::string fmt(double v, const char* f = "%.6f") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, v);
    return std::string(buf);
}

[[noreturn]] void missing(FigureId id, const std::string& what) {
    throw std::runtime_error("figure " + figure_id_name(id) + ": " + what);
}

struct StoreIndex {
    const ResultStore& store;
    std::vector<CellSummary> cells;
    std::map<std::string, const CellSummary*> by_key;

    explicit StoreIndex(const ResultStore& s) : store(s), cells(s.summarize()) {
        for (const CellSummary& c : cells)
            by_key[key(c.cell.scenario, c.cell.policy, c.cell.n_uavs)] = &c;
    }

    static std::string key(const std::string& scenario,
                           const std::string& policy, int n_uavs) {
        return scenario + "\x1f" + policy + "\x1f" + std::to_string(n_uavs);
    }

    const CellSummary& at(FigureId id, const std::string& scenario,
                          const std::string& policy, int n_uavs) const {
        const auto it = by_key.find(key(scenario, policy, n_uavs));
        if (it == by_key.end())
            missing(id, "missing cell scenario=" + scenario + " policy=" +
                            policy + " n_uavs=" + std::to_string(n_uavs) +
                            "; the campaign must sweep it");
        return *it->second;
    }
};

const ScenarioConfig* find_scenario(const CampaignConfig& cfg,
                                    const std::string& kind,
                                    bool with_false_targets) {
    for (const ScenarioConfig& s : cfg.scenarios)
        if (s.kind == kind && s.false_ids.empty() != with_false_targets)
            return &s;
    return nullptr;
}

std::vector<const NamedPolicy*> mdm_policies(const CampaignConfig& cfg) {
    std::vector<const NamedPolicy*> out;
    for (const NamedPolicy& p : cfg.policies)
        if (p.spec.family == PolicyFamily::Mdm) out.push_back(&p);
    return out;
}

const NamedPolicy* sss_policy(const CampaignConfig& cfg, ProcessKind kind) {
    for (const NamedPolicy& p : cfg.policies)
        if (p.spec.family == PolicyFamily::Sss &&
            p.spec.sss.process.kind == kind)
            return &p;
    return nullptr;
}

std::vector<const NamedPolicy*> pso_policies(const CampaignConfig& cfg) {
    std::vector<const NamedPolicy*> out;
    for (const NamedPolicy& p : cfg.policies)
        if (p.spec.family == PolicyFamily::Pso) out.push_back(&p);
    return out;
}

std::string process_labels(const KnowledgeBase& kb) {
    std::string out;
    for (const SearchLevel& lvl : kb.levels) {
        if (!out.empty()) out += '+';
        out += lvl.process.name();
    }
    return out;
}

/// Box-plot figures: one row per (policy, n_uavs) with the five-number
/// summary of the chosen metric for one scenario kind.
std::string boxes(const ResultStore& store, FigureId id,
                  const std::string& scenario_kind, bool completion) {
    const CampaignConfig& cfg = store.config;
    const ScenarioConfig* scenario = find_scenario(cfg, scenario_kind, false);
    if (!scenario)
        missing(id, "needs a scenario of kind " + scenario_kind +
                        " without false targets");
    const std::vector<const NamedPolicy*> mdms = mdm_policies(cfg);
    if (mdms.empty()) missing(id, "needs a policy of kind mdm");
    std::vector<const NamedPolicy*> policies = mdms;
    for (const ProcessKind k :
         {ProcessKind::Uniform, ProcessKind::Brownian, ProcessKind::Levy}) {
        const NamedPolicy* p = sss_policy(cfg, k);
        if (!p)
            missing(id, "needs the three single-sensor baselines (us, bs, ls)");
        policies.push_back(p);
    }

    const StoreIndex index(store);
    std::string out =
        "figure,scenario,policy,n_uavs,metric,min,q1,median,q3,max,runs,"
        "censored\n";
    std::vector<int> axis = cfg.n_uavs_axis;
    std::sort(axis.begin(), axis.end());
    for (const int n : axis) {
        for (const NamedPolicy* p : policies) {
            const CellSummary& c = index.at(id, scenario->name, p->name, n);
            const FiveNumber* f = &c.box_t_nc;
            if (completion) {
                if (!c.box_t_s_defined)
                    missing(id, "cell scenario=" + scenario->name + " policy=" +
                                    p->name + " n_uavs=" + std::to_string(n) +
                                    " has no uncensored completion times");
                f = &c.box_t_s;
            }
            out += figure_id_name(id) + ',' + scenario->name + ',' + p->name +
                   ',' + std::to_string(n) + ',' +
                   (completion ? "t_s" : "t_nc") + ',' + fmt(f->min) + ',' +
                   fmt(f->q1) + ',' + fmt(f->median) + ',' + fmt(f->q3) + ',' +
                   fmt(f->max) + ',' + std::to_string(c.stats.runs) + ',' +
                   std::to_string(c.stats.censored) + "\n";
        }
    }
    return out;
}

void append_stats(std::string& out, const CellSummary& c) {
    out += ',' + fmt(c.stats.mean_t_nc) + ',' + fmt(c.stats.sd_t_nc);
    if (c.stats.t_s_defined)
        out += ',' + fmt(c.stats.mean_t_s) + ',' + fmt(c.stats.sd_t_s);
    else
        out += ",,";
}

/// Step-length sweep: every mdm policy against every scenario, labeled
/// with its level-1 step.
std::string step_sweep(const ResultStore& store, FigureId id) {
    const CampaignConfig& cfg = store.config;
    const std::vector<const NamedPolicy*> mdms = mdm_policies(cfg);
    if (mdms.empty()) missing(id, "needs mdm policies sweeping delta1");
    const StoreIndex index(store);
    std::string out =
        "scenario,policy,delta1,delta1_frac_of_l,n_uavs,mean_t_nc,sd_t_nc,"
        "mean_t_s,sd_t_s,censored\n";
    for (const ScenarioConfig& s : cfg.scenarios) {
        for (const NamedPolicy* p : mdms) {
            const double delta1 = p->spec.mdm.levels.front().step_length;
            for (const int n : cfg.n_uavs_axis) {
                const CellSummary& c = index.at(id, s.name, p->name, n);
                out += s.name + ',' + p->name + ',' + fmt(delta1, "%.1f") +
                       ',' + fmt(delta1 / cfg.region.length, "%.2f") + ',' +
                       std::to_string(n);
                append_stats(out, c);
                out += ',' + std::to_string(c.stats.censored) + "\n";
            }
        }
    }
    return out;
}

/// Process-grid tables: every mdm policy per scenario of the requested
/// kinds, labeled with its per-level process chain.
std::string process_grid(const ResultStore& store, FigureId id,
                         std::vector<std::string> kinds) {
    const CampaignConfig& cfg = store.config;
    const std::vector<const NamedPolicy*> mdms = mdm_policies(cfg);
    if (mdms.empty()) missing(id, "needs mdm policies sweeping the processes");
    const StoreIndex index(store);
    std::string out =
        "scenario,policy,levels,n_uavs,mean_t_nc,sd_t_nc,mean_t_s,sd_t_s,"
        "censored\n";
    bool any = false;
    for (const std::string& kind : kinds) {
        const ScenarioConfig* s = find_scenario(cfg, kind, false);
        if (!s) continue;
        any = true;
        for (const NamedPolicy* p : mdms) {
            for (const int n : cfg.n_uavs_axis) {
                const CellSummary& c = index.at(id, s->name, p->name, n);
                out += s->name + ',' + p->name + ',' +
                       process_labels(p->spec.mdm) + ',' + std::to_string(n);
                append_stats(out, c);
                out += ',' + std::to_string(c.stats.censored) + "\n";
            }
        }
    }
    if (!any) {
        std::string list;
        for (const std::string& k : kinds) list += (list.empty() ? "" : ", ") + k;
        missing(id, "needs a scenario of kind " + list);
    }
    return out;
}

/// Comparison tables: each mdm policy against each baseline, with both
/// efficiency conventions and the completeness improvement.
std::string comparison(const ResultStore& store, FigureId id,
                       bool false_targets, bool swarm_baselines) {
    const CampaignConfig& cfg = store.config;
    const std::vector<const NamedPolicy*> mdms = mdm_policies(cfg);
    if (mdms.empty()) missing(id, "needs an mdm policy");
    std::vector<const NamedPolicy*> baselines;
    if (swarm_baselines) {
        baselines = pso_policies(cfg);
        if (baselines.empty())
            missing(id, "needs the swarm baselines (pso, spso, arpso)");
    } else {
        for (const ProcessKind k :
             {ProcessKind::Uniform, ProcessKind::Brownian, ProcessKind::Levy}) {
            const NamedPolicy* p = sss_policy(cfg, k);
            if (!p)
                missing(id,
                        "needs the three single-sensor baselines (us, bs, ls)");
            baselines.push_back(p);
        }
    }
    std::vector<const ScenarioConfig*> scenarios;
    for (const ScenarioConfig& s : cfg.scenarios)
        if (s.false_ids.empty() != false_targets) scenarios.push_back(&s);
    if (scenarios.empty())
        missing(id, false_targets
                        ? "needs scenarios with false_ids set"
                        : "needs scenarios without false targets");

    const StoreIndex index(store);
    std::string out =
        "scenario,n_uavs,policy,baseline,mean_t_nc,mean_t_nc_baseline,aise,"
        "aise_alt,mean_t_s,mean_t_s_baseline,aisc\n";
    for (const ScenarioConfig* s : scenarios) {
        for (const int n : cfg.n_uavs_axis) {
            for (const NamedPolicy* m : mdms) {
                const CellSummary& cm = index.at(id, s->name, m->name, n);
                for (const NamedPolicy* b : baselines) {
                    const CellSummary& cb = index.at(id, s->name, b->name, n);
                    out += s->name + ',' + std::to_string(n) + ',' + m->name +
                           ',' + b->name + ',' + fmt(cm.stats.mean_t_nc) +
                           ',' + fmt(cb.stats.mean_t_nc) + ',' +
                           fmt(aise(cm.stats.mean_t_nc, cb.stats.mean_t_nc),
                               "%.2f") +
                           ',' +
                           fmt(aise_alt(cm.stats.mean_t_nc,
                                        cb.stats.mean_t_nc),
                               "%.2f");
                    if (cm.stats.t_s_defined && cb.stats.t_s_defined)
                        out += ',' + fmt(cm.stats.mean_t_s) + ',' +
                               fmt(cb.stats.mean_t_s) + ',' +
                               fmt(aisc(cb.stats.mean_t_s, cm.stats.mean_t_s),
                                   "%.2f");
                    else
                        out += ",,,";
                    out += "\n";
                }
            }
        }
    }
    return out;
}

}  // namespace

FigureId parse_figure_id(const std::string& name) {
    static const std::map<std::string, FigureId> ids = {
        {"fig4", FigureId::Fig4},         {"fig5", FigureId::Fig5},
        {"fig6", FigureId::Fig6},         {"fig7", FigureId::Fig7},
        {"fig8", FigureId::Fig8},         {"fig9", FigureId::Fig9},
        {"table3", FigureId::TableIII},   {"table4", FigureId::TableIV},
        {"table5", FigureId::TableV},     {"table6", FigureId::TableVI},
        {"table7", FigureId::TableVII},   {"table8", FigureId::TableVIII},
    };
    std::string lower;
    for (const char c : name)
        lower.push_back(static_cast<char>(std::tolower(c)));
    const auto it = ids.find(lower);
    if (it != ids.end()) return it->second;
    std::string valid;
    for (const auto& [k, v] : ids) valid += (valid.empty() ? "" : ", ") + k;
    throw std::invalid_argument("unknown figure id " + name + " (expected " +
                                valid + ")");
}

std::string figure_id_name(FigureId id) {
    switch (id) {
        case FigureId::Fig4: return "fig4";
        case FigureId::Fig5: return "fig5";
        case FigureId::Fig6: return "fig6";
        case FigureId::Fig7: return "fig7";
        case FigureId::Fig8: return "fig8";
        case FigureId::Fig9: return "fig9";
        case FigureId::TableIII: return "table3";
        case FigureId::TableIV: return "table4";
        case FigureId::TableV: return "table5";
        case FigureId::TableVI: return "table6";
        case FigureId::TableVII: return "table7";
        case FigureId::TableVIII: return "table8";
    }
    return "?";
}

std::string emit_figure_data(const ResultStore& store, FigureId id) {
    switch (id) {
        case FigureId::Fig4: return boxes(store, id, "fixed", false);
        case FigureId::Fig5: return boxes(store, id, "fixed", true);
        case FigureId::Fig6: return boxes(store, id, "popup", false);
        case FigureId::Fig7: return boxes(store, id, "popup", true);
        case FigureId::Fig8: return boxes(store, id, "dynamic", false);
        case FigureId::Fig9: return boxes(store, id, "dynamic", true);
        case FigureId::TableIII: return step_sweep(store, id);
        case FigureId::TableIV: return process_grid(store, id, {"fixed"});
        case FigureId::TableV: return comparison(store, id, false, false);
        case FigureId::TableVI:
            return process_grid(store, id, {"popup", "dynamic"});
        case FigureId::TableVII: return comparison(store, id, true, false);
        case FigureId::TableVIII: return comparison(store, id, false, true);
    }
    throw std::logic_error("unhandled figure id");
}

}  // namespace mdms
