#include "mdms/config.hpp"

#include "mdms/scenarios.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>

namespace mdms {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::invalid_argument("config: " + path + ": " + what);
}

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (item.key() == a) {
                known = true;
                break;
            }
        if (!known) fail(join(path, item.key()), "unknown key");
    }
}

const json* find(const json& obj, const char* key) {
    const auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) fail(path, "expected a number");
    return v.get<double>();
}

double number_or(const json& obj, const std::string& path, const char* key,
                 double def) {
    const json* v = find(obj, key);
    return v ? as_number(*v, join(path, key)) : def;
}

int as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<int>();
}

int int_or(const json& obj, const std::string& path, const char* key, int def) {
    const json* v = find(obj, key);
    return v ? as_int(*v, join(path, key)) : def;
}

std::string as_string(const json& v, const std::string& path) {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
}

std::string string_or(const json& obj, const std::string& path, const char* key,
                      const std::string& def) {
    const json* v = find(obj, key);
    return v ? as_string(*v, join(path, key)) : def;
}

Vec2 as_vec2(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2) fail(path, "expected [x, y]");
    return {as_number(v[0], join(path, "0")), as_number(v[1], join(path, "1"))};
}

StochasticProcess parse_process_json(const json& v, const std::string& path) {
    if (v.is_string()) {
        try {
            return parse_process(v.get<std::string>());
        } catch (const std::exception& e) {
            fail(path, e.what());
        }
    }
    if (!v.is_object()) fail(path, "expected a process name or object");
    const std::string kind = string_or(v, path, "kind", "");
    if (kind == "levy") {
        check_keys(v, path, {"kind", "lambda", "alpha"});
        return StochasticProcess::levy(number_or(v, path, "lambda", 1.0),
                                       number_or(v, path, "alpha", 1.0));
    }
    if (kind == "brownian") {
        check_keys(v, path, {"kind", "sigma"});
        return StochasticProcess::brownian(number_or(v, path, "sigma", 1.0));
    }
    if (kind == "uniform") {
        check_keys(v, path, {"kind", "lower", "upper", "mode"});
        const std::string mode = string_or(v, path, "mode", "angle");
        if (mode != "angle" && mode != "raw")
            fail(join(path, "mode"), "expected angle or raw");
        return StochasticProcess::uniform(number_or(v, path, "lower", 0.0),
                                          number_or(v, path, "upper", 1.0),
                                          mode == "angle"
                                              ? UniformDirectionMode::Angle
                                              : UniformDirectionMode::Raw);
    }
    fail(join(path, "kind"), "expected levy, brownian or uniform");
}

json process_to_json(const StochasticProcess& p) {
    json v;
    switch (p.kind) {
        case ProcessKind::Levy:
            v["kind"] = "levy";
            v["lambda"] = p.levy_lambda;
            v["alpha"] = p.levy_alpha;
            break;
        case ProcessKind::Brownian:
            v["kind"] = "brownian";
            v["sigma"] = p.brownian_sigma;
            break;
        case ProcessKind::Uniform:
            v["kind"] = "uniform";
            v["lower"] = p.uniform_lower;
            v["upper"] = p.uniform_upper;
            v["mode"] =
                p.uniform_mode == UniformDirectionMode::Angle ? "angle" : "raw";
            break;
    }
    return v;
}

IndexConfig parse_index(const json& v, const std::string& path) {
    if (!v.is_object()) fail(path, "expected an object");
    check_keys(v, path, {"c_max", "c_min", "gamma", "kappa"});
    IndexConfig idx;
    idx.c_max = number_or(v, path, "c_max", idx.c_max);
    idx.c_min = number_or(v, path, "c_min", idx.c_min);
    idx.gamma = number_or(v, path, "gamma", idx.gamma);
    idx.kappa = number_or(v, path, "kappa", idx.kappa);
    return idx;
}

json index_to_json(const IndexConfig& idx) {
    return json{{"c_max", idx.c_max},
                {"c_min", idx.c_min},
                {"gamma", idx.gamma},
                {"kappa", idx.kappa}};
}

KnowledgeBase parse_mdm_levels(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() < 2)
        fail(path, "expected an array of at least two levels");
    KnowledgeBase kb;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string lp = join(path, std::to_string(i));
        const json& lv = v[i];
        if (!lv.is_object()) fail(lp, "expected an object");
        check_keys(lv, lp, {"radius", "process", "step_length", "index"});
        SearchLevel lvl;
        lvl.sensor.level = static_cast<int>(i) + 1;
        lvl.sensor.role = (i + 1 == v.size()) ? SensorRole::Confirmation
                                              : SensorRole::Detection;
        const json* radius = find(lv, "radius");
        if (!radius) fail(join(lp, "radius"), "required");
        lvl.sensor.radius = as_number(*radius, join(lp, "radius"));
        const json* process = find(lv, "process");
        if (!process) fail(join(lp, "process"), "required");
        lvl.process = parse_process_json(*process, join(lp, "process"));
        const json* step = find(lv, "step_length");
        if (!step) fail(join(lp, "step_length"), "required");
        lvl.step_length = as_number(*step, join(lp, "step_length"));
        if (const json* idx = find(lv, "index"))
            lvl.index = parse_index(*idx, join(lp, "index"));
        kb.levels.push_back(lvl);
    }
    return kb;
}

NamedPolicy parse_policy(const json& v, const std::string& path,
                         const Region& region) {
    if (!v.is_object()) fail(path, "expected an object");
    const std::string kind = string_or(v, path, "kind", "");
    if (kind.empty()) fail(join(path, "kind"), "required");

    NamedPolicy out;
    if (kind == "mdm") {
        check_keys(v, path,
                   {"name", "kind", "levels", "level1_process", "level2_process",
                    "delta1", "delta2", "r1", "r2", "index"});
        const json* levels = find(v, "levels");
        const bool shorthand = v.contains("level1_process") ||
                               v.contains("level2_process") ||
                               v.contains("delta1") || v.contains("delta2") ||
                               v.contains("r1") || v.contains("r2") ||
                               v.contains("index");
        if (levels && shorthand)
            fail(path, "give either levels or the two-level shorthand, not both");
        KnowledgeBase kb;
        if (levels) {
            kb = parse_mdm_levels(*levels, join(path, "levels"));
        } else {
            const double r1 = number_or(v, path, "r1", 2000.0);
            const double r2 = number_or(v, path, "r2", 400.0);
            const double delta1 =
                number_or(v, path, "delta1", 0.2 * region.length);
            const double delta2 = number_or(v, path, "delta2", r1);
            StochasticProcess p1 = StochasticProcess::levy();
            StochasticProcess p2 = StochasticProcess::brownian();
            if (const json* p = find(v, "level1_process"))
                p1 = parse_process_json(*p, join(path, "level1_process"));
            if (const json* p = find(v, "level2_process"))
                p2 = parse_process_json(*p, join(path, "level2_process"));
            IndexConfig idx;
            if (const json* iv = find(v, "index"))
                idx = parse_index(*iv, join(path, "index"));
            try {
                kb = KnowledgeBase::two_level(region, p1, p2, delta1, delta2,
                                              r1, r2, idx);
            } catch (const std::exception& e) {
                fail(path, e.what());
            }
        }
        out.spec = PolicySpec::make_mdm(std::move(kb));
        out.name = string_or(v, path, "name", "mdm");
        return out;
    }

    if (kind == "sss" || kind == "us" || kind == "bs" || kind == "ls") {
        check_keys(v, path,
                   {"name", "kind", "process", "step_length",
                    "confirmation_radius"});
        SssConfig cfg;
        if (kind == "sss") {
            const json* p = find(v, "process");
            if (!p) fail(join(path, "process"), "required for kind sss");
            cfg.process = parse_process_json(*p, join(path, "process"));
        } else {
            if (v.contains("process"))
                fail(join(path, "process"), "implied by kind " + kind);
            cfg.process = kind == "us"   ? StochasticProcess::uniform()
                          : kind == "bs" ? StochasticProcess::brownian()
                                         : StochasticProcess::levy();
        }
        cfg.step_length = number_or(v, path, "step_length", 0.2 * region.length);
        cfg.confirmation_radius =
            number_or(v, path, "confirmation_radius", 400.0);
        out.spec = PolicySpec::make_sss(cfg);
        out.name = string_or(v, path, "name", kind == "sss" ? "sss" : kind);
        return out;
    }

    if (kind == "pso" || kind == "spso" || kind == "arpso") {
        check_keys(v, path,
                   {"name", "kind", "variant", "inertia", "cognitive", "social",
                    "confirmation_radius", "diversity_low",
                    "diversity_high_frac"});
        PsoConfig cfg;
        std::string variant = string_or(v, path, "variant", kind);
        if (kind != "pso" && variant != kind)
            fail(join(path, "variant"), "conflicts with kind " + kind);
        if (variant == "pso")
            cfg.variant = PsoVariant::Pso;
        else if (variant == "spso")
            cfg.variant = PsoVariant::Spso;
        else if (variant == "arpso")
            cfg.variant = PsoVariant::Arpso;
        else
            fail(join(path, "variant"), "expected pso, spso or arpso");
        cfg.inertia = number_or(v, path, "inertia", cfg.inertia);
        cfg.cognitive = number_or(v, path, "cognitive", cfg.cognitive);
        cfg.social = number_or(v, path, "social", cfg.social);
        cfg.confirmation_radius =
            number_or(v, path, "confirmation_radius", 400.0);
        cfg.diversity_low = number_or(v, path, "diversity_low", cfg.diversity_low);
        cfg.diversity_high_frac =
            number_or(v, path, "diversity_high_frac", cfg.diversity_high_frac);
        out.spec = PolicySpec::make_pso(cfg);
        out.name = string_or(v, path, "name", variant);
        return out;
    }

    fail(join(path, "kind"),
         "expected mdm, sss, us, bs, ls, pso, spso or arpso");
}

json policy_to_json(const NamedPolicy& p) {
    json v;
    v["name"] = p.name;
    switch (p.spec.family) {
        case PolicyFamily::Mdm: {
            v["kind"] = "mdm";
            json levels = json::array();
            for (const SearchLevel& lvl : p.spec.mdm.levels) {
                json lv;
                lv["radius"] = lvl.sensor.radius;
                lv["process"] = process_to_json(lvl.process);
                lv["step_length"] = lvl.step_length;
                lv["index"] = index_to_json(lvl.index);
                levels.push_back(lv);
            }
            v["levels"] = levels;
            break;
        }
        case PolicyFamily::Sss:
            v["kind"] = "sss";
            v["process"] = process_to_json(p.spec.sss.process);
            v["step_length"] = p.spec.sss.step_length;
            v["confirmation_radius"] = p.spec.sss.confirmation_radius;
            break;
        case PolicyFamily::Pso:
            v["kind"] = "pso";
            v["variant"] = p.spec.pso.variant == PsoVariant::Pso    ? "pso"
                           : p.spec.pso.variant == PsoVariant::Spso ? "spso"
                                                                    : "arpso";
            v["inertia"] = p.spec.pso.inertia;
            v["cognitive"] = p.spec.pso.cognitive;
            v["social"] = p.spec.pso.social;
            v["confirmation_radius"] = p.spec.pso.confirmation_radius;
            v["diversity_low"] = p.spec.pso.diversity_low;
            v["diversity_high_frac"] = p.spec.pso.diversity_high_frac;
            break;
    }
    return v;
}

TargetSpec parse_target(const json& v, const std::string& path) {
    if (!v.is_object()) fail(path, "expected an object");
    check_keys(v, path, {"id", "kind", "position", "appear_time", "speed", "range"});
    TargetSpec t;
    t.id = int_or(v, path, "id", -1);
    if (t.id < 0) fail(join(path, "id"), "required, >= 0");
    const std::string kind = string_or(v, path, "kind", "fixed");
    if (kind == "fixed")
        t.kind = TargetKind::Fixed;
    else if (kind == "popup")
        t.kind = TargetKind::PopUp;
    else if (kind == "dynamic")
        t.kind = TargetKind::Dynamic;
    else if (kind == "false")
        t.kind = TargetKind::False;
    else
        fail(join(path, "kind"), "expected fixed, popup, dynamic or false");
    const json* pos = find(v, "position");
    if (!pos) fail(join(path, "position"), "required");
    t.position = as_vec2(*pos, join(path, "position"));
    t.appear_time = number_or(v, path, "appear_time", 0.0);
    t.speed = number_or(v, path, "speed", 0.0);
    if (const json* r = find(v, "range")) {
        const Vec2 range = as_vec2(*r, join(path, "range"));
        t.range_lo = range.x;
        t.range_hi = range.y;
    }
    return t;
}

json target_to_json(const TargetSpec& t) {
    json v;
    v["id"] = t.id;
    switch (t.kind) {
        case TargetKind::Fixed: v["kind"] = "fixed"; break;
        case TargetKind::PopUp: v["kind"] = "popup"; break;
        case TargetKind::Dynamic: v["kind"] = "dynamic"; break;
        case TargetKind::False: v["kind"] = "false"; break;
    }
    v["position"] = json::array({t.position.x, t.position.y});
    v["appear_time"] = t.appear_time;
    v["speed"] = t.speed;
    v["range"] = json::array({t.range_lo, t.range_hi});
    return v;
}

ScenarioConfig parse_scenario(const json& v, const std::string& path) {
    if (!v.is_object()) fail(path, "expected an object");
    check_keys(v, path,
               {"name", "kind", "popup_interval", "dynamic_speed",
                "dynamic_range", "draw_mode", "false_ids", "targets", "horizon"});
    ScenarioConfig s;
    s.kind = string_or(v, path, "kind", "fixed");
    if (s.kind != "fixed" && s.kind != "popup" && s.kind != "dynamic" &&
        s.kind != "custom")
        fail(join(path, "kind"), "expected fixed, popup, dynamic or custom");
    s.name = string_or(v, path, "name", s.kind);
    s.popup_interval = number_or(v, path, "popup_interval", s.popup_interval);
    s.dynamic_speed = number_or(v, path, "dynamic_speed", s.dynamic_speed);
    if (const json* r = find(v, "dynamic_range")) {
        const Vec2 range = as_vec2(*r, join(path, "dynamic_range"));
        s.dynamic_lo = range.x;
        s.dynamic_hi = range.y;
    }
    const std::string mode = string_or(v, path, "draw_mode", "per_axis");
    if (mode == "per_axis")
        s.draw_mode = DynamicDrawMode::PerAxis;
    else if (mode == "shared")
        s.draw_mode = DynamicDrawMode::Shared;
    else
        fail(join(path, "draw_mode"), "expected per_axis or shared");
    if (const json* ids = find(v, "false_ids")) {
        const std::string p = join(path, "false_ids");
        if (!ids->is_array()) fail(p, "expected an array of target ids");
        for (std::size_t i = 0; i < ids->size(); ++i)
            s.false_ids.push_back(as_int((*ids)[i], join(p, std::to_string(i))));
    }
    if (const json* targets = find(v, "targets")) {
        if (s.kind != "custom")
            fail(join(path, "targets"), "only valid with kind custom");
        const std::string p = join(path, "targets");
        if (!targets->is_array()) fail(p, "expected an array");
        for (std::size_t i = 0; i < targets->size(); ++i)
            s.custom_targets.push_back(
                parse_target((*targets)[i], join(p, std::to_string(i))));
    } else if (s.kind == "custom") {
        fail(join(path, "targets"), "required for kind custom");
    }
    if (const json* h = find(v, "horizon"))
        s.horizon = as_number(*h, join(path, "horizon"));
    return s;
}

json scenario_to_json(const ScenarioConfig& s) {
    json v;
    v["name"] = s.name;
    v["kind"] = s.kind;
    v["popup_interval"] = s.popup_interval;
    v["dynamic_speed"] = s.dynamic_speed;
    v["dynamic_range"] = json::array({s.dynamic_lo, s.dynamic_hi});
    v["draw_mode"] =
        s.draw_mode == DynamicDrawMode::PerAxis ? "per_axis" : "shared";
    if (!s.false_ids.empty()) v["false_ids"] = s.false_ids;
    if (s.kind == "custom") {
        json targets = json::array();
        for (const TargetSpec& t : s.custom_targets)
            targets.push_back(target_to_json(t));
        v["targets"] = targets;
    }
    if (s.horizon) v["horizon"] = *s.horizon;
    return v;
}

json merge(json base, const json& overlay) {
    if (!base.is_object() || !overlay.is_object()) return overlay;
    for (const auto& item : overlay.items()) {
        if (base.contains(item.key()))
            base[item.key()] = merge(base[item.key()], item.value());
        else
            base[item.key()] = item.value();
    }
    return base;
}

json load_json_recursive(const std::filesystem::path& file, int depth) {
    if (depth > 16)
        throw std::invalid_argument("config: include chain deeper than 16 at " +
                                    file.string());
    std::ifstream in(file);
    if (!in)
        throw std::invalid_argument("config: cannot open " + file.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config: " + file.string() + ": " + e.what());
    }
    if (!j.is_object())
        throw std::invalid_argument("config: " + file.string() +
                                    ": top level must be an object");
    json merged = json::object();
    if (const json* inc = find(j, "include")) {
        std::vector<std::string> paths;
        if (inc->is_string()) {
            paths.push_back(inc->get<std::string>());
        } else if (inc->is_array()) {
            for (const auto& p : *inc)
                paths.push_back(as_string(p, "include"));
        } else {
            fail("include", "expected a path or array of paths");
        }
        for (const std::string& p : paths) {
            const std::filesystem::path resolved = file.parent_path() / p;
            merged = merge(std::move(merged),
                           load_json_recursive(resolved, depth + 1));
        }
        j.erase("include");
    }
    return merge(std::move(merged), j);
}

}  // namespace

std::vector<TargetSpec> ScenarioConfig::build_targets() const {
    std::vector<TargetSpec> t;
    if (kind == "fixed")
        t = standard_fixed_targets();
    else if (kind == "popup")
        t = standard_popup_targets(popup_interval);
    else if (kind == "dynamic")
        t = standard_dynamic_targets(dynamic_speed, dynamic_lo, dynamic_hi);
    else if (kind == "custom")
        t = custom_targets;
    else
        throw std::invalid_argument("config: scenario kind " + kind);
    if (!false_ids.empty()) t = mark_false(std::move(t), false_ids);
    return t;
}

void CampaignConfig::validate() const {
    if (runs < 1) throw std::invalid_argument("config: runs must be >= 1");
    if (scenarios.empty())
        throw std::invalid_argument("config: at least one scenario required");
    if (policies.empty())
        throw std::invalid_argument("config: at least one policy required");
    if (n_uavs_axis.empty())
        throw std::invalid_argument("config: n_uavs axis must be nonempty");
    std::set<std::string> seen;
    const auto check_name = [&seen](const std::string& kind,
                                    const std::string& name) {
        if (name.empty())
            throw std::invalid_argument("config: empty " + kind + " name");
        if (name.find_first_of(",\r\n") != std::string::npos)
            throw std::invalid_argument("config: " + kind + " name " + name +
                                        " contains a separator");
        if (!seen.insert(kind + ":" + name).second)
            throw std::invalid_argument("config: duplicate " + kind + " name " +
                                        name);
    };
    for (const auto& s : scenarios) check_name("scenario", s.name);
    for (const auto& p : policies) check_name("policy", p.name);
    for (int cell = 0; cell < cell_count(); ++cell) {
        const MissionConfig m = mission_for(cell);
        m.validate();
        (void)m.policy.build(m.region);  // validates the policy config
    }
}

int CampaignConfig::cell_count() const {
    return static_cast<int>(scenarios.size() * policies.size() *
                            n_uavs_axis.size());
}

CellInfo CampaignConfig::cell_info(int cell_id) const {
    if (cell_id < 0 || cell_id >= cell_count())
        throw std::out_of_range("config: cell id out of range");
    const int nu = static_cast<int>(n_uavs_axis.size());
    const int np = static_cast<int>(policies.size());
    CellInfo info;
    info.cell_id = cell_id;
    info.n_uavs = n_uavs_axis[cell_id % nu];
    info.policy = policies[(cell_id / nu) % np].name;
    info.scenario = scenarios[cell_id / (nu * np)].name;
    return info;
}

MissionConfig CampaignConfig::mission_for(int cell_id) const {
    if (cell_id < 0 || cell_id >= cell_count())
        throw std::out_of_range("config: cell id out of range");
    const int nu = static_cast<int>(n_uavs_axis.size());
    const int np = static_cast<int>(policies.size());
    const ScenarioConfig& scenario = scenarios[cell_id / (nu * np)];
    MissionConfig m;
    m.region = region;
    m.targets = scenario.build_targets();
    m.draw_mode = scenario.draw_mode;
    m.target_step = target_step;
    m.n_uavs = n_uavs_axis[cell_id % nu];
    m.uav_speed = uav_speed;
    m.tau = tau;
    m.dt = dt;
    m.capture_radius = capture_radius;
    m.mode = mode;
    m.horizon = scenario.horizon.value_or(horizon);
    m.completion_cap = completion_cap;
    m.policy = policies[(cell_id / nu) % np].spec;
    // The swarm's velocity cap is the platform cruise speed by assumption.
    if (m.policy.family == PolicyFamily::Pso)
        m.policy.pso.speed_cap = uav_speed;
    return m;
}

std::uint64_t run_seed(std::uint64_t base_seed, int cell_id, int run_index) {
    return base_seed ^ static_cast<std::uint64_t>(cell_id) ^
           static_cast<std::uint64_t>(run_index);
}

nlohmann::json load_config_json(const std::filesystem::path& file) {
    return load_json_recursive(file, 0);
}

CampaignConfig parse_campaign_config(const nlohmann::json& root) {
    if (!root.is_object())
        throw std::invalid_argument("config: top level must be an object");
    check_keys(root, "", {"name", "region", "mission", "scenarios", "policies"});
    CampaignConfig cfg;
    cfg.name = string_or(root, "", "name", cfg.name);

    if (const json* region = find(root, "region")) {
        if (!region->is_object()) fail("region", "expected an object");
        check_keys(*region, "region", {"length", "width"});
        cfg.region.length = number_or(*region, "region", "length", cfg.region.length);
        cfg.region.width = number_or(*region, "region", "width", cfg.region.width);
    }

    if (const json* mission = find(root, "mission")) {
        if (!mission->is_object()) fail("mission", "expected an object");
        check_keys(*mission, "mission",
                   {"mode", "runs", "seed", "horizon", "completion_cap", "dt",
                    "tau", "uav_speed", "capture_radius", "target_step",
                    "n_uavs"});
        const std::string mode = string_or(*mission, "mission", "mode", "both");
        if (mode == "efficiency")
            cfg.mode = MissionMode::Efficiency;
        else if (mode == "completeness")
            cfg.mode = MissionMode::Completeness;
        else if (mode == "both")
            cfg.mode = MissionMode::Both;
        else
            fail("mission.mode", "expected efficiency, completeness or both");
        cfg.runs = int_or(*mission, "mission", "runs", cfg.runs);
        if (const json* seed = find(*mission, "seed")) {
            if (!seed->is_number_integer() && !seed->is_number_unsigned())
                fail("mission.seed", "expected an integer");
            cfg.base_seed = seed->get<std::uint64_t>();
        }
        cfg.horizon = number_or(*mission, "mission", "horizon", cfg.horizon);
        cfg.completion_cap =
            number_or(*mission, "mission", "completion_cap", cfg.completion_cap);
        cfg.dt = number_or(*mission, "mission", "dt", cfg.dt);
        cfg.tau = number_or(*mission, "mission", "tau", cfg.tau);
        cfg.uav_speed = number_or(*mission, "mission", "uav_speed", cfg.uav_speed);
        cfg.capture_radius =
            number_or(*mission, "mission", "capture_radius", cfg.capture_radius);
        cfg.target_step =
            number_or(*mission, "mission", "target_step", cfg.target_step);
        if (const json* n = find(*mission, "n_uavs")) {
            cfg.n_uavs_axis.clear();
            if (n->is_array()) {
                for (std::size_t i = 0; i < n->size(); ++i)
                    cfg.n_uavs_axis.push_back(as_int(
                        (*n)[i], join("mission.n_uavs", std::to_string(i))));
            } else {
                cfg.n_uavs_axis.push_back(as_int(*n, "mission.n_uavs"));
            }
        }
    }

    const json* scenarios = find(root, "scenarios");
    if (!scenarios || !scenarios->is_array() || scenarios->empty())
        fail("scenarios", "expected a nonempty array");
    for (std::size_t i = 0; i < scenarios->size(); ++i)
        cfg.scenarios.push_back(parse_scenario(
            (*scenarios)[i], join("scenarios", std::to_string(i))));

    const json* policies = find(root, "policies");
    if (!policies || !policies->is_array() || policies->empty())
        fail("policies", "expected a nonempty array");
    for (std::size_t i = 0; i < policies->size(); ++i)
        cfg.policies.push_back(parse_policy(
            (*policies)[i], join("policies", std::to_string(i)), cfg.region));

    cfg.validate();
    return cfg;
}

CampaignConfig load_campaign_config(const std::filesystem::path& file) {
    return parse_campaign_config(load_config_json(file));
}

nlohmann::json campaign_to_json(const CampaignConfig& cfg) {
    json root;
    root["name"] = cfg.name;
    root["region"] =
        json{{"length", cfg.region.length}, {"width", cfg.region.width}};
    json mission;
    switch (cfg.mode) {
        case MissionMode::Efficiency: mission["mode"] = "efficiency"; break;
        case MissionMode::Completeness: mission["mode"] = "completeness"; break;
        case MissionMode::Both: mission["mode"] = "both"; break;
    }
    mission["runs"] = cfg.runs;
    mission["seed"] = cfg.base_seed;
    mission["horizon"] = cfg.horizon;
    mission["completion_cap"] = cfg.completion_cap;
    mission["dt"] = cfg.dt;
    mission["tau"] = cfg.tau;
    mission["uav_speed"] = cfg.uav_speed;
    mission["capture_radius"] = cfg.capture_radius;
    mission["target_step"] = cfg.target_step;
    mission["n_uavs"] = cfg.n_uavs_axis;
    root["mission"] = mission;
    json scenarios = json::array();
    for (const auto& s : cfg.scenarios) scenarios.push_back(scenario_to_json(s));
    root["scenarios"] = scenarios;
    json policies = json::array();
    for (const auto& p : cfg.policies) policies.push_back(policy_to_json(p));
    root["policies"] = policies;
    return root;
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const char c : data) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::string config_hash(const CampaignConfig& cfg) {
    const std::string dump = campaign_to_json(cfg).dump();
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, fnv1a64(dump));
    return std::string(buf);
}

}  // namespace mdms
