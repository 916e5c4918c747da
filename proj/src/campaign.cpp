#include "mdms/campaign.hpp"

#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace mdms {
namespace {

std::string format_double(double v, const char* fmt = "%.6f") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return std::string(buf);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (const char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

std::string runs_csv_header() {
    return "run_id,seed,policy,scenario,n_uavs,t_nc,t_s,censored";
}

std::string run_row_to_csv(const RunRow& row) {
    char head[96];
    std::snprintf(head, sizeof(head), "%lld,%" PRIu64 ",", row.run_id, row.seed);
    std::string out(head);
    out += row.policy;
    out += ',';
    out += row.scenario;
    out += ',';
    out += std::to_string(row.n_uavs);
    out += ',';
    out += std::to_string(row.t_nc);
    out += ',';
    if (row.t_s) out += format_double(*row.t_s, "%.4f");
    out += ',';
    out += row.censored ? '1' : '0';
    return out;
}

std::string summary_csv_header() {
    return "cell_id,scenario,policy,n_uavs,runs,censored,mean_t_nc,sd_t_nc,"
           "mean_t_s,sd_t_s,min_t_nc,q1_t_nc,med_t_nc,q3_t_nc,max_t_nc,"
           "min_t_s,q1_t_s,med_t_s,q3_t_s,max_t_s";
}

std::string cell_summary_to_csv(const CellSummary& s) {
    std::string out = std::to_string(s.cell.cell_id);
    out += ',' + s.cell.scenario + ',' + s.cell.policy + ',' +
           std::to_string(s.cell.n_uavs) + ',' + std::to_string(s.stats.runs) +
           ',' + std::to_string(s.stats.censored);
    out += ',' + format_double(s.stats.mean_t_nc) + ',' +
           format_double(s.stats.sd_t_nc);
    if (s.stats.t_s_defined)
        out += ',' + format_double(s.stats.mean_t_s) + ',' +
               format_double(s.stats.sd_t_s);
    else
        out += ",,";
    const auto box = [](const FiveNumber& f) {
        return ',' + format_double(f.min) + ',' + format_double(f.q1) + ',' +
               format_double(f.median) + ',' + format_double(f.q3) + ',' +
               format_double(f.max);
    };
    out += box(s.box_t_nc);
    if (s.box_t_s_defined)
        out += box(s.box_t_s);
    else
        out += ",,,,,";
    return out;
}

std::vector<double> ResultStore::cell_values(int cell_id,
                                             bool completion) const {
    const long long runs = config.runs;
    const long long begin = static_cast<long long>(cell_id) * runs;
    if (cell_id < 0 || cell_id >= config.cell_count() ||
        begin + runs > static_cast<long long>(rows.size()))
        throw std::out_of_range("store: cell id out of range");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(runs));
    for (long long j = begin; j < begin + runs; ++j) {
        const RunRow& row = rows[static_cast<std::size_t>(j)];
        if (completion) {
            if (!row.censored && row.t_s) values.push_back(*row.t_s);
        } else {
            values.push_back(static_cast<double>(row.t_nc));
        }
    }
    return values;
}

std::vector<CellSummary> ResultStore::summarize() const {
    const long long runs = config.runs;
    if (static_cast<long long>(rows.size()) !=
        static_cast<long long>(config.cell_count()) * runs)
        throw std::runtime_error("store: row count does not match config");
    std::vector<CellSummary> out;
    out.reserve(static_cast<std::size_t>(config.cell_count()));
    for (int cell = 0; cell < config.cell_count(); ++cell) {
        std::vector<RunRecord> recs;
        recs.reserve(static_cast<std::size_t>(runs));
        for (long long j = cell * runs; j < (cell + 1) * runs; ++j) {
            const RunRow& row = rows[static_cast<std::size_t>(j)];
            RunRecord r;
            r.seed = row.seed;
            r.t_nc = row.t_nc;
            r.t_s = row.t_s;
            r.censored = row.censored;
            recs.push_back(std::move(r));
        }
        CellSummary s;
        s.cell = config.cell_info(cell);
        s.stats = aggregate(recs);
        s.box_t_nc = five_number(cell_values(cell, false));
        const std::vector<double> ts = cell_values(cell, true);
        if (!ts.empty()) {
            s.box_t_s_defined = true;
            s.box_t_s = five_number(ts);
        }
        out.push_back(std::move(s));
    }
    return out;
}

void ResultStore::save(const std::filesystem::path& dir) const {
    std::filesystem::create_directories(dir);
    nlohmann::json manifest;
    manifest["format"] = kManifestFormat;
    manifest["code_version"] = kCodeVersion;
    manifest["config_hash"] = config_hash(config);
    manifest["config"] = campaign_to_json(config);
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");

    std::string runs = runs_csv_header() + "\n";
    for (const RunRow& row : rows) runs += run_row_to_csv(row) + "\n";
    write_file(dir / "runs.csv", runs);

    std::string summary = summary_csv_header() + "\n";
    for (const CellSummary& s : summarize())
        summary += cell_summary_to_csv(s) + "\n";
    write_file(dir / "summary.csv", summary);
}

ResultStore ResultStore::load(const std::filesystem::path& dir) {
    ResultStore store;
    nlohmann::json manifest;
    try {
        manifest = nlohmann::json::parse(read_file(dir / "manifest.json"));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("manifest: " + std::string(e.what()));
    }
    if (!manifest.is_object() || manifest.value("format", "") != kManifestFormat)
        throw std::runtime_error("manifest: unrecognized format");
    if (!manifest.contains("config"))
        throw std::runtime_error("manifest: missing config");
    store.config = parse_campaign_config(manifest["config"]);
    const std::string recorded = manifest.value("config_hash", "");
    if (recorded != config_hash(store.config))
        throw std::runtime_error("manifest: config hash mismatch");

    std::istringstream in(read_file(dir / "runs.csv"));
    std::string line;
    if (!std::getline(in, line) || line != runs_csv_header())
        throw std::runtime_error("runs.csv: unexpected header");
    long long expected_id = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> f = split_csv(line);
        if (f.size() != 8)
            throw std::runtime_error("runs.csv: bad field count at run " +
                                     std::to_string(expected_id));
        RunRow row;
        row.run_id = std::stoll(f[0]);
        row.seed = std::stoull(f[1]);
        row.policy = f[2];
        row.scenario = f[3];
        row.n_uavs = std::stoi(f[4]);
        row.t_nc = std::stoi(f[5]);
        if (!f[6].empty()) row.t_s = std::stod(f[6]);
        row.censored = f[7] == "1";
        if (row.run_id != expected_id)
            throw std::runtime_error("runs.csv: run ids out of order");
        ++expected_id;
        store.rows.push_back(std::move(row));
    }
    if (expected_id !=
        static_cast<long long>(store.config.cell_count()) * store.config.runs)
        throw std::runtime_error("runs.csv: row count does not match config");
    return store;
}

ResultStore run_campaign(const CampaignConfig& cfg, int workers) {
    cfg.validate();
    const int cells = cfg.cell_count();
    const long long runs = cfg.runs;
    const long long total = static_cast<long long>(cells) * runs;

    std::vector<MissionConfig> missions;
    std::vector<CellInfo> infos;
    missions.reserve(static_cast<std::size_t>(cells));
    infos.reserve(static_cast<std::size_t>(cells));
    for (int cell = 0; cell < cells; ++cell) {
        missions.push_back(cfg.mission_for(cell));
        infos.push_back(cfg.cell_info(cell));
    }

    std::vector<RunRow> rows(static_cast<std::size_t>(total));
    std::atomic<long long> next{0};
    std::mutex error_mutex;
    std::vector<std::string> errors;

    const auto work = [&]() {
        for (;;) {
            const long long j = next.fetch_add(1, std::memory_order_relaxed);
            if (j >= total) return;
            const int cell = static_cast<int>(j / runs);
            const int run_index = static_cast<int>(j % runs);
            try {
                const std::uint64_t seed =
                    run_seed(cfg.base_seed, cell, run_index);
                const RunRecord rec = run_mission(missions[cell], seed);
                RunRow& row = rows[static_cast<std::size_t>(j)];
                row.run_id = j;
                row.seed = seed;
                row.policy = infos[cell].policy;
                row.scenario = infos[cell].scenario;
                row.n_uavs = infos[cell].n_uavs;
                row.t_nc = rec.t_nc;
                row.t_s = rec.t_s;
                row.censored = rec.censored;
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                errors.push_back("cell " + std::to_string(cell) + " (" +
                                 infos[cell].scenario + "/" +
                                 infos[cell].policy + ") run " +
                                 std::to_string(run_index) + ": " + e.what());
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int k = 0; k < workers; ++k) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    if (!errors.empty()) {
        std::string msg = "campaign failed:";
        for (const std::string& e : errors) msg += "\n  " + e;
        throw std::runtime_error(msg);
    }
    return ResultStore{cfg, std::move(rows)};
}

RunRecord replay_run(const CampaignConfig& cfg, long long run_id,
                     bool record_events) {
    const long long total =
        static_cast<long long>(cfg.cell_count()) * cfg.runs;
    if (run_id < 0 || run_id >= total)
        throw std::out_of_range("replay: run id out of range");
    const int cell = static_cast<int>(run_id / cfg.runs);
    const int run_index = static_cast<int>(run_id % cfg.runs);
    MissionConfig m = cfg.mission_for(cell);
    m.record_events = record_events;
    return run_mission(m, run_seed(cfg.base_seed, cell, run_index));
}

}  // namespace mdms
