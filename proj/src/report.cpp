#include "swarmlab/report.hpp"

#include <charconv>
#include <ostream>

#include "swarmlab/errors.hpp"

namespace swarmlab {

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

void write_trace_csv(std::ostream& out, std::span<const TraceBlock> blocks) {
    out << "objective,dims,variant,iteration,mean_best_fitness\n";
    for (const auto& b : blocks) {
        for (std::size_t k = 0; k < b.mean_trace.size(); ++k) {
            out << b.objective << ',' << b.dims << ',' << b.variant << ',' << k << ','
                << format_double(b.mean_trace[k]) << '\n';
        }
    }
}

namespace {

nlohmann::json row_to_json(const SummaryRow& row) {
    nlohmann::json snapshots = nlohmann::json::object();
    for (const auto& [iteration, mean] : row.snapshot_means) {
        snapshots[std::to_string(iteration)] = mean;
    }
    nlohmann::json j{
        {"objective", row.objective},
        {"dims", row.dims},
        {"variant", row.variant},
        {"seed", row.seed},
        {"snapshots", std::move(snapshots)},
        {"epsilon", row.epsilon},
        {"runs_reached", row.runs_reached},
    };
    if (row.iters_to_epsilon_mean) {
        j["iters_to_epsilon_mean"] = *row.iters_to_epsilon_mean;
    } else {
        j["iters_to_epsilon_mean"] = nullptr;
    }
    return j;
}

} // namespace

void write_summary_json(std::ostream& out, const nlohmann::json& config_echo,
                        std::span<const SummaryRow> rows) {
    nlohmann::json doc;
    doc["config"] = config_echo;
    doc["results"] = nlohmann::json::array();
    for (const auto& row : rows) doc["results"].push_back(row_to_json(row));
    out << doc.dump(2) << '\n';
}

void write_summary_csv(std::ostream& out, const nlohmann::json& config_echo,
                       std::span<const SummaryRow> rows) {
    // Snapshot columns come from the first row; compare_variants guarantees a
    // uniform snapshot list per emission.
    std::vector<int> snapshot_iters;
    if (!rows.empty()) {
        for (const auto& [iteration, mean] : rows.front().snapshot_means) {
            snapshot_iters.push_back(iteration);
        }
    }
    out << "objective,dims,variant,seed";
    for (const int s : snapshot_iters) out << ",snapshot_" << s;
    out << ",iters_to_epsilon_mean,runs_reached,epsilon";
    std::vector<std::string> param_keys;
    for (auto it = config_echo.begin(); it != config_echo.end(); ++it) {
        param_keys.push_back(it.key());
    }
    for (const auto& k : param_keys) out << ",config_" << k;
    out << '\n';

    auto json_scalar = [](const nlohmann::json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_float()) return format_double(v.get<double>());
        return v.dump();
    };
    auto csv_cell = [](const std::string& cell) -> std::string {
        if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
        std::string quoted = "\"";
        for (const char c : cell) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        quoted += '"';
        return quoted;
    };
    for (const auto& row : rows) {
        out << row.objective << ',' << row.dims << ',' << row.variant << ',' << row.seed;
        for (const auto& [iteration, mean] : row.snapshot_means) {
            out << ',' << format_double(mean);
        }
        out << ',';
        if (row.iters_to_epsilon_mean) out << format_double(*row.iters_to_epsilon_mean);
        out << ',' << row.runs_reached << ',' << format_double(row.epsilon);
        for (const auto& k : param_keys) {
            out << ',' << csv_cell(json_scalar(config_echo.at(k)));
        }
        out << '\n';
    }
}

} // namespace swarmlab
