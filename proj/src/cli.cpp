#include "swarmlab/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "swarmlab/errors.hpp"
#include "swarmlab/report.hpp"

namespace swarmlab {

namespace {

std::vector<std::string> all_variant_names() {
    std::vector<std::string> names;
    for (const auto n : variant_names()) names.emplace_back(n);
    return names;
}

void add_common_options(CLI::App* sub, CliConfig& cfg, bool objective_required) {
    auto* obj = sub->add_option("--objective", cfg.objectives,
                                "objective name(s): griewank, rastrigin, rosenbrock, "
                                "rosenbrock-as-printed")
                    ->delimiter(',');
    if (objective_required) obj->required();
    sub->add_option("--dims", cfg.dims, "dimension list")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    sub->add_option("--variants", cfg.variants, "variant list: ldw, epsom, psom, mpso, tpme")
        ->delimiter(',');
    sub->add_option("--particles", cfg.particles, "swarm size")->check(CLI::PositiveNumber);
    sub->add_option("--iterations", cfg.iterations, "iterations per run")
        ->check(CLI::PositiveNumber);
    sub->add_option("--repetitions", cfg.repetitions, "independent runs per experiment")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed,
                    "base seed; run r uses seed+r (SWARMLAB_SEED is the fallback)");
    sub->add_option("--out-dir", cfg.out_dir, "output directory");
    sub->add_option("--format", cfg.format, "summary format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--jobs", cfg.jobs, "parallel runs (results are identical at any level)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--snapshots", cfg.snapshots, "snapshot iterations (default: 10 and last)")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    sub->add_option("--epsilon", cfg.epsilon,
                    "iterations-to-threshold target (default depends on objective)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--mu", cfg.mu, "mpso mutation factor")->check(CLI::PositiveNumber);
    sub->add_option("--p", cfg.p, "tpme classification band fraction")
        ->check(CLI::PositiveNumber);
    sub->add_option("--ne", cfg.ne, "tpme elitism start iteration")->check(CLI::PositiveNumber);
    sub->add_option("--a", cfg.a, "tpme relocation half-width in (0,1]");
    sub->add_option("--wmax", cfg.wmax, "initial inertia weight");
    sub->add_option("--wmin", cfg.wmin, "final inertia weight");
    sub->add_option("--c1", cfg.c1, "cognitive acceleration factor");
    sub->add_option("--c2", cfg.c2, "social acceleration factor");
    sub->add_option("--lower", cfg.lower, "search-space lower bound");
    sub->add_option("--upper", cfg.upper, "search-space upper bound");
    sub->add_option("--boundary", cfg.boundary, "boundary policy")
        ->check(CLI::IsMember({"none", "clamp"}));
}

std::uint64_t seed_from_env() {
    const char* env = std::getenv("SWARMLAB_SEED");
    if (env == nullptr) return 1;
    errno = 0;
    char* end = nullptr;
    const long long value = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || errno == ERANGE) {
        throw CliParseExit{1, "SWARMLAB_SEED is not a valid integer: '" + std::string(env) + "'"};
    }
    return static_cast<std::uint64_t>(value);
}

} // namespace

CliConfig parse_cli(const std::vector<std::string>& args) {
    CliConfig cfg;
    CLI::App app{"swarmlab: particle swarm optimization variants, benchmarks and "
                 "convergence experiments"};
    app.require_subcommand(1);

    CLI::App* run = app.add_subcommand("run", "run an experiment grid and emit traces");
    CLI::App* compare =
        app.add_subcommand("compare", "run variants side by side and print ranked tables");
    CLI::App* repro = app.add_subcommand(
        "paper-repro", "full benchmark protocol: all variants, 30/60/90 dims, 20 runs");
    add_common_options(run, cfg, true);
    add_common_options(compare, cfg, true);
    add_common_options(repro, cfg, false);

    std::vector<const char*> argv;
    argv.push_back("swarmlab");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        if (e.get_exit_code() == 0) {
            msg << app.help();
        } else {
            msg << "error: " << e.what() << "\nrun 'swarmlab --help' for usage";
        }
        throw CliParseExit{e.get_exit_code(), msg.str()};
    }

    CLI::App* sub = app.get_subcommands().front();
    cfg.subcommand = sub->get_name();
    if (cfg.objectives.empty()) {
        cfg.objectives = {"griewank", "rastrigin", "rosenbrock"};
    }
    if (cfg.dims.empty()) {
        cfg.dims = (cfg.subcommand == "paper-repro") ? std::vector<int>{30, 60, 90}
                                                     : std::vector<int>{30};
    }
    if (cfg.variants.empty()) cfg.variants = all_variant_names();
    if (sub->count("--seed") == 0) cfg.seed = seed_from_env();
    return cfg;
}

std::vector<int> resolved_snapshots(const CliConfig& config) {
    std::vector<int> snaps = config.snapshots;
    if (snaps.empty()) {
        if (config.iterations >= 10) snaps.push_back(10);
        snaps.push_back(config.iterations);
    }
    std::sort(snaps.begin(), snaps.end());
    snaps.erase(std::unique(snaps.begin(), snaps.end()), snaps.end());
    return snaps;
}

std::vector<ExperimentSpec> expand_experiments(const CliConfig& config) {
    const auto snaps = resolved_snapshots(config);
    std::vector<ExperimentSpec> specs;
    for (const auto& objective : config.objectives) {
        for (const int dims : config.dims) {
            for (const auto& variant : config.variants) {
                ExperimentSpec s;
                s.objective_name = objective;
                s.n_dims = dims;
                s.variant.kind = variant_from_name(variant);
                s.variant.mpso_mu = config.mu;
                s.variant.tpme_p = config.p;
                s.variant.tpme_ne = config.ne;
                s.variant.tpme_a = config.a;
                s.swarm.n_particles = config.particles;
                s.swarm.n_dims = dims;
                s.swarm.it_max = config.iterations;
                s.swarm.w_max = config.wmax;
                s.swarm.w_min = config.wmin;
                s.swarm.c1 = config.c1;
                s.swarm.c2 = config.c2;
                s.swarm.bounds = Bounds{config.lower, config.upper};
                s.swarm.boundary =
                    config.boundary == "clamp" ? BoundaryPolicy::clamp : BoundaryPolicy::none;
                s.repetitions = config.repetitions;
                s.base_seed = config.seed;
                s.snapshot_iterations = snaps;
                s.epsilon = config.epsilon.value_or(default_epsilon(objective));
                specs.push_back(std::move(s));
            }
        }
    }
    return specs;
}

nlohmann::json config_echo(const CliConfig& config) {
    nlohmann::json j;
    j["objective"] = config.objectives;
    j["dims"] = config.dims;
    j["variants"] = config.variants;
    j["particles"] = config.particles;
    j["iterations"] = config.iterations;
    j["repetitions"] = config.repetitions;
    j["seed"] = config.seed;
    j["snapshots"] = resolved_snapshots(config);
    if (config.epsilon) {
        j["epsilon"] = *config.epsilon;
    } else {
        j["epsilon"] = nullptr;
    }
    j["format"] = config.format;
    j["mu"] = config.mu;
    j["p"] = config.p;
    j["ne"] = config.ne;
    j["a"] = config.a;
    j["wmax"] = config.wmax;
    j["wmin"] = config.wmin;
    j["c1"] = config.c1;
    j["c2"] = config.c2;
    j["lower"] = config.lower;
    j["upper"] = config.upper;
    j["boundary"] = config.boundary;
    j["mpso_mutation_rule"] = std::string(kMpsoMutationRule);
    return j;
}

CliConfig cli_config_from_echo(const nlohmann::json& echo, const std::string& subcommand) {
    CliConfig cfg;
    cfg.subcommand = subcommand;
    cfg.objectives = echo.at("objective").get<std::vector<std::string>>();
    cfg.dims = echo.at("dims").get<std::vector<int>>();
    cfg.variants = echo.at("variants").get<std::vector<std::string>>();
    cfg.particles = echo.at("particles").get<int>();
    cfg.iterations = echo.at("iterations").get<int>();
    cfg.repetitions = echo.at("repetitions").get<int>();
    cfg.seed = echo.at("seed").get<std::uint64_t>();
    cfg.snapshots = echo.at("snapshots").get<std::vector<int>>();
    if (!echo.at("epsilon").is_null()) cfg.epsilon = echo.at("epsilon").get<double>();
    cfg.format = echo.at("format").get<std::string>();
    cfg.mu = echo.at("mu").get<double>();
    cfg.p = echo.at("p").get<double>();
    cfg.ne = echo.at("ne").get<int>();
    cfg.a = echo.at("a").get<double>();
    cfg.wmax = echo.at("wmax").get<double>();
    cfg.wmin = echo.at("wmin").get<double>();
    cfg.c1 = echo.at("c1").get<double>();
    cfg.c2 = echo.at("c2").get<double>();
    cfg.lower = echo.at("lower").get<double>();
    cfg.upper = echo.at("upper").get<double>();
    cfg.boundary = echo.at("boundary").get<std::string>();
    return cfg;
}

namespace {

void print_table(std::ostream& out, const ComparisonTable& table, const CliConfig& config) {
    out << "objective=" << table.objective << " dims=" << table.n_dims
        << " particles=" << config.particles << " iterations=" << config.iterations
        << " repetitions=" << config.repetitions << " seed=" << config.seed << "\n";
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  %-8s", "variant");
    out << buf;
    for (const int s : table.snapshot_iterations) {
        std::snprintf(buf, sizeof(buf), " %14s", ("mean@" + std::to_string(s)).c_str());
        out << buf;
    }
    out << "   iters<=eps (reached)\n";
    for (const auto& row : table.rows) {
        std::snprintf(buf, sizeof(buf), "  %-8s", row.variant.c_str());
        out << buf;
        for (const double m : row.snapshot_means) {
            std::snprintf(buf, sizeof(buf), " %14.6e", m);
            out << buf;
        }
        if (row.iters_to_threshold_mean) {
            std::snprintf(buf, sizeof(buf), "   %.1f (%d)", *row.iters_to_threshold_mean,
                          row.runs_reached);
        } else {
            std::snprintf(buf, sizeof(buf), "   - (0)");
        }
        out << buf << "\n";
    }
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << contents;
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

} // namespace

int run_cli(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const std::vector<ExperimentSpec> specs = expand_experiments(config);
        std::vector<AggregateResult> results;
        results.reserve(specs.size());
        for (const auto& spec : specs) {
            results.push_back(run_repeated(spec, config.jobs));
        }

        std::vector<TraceBlock> blocks;
        std::vector<SummaryRow> rows;
        for (std::size_t i = 0; i < specs.size(); ++i) {
            const auto& spec = specs[i];
            const auto& agg = results[i];
            blocks.push_back(TraceBlock{spec.objective_name, spec.n_dims,
                                        std::string(variant_name(spec.variant.kind)),
                                        agg.mean_trace});
            SummaryRow row;
            row.objective = spec.objective_name;
            row.dims = spec.n_dims;
            row.variant = std::string(variant_name(spec.variant.kind));
            row.seed = spec.base_seed;
            for (const auto& st : agg.snapshots) row.snapshot_means.emplace_back(st.iteration, st.mean);
            row.iters_to_epsilon_mean = agg.iters_to_threshold_mean;
            row.runs_reached = agg.runs_reached;
            row.epsilon = agg.epsilon;
            rows.push_back(std::move(row));
        }

        const nlohmann::json echo = config_echo(config);
        std::ostringstream traces;
        write_trace_csv(traces, blocks);
        std::ostringstream summary;
        if (config.format == "csv") {
            write_summary_csv(summary, echo, rows);
        } else {
            write_summary_json(summary, echo, rows);
        }
        const std::filesystem::path dir(config.out_dir);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) throw IoError("cannot create output directory: " + dir.string());
        write_file(dir / "traces.csv", traces.str());
        write_file(dir / ("summary." + config.format), summary.str());

        if (config.subcommand == "run") {
            for (const auto& row : rows) {
                out << row.objective << " dims=" << row.dims << " " << row.variant << ":";
                for (const auto& [it, mean] : row.snapshot_means) {
                    out << " mean@" << it << "=" << format_double(mean);
                }
                out << "\n";
            }
        } else {
            // One ranked table per (objective, dims) cell, in expansion order.
            const std::size_t per_cell = config.variants.size();
            for (std::size_t base = 0; base + per_cell <= specs.size(); base += per_cell) {
                const std::span<const ExperimentSpec> cell_specs(specs.data() + base, per_cell);
                const std::span<const AggregateResult> cell_results(results.data() + base,
                                                                    per_cell);
                print_table(out, compare_variants(cell_specs, cell_results), config);
                out << "\n";
            }
        }
        out << "wrote " << (dir / "traces.csv").string() << " and "
            << (dir / ("summary." + config.format)).string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        err << "no output files were written for this invocation\n";
        return 1;
    }
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    try {
        const CliConfig cfg = parse_cli(args);
        return run_cli(cfg, std::cout, std::cerr);
    } catch (const CliParseExit& e) {
        (e.code == 0 ? std::cout : std::cerr) << e.message << "\n";
        return e.code;
    }
}

} // namespace swarmlab
