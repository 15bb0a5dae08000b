#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "evoshapes/config.hpp"
#include "evoshapes/evolve.hpp"
#include "evoshapes/experiment.hpp"
#include "evoshapes/genome_io.hpp"
#include "evoshapes/png_io.hpp"
#include "evoshapes/raster.hpp"

namespace fs = std::filesystem;
using namespace evoshapes;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::pair<std::string, std::string>> parse_overrides(
    const std::vector<std::string>& sets, const std::optional<std::uint64_t>& seed) {
    std::vector<std::pair<std::string, std::string>> overrides;
    for (const std::string& kv : sets) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--set expects key=value, got '" + kv + "'");
        overrides.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (seed) overrides.emplace_back("seed", std::to_string(*seed));
    return overrides;
}

RunSinks directory_sinks(const fs::path& out_dir, const EvolutionConfig& config) {
    RunSinks sinks;
    sinks.snapshot = [out_dir](int generation, int parent, const Genome& genome,
                               const ImageBuffer& rendered) {
        const fs::path dir = out_dir / ("gen_" + std::to_string(generation));
        fs::create_directories(dir);
        const std::string stem = "parent_" + std::to_string(parent);
        save_png(rendered, dir / (stem + ".png"));
        save_genome(genome, dir / (stem + ".genome.json"));
    };
    sinks.progress = [max = config.max_generations](const GenerationRecord& rec) {
        std::printf("generation %d/%d  best %llu (%.2f%%)\n", rec.generation, max,
                    static_cast<unsigned long long>(rec.best_absolute),
                    rec.best_relative);
        std::fflush(stdout);
    };
    return sinks;
}

int cmd_run(const fs::path& target_path, const fs::path& config_path,
            const fs::path& out_dir,
            const std::vector<std::pair<std::string, std::string>>& overrides) {
    const EvolutionConfig config = parse_config(read_file(config_path), overrides);
    const ImageBuffer target = load_png(target_path);
    fs::create_directories(out_dir);

    const RunResult result = run(config, target, directory_sinks(out_dir, config));
    write_run_csv(result.stats, out_dir / "stats.csv");

    const GenerationRecord& last = result.stats.records.back();
    std::printf("done: best %llu (%.2f%%) after %d generations, %.1fs\n",
                static_cast<unsigned long long>(last.best_absolute),
                last.best_relative, last.generation, result.stats.wall_seconds);
    return 0;
}

int cmd_sweep(const fs::path& target_path, const fs::path& config_path,
              const fs::path& out_dir,
              const std::vector<std::pair<std::string, std::string>>& overrides,
              const std::string& preset, const std::string& axis,
              const std::vector<std::string>& values, int repetitions, int jobs) {
    const EvolutionConfig base = parse_config(read_file(config_path), overrides);
    const ImageBuffer target = load_png(target_path);

    SweepSpec spec;
    if (!preset.empty()) {
        spec = preset_sweep(preset, base, repetitions);
    } else {
        if (axis.empty() || values.empty())
            throw ConfigError("sweep needs either --preset or --axis with --values");
        spec.base = base;
        spec.axis_name = axis;
        spec.repetitions = repetitions;
        for (const std::string& v : values) spec.points.push_back({v, {{axis, v}}});
    }

    fs::create_directories(out_dir);
    const int total = static_cast<int>(spec.points.size()) * spec.repetitions;
    int finished = 0;
    const auto results = run_sweep(
        spec, target, jobs,
        [&](const std::string& label, int repetition, const RunStats& stats) {
            ++finished;
            std::printf("[%d/%d] %s=%s rep %d: best %llu (%.2f%%)\n", finished, total,
                        spec.axis_name.c_str(), label.c_str(), repetition,
                        static_cast<unsigned long long>(
                            stats.records.back().best_absolute),
                        stats.records.back().best_relative);
            std::fflush(stdout);
        });

    write_csv(results, out_dir / "raw.csv");
    std::vector<std::pair<std::string, AggregateSeries>> aggregates;
    aggregates.reserve(results.size());
    for (const AxisRuns& axis_runs : results)
        aggregates.emplace_back(axis_runs.point.label, aggregate(axis_runs.runs));
    write_csv(aggregates, out_dir / "aggregate.csv");

    std::printf("wrote %s and %s\n", (out_dir / "raw.csv").string().c_str(),
                (out_dir / "aggregate.csv").string().c_str());
    return 0;
}

int cmd_render(const fs::path& genome_path, const fs::path& out_png) {
    const Genome genome = load_genome(genome_path);
    if (out_png.has_parent_path()) fs::create_directories(out_png.parent_path());
    save_png(render(genome), out_png);
    std::printf("wrote %s (%dx%d, %zu genes)\n", out_png.string().c_str(),
                genome.canvas.width, genome.canvas.height, genome.genes.size());
    return 0;
}

int cmd_score(const fs::path& genome_path, const fs::path& target_path) {
    const Genome genome = load_genome(genome_path);
    const ImageBuffer target = load_png(target_path);
    const FitnessScore s = score_image(render(genome), target);
    std::printf("absolute_score=%llu relative_percent=%.2f\n",
                static_cast<unsigned long long>(s.absolute), s.relative_percent);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Evolutionary image approximation with transparent shapes"};
    app.require_subcommand(1);

    std::string target_path, config_path, genome_path, out_path;
    std::vector<std::string> sets;
    std::optional<std::uint64_t> seed;
    std::string preset, axis;
    std::vector<std::string> values;
    int repetitions = 15;
    int jobs = 0;

    CLI::App* run_cmd = app.add_subcommand("run", "Evolve toward a target image");
    run_cmd->add_option("--target", target_path, "Target PNG image")->required();
    run_cmd->add_option("--config", config_path, "Configuration file")->required();
    run_cmd->add_option("--out", out_path, "Output directory")->required();
    run_cmd->add_option("--seed", seed, "Seed override");
    run_cmd->add_option("--set", sets, "key=value override (repeatable)");

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Run a parameter sweep with repetitions");
    sweep_cmd->add_option("--target", target_path, "Target PNG image")->required();
    sweep_cmd->add_option("--config", config_path, "Configuration file")->required();
    sweep_cmd->add_option("--out", out_path, "Output directory")->required();
    sweep_cmd->add_option("--seed", seed, "Base seed override");
    sweep_cmd->add_option("--set", sets, "key=value override (repeatable)");
    sweep_cmd->add_option("--preset", preset,
                          "Sweep preset: vertices, polygons, circles, lines, "
                          "combinations, mutation_probability");
    sweep_cmd->add_option("--axis", axis, "Configuration key to sweep");
    sweep_cmd->add_option("--values", values, "Axis values (repeatable or comma list)")
        ->delimiter(',');
    sweep_cmd->add_option("--repetitions", repetitions, "Runs per axis value")
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--jobs", jobs, "Parallel runs (0 = all cores)");

    CLI::App* render_cmd =
        app.add_subcommand("render", "Render a genome file to a PNG");
    render_cmd->add_option("--genome", genome_path, "Genome JSON file")->required();
    render_cmd->add_option("--out", out_path, "Output PNG path")->required();

    CLI::App* score_cmd =
        app.add_subcommand("score", "Score a genome file against a target image");
    score_cmd->add_option("--genome", genome_path, "Genome JSON file")->required();
    score_cmd->add_option("--target", target_path, "Target PNG image")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed())
            return cmd_run(target_path, config_path, out_path,
                           parse_overrides(sets, seed));
        if (sweep_cmd->parsed())
            return cmd_sweep(target_path, config_path, out_path,
                             parse_overrides(sets, seed), preset, axis, values,
                             repetitions, jobs);
        if (render_cmd->parsed()) return cmd_render(genome_path, out_path);
        if (score_cmd->parsed()) return cmd_score(genome_path, target_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
