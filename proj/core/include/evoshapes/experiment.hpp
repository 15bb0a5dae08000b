#ifndef EVOSHAPES_EXPERIMENT_HPP
#define EVOSHAPES_EXPERIMENT_HPP

#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "evoshapes/evolve.hpp"

namespace evoshapes {

// One position on a sweep axis: a label for reporting plus the
// configuration settings that realize it.
struct AxisPoint {
    std::string label;
    std::vector<std::pair<std::string, std::string>> overrides;
};

struct SweepSpec {
    EvolutionConfig base;
    std::string axis_name;
    std::vector<AxisPoint> points;
    int repetitions = 15;
};

struct AxisRuns {
    AxisPoint point;
    std::vector<RunStats> runs;
};

struct AggregateRecord {
    int generation = 0;
    double mean_absolute = 0.0;
    double sd_absolute = 0.0; // population standard deviation
    double mean_relative_percent = 0.0;
};

struct AggregateSeries {
    CanvasDims canvas{};
    std::vector<AggregateRecord> records;
};

// Runs every (axis point, repetition) pair; repetition r uses seed
// base.seed + r. Independent runs execute in parallel on up to `jobs`
// threads (0 = hardware concurrency). `on_run_done`, when set, is called
// once per finished run from a single thread at a time.
std::vector<AxisRuns> run_sweep(
    const SweepSpec& spec, const ImageBuffer& target, int jobs = 0,
    const std::function<void(const std::string& label, int repetition,
                             const RunStats&)>& on_run_done = {});

// Per generation across repetitions: arithmetic mean of best absolute
// scores, population standard deviation, and the relative percent of the
// mean. All runs must share max_generations.
AggregateSeries aggregate(const std::vector<RunStats>& runs);

// CSV emission. Raw schema:
//   axis_value,repetition,generation,absolute_score,relative_percent
// Aggregate schema:
//   axis_value,generation,mean_absolute,sd_absolute,mean_relative_percent
// Relative percents carry 2 decimals, absolute scores print as integers,
// standard deviations carry 2 decimals.
void write_csv(const std::vector<AxisRuns>& results,
               const std::filesystem::path& destination);
void write_csv(const std::vector<std::pair<std::string, AggregateSeries>>& aggregates,
               const std::filesystem::path& destination);

// Single-run stats in the raw schema with an empty axis value.
void write_run_csv(const RunStats& stats, const std::filesystem::path& destination);

// Built-in sweep presets: "vertices", "polygons", "circles", "lines",
// "combinations", "mutation_probability". Axis-independent parameters come
// from `base`.
SweepSpec preset_sweep(const std::string& name, const EvolutionConfig& base,
                       int repetitions);
std::vector<std::string> preset_names();

} // namespace evoshapes

#endif
