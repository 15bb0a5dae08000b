#include "evoshapes/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "evoshapes/config.hpp"

namespace evoshapes {

namespace {

std::string format_fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::ofstream open_csv(const std::filesystem::path& destination) {
    std::ofstream out(destination, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write CSV file: " + destination.string());
    return out;
}

void write_raw_rows(std::ostream& out, const std::string& axis_value, int repetition,
                    const RunStats& stats) {
    for (const GenerationRecord& rec : stats.records)
        out << axis_value << ',' << repetition << ',' << rec.generation << ','
            << rec.best_absolute << ',' << format_fixed2(rec.best_relative) << '\n';
}

} // namespace

std::vector<AxisRuns> run_sweep(
    const SweepSpec& spec, const ImageBuffer& target, int jobs,
    const std::function<void(const std::string&, int, const RunStats&)>& on_run_done) {
    if (spec.points.empty())
        throw std::invalid_argument("run_sweep: sweep has no axis points");
    if (spec.repetitions < 1)
        throw std::invalid_argument("run_sweep: repetitions must be >= 1");

    std::vector<AxisRuns> results(spec.points.size());
    for (std::size_t i = 0; i < spec.points.size(); ++i) {
        results[i].point = spec.points[i];
        results[i].runs.resize(spec.repetitions);
    }

    struct Job {
        std::size_t axis;
        int repetition;
    };
    std::vector<Job> queue;
    queue.reserve(spec.points.size() * spec.repetitions);
    for (std::size_t a = 0; a < spec.points.size(); ++a)
        for (int r = 0; r < spec.repetitions; ++r) queue.push_back({a, r});

    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::clamp<int>(jobs, 1, static_cast<int>(queue.size()));

    std::atomic<std::size_t> next{0};
    std::mutex mutex;
    std::string first_error;

    auto worker = [&] {
        for (;;) {
            const std::size_t j = next.fetch_add(1);
            if (j >= queue.size()) return;
            const Job job = queue[j];
            const AxisPoint& point = spec.points[job.axis];
            try {
                EvolutionConfig config = spec.base;
                for (const auto& [key, value] : point.overrides)
                    apply_setting(config, key, value);
                config.seed = spec.base.seed + static_cast<std::uint64_t>(job.repetition);
                RunResult r = run(config, target);
                std::lock_guard lock(mutex);
                results[job.axis].runs[job.repetition] = std::move(r.stats);
                if (on_run_done)
                    on_run_done(point.label, job.repetition,
                                results[job.axis].runs[job.repetition]);
            } catch (const std::exception& e) {
                std::lock_guard lock(mutex);
                if (first_error.empty())
                    first_error = spec.axis_name + "=" + point.label + " repetition " +
                                  std::to_string(job.repetition) + ": " + e.what();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    if (!first_error.empty()) throw std::runtime_error("run_sweep: " + first_error);
    return results;
}

AggregateSeries aggregate(const std::vector<RunStats>& runs) {
    if (runs.empty()) throw std::invalid_argument("aggregate: no runs");
    const std::size_t generations = runs.front().records.size();
    for (const RunStats& r : runs)
        if (r.records.size() != generations)
            throw std::invalid_argument("aggregate: runs disagree on max_generations");

    AggregateSeries series;
    series.canvas = runs.front().canvas;
    series.records.reserve(generations);
    const double n = static_cast<double>(runs.size());

    for (std::size_t g = 0; g < generations; ++g) {
        AggregateRecord rec;
        rec.generation = runs.front().records[g].generation;
        double sum = 0.0;
        for (const RunStats& r : runs)
            sum += static_cast<double>(r.records[g].best_absolute);
        rec.mean_absolute = sum / n;
        double sq = 0.0;
        for (const RunStats& r : runs) {
            const double d =
                static_cast<double>(r.records[g].best_absolute) - rec.mean_absolute;
            sq += d * d;
        }
        rec.sd_absolute = std::sqrt(sq / n);
        rec.mean_relative_percent = relative_score(rec.mean_absolute, series.canvas);
        series.records.push_back(rec);
    }
    return series;
}

void write_csv(const std::vector<AxisRuns>& results,
               const std::filesystem::path& destination) {
    std::ofstream out = open_csv(destination);
    out << "axis_value,repetition,generation,absolute_score,relative_percent\n";
    for (const AxisRuns& axis : results)
        for (std::size_t r = 0; r < axis.runs.size(); ++r)
            write_raw_rows(out, axis.point.label, static_cast<int>(r), axis.runs[r]);
    if (!out) throw std::runtime_error("write failed: " + destination.string());
}

void write_csv(const std::vector<std::pair<std::string, AggregateSeries>>& aggregates,
               const std::filesystem::path& destination) {
    std::ofstream out = open_csv(destination);
    out << "axis_value,generation,mean_absolute,sd_absolute,mean_relative_percent\n";
    for (const auto& [label, series] : aggregates)
        for (const AggregateRecord& rec : series.records)
            out << label << ',' << rec.generation << ','
                << std::llround(rec.mean_absolute) << ','
                << format_fixed2(rec.sd_absolute) << ','
                << format_fixed2(rec.mean_relative_percent) << '\n';
    if (!out) throw std::runtime_error("write failed: " + destination.string());
}

void write_run_csv(const RunStats& stats, const std::filesystem::path& destination) {
    std::ofstream out = open_csv(destination);
    out << "axis_value,repetition,generation,absolute_score,relative_percent\n";
    write_raw_rows(out, "", 0, stats);
    if (!out) throw std::runtime_error("write failed: " + destination.string());
}

namespace {

std::string int_label(int v) { return std::to_string(v); }

AxisPoint scalar_point(const std::string& key, const std::string& label) {
    return AxisPoint{label, {{key, label}}};
}

AxisPoint composition_point(int polygons, int circles, int lines) {
    std::string label;
    if (polygons) label += std::to_string(polygons) + "p";
    if (circles) label += std::to_string(circles) + "c";
    if (lines) label += std::to_string(lines) + "l";
    return AxisPoint{label,
                     {{"polygons", int_label(polygons)},
                      {"circles", int_label(circles)},
                      {"lines", int_label(lines)}}};
}

} // namespace

std::vector<std::string> preset_names() {
    return {"vertices", "polygons", "circles",
            "lines",    "combinations", "mutation_probability"};
}

SweepSpec preset_sweep(const std::string& name, const EvolutionConfig& base,
                       int repetitions) {
    SweepSpec spec;
    spec.base = base;
    spec.repetitions = repetitions;
    spec.axis_name = name;

    auto set = [&spec](const char* key, const std::string& value) {
        apply_setting(spec.base, key, value);
    };

    if (name == "vertices") {
        set("polygons", "20");
        set("circles", "0");
        set("lines", "0");
        for (int v = 3; v <= 20; ++v)
            spec.points.push_back(scalar_point("vertices", int_label(v)));
    } else if (name == "polygons") {
        set("circles", "0");
        set("lines", "0");
        set("vertices", "8");
        for (int p = 5; p <= 50; p += 5)
            spec.points.push_back(scalar_point("polygons", int_label(p)));
    } else if (name == "circles") {
        set("polygons", "0");
        set("lines", "0");
        for (int c = 5; c <= 40; c += 5)
            spec.points.push_back(scalar_point("circles", int_label(c)));
    } else if (name == "lines") {
        set("polygons", "0");
        set("circles", "0");
        for (int l = 5; l <= 40; l += 5)
            spec.points.push_back(scalar_point("lines", int_label(l)));
    } else if (name == "combinations") {
        set("vertices", "8");
        spec.points.push_back(composition_point(10, 10, 0));
        spec.points.push_back(composition_point(15, 5, 0));
        spec.points.push_back(composition_point(5, 15, 0));
        spec.points.push_back(composition_point(5, 5, 10));
        spec.points.push_back(composition_point(10, 0, 10));
        spec.points.push_back(composition_point(0, 10, 10));
    } else if (name == "mutation_probability") {
        for (const char* p : {"0.1", "0.3", "0.5", "0.7", "0.9"})
            spec.points.push_back(scalar_point("mutation_probability", p));
    } else {
        throw std::invalid_argument("unknown sweep preset '" + name + "'");
    }
    return spec;
}

} // namespace evoshapes
