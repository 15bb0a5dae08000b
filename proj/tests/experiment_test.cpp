#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "evoshapes/config.hpp"
#include "evoshapes/experiment.hpp"

using namespace evoshapes;

namespace {

ImageBuffer checker_target(CanvasDims dims = {24, 24}) {
    ImageBuffer img(dims);
    for (int y = 0; y < dims.height; ++y)
        for (int x = 0; x < dims.width; ++x)
            img.at(x, y) = ((x / 4 + y / 4) % 2) ? Color{200, 180, 40}
                                                 : Color{30, 60, 160};
    return img;
}

EvolutionConfig sweep_base() {
    EvolutionConfig config;
    config.composition = {3, 0, 0, 3};
    config.max_generations = 20;
    config.save_rate = 20;
    config.seed = 100;
    return config;
}

SweepSpec two_point_spec() {
    SweepSpec spec;
    spec.base = sweep_base();
    spec.axis_name = "vertices";
    spec.points = {{"3", {{"vertices", "3"}}}, {"4", {{"vertices", "4"}}}};
    spec.repetitions = 2;
    return spec;
}

// Hand-built stats: a constant best-score series.
RunStats constant_stats(std::uint64_t value, int generations, CanvasDims canvas) {
    RunStats stats;
    stats.canvas = canvas;
    for (int g = 1; g <= generations; ++g) {
        GenerationRecord rec;
        rec.generation = g;
        rec.best_absolute = value;
        rec.best_relative = relative_score(value, canvas);
        rec.parent_scores = {value};
        stats.records.push_back(rec);
    }
    return stats;
}

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("run_sweep executes repetitions with consecutive seeds") {
    const ImageBuffer target = checker_target();
    const SweepSpec spec = two_point_spec();
    const auto results = run_sweep(spec, target, 2);

    REQUIRE(results.size() == 2);
    for (const AxisRuns& axis : results) {
        REQUIRE(axis.runs.size() == 2);
        for (const RunStats& stats : axis.runs)
            CHECK(stats.records.size() == 20);
    }

    // Repetition r must equal a plain run with seed base+r.
    EvolutionConfig config = spec.base;
    apply_setting(config, "vertices", "4");
    config.seed = spec.base.seed + 1;
    const RunResult direct = run(config, target);
    for (std::size_t g = 0; g < direct.stats.records.size(); ++g)
        CHECK(direct.stats.records[g].best_absolute ==
              results[1].runs[1].records[g].best_absolute);
}

TEST_CASE("run_sweep is deterministic") {
    const ImageBuffer target = checker_target();
    const SweepSpec spec = two_point_spec();
    const auto first = run_sweep(spec, target);
    const auto second = run_sweep(spec, target);
    REQUIRE(first.size() == second.size());
    for (std::size_t a = 0; a < first.size(); ++a)
        for (std::size_t r = 0; r < first[a].runs.size(); ++r)
            for (std::size_t g = 0; g < first[a].runs[r].records.size(); ++g)
                CHECK(first[a].runs[r].records[g].best_absolute ==
                      second[a].runs[r].records[g].best_absolute);
}

TEST_CASE("aggregate computes mean and population standard deviation") {
    const CanvasDims canvas{10, 10};
    SUBCASE("identical runs have zero deviation") {
        const std::vector<RunStats> runs(3, constant_stats(500, 4, canvas));
        const AggregateSeries series = aggregate(runs);
        REQUIRE(series.records.size() == 4);
        for (const AggregateRecord& rec : series.records) {
            CHECK(rec.mean_absolute == 500.0);
            CHECK(rec.sd_absolute == 0.0);
        }
    }
    SUBCASE("two-point mean and SD") {
        const std::vector<RunStats> runs{constant_stats(100, 2, canvas),
                                         constant_stats(300, 2, canvas)};
        const AggregateSeries series = aggregate(runs);
        CHECK(series.records.back().mean_absolute == 200.0);
        CHECK(series.records.back().sd_absolute == 100.0);
        CHECK(series.records.back().mean_relative_percent ==
              relative_score(200.0, canvas));
    }
    SUBCASE("fifteen constant series keep the constant as mean") {
        const std::vector<RunStats> runs(15, constant_stats(12345, 3, canvas));
        for (const AggregateRecord& rec : aggregate(runs).records)
            CHECK(rec.mean_absolute == 12345.0);
    }
    SUBCASE("empty input is an error") {
        CHECK_THROWS_AS(aggregate({}), std::invalid_argument);
    }
    SUBCASE("length mismatch is an error") {
        const std::vector<RunStats> runs{constant_stats(1, 2, canvas),
                                         constant_stats(1, 3, canvas)};
        CHECK_THROWS_AS(aggregate(runs), std::invalid_argument);
    }
}

TEST_CASE("aggregated mean best score is non-increasing on a real sweep") {
    const ImageBuffer target = checker_target();
    SweepSpec spec = two_point_spec();
    spec.base.max_generations = 60;
    const auto results = run_sweep(spec, target);
    for (const AxisRuns& axis : results) {
        const AggregateSeries series = aggregate(axis.runs);
        double prev = series.records.front().mean_absolute;
        for (const AggregateRecord& rec : series.records) {
            CHECK(rec.mean_absolute <= prev);
            prev = rec.mean_absolute;
        }
    }
}

TEST_CASE("csv writers emit the documented schemas") {
    const CanvasDims canvas{10, 10};
    SUBCASE("one-generation aggregate: header plus one record") {
        const auto path = temp_file("evoshapes_agg_test.csv");
        write_csv({{"8", aggregate({constant_stats(7650, 1, canvas)})}}, path);
        const std::string text = slurp(path);
        CHECK(text ==
              "axis_value,generation,mean_absolute,sd_absolute,mean_relative_percent\n"
              "8,1,7650,0.00,90.00\n");
        std::filesystem::remove(path);
    }
    SUBCASE("raw stats for 3 runs x 10 generations: 31 lines") {
        const auto path = temp_file("evoshapes_raw_test.csv");
        AxisRuns axis;
        axis.point.label = "5";
        axis.runs = {constant_stats(100, 10, canvas), constant_stats(200, 10, canvas),
                     constant_stats(300, 10, canvas)};
        write_csv(std::vector<AxisRuns>{axis}, path);
        const std::string text = slurp(path);
        CHECK(std::count(text.begin(), text.end(), '\n') == 31);
        CHECK(text.starts_with(
            "axis_value,repetition,generation,absolute_score,relative_percent\n"
            "5,0,1,100,"));
        std::filesystem::remove(path);
    }
    SUBCASE("emitted values parse back to the printed precision") {
        const auto path = temp_file("evoshapes_roundtrip_test.csv");
        const std::vector<RunStats> runs{constant_stats(123, 2, canvas),
                                         constant_stats(456, 2, canvas)};
        const AggregateSeries series = aggregate(runs);
        write_csv({{"x", series}}, path);

        std::ifstream in(path);
        std::string line;
        std::getline(in, line); // header
        REQUIRE(std::getline(in, line));
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        std::string label;
        int generation = 0;
        double mean = 0, sd = 0, rel = 0;
        fields >> label >> generation >> mean >> sd >> rel;
        CHECK(label == "x");
        CHECK(generation == 1);
        CHECK(mean == doctest::Approx(series.records[0].mean_absolute).epsilon(0.5));
        CHECK(sd == doctest::Approx(series.records[0].sd_absolute).epsilon(0.01));
        CHECK(rel ==
              doctest::Approx(series.records[0].mean_relative_percent).epsilon(0.01));
        std::filesystem::remove(path);
    }
}

TEST_CASE("sweep presets cover the documented axes") {
    const EvolutionConfig base = sweep_base();
    CHECK(preset_sweep("vertices", base, 15).points.size() == 18);
    CHECK(preset_sweep("polygons", base, 15).points.size() == 10);
    CHECK(preset_sweep("circles", base, 15).points.size() == 8);
    CHECK(preset_sweep("lines", base, 15).points.size() == 8);
    CHECK(preset_sweep("mutation_probability", base, 15).points.size() == 5);

    const SweepSpec combos = preset_sweep("combinations", base, 15);
    REQUIRE(combos.points.size() == 6);
    for (const AxisPoint& point : combos.points) {
        EvolutionConfig config = combos.base;
        for (const auto& [key, value] : point.overrides)
            apply_setting(config, key, value);
        CHECK(config.composition.total() == 20);
    }
    CHECK_THROWS_AS(preset_sweep("nonsense", base, 15), std::invalid_argument);
}

TEST_CASE("late-run deviation does not exceed the early-run peak") {
    // Qualitative convergence check: SD at the final generation stays at or
    // below the maximum SD seen in the first half. Needs enough generations
    // for the runs to reach their plateau; the acceptance suite repeats this
    // at full scale.
    const ImageBuffer target = checker_target();
    SweepSpec spec;
    spec.base = sweep_base();
    spec.base.max_generations = 2000;
    spec.axis_name = "polygons";
    spec.points = {{"3", {{"polygons", "3"}}}};
    spec.repetitions = 5;

    const auto results = run_sweep(spec, target);
    const AggregateSeries series = aggregate(results[0].runs);
    double early_peak = 0.0;
    for (std::size_t g = 0; g < series.records.size() / 2; ++g)
        early_peak = std::max(early_peak, series.records[g].sd_absolute);
    CHECK(series.records.back().sd_absolute <= early_peak);
}
