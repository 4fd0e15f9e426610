// metdp: multilevel histogram thresholding from the command line.
//
//   metdp threshold --method met-dp --hist h.csv
//   metdp threshold --method kittler --n 5 --image in.pgm --quantized out.pgm --metrics
//   metdp example [--mode disjoint]
//   metdp sweep --method otsu --nmax 15 --corpus dir/
//   metdp bench --nmax 25 --reps 5 --L 256
//
// Exit codes: 0 success, 1 input error, 2 infeasible, 3 example self-check failure.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "metdp/dp_fixed.hpp"
#include "metdp/errors.hpp"
#include "metdp/experiments.hpp"
#include "metdp/io.hpp"
#include "metdp/met_dp.hpp"
#include "metdp/metrics.hpp"
#include "metdp/quantize.hpp"
#include "metdp/worked_example.hpp"

namespace fs = std::filesystem;
using namespace metdp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitSelfCheck = 3;

/// Thrown to report a failure at a named pipeline stage.
class StageError : public std::runtime_error {
public:
    StageError(const std::string& stage, const std::string& what, int code)
        : std::runtime_error(stage + ": " + what), code_(code) {}
    int code() const noexcept { return code_; }

private:
    int code_;
};

template <typename F>
auto stage(const std::string& name, F&& fn) {
    try {
        return fn();
    } catch (const InfeasibleError& e) {
        throw StageError(name, e.what(), kExitInfeasible);
    } catch (const Error& e) {
        throw StageError(name, e.what(), kExitInput);
    }
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        write_text_file(path, text);
    }
}

struct RunConfig {
    std::string method;
    std::string mode;
    std::optional<int> n;
    std::string image;
    std::string hist;
    int levels = 256;
    std::string out;
    std::string quantized;
    bool metrics = false;
    std::string dump_scores;
    std::string dump_tables;
    std::string corpus;
    int synthetic = 50;
    std::uint64_t seed = CorpusOptions{}.seed;
    int n_max = 15;
    int reps = 5;
    std::string dump_dir;
};

int cmd_threshold(const RunConfig& cfg) {
    const bool free_count = cfg.method == "met-dp";
    if (free_count && cfg.n) {
        throw StageError("config", "met-dp finds the threshold count itself; drop --n", kExitInput);
    }
    if (!free_count && (!cfg.n || *cfg.n < 1)) {
        throw StageError("config", "--method " + cfg.method + " needs --n >= 1", kExitInput);
    }
    if (cfg.image.empty() == cfg.hist.empty()) {
        throw StageError("config", "give exactly one of --image or --hist", kExitInput);
    }
    if ((cfg.metrics || !cfg.quantized.empty()) && cfg.image.empty()) {
        throw StageError("config", "--metrics and --quantized need --image", kExitInput);
    }

    const ObjectiveKind kind = free_count ? ObjectiveKind::Met
                                          : stage("config", [&] { return parse_objective(cfg.method); });
    const BoundaryMode mode =
        !cfg.mode.empty() ? stage("config", [&] { return parse_mode(cfg.mode); })
        : (free_count || kind == ObjectiveKind::Met) ? BoundaryMode::Overlapping
                                                     : BoundaryMode::Disjoint;

    std::optional<GrayImage> image;
    const GrayHistogram h = stage("input", [&] {
        if (!cfg.image.empty()) {
            image = read_pgm_file(cfg.image);
            return build_histogram(*image, cfg.levels);
        }
        return load_histogram(cfg.hist, cfg.levels);
    });

    const auto sm = stage("scores", [&] { return build_score_matrix(h, kind, mode); });
    if (!cfg.dump_scores.empty()) write_text_file(cfg.dump_scores, write_score_matrix_csv(sm));

    ThresholdSet result = stage("solve", [&] {
        if (!free_count) return solve_fixed_n(sm, *cfg.n);
        const auto tables = fill_tables(sm, cfg.dump_tables.empty() ? TableVariant::Links
                                                                    : TableVariant::FullIndices);
        if (!cfg.dump_tables.empty()) write_text_file(cfg.dump_tables, write_met_tables_csv(tables));
        if (!is_valid_score(tables.mem(0, h.levels() - 1))) {
            throw InfeasibleError("every cut of the histogram contains a degenerate region");
        }
        return backtrack(tables);
    });

    ThresholdResult record{cfg.method, std::string(to_string(mode)), result,
                           stage("regions", [&] { return region_map(h, result.thresholds); }),
                           std::nullopt};
    if (image) {
        const auto q = stage("quantize",
                             [&] { return apply_thresholds(*image, result.thresholds, cfg.levels); });
        if (!cfg.quantized.empty()) write_pgm_file(cfg.quantized, q.pixels);
        if (cfg.metrics) {
            record.quality = stage("metrics", [&] { return quality_report(*image, q.pixels); });
        }
    }
    emit(cfg.out, write_result_json(record));
    return kExitOk;
}

int cmd_example(const RunConfig& cfg) {
    const BoundaryMode mode = cfg.mode.empty() ? BoundaryMode::Overlapping
                                               : stage("config", [&] { return parse_mode(cfg.mode); });
    const GrayHistogram h = cfg.hist.empty() ? example_histogram()
                                             : stage("input", [&] { return load_histogram(cfg.hist); });
    const auto report = stage("example", [&] { return run_worked_example(h); });

    std::cout << "Histogram\n" << render_histogram_table(h) << "\n";
    std::cout << "Q(a,b), MET criterion, base-2 logarithms\n" << render_score_table(report.scores) << "\n";
    std::cout << "mem[i][j] with split, overlapping\n" << render_mem_table(report.overlapping) << "\n";
    std::cout << "mem[i][j] with split, disjoint\n" << render_mem_table(report.disjoint) << "\n";

    const auto& tables = mode == BoundaryMode::Overlapping ? report.overlapping : report.disjoint;
    const Level last = h.levels() - 1;
    if (mode == BoundaryMode::Overlapping && last >= 17) {
        std::cout << "mem[8][17]=" << format_cell(tables.mem(8, 17), -1)
                  << " split=" << tables.split(8, 17) << "\n";
    }
    std::cout << "mem[0][" << last << "]=" << format_cell(tables.mem(0, last), -1)
              << " split=" << tables.split(0, last) << "\n";
    if (is_valid_score(tables.mem(0, last))) {
        const auto t = backtrack(tables);
        std::cout << "mode=" << to_string(mode) << " thresholds=";
        for (std::size_t i = 0; i < t.thresholds.size(); ++i) {
            std::cout << (i ? " " : "") << t.thresholds[i];
        }
        std::cout << "\n";
    }

    if (!cfg.dump_dir.empty()) {
        fs::create_directories(cfg.dump_dir);
        const fs::path dir(cfg.dump_dir);
        write_text_file(dir / "histogram.csv", write_histogram_csv(h));
        write_text_file(dir / "scores.csv", write_score_matrix_csv(report.scores));
        write_text_file(dir / "mem_overlapping.csv", write_met_tables_csv(report.overlapping));
        write_text_file(dir / "mem_disjoint.csv", write_met_tables_csv(report.disjoint));
    }

    for (const auto& m : report.mismatches) {
        std::cout << "mismatch " << m.table << "[" << m.row << "][" << m.col << "]: expected "
                  << m.expected << ", got " << m.actual << "\n";
    }
    std::cout << (report.passed() ? "PASS" : "FAIL") << " (" << report.cells_checked
              << " reference cells, " << report.mismatches.size() << " mismatches)\n";
    return report.passed() ? kExitOk : kExitSelfCheck;
}

std::vector<GrayHistogram> load_corpus(const RunConfig& cfg) {
    if (cfg.corpus.empty()) {
        return make_synthetic_corpus({cfg.synthetic, cfg.levels, cfg.seed});
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(cfg.corpus)) {
        const auto ext = entry.path().extension().string();
        if (entry.is_regular_file() && (ext == ".pgm" || ext == ".csv" || ext == ".json")) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        throw InputError("no .pgm/.csv/.json files in " + cfg.corpus);
    }
    std::vector<GrayHistogram> corpus;
    for (const auto& f : files) corpus.push_back(load_histogram(f, cfg.levels));
    return corpus;
}

int cmd_sweep(const RunConfig& cfg) {
    std::vector<StudyMethod> methods;
    stage("config", [&] {
        if (cfg.method == "all" && cfg.mode.empty()) {
            methods = default_study_methods();
            return 0;
        }
        std::vector<ObjectiveKind> kinds;
        if (cfg.method == "all") {
            kinds = {ObjectiveKind::Otsu, ObjectiveKind::Kapur, ObjectiveKind::Kittler};
        } else {
            kinds = {parse_objective(cfg.method)};
        }
        std::vector<BoundaryMode> modes;
        if (cfg.mode == "both") {
            modes = {BoundaryMode::Disjoint, BoundaryMode::Overlapping};
        } else {
            modes = {cfg.mode.empty() ? BoundaryMode::Disjoint : parse_mode(cfg.mode)};
        }
        for (const auto k : kinds)
            for (const auto m : modes) methods.push_back({k, m});
        return 0;
    });

    const auto corpus = stage("input", [&] { return load_corpus(cfg); });
    const auto study = stage("sweep", [&] { return run_delta_study(corpus, methods, cfg.n_max); });
    for (const auto& f : study.failures) {
        std::cerr << "warning: " << f.method.label() << "/" << to_string(f.method.mode) << " image "
                  << f.image << ": " << f.message << "\n";
    }
    emit(cfg.out, write_delta_csv(study));
    return kExitOk;
}

int cmd_bench(const RunConfig& cfg) {
    const GrayHistogram h = stage("input", [&] {
        if (!cfg.image.empty()) return build_histogram(read_pgm_file(cfg.image), cfg.levels);
        if (!cfg.hist.empty()) return load_histogram(cfg.hist, cfg.levels);
        return make_synthetic_histogram(cfg.levels, 3, cfg.seed);
    });
    const auto record = stage("bench", [&] { return run_runtime_study(h, cfg.n_max, cfg.reps); });
    std::cerr << "met-dp median " << record.free_median << " s (min " << record.free_min << ", max "
              << record.free_max << ", " << record.reps << " reps; " << record.machine_note << ")\n";
    emit(cfg.out, write_runtime_csv(record));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multilevel histogram thresholding: fixed-count DP and free-count MET-DP"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* threshold = app.add_subcommand("threshold", "Find thresholds for one image or histogram");
    threshold->add_option("--method", cfg.method, "met-dp, otsu, kapur, kittler or met")
        ->required()
        ->check(CLI::IsMember({"met-dp", "otsu", "kapur", "kittler", "met"}));
    threshold->add_option("--mode", cfg.mode, "overlapping or disjoint");
    threshold->add_option("--n", cfg.n, "threshold count (fixed-count methods only)");
    threshold->add_option("--image", cfg.image, "input PGM");
    threshold->add_option("--hist", cfg.hist, "input histogram (.csv or .json)");
    threshold->add_option("--levels", cfg.levels, "intensity levels for image input")
        ->check(CLI::Range(2, 256));
    threshold->add_option("--out", cfg.out, "result JSON path (default stdout)");
    threshold->add_option("--quantized", cfg.quantized, "write the thresholded image as PGM");
    threshold->add_flag("--metrics", cfg.metrics, "attach MSE/PSNR/SSIM of the thresholded image");
    threshold->add_option("--dump-scores", cfg.dump_scores, "write the score matrix as CSV");
    threshold->add_option("--dump-tables", cfg.dump_tables, "write met-dp mem/split table as CSV");

    auto* example = app.add_subcommand("example", "Rebuild and self-check the 19-level reference example");
    example->add_option("--mode", cfg.mode, "root summary for overlapping (default) or disjoint");
    example->add_option("--hist", cfg.hist, "check another histogram against the reference tables");
    example->add_option("--dump-dir", cfg.dump_dir, "also write the tables as CSV files here");

    auto* sweep = app.add_subcommand("sweep", "Optimal-value deltas between consecutive counts");
    sweep->add_option("--method", cfg.method, "otsu, kapur, kittler or all")->default_val("all");
    sweep->add_option("--mode", cfg.mode, "disjoint, overlapping or both");
    sweep->add_option("--nmax", cfg.n_max, "largest threshold count")->default_val(15);
    sweep->add_option("--corpus", cfg.corpus, "directory of .pgm/.csv/.json inputs");
    sweep->add_option("--synthetic", cfg.synthetic, "synthetic corpus size when no --corpus")
        ->default_val(50);
    sweep->add_option("--seed", cfg.seed, "synthetic corpus seed");
    sweep->add_option("--levels", cfg.levels, "intensity levels")->check(CLI::Range(4, 256));
    sweep->add_option("--out", cfg.out, "CSV path (default stdout)");

    auto* bench = app.add_subcommand("bench", "Cumulative runtime of fixed-count DP vs met-dp");
    bench->add_option("--nmax", cfg.n_max, "largest threshold count")->default_val(15);
    bench->add_option("--reps", cfg.reps, "repetitions (>= 3)")->default_val(5);
    bench->add_option("--L", cfg.levels, "intensity levels")->check(CLI::Range(4, 256));
    bench->add_option("--image", cfg.image, "input PGM (default: synthetic histogram)");
    bench->add_option("--hist", cfg.hist, "input histogram (.csv or .json)");
    bench->add_option("--seed", cfg.seed, "synthetic histogram seed");
    bench->add_option("--out", cfg.out, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*threshold) return cmd_threshold(cfg);
        if (*example) return cmd_example(cfg);
        if (*sweep) return cmd_sweep(cfg);
        if (*bench) return cmd_bench(cfg);
    } catch (const StageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code();
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
