#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "metdp/histogram.hpp"
#include "metdp/objectives.hpp"

namespace metdp {

// Synthetic corpus ---------------------------------------------------------

struct CorpusOptions {
    int count = 50;
    int levels = 256;
    std::uint64_t seed = 20240601;
    std::uint64_t pixels = 1u << 16;
};

/// Histograms drawn from mixtures of 1-5 discretized Gaussians over a uniform
/// noise floor. Every level is populated. Bit-identical for a given seed on
/// every platform (only raw mt19937_64 output is consumed).
std::vector<GrayHistogram> make_synthetic_corpus(const CorpusOptions& options = {});

/// A single corpus-style histogram with `components` modes.
GrayHistogram make_synthetic_histogram(int levels, int components, std::uint64_t seed,
                                       std::uint64_t pixels = 1u << 16);

// Consecutive-count delta study --------------------------------------------

struct StudyMethod {
    ObjectiveKind kind;
    BoundaryMode mode;

    std::string label() const;
};

/// Otsu, Kapur and Kittler with disjoint regions, plus Kittler overlapping.
std::vector<StudyMethod> default_study_methods();

struct DeltaRow {
    StudyMethod method;
    int from_n = 0;  // transition from_n -> from_n + 1
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double stddev = 0.0;  // population standard deviation
    std::size_t samples = 0;
};

struct StudyFailure {
    StudyMethod method;
    std::size_t image = 0;
    std::string message;
};

struct DeltaStudy {
    std::vector<DeltaRow> rows;
    /// values[m][image][n-1]: optimal value with n thresholds (empty when the
    /// image failed for method m).
    std::vector<std::vector<std::vector<double>>> values;
    std::vector<StudyFailure> failures;
};

/// Solves n = 1..n_max for each corpus histogram and method and aggregates
/// value(n+1) - value(n). Solver errors are recorded per image and excluded.
/// Images are processed on up to `workers` threads (0: worker_count()).
/// Throws InputError for an empty corpus or n_max outside [2, L-2].
DeltaStudy run_delta_study(const std::vector<GrayHistogram>& corpus,
                           const std::vector<StudyMethod>& methods, int n_max,
                           unsigned workers = 0);

// Runtime study --------------------------------------------------------------

/// A method timed once per threshold count n.
struct TimedMethod {
    std::string name;
    std::function<void(int n)> run;
};

struct RuntimeSeries {
    std::string name;
    std::vector<double> per_n_median;       // seconds, index n-1
    std::vector<double> cumulative_median;  // median over reps of sum_{k<=n}
    std::vector<double> cumulative_stddev;  // sample std over reps
};

struct RuntimeRecord {
    std::vector<RuntimeSeries> series;
    std::string free_method = "met-dp";
    double free_median = 0.0;
    double free_stddev = 0.0;
    double free_min = 0.0;
    double free_max = 0.0;
    int reps = 0;
    std::string machine_note;
};

/// Times each method for n = 1..n_max, `reps` times, sequentially on the
/// calling thread. Throws InputError when reps < 3.
std::vector<RuntimeSeries> time_per_n(const std::vector<TimedMethod>& methods, int n_max, int reps);

/// Fixed-count Otsu, Kapur and Kittler (each run builds its score matrix and
/// solves) against one free-count MET run per repetition.
RuntimeRecord run_runtime_study(const GrayHistogram& h, int n_max, int reps);

/// Median wall-clock seconds of `fn` over `reps` calls.
double median_seconds(const std::function<void()>& fn, int reps);

std::string machine_note();

// CSV emitters -------------------------------------------------------------

/// Columns: method,mode,transition,min,max,avg,std,samples.
std::string write_delta_csv(const DeltaStudy& study);

/// Columns: n,method,median_cum_seconds,std. The free-count method appears
/// as a constant series over the same n range.
std::string write_runtime_csv(const RuntimeRecord& record);

}  // namespace metdp
