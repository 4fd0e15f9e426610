#include "metdp/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "metdp/dp_fixed.hpp"
#include "metdp/errors.hpp"
#include "metdp/met_dp.hpp"
#include "metdp/parallel.hpp"

namespace metdp {
namespace {

// Uniform in [0, 1) from the top 53 bits; std distributions are not
// reproducible across standard libraries.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

double median_of(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const auto mid = v.size() / 2;
    return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

double sample_stddev(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    double ss = 0.0;
    for (const double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

GrayHistogram make_synthetic_histogram(int levels, int components, std::uint64_t seed,
                                       std::uint64_t pixels) {
    if (levels < 2 || components < 1 || pixels < static_cast<std::uint64_t>(levels)) {
        throw InputError("synthetic histogram needs >= 2 levels, >= 1 component and a pixel per level");
    }
    std::mt19937_64 rng(seed);
    const double span = static_cast<double>(levels);
    std::vector<double> mixture(static_cast<std::size_t>(levels), 0.0);
    for (int c = 0; c < components; ++c) {
        const double mean = uniform(rng, 0.05 * span, 0.95 * span);
        const double sd = uniform(rng, span / 64.0, span / 10.0);
        const double weight = uniform(rng, 0.2, 1.0);
        for (int i = 0; i < levels; ++i) {
            const double z = (i - mean) / sd;
            mixture[static_cast<std::size_t>(i)] += weight * std::exp(-0.5 * z * z) / sd;
        }
    }
    const double mass = std::accumulate(mixture.begin(), mixture.end(), 0.0);
    const double floor_fraction = uniform(rng, 0.002, 0.05);
    const double n = static_cast<double>(pixels);
    const auto jitter = std::max<std::uint64_t>(1, pixels / static_cast<std::uint64_t>(levels) / 16);

    std::vector<double> raw(static_cast<std::size_t>(levels));
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const double expected = n * ((1.0 - floor_fraction) * mixture[i] / mass + floor_fraction / span);
        raw[i] = expected + static_cast<double>(rng() % (jitter + 1));
    }

    // One pixel per level, the rest shared out in proportion to `raw` with
    // largest remainders rounding up, so the total is exactly `pixels`.
    const auto spare = pixels - static_cast<std::uint64_t>(levels);
    const double scale = static_cast<double>(spare) / std::accumulate(raw.begin(), raw.end(), 0.0);
    std::vector<std::uint64_t> counts(raw.size());
    std::vector<std::pair<double, std::size_t>> remainders;
    std::uint64_t assigned = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const double share = raw[i] * scale;
        const auto whole = static_cast<std::uint64_t>(share);
        counts[i] = 1 + whole;
        assigned += whole;
        remainders.emplace_back(share - static_cast<double>(whole), i);
    }
    std::sort(remainders.begin(), remainders.end(),
              [](const auto& a, const auto& b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
    for (std::size_t r = 0; assigned < spare; ++r, ++assigned) ++counts[remainders[r % remainders.size()].second];
    return GrayHistogram(std::move(counts));
}

std::vector<GrayHistogram> make_synthetic_corpus(const CorpusOptions& options) {
    std::mt19937_64 rng(options.seed);
    std::vector<GrayHistogram> corpus;
    corpus.reserve(static_cast<std::size_t>(options.count));
    for (int i = 0; i < options.count; ++i) {
        const int components = 1 + static_cast<int>(rng() % 5);
        corpus.push_back(make_synthetic_histogram(options.levels, components, rng(), options.pixels));
    }
    return corpus;
}

std::string StudyMethod::label() const { return std::string(to_string(kind)); }

std::vector<StudyMethod> default_study_methods() {
    return {{ObjectiveKind::Otsu, BoundaryMode::Disjoint},
            {ObjectiveKind::Kapur, BoundaryMode::Disjoint},
            {ObjectiveKind::Kittler, BoundaryMode::Disjoint},
            {ObjectiveKind::Kittler, BoundaryMode::Overlapping}};
}

DeltaStudy run_delta_study(const std::vector<GrayHistogram>& corpus,
                           const std::vector<StudyMethod>& methods, int n_max, unsigned workers) {
    if (corpus.empty()) {
        throw InputError("delta study needs a non-empty corpus");
    }
    for (const auto& h : corpus) {
        if (n_max < 2 || n_max > h.levels() - 2) {
            throw InputError("n_max " + std::to_string(n_max) + " is outside [2, " +
                             std::to_string(h.levels() - 2) + "]");
        }
    }

    DeltaStudy study;
    study.values.assign(methods.size(), std::vector<std::vector<double>>(corpus.size()));
    std::vector<std::vector<std::string>> errors(methods.size(),
                                                 std::vector<std::string>(corpus.size()));

    parallel_for(
        corpus.size(),
        [&](std::size_t image) {
            for (std::size_t m = 0; m < methods.size(); ++m) {
                try {
                    const auto sweep =
                        sweep_optimal_values(corpus[image], methods[m].kind, methods[m].mode, n_max);
                    auto& out = study.values[m][image];
                    for (const auto& p : sweep) out.push_back(p.result.objective_value);
                } catch (const Error& e) {
                    study.values[m][image].clear();
                    errors[m][image] = e.what();
                }
            }
        },
        workers);

    for (std::size_t m = 0; m < methods.size(); ++m) {
        for (std::size_t image = 0; image < corpus.size(); ++image) {
            if (!errors[m][image].empty()) {
                study.failures.push_back({methods[m], image, errors[m][image]});
            }
        }
        for (int n = 1; n < n_max; ++n) {
            std::vector<double> deltas;
            for (const auto& series : study.values[m]) {
                if (series.empty()) continue;
                deltas.push_back(series[static_cast<std::size_t>(n)] -
                                 series[static_cast<std::size_t>(n - 1)]);
            }
            DeltaRow row{methods[m], n};
            row.samples = deltas.size();
            if (!deltas.empty()) {
                row.min = *std::min_element(deltas.begin(), deltas.end());
                row.max = *std::max_element(deltas.begin(), deltas.end());
                row.mean = std::accumulate(deltas.begin(), deltas.end(), 0.0) /
                           static_cast<double>(deltas.size());
                double ss = 0.0;
                for (const double d : deltas) ss += (d - row.mean) * (d - row.mean);
                row.stddev = std::sqrt(ss / static_cast<double>(deltas.size()));
                // Rounding can push the mean of identical values a hair outside [min, max].
                row.mean = std::clamp(row.mean, row.min, row.max);
            }
            study.rows.push_back(row);
        }
    }
    return study;
}

double median_seconds(const std::function<void()>& fn, int reps) {
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r) {
        const auto start = Clock::now();
        fn();
        times.push_back(seconds_since(start));
    }
    return median_of(std::move(times));
}

std::vector<RuntimeSeries> time_per_n(const std::vector<TimedMethod>& methods, int n_max, int reps) {
    if (reps < 3) {
        throw InputError("runtime study needs at least 3 repetitions, got " + std::to_string(reps));
    }
    if (n_max < 1) {
        throw InputError("runtime study needs n_max >= 1");
    }
    const auto n_count = static_cast<std::size_t>(n_max);
    std::vector<RuntimeSeries> out;
    for (const auto& method : methods) {
        // times[n-1][rep]
        std::vector<std::vector<double>> times(n_count);
        for (int r = 0; r < reps; ++r) {
            for (int n = 1; n <= n_max; ++n) {
                const auto start = Clock::now();
                method.run(n);
                times[static_cast<std::size_t>(n - 1)].push_back(seconds_since(start));
            }
        }
        RuntimeSeries s{method.name, {}, {}, {}};
        std::vector<double> running(static_cast<std::size_t>(reps), 0.0);
        for (std::size_t n = 0; n < n_count; ++n) {
            s.per_n_median.push_back(median_of(times[n]));
            for (std::size_t r = 0; r < running.size(); ++r) running[r] += times[n][r];
            s.cumulative_median.push_back(median_of(running));
            s.cumulative_stddev.push_back(sample_stddev(running));
        }
        out.push_back(std::move(s));
    }
    return out;
}

RuntimeRecord run_runtime_study(const GrayHistogram& h, int n_max, int reps) {
    if (n_max > h.levels() - 2) {
        throw InputError("n_max " + std::to_string(n_max) + " exceeds L-2 = " +
                         std::to_string(h.levels() - 2));
    }
    std::vector<TimedMethod> methods;
    for (const auto kind : {ObjectiveKind::Otsu, ObjectiveKind::Kapur, ObjectiveKind::Kittler}) {
        methods.push_back({"dp-n-" + std::string(to_string(kind)), [&h, kind](int n) {
                               const auto sm = build_score_matrix(h, kind, BoundaryMode::Disjoint);
                               try {
                                   static_cast<void>(solve_fixed_n(sm, n));
                               } catch (const InfeasibleError&) {
                                   // Still a complete run for timing purposes.
                               }
                           }});
    }

    RuntimeRecord record;
    record.reps = reps;
    record.series = time_per_n(methods, n_max, reps);

    std::vector<double> free_times;
    for (int r = 0; r < reps; ++r) {
        const auto start = Clock::now();
        const auto sm = build_score_matrix(h, ObjectiveKind::Met, BoundaryMode::Overlapping);
        const auto tables = fill_tables(sm);
        if (is_valid_score(tables.mem(0, h.levels() - 1))) {
            static_cast<void>(backtrack(tables));
        }
        free_times.push_back(seconds_since(start));
    }
    record.free_median = median_of(free_times);
    record.free_stddev = sample_stddev(free_times);
    record.free_min = *std::min_element(free_times.begin(), free_times.end());
    record.free_max = *std::max_element(free_times.begin(), free_times.end());
    record.machine_note = machine_note();
    return record;
}

std::string machine_note() {
    std::string note = std::to_string(std::max(1u, std::thread::hardware_concurrency())) +
                       " hardware threads";
#if defined(__clang__)
    note += ", clang " __clang_version__;
#elif defined(__GNUC__)
    note += ", gcc " __VERSION__;
#endif
    return note;
}

std::string write_delta_csv(const DeltaStudy& study) {
    std::string out = "method,mode,transition,min,max,avg,std,samples\n";
    for (const auto& r : study.rows) {
        out += r.method.label() + "," + std::string(to_string(r.method.mode)) + "," +
               std::to_string(r.from_n) + "->" + std::to_string(r.from_n + 1) + "," + fmt(r.min) +
               "," + fmt(r.max) + "," + fmt(r.mean) + "," + fmt(r.stddev) + "," +
               std::to_string(r.samples) + "\n";
    }
    return out;
}

std::string write_runtime_csv(const RuntimeRecord& record) {
    std::string out = "n,method,median_cum_seconds,std\n";
    const std::size_t n_count = record.series.empty() ? 0 : record.series.front().cumulative_median.size();
    for (std::size_t n = 0; n < n_count; ++n) {
        for (const auto& s : record.series) {
            out += std::to_string(n + 1) + "," + s.name + "," + fmt(s.cumulative_median[n]) + "," +
                   fmt(s.cumulative_stddev[n]) + "\n";
        }
        out += std::to_string(n + 1) + "," + record.free_method + "," + fmt(record.free_median) +
               "," + fmt(record.free_stddev) + "\n";
    }
    return out;
}

}  // namespace metdp
