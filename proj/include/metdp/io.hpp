#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metdp/histogram.hpp"
#include "metdp/image.hpp"
#include "metdp/met_dp.hpp"
#include "metdp/metrics.hpp"
#include "metdp/objectives.hpp"
#include "metdp/quantize.hpp"

namespace metdp {

// PGM ----------------------------------------------------------------------

/// Parses P2 (ASCII) or P5 (binary) PGM with maxval <= 255. Comments may
/// appear anywhere in the header. Pixel values are kept as stored.
/// Throws ParseError carrying the byte offset of the problem.
GrayImage read_pgm(std::string_view bytes);

/// Canonical P5: "P5\n<w> <h>\n255\n" followed by the raw pixels.
std::string write_pgm(const GrayImage& image);

GrayImage read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const std::filesystem::path& path, const GrayImage& image);

// Histograms ---------------------------------------------------------------

/// CSV with header `level,count` and one row per level 0..L-1 in order.
/// Throws ParseError with a 1-based line number, EmptyHistogramError for a
/// header-only file.
GrayHistogram read_histogram_csv(std::string_view text);
std::string write_histogram_csv(const GrayHistogram& h);

/// `{ "levels": L, "counts": [...] }`.
GrayHistogram read_histogram_json(std::string_view text);
std::string write_histogram_json(const GrayHistogram& h);

/// Dispatches on extension: .csv, .json, otherwise PGM (histogram of the
/// image over `levels` levels).
GrayHistogram load_histogram(const std::filesystem::path& path, int levels = 256);

// Results ------------------------------------------------------------------

struct ThresholdResult {
    std::string method;
    std::string mode;
    ThresholdSet thresholds;
    std::vector<Region> regions;
    std::optional<QualityReport> quality;

    friend bool operator==(const ThresholdResult& a, const ThresholdResult& b) {
        return a.method == b.method && a.mode == b.mode && a.thresholds == b.thresholds &&
               a.regions == b.regions && a.quality.has_value() == b.quality.has_value();
    }
};

/// `{ "method", "mode", "n", "thresholds", "objective", "regions", "quality"? }`.
/// An infinite PSNR is written as the string "inf"; a non-finite objective
/// as null.
std::string write_result_json(const ThresholdResult& result);
ThresholdResult read_result_json(std::string_view text);

// Table dumps --------------------------------------------------------------

/// Upper triangle of the score matrix: header `a/b,0,..,L-1`, one row per a,
/// 3-decimal cells for finite Q[a][b] with a < b, blank otherwise.
std::string write_score_matrix_csv(const ScoreMatrix& sm);

/// mem table with `value[split]` cells (e.g. `1.192[11]`) and `INF[split]`
/// for degenerate intervals. Needs the FullIndices variant.
std::string write_met_tables_csv(const MetDpTables& tables);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace metdp
