#include "metdp/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "metdp/errors.hpp"

namespace metdp {
namespace {

using nlohmann::json;

class PgmCursor {
public:
    explicit PgmCursor(std::string_view bytes) : bytes_(bytes) {}

    std::size_t offset() const noexcept { return pos_; }
    bool at_end() const noexcept { return pos_ >= bytes_.size(); }

    void skip_space_and_comments() {
        while (!at_end()) {
            const char c = bytes_[pos_];
            if (c == '#') {
                while (!at_end() && bytes_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                return;
            }
        }
    }

    unsigned long number(const char* what) {
        skip_space_and_comments();
        const std::size_t start = pos_;
        unsigned long value = 0;
        const auto* first = bytes_.data() + pos_;
        const auto* last = bytes_.data() + bytes_.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) {
            throw ParseError(std::string("expected ") + what + " at byte " + std::to_string(start),
                             start);
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    void single_whitespace() {
        if (at_end() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            throw ParseError("expected whitespace after PGM header at byte " + std::to_string(pos_),
                             pos_);
        }
        ++pos_;
    }

    std::string_view rest() const { return bytes_.substr(pos_); }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

std::string format3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

json region_to_json(const Region& r) { return {{"lo", r.lo}, {"hi", r.hi}, {"level", r.level}}; }

std::vector<std::string> split_csv_row(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.emplace_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    for (auto& c : cells) {
        while (!c.empty() && std::isspace(static_cast<unsigned char>(c.back()))) c.pop_back();
        while (!c.empty() && std::isspace(static_cast<unsigned char>(c.front()))) c.erase(0, 1);
    }
    return cells;
}

bool parse_uint(const std::string& s, std::uint64_t& out) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size() && !s.empty();
}

}  // namespace

GrayImage read_pgm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
        throw ParseError("bad PGM magic at byte 0 (expected P2 or P5)", 0);
    }
    const bool binary = bytes[1] == '5';
    PgmCursor cur(bytes.substr(2));
    const auto header_offset = [&] { return cur.offset() + 2; };

    const auto width = cur.number("width");
    const auto height = cur.number("height");
    const std::size_t maxval_at = header_offset();
    const auto maxval = cur.number("maxval");
    if (maxval == 0 || maxval > 255) {
        throw ParseError("PGM maxval " + std::to_string(maxval) + " at byte " +
                             std::to_string(maxval_at) + " is outside [1, 255]",
                         maxval_at);
    }
    if (width == 0 || height == 0) {
        throw ParseError("PGM dimensions must be positive", 2);
    }
    const std::size_t count = width * height;
    std::vector<std::uint8_t> pixels;
    pixels.reserve(count);

    if (binary) {
        cur.single_whitespace();
        const auto raster = cur.rest();
        if (raster.size() < count) {
            throw ParseError("truncated P5 raster: " + std::to_string(raster.size()) + " of " +
                                 std::to_string(count) + " bytes at byte " +
                                 std::to_string(header_offset() + raster.size()),
                             header_offset() + raster.size());
        }
        for (std::size_t i = 0; i < count; ++i) {
            const auto v = static_cast<std::uint8_t>(raster[i]);
            if (v > maxval) {
                throw ParseError("pixel value " + std::to_string(v) + " exceeds maxval at byte " +
                                     std::to_string(header_offset() + i),
                                 header_offset() + i);
            }
            pixels.push_back(v);
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            cur.skip_space_and_comments();
            if (cur.at_end()) {
                throw ParseError("truncated P2 raster: got " + std::to_string(i) + " of " +
                                     std::to_string(count) + " values at byte " +
                                     std::to_string(header_offset()),
                                 header_offset());
            }
            const std::size_t at = header_offset();
            const auto v = cur.number("pixel value");
            if (v > maxval) {
                throw ParseError("pixel value " + std::to_string(v) + " exceeds maxval at byte " +
                                     std::to_string(at),
                                 at);
            }
            pixels.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return GrayImage(width, height, std::move(pixels));
}

std::string write_pgm(const GrayImage& image) {
    if (image.empty()) {
        throw InputError("cannot write an empty image");
    }
    std::string out = "P5\n" + std::to_string(image.width()) + " " + std::to_string(image.height()) +
                      "\n255\n";
    out.append(reinterpret_cast<const char*>(image.pixels().data()), image.size());
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write " + path.string());
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

GrayImage read_pgm_file(const std::filesystem::path& path) { return read_pgm(read_text_file(path)); }

void write_pgm_file(const std::filesystem::path& path, const GrayImage& image) {
    write_text_file(path, write_pgm(image));
}

GrayHistogram read_histogram_csv(std::string_view text) {
    std::vector<std::uint64_t> counts;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

        const auto cells = split_csv_row(line);
        if (!header_seen) {
            if (cells.size() != 2 || cells[0] != "level" || cells[1] != "count") {
                throw ParseError("line " + std::to_string(line_no) +
                                     ": expected header 'level,count'",
                                 line_no);
            }
            header_seen = true;
            continue;
        }
        std::uint64_t level = 0, count = 0;
        if (cells.size() != 2 || !parse_uint(cells[0], level) || !parse_uint(cells[1], count)) {
            throw ParseError("line " + std::to_string(line_no) + ": malformed row '" +
                                 std::string(line) + "'",
                             line_no);
        }
        if (level != counts.size()) {
            throw ParseError("line " + std::to_string(line_no) + ": expected level " +
                                 std::to_string(counts.size()) + ", got " + std::to_string(level),
                             line_no);
        }
        counts.push_back(count);
    }
    if (!header_seen) {
        throw ParseError("line 1: missing header 'level,count'", 1);
    }
    if (counts.empty()) {
        throw EmptyHistogramError("histogram CSV has no rows");
    }
    return GrayHistogram(std::move(counts));
}

std::string write_histogram_csv(const GrayHistogram& h) {
    std::string out = "level,count\n";
    for (Level i = 0; i < h.levels(); ++i) {
        out += std::to_string(i) + "," + std::to_string(h[i]) + "\n";
    }
    return out;
}

GrayHistogram read_histogram_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("histogram JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("levels") || !j.contains("counts") ||
        !j["counts"].is_array() || !j["levels"].is_number_unsigned()) {
        throw ParseError("histogram JSON must be {\"levels\": L, \"counts\": [...]}", 0);
    }
    std::vector<std::uint64_t> counts;
    for (const auto& c : j["counts"]) {
        if (!c.is_number_unsigned()) {
            throw ParseError("histogram JSON counts must be non-negative integers", 0);
        }
        counts.push_back(c.get<std::uint64_t>());
    }
    if (counts.empty()) {
        throw EmptyHistogramError("histogram JSON has no counts");
    }
    if (j["levels"].get<std::uint64_t>() != counts.size()) {
        throw ParseError("histogram JSON declares " + std::to_string(j["levels"].get<std::uint64_t>()) +
                             " levels but lists " + std::to_string(counts.size()) + " counts",
                         0);
    }
    return GrayHistogram(std::move(counts));
}

std::string write_histogram_json(const GrayHistogram& h) {
    json j = {{"levels", h.levels()},
              {"counts", std::vector<std::uint64_t>(h.counts().begin(), h.counts().end())}};
    return j.dump() + "\n";
}

GrayHistogram load_histogram(const std::filesystem::path& path, int levels) {
    const auto ext = path.extension().string();
    if (ext == ".csv") return read_histogram_csv(read_text_file(path));
    if (ext == ".json") return read_histogram_json(read_text_file(path));
    return build_histogram(read_pgm_file(path), levels);
}

std::string write_result_json(const ThresholdResult& r) {
    json j;
    j["method"] = r.method;
    j["mode"] = r.mode;
    j["n"] = r.thresholds.count();
    j["thresholds"] = r.thresholds.thresholds;
    if (std::isfinite(r.thresholds.objective_value)) {
        j["objective"] = r.thresholds.objective_value;
    } else {
        j["objective"] = nullptr;
    }
    j["regions"] = json::array();
    for (const auto& reg : r.regions) j["regions"].push_back(region_to_json(reg));
    if (r.quality) {
        const auto& q = *r.quality;
        json quality;
        quality["mse"] = q.mse;
        if (std::isinf(q.psnr)) {
            quality["psnr"] = "inf";
        } else {
            quality["psnr"] = q.psnr;
        }
        quality["ssim"] = q.ssim;
        quality["ssim_params"] = {{"window", q.ssim_params.window},
                                  {"weighting", "gaussian"},
                                  {"sigma", q.ssim_params.sigma},
                                  {"k1", q.ssim_params.k1},
                                  {"k2", q.ssim_params.k2},
                                  {"dynamic_range", q.ssim_params.dynamic_range}};
        j["quality"] = quality;
    }
    return j.dump(2) + "\n";
}

ThresholdResult read_result_json(std::string_view text) {
    ThresholdResult r;
    try {
        const auto j = json::parse(text);
        r.method = j.at("method").get<std::string>();
        r.mode = j.at("mode").get<std::string>();
        r.thresholds.thresholds = j.at("thresholds").get<std::vector<Level>>();
        const auto& obj = j.at("objective");
        r.thresholds.objective_value =
            obj.is_null() ? std::numeric_limits<double>::infinity() : obj.get<double>();
        if (j.at("n").get<std::size_t>() != r.thresholds.count()) {
            throw ParseError("result JSON 'n' does not match the threshold list", 0);
        }
        for (const auto& reg : j.value("regions", json::array())) {
            r.regions.push_back({reg.at("lo").get<Level>(), reg.at("hi").get<Level>(),
                                 reg.at("level").get<Level>()});
        }
        if (j.contains("quality")) {
            const auto& q = j["quality"];
            QualityReport report;
            report.mse = q.at("mse").get<double>();
            report.psnr = q.at("psnr").is_string() ? kInfinitePsnr : q.at("psnr").get<double>();
            report.ssim = q.at("ssim").get<double>();
            const auto& p = q.at("ssim_params");
            report.ssim_params = {p.at("window").get<int>(), p.at("sigma").get<double>(),
                                  p.at("k1").get<double>(), p.at("k2").get<double>(),
                                  p.at("dynamic_range").get<double>()};
            r.quality = report;
        }
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("result JSON: ") + e.what(), e.byte);
    } catch (const json::exception& e) {
        throw ParseError(std::string("result JSON: ") + e.what(), 0);
    }
    return r;
}

std::string write_score_matrix_csv(const ScoreMatrix& sm) {
    const int levels = sm.levels();
    std::string out = "a/b";
    for (Level b = 0; b < levels; ++b) out += "," + std::to_string(b);
    out += "\n";
    for (Level a = 0; a < levels; ++a) {
        out += std::to_string(a);
        for (Level b = 0; b < levels; ++b) {
            out += ",";
            if (a < b && is_valid_score(sm.closed(a, b))) out += format3(sm.closed(a, b));
        }
        out += "\n";
    }
    return out;
}

std::string write_met_tables_csv(const MetDpTables& t) {
    const int levels = t.levels();
    std::string out = "i/j";
    for (Level j = 0; j < levels; ++j) out += "," + std::to_string(j);
    out += "\n";
    for (Level i = 0; i < levels; ++i) {
        out += std::to_string(i);
        for (Level j = 0; j < levels; ++j) {
            out += ",";
            if (i < j) {
                const double v = t.mem(i, j);
                out += (is_valid_score(v) ? format3(v) : std::string("INF")) + "[" +
                       std::to_string(t.split(i, j)) + "]";
            }
        }
        out += "\n";
    }
    return out;
}

}  // namespace metdp
