#include "metdp/worked_example.hpp"

#include <cmath>
#include <cstdio>

namespace metdp {
namespace {

constexpr double kCellTolerance = 0.0005;

std::string fixed3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

bool value_matches(double expected, double actual) {
    if (std::isinf(expected)) return !is_valid_score(actual);
    return is_valid_score(actual) && std::abs(expected - actual) <= kCellTolerance;
}

void check_mem(const std::string& name, const std::vector<ReferenceCell>& cells,
               const MetDpTables& t, ExampleReport& report) {
    for (const auto& c : cells) {
        ++report.cells_checked;
        const double actual = t.mem(c.row, c.col);
        const int split = t.split(c.row, c.col);
        if (!value_matches(c.value, actual) || split != c.split) {
            report.mismatches.push_back(
                {name, c.row, c.col, format_cell(c.value, c.split), format_cell(actual, split)});
        }
    }
}

}  // namespace

GrayHistogram example_histogram() {
    return GrayHistogram({0, 0, 7, 10, 7, 1, 2, 4, 8, 5, 3, 1, 2, 4, 6, 9, 6, 2, 1});
}

std::string format_cell(double value, int split) {
    std::string s = is_valid_score(value) ? fixed3(value) : "INF";
    if (split >= 0) s += "[" + std::to_string(split) + "]";
    return s;
}

ExampleReport run_worked_example(const GrayHistogram& h) {
    auto scores = build_score_matrix(h, ObjectiveKind::Met, BoundaryMode::Overlapping);
    auto overlapping = fill_tables(scores, TableVariant::FullIndices);
    auto disjoint = fill_tables(build_score_matrix(h, ObjectiveKind::Met, BoundaryMode::Disjoint),
                                TableVariant::FullIndices);
    ExampleReport report{std::move(scores), std::move(overlapping), std::move(disjoint), 0, {}};

    for (const auto& c : reference_scores()) {
        ++report.cells_checked;
        if (c.row >= h.levels() || c.col >= h.levels()) {
            report.mismatches.push_back({"Q", c.row, c.col, fixed3(c.value), "missing"});
            continue;
        }
        const double actual = report.scores.closed(c.row, c.col);
        // Degenerate intervals print as 0.000 in the reference.
        const bool ok = is_valid_score(actual) ? std::abs(c.value - actual) <= kCellTolerance
                                               : c.value == 0.0;
        if (!ok) {
            report.mismatches.push_back({"Q", c.row, c.col, fixed3(c.value), format_cell(actual, -1)});
        }
    }
    if (h.levels() != example_histogram().levels()) {
        report.mismatches.push_back({"histogram", 0, 0, "19 levels", std::to_string(h.levels())});
        return report;
    }
    check_mem("mem/overlapping", reference_overlapping_mem(), report.overlapping, report);
    check_mem("mem/disjoint", reference_disjoint_mem(), report.disjoint, report);
    return report;
}

std::string render_histogram_table(const GrayHistogram& h) {
    const auto m = prefix_moments(h);
    const std::size_t w = 6;
    std::string out = pad("i", 12);
    for (Level i = 0; i < h.levels(); ++i) out += pad(std::to_string(i), w);
    out += "\n";
    const auto row = [&](const std::string& label, auto value) {
        out += pad(label, 12);
        for (Level i = 0; i < h.levels(); ++i) out += pad(std::to_string(value(i)), w);
        out += "\n";
    };
    const auto u = [](Level i) { return static_cast<std::uint64_t>(i); };
    row("h(i)", [&](Level i) { return h[i]; });
    row("i*h(i)", [&](Level i) { return u(i) * h[i]; });
    row("i*i*h(i)", [&](Level i) { return u(i) * u(i) * h[i]; });
    row("cum h", [&](Level i) { return m.cum0[u(i)]; });
    row("cum i*h", [&](Level i) { return m.cum1[u(i)]; });
    row("cum i*i*h", [&](Level i) { return m.cum2[u(i)]; });
    return out;
}

std::string render_score_table(const ScoreMatrix& sm) {
    const std::size_t w = 7;
    std::string out = pad("a/b", 4);
    for (Level b = 0; b < sm.levels(); ++b) out += pad(std::to_string(b), w);
    out += "\n";
    for (Level a = 0; a < sm.levels(); ++a) {
        out += pad(std::to_string(a), 4);
        for (Level b = 0; b < sm.levels(); ++b) {
            const bool shown = a < b && is_valid_score(sm.closed(a, b));
            out += pad(shown ? fixed3(sm.closed(a, b)) : "", w);
        }
        out += "\n";
    }
    return out;
}

std::string render_mem_table(const MetDpTables& t) {
    const std::size_t w = 11;
    std::string out = pad("i/j", 4);
    for (Level j = 0; j < t.levels(); ++j) out += pad(std::to_string(j), w);
    out += "\n";
    for (Level i = 0; i < t.levels(); ++i) {
        out += pad(std::to_string(i), 4);
        for (Level j = 0; j < t.levels(); ++j) {
            out += pad(i < j ? format_cell(t.mem(i, j), t.split(i, j)) : "", w);
        }
        out += "\n";
    }
    return out;
}

}  // namespace metdp
