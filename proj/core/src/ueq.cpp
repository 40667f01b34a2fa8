#include "adapta/ueq.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <istream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace adapta {

namespace {

using S = UeqScale;
constexpr Side L = Side::Left;
constexpr Side R = Side::Right;

constexpr std::array<UeqItemMeta, kUeqItemCount> kItems = {{
    {1, S::Attractiveness, R, "annoying", "enjoyable"},
    {2, S::Perspicuity, R, "not understandable", "understandable"},
    {3, S::Novelty, L, "creative", "dull"},
    {4, S::Perspicuity, L, "easy to learn", "difficult to learn"},
    {5, S::Stimulation, L, "valuable", "inferior"},
    {6, S::Stimulation, R, "boring", "exciting"},
    {7, S::Stimulation, R, "not interesting", "interesting"},
    {8, S::Dependability, R, "unpredictable", "predictable"},
    {9, S::Efficiency, L, "fast", "slow"},
    {10, S::Novelty, L, "inventive", "conventional"},
    {11, S::Dependability, R, "obstructive", "supportive"},
    {12, S::Attractiveness, L, "good", "bad"},
    {13, S::Perspicuity, R, "complicated", "easy"},
    {14, S::Attractiveness, R, "unlikable", "pleasing"},
    {15, S::Novelty, R, "usual", "leading edge"},
    {16, S::Attractiveness, R, "unpleasant", "pleasant"},
    {17, S::Dependability, L, "secure", "not secure"},
    {18, S::Stimulation, L, "motivating", "demotivating"},
    {19, S::Dependability, L, "meets expectations", "does not meet expectations"},
    {20, S::Efficiency, R, "inefficient", "efficient"},
    {21, S::Perspicuity, L, "clear", "confusing"},
    {22, S::Efficiency, R, "impractical", "practical"},
    {23, S::Efficiency, L, "organized", "cluttered"},
    {24, S::Attractiveness, L, "attractive", "unattractive"},
    {25, S::Attractiveness, L, "friendly", "unfriendly"},
    {26, S::Novelty, R, "conservative", "innovative"},
}};

// Lower borders of Excellent, Good, Above average, Below average.
constexpr std::array<std::array<double, 4>, kUeqScaleCount> kBenchmarkBorders = {{
    {1.75, 1.52, 1.17, 0.70},
    {1.78, 1.47, 0.98, 0.54},
    {1.90, 1.56, 1.08, 0.64},
    {1.65, 1.48, 1.14, 0.78},
    {1.55, 1.31, 0.99, 0.50},
    {1.40, 1.05, 0.71, 0.30},
}};

constexpr std::array<UeqScale, kUeqScaleCount> kScales = {S::Attractiveness, S::Perspicuity, S::Efficiency,
                                                          S::Dependability, S::Stimulation, S::Novelty};

double median(const std::vector<double>& sorted, std::size_t first, std::size_t count) {
    const std::size_t mid = first + count / 2;
    return count % 2 == 1 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2.0;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\"");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\"");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> splitRow(const std::string& line, char delimiter) {
    std::vector<std::string> cells;
    if (delimiter == ' ') {
        std::istringstream in(line);
        for (std::string cell; in >> cell;) cells.push_back(trim(cell));
        return cells;
    }
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, delimiter)) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == delimiter) cells.emplace_back();
    return cells;
}

char detectDelimiter(const std::string& header) {
    for (char c : {',', ';', '\t'}) {
        if (header.find(c) != std::string::npos) return c;
    }
    return ' ';
}

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

int parseInt(const std::string& cell, const std::string& context) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(cell, &used);
        if (used == cell.size()) return v;
    } catch (const std::exception&) {
    }
    throw UeqError(UeqError::Kind::MalformedInput, "not an integer: '" + cell + "' (" + context + ")");
}

void checkRange(const UeqResponse& r) {
    for (std::size_t i = 0; i < kUeqItemCount; ++i) {
        if (r.items[i] < 1 || r.items[i] > 7) {
            throw UeqError(UeqError::Kind::OutOfRange,
                           "item " + std::to_string(i + 1) + " of " + (r.participant.empty() ? "response" : r.participant) +
                               " is " + std::to_string(r.items[i]) + ", expected 1..7",
                           static_cast<int>(i + 1));
        }
    }
}

std::string fixed(double v, int digits) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(digits) << v;
    return out.str();
}

}  // namespace

std::string_view toString(UeqScale scale) {
    switch (scale) {
        case S::Attractiveness: return "Attractiveness";
        case S::Perspicuity: return "Perspicuity";
        case S::Efficiency: return "Efficiency";
        case S::Dependability: return "Dependability";
        case S::Stimulation: return "Stimulation";
        case S::Novelty: return "Novelty";
    }
    return "";
}

std::string_view toString(BenchmarkCategory category) {
    switch (category) {
        case BenchmarkCategory::Excellent: return "Excellent";
        case BenchmarkCategory::Good: return "Good";
        case BenchmarkCategory::AboveAverage: return "Above average";
        case BenchmarkCategory::BelowAverage: return "Below average";
        case BenchmarkCategory::Bad: return "Bad";
    }
    return "";
}

const std::array<UeqItemMeta, kUeqItemCount>& ueqItems() { return kItems; }

std::vector<int> itemsOf(UeqScale scale) {
    std::vector<int> items;
    for (const auto& meta : kItems) {
        if (meta.scale == scale) items.push_back(meta.index);
    }
    return items;
}

std::array<int, kUeqItemCount> transformResponse(const UeqResponse& response) {
    checkRange(response);
    std::array<int, kUeqItemCount> scores{};
    for (std::size_t i = 0; i < kUeqItemCount; ++i) {
        const int v = response.items[i];
        scores[i] = kItems[i].positivePole == Side::Right ? v - 4 : 4 - v;
    }
    return scores;
}

int untransformScore(int item, int score) {
    if (item < 1 || item > static_cast<int>(kUeqItemCount)) {
        throw UeqError(UeqError::Kind::OutOfRange, "no item " + std::to_string(item), item);
    }
    return kItems[static_cast<std::size_t>(item - 1)].positivePole == Side::Right ? score + 4 : 4 - score;
}

std::array<double, kUeqScaleCount> participantScaleScores(const UeqResponse& response) {
    const auto scores = transformResponse(response);
    std::array<double, kUeqScaleCount> sums{};
    std::array<int, kUeqScaleCount> counts{};
    for (std::size_t i = 0; i < kUeqItemCount; ++i) {
        const auto s = static_cast<std::size_t>(kItems[i].scale);
        sums[s] += scores[i];
        ++counts[s];
    }
    for (std::size_t s = 0; s < kUeqScaleCount; ++s) sums[s] /= counts[s];
    return sums;
}

BenchmarkCategory classifyBenchmark(double scaleMean, UeqScale scale) {
    const auto& borders = kBenchmarkBorders[static_cast<std::size_t>(scale)];
    if (scaleMean >= borders[0]) return BenchmarkCategory::Excellent;
    if (scaleMean >= borders[1]) return BenchmarkCategory::Good;
    if (scaleMean >= borders[2]) return BenchmarkCategory::AboveAverage;
    if (scaleMean >= borders[3]) return BenchmarkCategory::BelowAverage;
    return BenchmarkCategory::Bad;
}

FiveNumberSummary fiveNumberSummary(std::vector<double> values) {
    if (values.empty()) throw UeqError(UeqError::Kind::TooFewResponses, "no values to summarise");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    const std::size_t half = n % 2 == 1 ? n / 2 + 1 : n / 2;
    return {values.front(), median(values, 0, half), median(values, 0, n), median(values, n - half, half), values.back()};
}

ScaleReport aggregateScales(const std::vector<UeqResponse>& responses) {
    if (responses.size() < 2) {
        throw UeqError(UeqError::Kind::TooFewResponses, "at least two responses are needed, got " + std::to_string(responses.size()));
    }
    std::array<std::vector<double>, kUeqScaleCount> perScale;
    for (const auto& r : responses) {
        const auto scores = participantScaleScores(r);
        for (std::size_t s = 0; s < kUeqScaleCount; ++s) perScale[s].push_back(scores[s]);
    }

    ScaleReport report;
    report.participants = responses.size();
    const double n = static_cast<double>(responses.size());
    for (std::size_t s = 0; s < kUeqScaleCount; ++s) {
        const auto& values = perScale[s];
        const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
        double squares = 0.0;
        for (double v : values) squares += (v - mean) * (v - mean);
        report.scales[s] = {kScales[s], mean, squares / (n - 1.0), classifyBenchmark(mean, kScales[s]),
                            fiveNumberSummary(values)};
    }
    return report;
}

std::vector<UeqResponse> parseUeqTable(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    char delimiter = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        if (!delimiter) delimiter = detectDelimiter(line);
        rows.push_back(splitRow(line, delimiter));
    }
    if (rows.size() < 2) throw UeqError(UeqError::Kind::MalformedInput, "answer table needs a header and data rows");

    const auto& header = rows.front();
    std::vector<UeqResponse> responses;

    if (lower(header.front()) == "item") {
        // Participants are columns, one item per row.
        for (std::size_t c = 1; c < header.size(); ++c) responses.push_back({header[c], {}});
        std::vector<bool> seen(kUeqItemCount, false);
        for (std::size_t r = 1; r < rows.size(); ++r) {
            const auto& row = rows[r];
            const int item = parseInt(row.front(), "item number");
            if (item < 1 || item > static_cast<int>(kUeqItemCount) || seen[static_cast<std::size_t>(item - 1)]) {
                throw UeqError(UeqError::Kind::MalformedInput, "bad or repeated item number " + row.front());
            }
            seen[static_cast<std::size_t>(item - 1)] = true;
            if (row.size() != header.size()) {
                throw UeqError(UeqError::Kind::MalformedInput, "item " + row.front() + " has the wrong number of answers");
            }
            for (std::size_t c = 1; c < row.size(); ++c) {
                responses[c - 1].items[static_cast<std::size_t>(item - 1)] = parseInt(row[c], "item " + row.front());
            }
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
            throw UeqError(UeqError::Kind::MalformedInput, "answer table does not cover all 26 items");
        }
    } else {
        // Participants are rows; header names the item of each column.
        if (header.size() != kUeqItemCount + 1) {
            throw UeqError(UeqError::Kind::MalformedInput, "header must list 26 item columns");
        }
        std::vector<int> itemOfColumn;
        for (std::size_t c = 1; c < header.size(); ++c) {
            std::string cell = header[c];
            if (!cell.empty() && cell.front() == '#') cell.erase(0, 1);
            itemOfColumn.push_back(parseInt(cell, "header"));
        }
        auto sorted = itemOfColumn;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < kUeqItemCount; ++i) {
            if (sorted[i] != static_cast<int>(i + 1)) {
                throw UeqError(UeqError::Kind::MalformedInput, "header must name items 1..26 exactly once");
            }
        }
        for (std::size_t r = 1; r < rows.size(); ++r) {
            const auto& row = rows[r];
            if (row.size() != header.size()) {
                throw UeqError(UeqError::Kind::MalformedInput, "participant " + row.front() + " has the wrong number of answers");
            }
            UeqResponse response{row.front(), {}};
            for (std::size_t c = 1; c < row.size(); ++c) {
                response.items[static_cast<std::size_t>(itemOfColumn[c - 1] - 1)] = parseInt(row[c], row.front());
            }
            responses.push_back(std::move(response));
        }
    }
    for (const auto& r : responses) checkRange(r);
    return responses;
}

std::string formatScaleReport(const ScaleReport& report, bool withBenchmark, bool withBoxplot) {
    std::ostringstream out;
    out << "UEQ scales (" << report.participants << " participants)\n";
    out << std::left << std::setw(16) << "Scale" << std::right << std::setw(8) << "Mean" << std::setw(10) << "Variance";
    if (withBenchmark) out << "  Benchmark";
    out << '\n';
    for (const auto& s : report.scales) {
        out << std::left << std::setw(16) << toString(s.scale) << std::right << std::setw(8) << fixed(s.mean, 3)
            << std::setw(10) << fixed(s.variance, 2);
        if (withBenchmark) out << "  " << toString(s.category);
        out << '\n';
    }
    if (withBoxplot) {
        out << "\nPer-participant distribution\n";
        out << std::left << std::setw(16) << "Scale" << std::right << std::setw(8) << "Min" << std::setw(8) << "Q1"
            << std::setw(8) << "Median" << std::setw(8) << "Q3" << std::setw(8) << "Max" << '\n';
        for (const auto& s : report.scales) {
            const auto& d = s.distribution;
            out << std::left << std::setw(16) << toString(s.scale) << std::right << std::setw(8) << fixed(d.min, 3)
                << std::setw(8) << fixed(d.lowerQuartile, 3) << std::setw(8) << fixed(d.median, 3) << std::setw(8)
                << fixed(d.upperQuartile, 3) << std::setw(8) << fixed(d.max, 3) << '\n';
        }
    }
    return out.str();
}

std::string scaleReportJson(const ScaleReport& report) {
    nlohmann::json scales = nlohmann::json::array();
    for (const auto& s : report.scales) {
        const auto& d = s.distribution;
        scales.push_back({{"scale", toString(s.scale)},
                          {"mean", s.mean},
                          {"variance", s.variance},
                          {"benchmark", toString(s.category)},
                          {"boxplot",
                           {{"min", d.min}, {"q1", d.lowerQuartile}, {"median", d.median}, {"q3", d.upperQuartile}, {"max", d.max}}}});
    }
    return nlohmann::json{{"participants", report.participants}, {"scales", scales}}.dump();
}

}  // namespace adapta
