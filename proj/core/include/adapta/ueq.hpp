#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adapta/error.hpp"
#include "adapta/models.hpp"

namespace adapta {

inline constexpr std::size_t kUeqItemCount = 26;
inline constexpr std::size_t kUeqScaleCount = 6;

enum class UeqScale { Attractiveness, Perspicuity, Efficiency, Dependability, Stimulation, Novelty };

std::string_view toString(UeqScale scale);

/// One semantic-differential item. The positive pole is the side whose
/// adjective is the favourable one.
struct UeqItemMeta {
    int index;  // 1..26
    UeqScale scale;
    Side positivePole;
    std::string_view leftAdjective;
    std::string_view rightAdjective;
};

const std::array<UeqItemMeta, kUeqItemCount>& ueqItems();

/// Item numbers belonging to a scale, ascending.
std::vector<int> itemsOf(UeqScale scale);

/// Raw answers, 1..7 per item, item 1 first.
struct UeqResponse {
    std::string participant;
    std::array<int, kUeqItemCount> items{};
};

class UeqError : public Error {
public:
    enum class Kind { OutOfRange, TooFewResponses, MalformedInput };

    UeqError(Kind kind, const std::string& message, int item = 0) : Error(message), kind_(kind), item_(item) {}
    Kind kind() const { return kind_; }
    /// Offending item (1-based) for OutOfRange.
    int item() const { return item_; }

private:
    Kind kind_;
    int item_;
};

/// Maps each answer to -3..+3 with +3 on the positive pole.
std::array<int, kUeqItemCount> transformResponse(const UeqResponse& response);

/// Recovers the raw 1..7 answer from a transformed score of one item.
int untransformScore(int item, int score);

/// Mean transformed score per scale, indexed by UeqScale.
std::array<double, kUeqScaleCount> participantScaleScores(const UeqResponse& response);

enum class BenchmarkCategory { Excellent, Good, AboveAverage, BelowAverage, Bad };

std::string_view toString(BenchmarkCategory category);

/// Benchmark borders per scale; each lower border is inclusive.
BenchmarkCategory classifyBenchmark(double scaleMean, UeqScale scale);

struct FiveNumberSummary {
    double min = 0.0;
    double lowerQuartile = 0.0;
    double median = 0.0;
    double upperQuartile = 0.0;
    double max = 0.0;
};

/// Quartiles by the inclusive-median method: for odd n the median belongs
/// to both halves.
FiveNumberSummary fiveNumberSummary(std::vector<double> values);

struct ScaleSummary {
    UeqScale scale;
    double mean;
    double variance;  // n-1 over per-participant scale means
    BenchmarkCategory category;
    FiveNumberSummary distribution;
};

struct ScaleReport {
    std::size_t participants = 0;
    std::array<ScaleSummary, kUeqScaleCount> scales{};
};

/// Needs at least two responses so the variance is defined.
ScaleReport aggregateScales(const std::vector<UeqResponse>& responses);

/// Reads a delimiter-separated answer table. A header whose first cell is
/// "Item" means one participant per column (items down the rows);
/// otherwise one participant per row with item numbers across the header.
/// Comma, semicolon, tab or whitespace delimiters are detected.
std::vector<UeqResponse> parseUeqTable(std::istream& in);

std::string formatScaleReport(const ScaleReport& report, bool withBenchmark, bool withBoxplot);
std::string scaleReportJson(const ScaleReport& report);

}  // namespace adapta
