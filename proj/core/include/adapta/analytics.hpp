#pragma once

#include <array>
#include <string>
#include <vector>

#include "adapta/activity.hpp"
#include "adapta/error.hpp"
#include "adapta/models.hpp"

namespace adapta {

/// One supervised run of an activity: ten repetitions in the study.
struct SessionLog {
    std::string userId;
    Disability disability = Disability::Visual;
    int iteration = 1;      // 1 or 2
    int sessionIndex = 1;   // 1..3
    std::string activity;   // ActivitySpec spelling, or "unrecorded"
    bool incomplete = false;
    std::vector<RepetitionResult> results;

    int totalErrors() const;

    friend bool operator==(const SessionLog&, const SessionLog&) = default;
};

struct DescriptiveStats {
    double mean = 0.0;
    double sampleSD = 0.0;
    double cv = 0.0;
};

class AnalyticsError : public Error {
public:
    enum class Kind { EmptyInput, InvalidValue, MissingData };

    AnalyticsError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Mean, n-1 standard deviation and coefficient of variation. A single
/// value (or a zero mean) gives cv = 0.
DescriptiveStats descriptiveStats(const std::vector<double>& values);

inline constexpr int kSessionsPerIteration = 3;
inline constexpr int kRepetitionsPerSession = 10;

/// Per-user time statistics over all repetitions of all sessions of one
/// iteration (30 values in the study).
struct UserTimeStats {
    std::string userId;
    Disability disability;
    int iteration;
    std::size_t sampleCount;
    DescriptiveStats stats;
};

std::vector<UserTimeStats> userTimeStats(const std::vector<SessionLog>& logs, int iteration);

using SessionCurves = std::array<std::array<double, kRepetitionsPerSession>, kSessionsPerIteration>;

/// entry[s][r]: mean over users of repetition r's duration in session s.
/// Every user present in the iteration must have all 3 x 10 results.
SessionCurves groupRepetitionMeans(const std::vector<SessionLog>& logs, int iteration);

/// Mean total errors per session over the users of the iteration.
std::array<double, kSessionsPerIteration> groupErrorMeans(const std::vector<SessionLog>& logs, int iteration);

/// Text and JSON renderings for `stats --report`.
std::string formatTable4(const std::vector<UserTimeStats>& rows);
std::string formatTimeSeries(const SessionCurves& curves, int iteration);
std::string formatErrorMeans(const std::array<double, kSessionsPerIteration>& means, int iteration);
std::string table4Json(const std::vector<UserTimeStats>& rows);
std::string timeSeriesJson(const SessionCurves& curves, int iteration);
std::string errorMeansJson(const std::array<double, kSessionsPerIteration>& means, int iteration);

}  // namespace adapta
