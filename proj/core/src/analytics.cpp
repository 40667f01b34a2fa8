#include "adapta/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace adapta {

namespace {

struct UserKey {
    std::string userId;
    Disability disability;
};

/// Users of one iteration in first-appearance order.
std::vector<UserKey> usersOf(const std::vector<SessionLog>& logs, int iteration) {
    std::vector<UserKey> users;
    std::set<std::string> seen;
    for (const auto& log : logs) {
        if (log.iteration != iteration) continue;
        if (seen.insert(log.userId).second) users.push_back({log.userId, log.disability});
    }
    return users;
}

const SessionLog* findSession(const std::vector<SessionLog>& logs, const std::string& user, int iteration, int session) {
    auto it = std::find_if(logs.begin(), logs.end(), [&](const SessionLog& l) {
        return l.userId == user && l.iteration == iteration && l.sessionIndex == session;
    });
    return it == logs.end() ? nullptr : &*it;
}

AnalyticsError missing(const std::string& user, int session, int repetition) {
    std::ostringstream msg;
    msg << "missing data: user " << user << " session " << session;
    if (repetition > 0) msg << " repetition " << repetition;
    return AnalyticsError(AnalyticsError::Kind::MissingData, msg.str());
}

const RepetitionResult& repetitionOf(const SessionLog& log, int repetition) {
    auto it = std::find_if(log.results.begin(), log.results.end(),
                           [&](const RepetitionResult& r) { return r.repetitionIndex == repetition; });
    if (it == log.results.end()) throw missing(log.userId, log.sessionIndex, repetition);
    return *it;
}

std::vector<UserKey> requireUsers(const std::vector<SessionLog>& logs, int iteration) {
    auto users = usersOf(logs, iteration);
    if (users.empty()) {
        throw AnalyticsError(AnalyticsError::Kind::MissingData, "no sessions for iteration " + std::to_string(iteration));
    }
    return users;
}

std::string fixed(double v, int digits = 2) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(digits) << v;
    return out.str();
}

}  // namespace

int SessionLog::totalErrors() const {
    return std::accumulate(results.begin(), results.end(), 0, [](int acc, const RepetitionResult& r) { return acc + r.errors; });
}

DescriptiveStats descriptiveStats(const std::vector<double>& values) {
    if (values.empty()) throw AnalyticsError(AnalyticsError::Kind::EmptyInput, "no values");
    for (double v : values) {
        if (!std::isfinite(v) || v < 0.0) {
            throw AnalyticsError(AnalyticsError::Kind::InvalidValue, "durations must be finite and non-negative");
        }
    }
    const double n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    DescriptiveStats stats{mean, 0.0, 0.0};
    if (values.size() > 1) {
        double squares = 0.0;
        for (double v : values) squares += (v - mean) * (v - mean);
        stats.sampleSD = std::sqrt(squares / (n - 1.0));
    }
    if (mean > 0.0) stats.cv = stats.sampleSD / mean;
    return stats;
}

std::vector<UserTimeStats> userTimeStats(const std::vector<SessionLog>& logs, int iteration) {
    std::vector<UserTimeStats> rows;
    for (const auto& user : requireUsers(logs, iteration)) {
        std::vector<double> times;
        for (int s = 1; s <= kSessionsPerIteration; ++s) {
            const SessionLog* log = findSession(logs, user.userId, iteration, s);
            if (!log) throw missing(user.userId, s, 0);
            for (const auto& r : log->results) times.push_back(r.durationSeconds);
        }
        rows.push_back({user.userId, user.disability, iteration, times.size(), descriptiveStats(times)});
    }
    return rows;
}

SessionCurves groupRepetitionMeans(const std::vector<SessionLog>& logs, int iteration) {
    const auto users = requireUsers(logs, iteration);
    SessionCurves curves{};
    for (int s = 1; s <= kSessionsPerIteration; ++s) {
        for (int r = 1; r <= kRepetitionsPerSession; ++r) {
            double sum = 0.0;
            for (const auto& user : users) {
                const SessionLog* log = findSession(logs, user.userId, iteration, s);
                if (!log) throw missing(user.userId, s, r);
                sum += repetitionOf(*log, r).durationSeconds;
            }
            curves[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(r - 1)] = sum / static_cast<double>(users.size());
        }
    }
    return curves;
}

std::array<double, kSessionsPerIteration> groupErrorMeans(const std::vector<SessionLog>& logs, int iteration) {
    const auto users = requireUsers(logs, iteration);
    std::array<double, kSessionsPerIteration> means{};
    for (int s = 1; s <= kSessionsPerIteration; ++s) {
        double sum = 0.0;
        for (const auto& user : users) {
            const SessionLog* log = findSession(logs, user.userId, iteration, s);
            if (!log) throw missing(user.userId, s, 0);
            sum += log->totalErrors();
        }
        means[static_cast<std::size_t>(s - 1)] = sum / static_cast<double>(users.size());
    }
    return means;
}

std::string formatTable4(const std::vector<UserTimeStats>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(12) << "Disability" << std::setw(14) << "User" << std::setw(10) << "Iteration"
        << std::right << std::setw(9) << "Average" << std::setw(9) << "SD" << std::setw(7) << "CV" << '\n';
    for (const auto& row : rows) {
        out << std::left << std::setw(12) << toString(row.disability) << std::setw(14) << row.userId << std::setw(10)
            << row.iteration << std::right << std::setw(9) << fixed(row.stats.mean) << std::setw(9)
            << fixed(row.stats.sampleSD) << std::setw(7) << fixed(row.stats.cv) << '\n';
    }
    return out.str();
}

std::string formatTimeSeries(const SessionCurves& curves, int iteration) {
    std::ostringstream out;
    out << "Mean time per repetition (s), iteration " << iteration << '\n';
    out << std::left << std::setw(12) << "Repetition";
    for (int s = 1; s <= kSessionsPerIteration; ++s) out << std::right << std::setw(11) << ("Session " + std::to_string(s));
    out << '\n';
    for (int r = 0; r < kRepetitionsPerSession; ++r) {
        out << std::left << std::setw(12) << (r + 1);
        for (int s = 0; s < kSessionsPerIteration; ++s) {
            out << std::right << std::setw(11) << fixed(curves[static_cast<std::size_t>(s)][static_cast<std::size_t>(r)]);
        }
        out << '\n';
    }
    return out.str();
}

std::string formatErrorMeans(const std::array<double, kSessionsPerIteration>& means, int iteration) {
    std::ostringstream out;
    out << "Mean errors per session, iteration " << iteration << '\n';
    for (int s = 0; s < kSessionsPerIteration; ++s) {
        out << "Session " << (s + 1) << "  " << fixed(means[static_cast<std::size_t>(s)]) << "  (chart "
            << std::lround(means[static_cast<std::size_t>(s)]) << ")\n";
    }
    return out.str();
}

std::string table4Json(const std::vector<UserTimeStats>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) {
        out.push_back({{"userId", row.userId},
                       {"disability", toString(row.disability)},
                       {"iteration", row.iteration},
                       {"n", row.sampleCount},
                       {"mean", row.stats.mean},
                       {"sd", row.stats.sampleSD},
                       {"cv", row.stats.cv}});
    }
    return out.dump();
}

std::string timeSeriesJson(const SessionCurves& curves, int iteration) {
    nlohmann::json sessions = nlohmann::json::array();
    for (const auto& series : curves) sessions.push_back(series);
    return nlohmann::json{{"iteration", iteration}, {"sessions", sessions}}.dump();
}

std::string errorMeansJson(const std::array<double, kSessionsPerIteration>& means, int iteration) {
    return nlohmann::json{{"iteration", iteration}, {"meanErrors", means}}.dump();
}

}  // namespace adapta
