#pragma once

#include <array>
#include <string>
#include <vector>

#include "adapta/analytics.hpp"
#include "adapta/ueq.hpp"

namespace adapta::evaluation {

/// Times and error count of one user in one session, as published.
struct PublishedSession {
    Disability disability;
    int user;       // 1..3 within the disability group
    int iteration;  // 1..2
    int session;    // 1..3
    std::array<int, kRepetitionsPerSession> seconds;
    int errors;
};

/// 12 users x 2 iterations x 3 sessions.
const std::vector<PublishedSession>& publishedSessions();

/// "autism-1", "hearing-3", ...
std::string userId(Disability disability, int user);

/// The published sessions as SessionLogs. Only per-session error totals
/// were published; they are spread one per repetition from repetition 1.
std::vector<SessionLog> publishedLogs();

/// Printed per-user statistics (mean, SD, CV) in table order.
struct PrintedUserStats {
    Disability disability;
    int user;
    int iteration;
    double mean;
    double sd;
    double cv;
};

const std::vector<PrintedUserStats>& printedUserStats();

/// Printed group curves, error bars and selected points.
const SessionCurves& printedGroupCurves(int iteration);
const std::array<double, kSessionsPerIteration>& printedErrorBars(int iteration);

/// Questionnaire answers of the five tutors (participants P1..P5).
const std::vector<UeqResponse>& publishedUeqResponses();

}  // namespace adapta::evaluation
