#include "adapta/evaluation_data.hpp"

#include <cctype>

namespace adapta::evaluation {

// Per-repetition times (seconds) and session error totals of the twelve
// study participants, two iterations of three sessions each.
const std::vector<PublishedSession>& publishedSessions() {
    static const std::vector<PublishedSession> sessions = {
        {Disability::Autism, 1, 1, 1, {14, 9, 7, 8, 7, 11, 12, 10, 13, 9}, 0},
        {Disability::Autism, 1, 1, 2, {48, 18, 22, 18, 19, 13, 12, 13, 16, 12}, 2},
        {Disability::Autism, 1, 1, 3, {10, 14, 10, 10, 10, 10, 10, 10, 10, 10}, 0},
        {Disability::Autism, 2, 1, 1, {70, 85, 6, 16, 19, 43, 11, 21, 21, 56}, 2},
        {Disability::Autism, 2, 1, 2, {10, 10, 18, 13, 10, 13, 13, 13, 13, 12}, 1},
        {Disability::Autism, 2, 1, 3, {40, 27, 14, 25, 14, 33, 33, 22, 15, 18}, 0},
        {Disability::Autism, 3, 1, 1, {20, 20, 16, 20, 22, 22, 22, 18, 7, 28}, 1},
        {Disability::Autism, 3, 1, 2, {18, 17, 17, 19, 17, 26, 17, 20, 18, 18}, 0},
        {Disability::Autism, 3, 1, 3, {19, 13, 12, 42, 20, 13, 14, 14, 12, 13}, 2},
        {Disability::Hearing, 1, 1, 1, {47, 17, 14, 8, 19, 6, 19, 17, 15, 18}, 2},
        {Disability::Hearing, 1, 1, 2, {27, 4, 12, 60, 12, 10, 10, 12, 12, 13}, 3},
        {Disability::Hearing, 1, 1, 3, {12, 11, 12, 11, 11, 11, 13, 20, 14, 12}, 1},
        {Disability::Hearing, 2, 1, 1, {17, 50, 10, 10, 14, 14, 15, 28, 27, 32}, 6},
        {Disability::Hearing, 2, 1, 2, {14, 15, 15, 13, 14, 13, 16, 12, 20, 13}, 5},
        {Disability::Hearing, 2, 1, 3, {40, 17, 13, 40, 17, 13, 13, 12, 14, 18}, 1},
        {Disability::Hearing, 3, 1, 1, {27, 28, 17, 17, 16, 15, 18, 19, 20, 22}, 4},
        {Disability::Hearing, 3, 1, 2, {15, 18, 18, 13, 20, 22, 14, 15, 15, 13}, 3},
        {Disability::Hearing, 3, 1, 3, {17, 17, 33, 20, 14, 14, 13, 11, 12, 12}, 3},
        {Disability::Physical, 1, 1, 1, {12, 24, 15, 7, 10, 15, 7, 10, 18, 16}, 5},
        {Disability::Physical, 1, 1, 2, {7, 64, 12, 15, 7, 16, 14, 18, 18, 7}, 4},
        {Disability::Physical, 1, 1, 3, {7, 12, 8, 7, 7, 7, 23, 15, 14, 7}, 4},
        {Disability::Physical, 2, 1, 1, {14, 16, 65, 12, 32, 23, 18, 22, 39, 8}, 4},
        {Disability::Physical, 2, 1, 2, {69, 7, 30, 22, 6, 28, 54, 7, 8, 10}, 7},
        {Disability::Physical, 2, 1, 3, {7, 7, 7, 54, 8, 17, 12, 12, 13, 7}, 4},
        {Disability::Physical, 3, 1, 1, {20, 27, 18, 32, 25, 30, 61, 40, 24, 57}, 3},
        {Disability::Physical, 3, 1, 2, {8, 6, 7, 6, 11, 15, 19, 5, 10, 7}, 6},
        {Disability::Physical, 3, 1, 3, {7, 9, 10, 39, 9, 13, 14, 7, 10, 9}, 6},
        {Disability::Visual, 1, 1, 1, {6, 7, 14, 13, 14, 14, 14, 12, 9, 13}, 7},
        {Disability::Visual, 1, 1, 2, {10, 7, 7, 7, 7, 7, 9, 7, 7, 8}, 3},
        {Disability::Visual, 1, 1, 3, {7, 10, 6, 10, 10, 9, 10, 7, 9, 7}, 2},
        {Disability::Visual, 2, 1, 1, {25, 22, 27, 32, 24, 24, 18, 21, 23, 30}, 5},
        {Disability::Visual, 2, 1, 2, {21, 17, 18, 24, 16, 14, 12, 23, 22, 25}, 5},
        {Disability::Visual, 2, 1, 3, {19, 13, 14, 15, 16, 16, 14, 12, 14, 14}, 3},
        {Disability::Visual, 3, 1, 1, {28, 33, 32, 32, 32, 25, 27, 28, 29, 30}, 8},
        {Disability::Visual, 3, 1, 2, {21, 22, 24, 33, 23, 27, 26, 20, 21, 22}, 7},
        {Disability::Visual, 3, 1, 3, {25, 23, 21, 23, 24, 23, 20, 19, 20, 20}, 4},
        {Disability::Autism, 1, 2, 1, {12, 12, 12, 12, 12, 12, 25, 13, 11, 12}, 2},
        {Disability::Autism, 1, 2, 2, {13, 14, 14, 13, 13, 14, 13, 13, 13, 18}, 0},
        {Disability::Autism, 1, 2, 3, {7, 13, 7, 8, 7, 7, 7, 6, 7, 12}, 0},
        {Disability::Autism, 2, 2, 1, {10, 14, 12, 13, 14, 13, 19, 14, 16, 19}, 1},
        {Disability::Autism, 2, 2, 2, {14, 18, 20, 12, 48, 15, 12, 13, 13, 15}, 1},
        {Disability::Autism, 2, 2, 3, {13, 15, 16, 11, 11, 14, 14, 15, 11, 14}, 0},
        {Disability::Autism, 3, 2, 1, {22, 16, 15, 15, 15, 17, 13, 13, 15, 16}, 1},
        {Disability::Autism, 3, 2, 2, {9, 11, 12, 13, 12, 14, 13, 16, 17, 20}, 0},
        {Disability::Autism, 3, 2, 3, {12, 12, 13, 20, 13, 24, 15, 15, 16, 17}, 0},
        {Disability::Hearing, 1, 2, 1, {11, 20, 31, 22, 17, 16, 13, 15, 12, 39}, 2},
        {Disability::Hearing, 1, 2, 2, {12, 12, 13, 12, 13, 15, 13, 16, 13, 12}, 2},
        {Disability::Hearing, 1, 2, 3, {12, 20, 13, 10, 17, 19, 10, 10, 10, 10}, 1},
        {Disability::Hearing, 2, 2, 1, {17, 41, 12, 19, 12, 14, 16, 12, 13, 13}, 4},
        {Disability::Hearing, 2, 2, 2, {21, 27, 17, 13, 13, 18, 19, 12, 16, 18}, 7},
        {Disability::Hearing, 2, 2, 3, {12, 15, 14, 11, 15, 16, 15, 14, 10, 15}, 5},
        {Disability::Hearing, 3, 2, 1, {23, 19, 21, 18, 14, 15, 17, 25, 15, 14}, 3},
        {Disability::Hearing, 3, 2, 2, {27, 26, 23, 24, 28, 26, 22, 24, 24, 23}, 3},
        {Disability::Hearing, 3, 2, 3, {18, 15, 15, 16, 15, 14, 20, 13, 13, 17}, 2},
        {Disability::Physical, 1, 2, 1, {10, 7, 30, 10, 7, 10, 11, 11, 19, 13}, 5},
        {Disability::Physical, 1, 2, 2, {8, 7, 10, 13, 22, 15, 10, 24, 10, 11}, 2},
        {Disability::Physical, 1, 2, 3, {7, 7, 9, 7, 7, 15, 18, 9, 9, 7}, 5},
        {Disability::Physical, 2, 2, 1, {75, 12, 20, 7, 11, 12, 30, 15, 6, 10}, 6},
        {Disability::Physical, 2, 2, 2, {12, 8, 7, 6, 7, 9, 7, 9, 7, 7}, 2},
        {Disability::Physical, 2, 2, 3, {15, 9, 9, 17, 9, 7, 7, 50, 7, 39}, 4},
        {Disability::Physical, 3, 2, 1, {10, 8, 12, 10, 11, 8, 15, 9, 10, 8}, 8},
        {Disability::Physical, 3, 2, 2, {10, 9, 12, 22, 11, 23, 24, 24, 34, 11}, 3},
        {Disability::Physical, 3, 2, 3, {12, 27, 7, 8, 11, 9, 7, 9, 7, 7}, 4},
        {Disability::Visual, 1, 2, 1, {13, 10, 7, 10, 15, 7, 7, 8, 26, 14}, 2},
        {Disability::Visual, 1, 2, 2, {12, 7, 7, 12, 9, 7, 10, 8, 8, 7}, 2},
        {Disability::Visual, 1, 2, 3, {7, 10, 13, 18, 9, 7, 9, 7, 21, 10}, 1},
        {Disability::Visual, 2, 2, 1, {9, 12, 10, 7, 9, 34, 9, 26, 12, 8}, 3},
        {Disability::Visual, 2, 2, 2, {17, 9, 12, 7, 9, 8, 8, 10, 7, 8}, 4},
        {Disability::Visual, 2, 2, 3, {7, 7, 7, 7, 7, 7, 9, 19, 7, 16}, 4},
        {Disability::Visual, 3, 2, 1, {18, 20, 22, 15, 23, 15, 17, 17, 21, 20}, 5},
        {Disability::Visual, 3, 2, 2, {11, 16, 14, 23, 13, 17, 20, 14, 11, 11}, 4},
        {Disability::Visual, 3, 2, 3, {14, 15, 11, 13, 15, 15, 10, 9, 12, 10}, 2},
    };
    return sessions;
}

std::string userId(Disability disability, int user) {
    std::string name(toString(disability));
    for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return name + "-" + std::to_string(user);
}

std::vector<SessionLog> publishedLogs() {
    std::vector<SessionLog> logs;
    for (const auto& s : publishedSessions()) {
        SessionLog log;
        log.userId = userId(s.disability, s.user);
        log.disability = s.disability;
        log.iteration = s.iteration;
        log.sessionIndex = s.session;
        log.activity = "unrecorded";
        for (int r = 0; r < kRepetitionsPerSession; ++r) {
            const int errors = s.errors / kRepetitionsPerSession + (r < s.errors % kRepetitionsPerSession ? 1 : 0);
            log.results.push_back({r + 1, s.seconds[static_cast<std::size_t>(r)], errors});
        }
        logs.push_back(std::move(log));
    }
    return logs;
}

const std::vector<PrintedUserStats>& printedUserStats() {
    static const std::vector<PrintedUserStats> rows = {
        {Disability::Autism, 1, 1, 13.16, 7.49, 0.56},    {Disability::Autism, 1, 2, 11.73, 3.83, 0.32},
        {Disability::Autism, 2, 1, 25.7, 18.51, 0.72},    {Disability::Autism, 2, 2, 15.26, 6.64, 0.43},
        {Disability::Autism, 3, 1, 18.46, 6.19, 0.33},    {Disability::Autism, 3, 2, 14.7, 2.79, 0.19},
        {Disability::Hearing, 1, 1, 15.96, 11.26, 0.70},  {Disability::Hearing, 1, 2, 15.26, 6.36, 0.41},
        {Disability::Hearing, 2, 1, 18.63, 9.86, 0.52},   {Disability::Hearing, 2, 2, 16.0, 5.84, 0.36},
        {Disability::Hearing, 3, 1, 17.5, 5.02, 0.28},    {Disability::Hearing, 3, 2, 14.7, 4.75, 0.19},
        {Disability::Physical, 1, 1, 13.96, 10.68, 0.76}, {Disability::Physical, 1, 2, 11.76, 5.69, 0.48},
        {Disability::Physical, 2, 1, 21.13, 18.03, 0.85}, {Disability::Physical, 2, 2, 14.86, 15.18, 1.0},
        {Disability::Physical, 3, 1, 18.5, 14.82, 0.80},  {Disability::Physical, 3, 2, 12.83, 6.34, 0.49},
        {Disability::Visual, 1, 1, 9.23, 2.67, 0.28},     {Disability::Visual, 1, 2, 10.5, 4.56, 0.43},
        {Disability::Visual, 2, 1, 19.5, 5.44, 0.27},     {Disability::Visual, 2, 2, 10.8, 6.16, 0.57},
        {Disability::Visual, 3, 1, 25.1, 4.40, 0.17},     {Disability::Visual, 3, 2, 15.4, 4.04, 0.26},
    };
    return rows;
}

const SessionCurves& printedGroupCurves(int iteration) {
    // As printed; several points are truncated rather than rounded.
    static const SessionCurves first = {{
        {{25, 28.16, 20.05, 17.25, 19.5, 20.16, 20.16, 20.5, 20.4, 26.58}},
        {{22.3, 17.08, 16.66, 20.25, 13.5, 17, 18, 13.75, 15, 13.33}},
        {{17.5, 14.41, 13.3, 24.6, 13.33, 14.91, 15.75, 13.41, 13.08, 12.25}},
    }};
    static const SessionCurves second = {{
        {{19.16, 15.91, 17, 13.16, 13.33, 14.41, 16, 14.83, 14.66, 15.5}},
        {{13.83, 13.66, 13.41, 14.16, 16.5, 15.08, 14.25, 15.25, 14.41, 13.41}},
        {{11.33, 13.75, 11.16, 12.16, 11.33, 12, 11.75, 14.66, 10.83, 14.5}},
    }};
    return iteration == 1 ? first : second;
}

const std::array<double, kSessionsPerIteration>& printedErrorBars(int iteration) {
    static const std::array<double, kSessionsPerIteration> first = {4, 4, 3};
    static const std::array<double, kSessionsPerIteration> second = {3, 3, 2};
    return iteration == 1 ? first : second;
}

const std::vector<UeqResponse>& publishedUeqResponses() {
    // Columns of the published answer table, items 1..26.
    static const std::vector<UeqResponse> responses = {
        {"P1", {6, 5, 3, 5, 2, 4, 6, 7, 3, 1, 6, 1, 5, 6, 7, 4, 2, 3, 2, 5, 3, 7, 2, 1, 1, 7}},
        {"P2", {7, 5, 5, 3, 4, 6, 5, 6, 5, 2, 7, 1, 6, 6, 6, 5, 2, 4, 2, 6, 2, 6, 1, 1, 2, 6}},
        {"P3", {6, 7, 3, 1, 3, 5, 6, 6, 4, 1, 6, 1, 6, 7, 6, 6, 3, 2, 3, 5, 2, 6, 2, 1, 2, 6}},
        {"P4", {5, 5, 3, 2, 2, 5, 5, 7, 2, 3, 5, 2, 6, 5, 5, 6, 1, 2, 2, 5, 6, 6, 1, 2, 2, 5}},
        {"P5", {6, 6, 1, 1, 2, 5, 6, 7, 3, 1, 6, 1, 7, 6, 7, 6, 1, 1, 2, 6, 1, 6, 1, 1, 2, 6}},
    };
    return responses;
}

}  // namespace adapta::evaluation
