#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "adapta/activity.hpp"
#include "adapta/codec.hpp"
#include "adapta/gesture.hpp"
#include "adapta/skeleton.hpp"
#include "adapta/ueq.hpp"

namespace testsupport {

using namespace adapta;

// Standing skeleton, metres. Shoulders at y = 0.4, head at y = 0.6.
inline constexpr double kShoulderY = 0.4;
inline constexpr double kHeadY = 0.6;
inline constexpr double kShoulderX = 0.2;
inline constexpr double kHandDownY = 0.1;
inline constexpr double kHandMidY = 0.5;
inline constexpr double kHandUpY = 0.8;

/// Every joint present; hands resting below the shoulders.
SkeletonFrame restingFrame(std::int64_t t);

/// Resting frame with the given arm's hand placed so that
/// mapHandToCursor(frame, arm) yields (u, v).
SkeletonFrame cursorFrame(std::int64_t t, Side arm, double u, double v);

/// Swaps left and right joints and negates x.
SkeletonFrame mirrorFrame(const SkeletonFrame& frame);
Trace mirrorTrace(const Trace& trace);

/// Random trace of up to maxFrames frames whose hand heights wander across
/// the pose thresholds and whose gaps straddle the gesture window.
Trace randomGestureTrace(std::mt19937& rng, std::size_t maxFrames = 200);

/// Independent reference for recognizeTrace: for each gesture, scan for the
/// earliest initial-pose frame, then the earliest ordered completion of the
/// remaining poses inside the window. Without one, scanning resumes at the
/// first frame past the window. Events are merged by end time, ties in
/// definition order.
std::vector<GestureEvent> oracleGestures(const Trace& trace, const std::vector<GestureDefinition>& defs);

ProfileRecord visualStudent();
ProfileRecord hearingStudent(LateralityProblem laterality = LateralityProblem::CannotRecognizeRight);
ProfileRecord physicalStudent(Posture posture = Posture::Standing, ArmMobility arms = ArmMobility::bothArms(Side::Right),
                              LateralityProblem laterality = LateralityProblem::CannotRecognizeLeft);
ProfileRecord autismStudent(LateralityProblem laterality = LateralityProblem::CannotRecognizeRight);

/// The laterality activity a profile can run.
ActivitySpec lateralitySpecFor(const ProfileRecord& record);

/// A cooperative student: picks whatever completes the current repetition,
/// but first makes one wrong choice in every repetition listed in mistakes
/// (where the variant has a way to be wrong). The script is produced both as
/// a skeleton trace and as the activity inputs that trace yields.
struct Script {
    Trace trace;
    std::vector<ActivityInput> inputs;  // traceInputs(trace, config, posture)
};

Script scriptedStudent(const ProfileRecord& record, const ActivitySpec& spec, const ContentLibrary& content,
                       const std::set<int>& mistakes = {}, std::int64_t frameMs = 100);

/// Session-protocol lines equivalent to a list of activity inputs.
std::vector<std::string> protocolLines(const std::vector<ActivityInput>& inputs);

/// Questionnaire answers as printed in the paper's Table 5 (P1..P5).
std::vector<UeqResponse> paperTable5();

/// Fresh empty directory under the system temp dir.
std::filesystem::path scratchDir(const std::string& tag);

}  // namespace testsupport
