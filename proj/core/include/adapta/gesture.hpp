#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adapta/skeleton.hpp"

namespace adapta {

enum class GestureId { RaiseLeftArm, RaiseRightArm };

std::string_view toString(GestureId id);
std::optional<GestureId> parseGesture(std::string_view name);

/// Dead-band around every threshold, metres. A hand inside a band matches
/// none of the arm's poses.
inline constexpr double kPoseDeadBand = 0.03;

/// One pose of an arm, judged from the hand's height relative to the
/// same-side shoulder and the head.
struct PosePredicate {
    enum class Kind { HandBelowShoulder, HandBetweenShoulderAndHead, HandAboveHead };

    Kind kind;
    Side arm;

    /// Throws MissingJoint if the hand, shoulder or head is absent.
    bool holds(const SkeletonFrame& frame) const;
    std::string describe() const;
};

struct GestureDefinition {
    GestureId id;
    std::vector<PosePredicate> states;  // initial, intermediate..., final
    std::int64_t maxDurationMs = 1500;
};

inline constexpr std::int64_t kDefaultGestureWindowMs = 1500;

/// Bottom-up raise of one arm: below shoulder, between shoulder and head,
/// above head.
GestureDefinition raiseArmGesture(Side arm, std::int64_t maxDurationMs = kDefaultGestureWindowMs);

/// Both built-in gestures, left first.
std::vector<GestureDefinition> defaultGestures(std::int64_t maxDurationMs = kDefaultGestureWindowMs);

/// Throws Error when a definition has fewer than three states or a
/// non-positive window.
void validateDefinition(const GestureDefinition& def);

struct GestureEvent {
    GestureId id;
    std::int64_t startMs;
    std::int64_t endMs;

    friend bool operator==(const GestureEvent&, const GestureEvent&) = default;
};

/// Progress of every gesture, index-aligned with the definitions.
struct RecognizerState {
    struct Progress {
        std::size_t nextState = 0;  // 0 means idle
        std::int64_t startMs = 0;   // meaningful only when nextState > 0

        friend bool operator==(const Progress&, const Progress&) = default;
    };

    std::vector<Progress> progress;

    static RecognizerState idle(std::size_t gestureCount) { return RecognizerState{std::vector<Progress>(gestureCount)}; }

    friend bool operator==(const RecognizerState&, const RecognizerState&) = default;
};

struct RecognizerStep {
    RecognizerState state;
    std::vector<GestureEvent> events;
};

/// Advances every gesture by one frame. Events are emitted on the frame
/// that satisfies the final pose, in definition order.
RecognizerStep advanceRecognizer(const RecognizerState& state, const SkeletonFrame& frame,
                                 const std::vector<GestureDefinition>& defs);

/// Folds advanceRecognizer over the trace from idle; events by endMs.
std::vector<GestureEvent> recognizeTrace(const Trace& trace, const std::vector<GestureDefinition>& defs);

/// Incremental wrapper used by replay: always listening for the initial
/// pose of any gesture.
class GestureListener {
public:
    explicit GestureListener(std::vector<GestureDefinition> defs = defaultGestures());

    std::vector<GestureEvent> onFrame(const SkeletonFrame& frame);
    const RecognizerState& state() const { return state_; }
    void reset();

private:
    std::vector<GestureDefinition> defs_;
    RecognizerState state_;
};

/// Text for `gestures describe`.
std::string describeGestures(const std::vector<GestureDefinition>& defs);

}  // namespace adapta
