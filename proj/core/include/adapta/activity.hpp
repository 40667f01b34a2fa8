#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "adapta/adaptation.hpp"
#include "adapta/content.hpp"
#include "adapta/error.hpp"
#include "adapta/gesture.hpp"
#include "adapta/models.hpp"

namespace adapta {

// Scene geometry, all in normalised screen units.
inline constexpr double kOptionRadius = 0.08;
inline constexpr double kCursorRadius = 0.04;
inline constexpr double kBallRadius = 0.06;
inline constexpr double kBasketRadius = 0.10;
inline constexpr double kReducedSpacingFactor = 0.5;
inline constexpr double kOptionRowV = 0.55;
inline constexpr double kPromptV = 0.15;

inline constexpr std::int64_t kConfirmWindowMs = 2000;

inline constexpr double kLateralityStep = 0.10;
inline constexpr double kLateralityReducedStep = 0.05;
inline constexpr double kLateralityGoalRight = 0.9;
inline constexpr double kLateralityGoalLeft = 0.1;

inline constexpr int kDefaultRepetitions = 10;

struct ConceptAssociation {
    Topic topic = Topic::Animals;
    friend bool operator==(const ConceptAssociation&, const ConceptAssociation&) = default;
};

/// Trains the side the student does not recognise.
struct Laterality {
    Side side = Side::Right;
    friend bool operator==(const Laterality&, const Laterality&) = default;
};

struct ActivitySpec {
    std::variant<ConceptAssociation, Laterality> kind;
    int repetitions = kDefaultRepetitions;

    bool isLaterality() const { return std::holds_alternative<Laterality>(kind); }

    friend bool operator==(const ActivitySpec&, const ActivitySpec&) = default;
};

/// "concept:animals", "concept:vehicles", "laterality:left", "laterality:right".
std::string toString(const ActivitySpec& spec);
std::optional<ActivitySpec> parseActivity(std::string_view text, int repetitions = kDefaultRepetitions);

enum class ElementRole { Option, Target, Ball, Basket, Prompt };

std::string_view toString(ElementRole role);

struct SceneElement {
    std::string id;
    std::string label;
    double u = 0.5;
    double v = 0.5;
    double radius = kOptionRadius;
    ElementRole role = ElementRole::Option;
    std::optional<std::string> pictogramId;

    friend bool operator==(const SceneElement&, const SceneElement&) = default;
};

enum class ActivityPhase { AwaitingInput, ConfirmWindow, Done };

struct ActivityState {
    ActivitySpec spec;
    std::vector<ContentItem> content;  // items of the activity's topic

    int repetitionIndex = 1;
    int completedRepetitions = 0;
    std::vector<SceneElement> elements;
    std::string promptTargetId;       // concept association, collision/gesture modes
    std::optional<std::string> dragging;
    std::int64_t repetitionStartMs = 0;
    int errorsThisRepetition = 0;

    ActivityPhase phase = ActivityPhase::AwaitingInput;
    std::string selectedId;           // valid in ConfirmWindow
    std::int64_t deadlineMs = 0;      // valid in ConfirmWindow

    int ballSteps = 0;                // laterality shifts in this repetition
    bool awaitingRelease = false;     // cursor must leave elements first
    std::optional<std::int64_t> lastInputMs;

    const SceneElement* element(std::string_view id) const;

    friend bool operator==(const ActivityState&, const ActivityState&) = default;
};

enum class FeedbackKind { Positive, Negative, SelectionFrame, Instructions, SceneChanged };

std::string_view toString(FeedbackKind kind);

struct FeedbackEvent {
    FeedbackKind kind;
    Modality modalities;
    std::string elementId;  // SelectionFrame only

    friend bool operator==(const FeedbackEvent&, const FeedbackEvent&) = default;
};

struct RepetitionResult {
    int repetitionIndex = 0;
    int durationSeconds = 0;
    int errors = 0;

    friend bool operator==(const RepetitionResult&, const RepetitionResult&) = default;
};

struct CursorMoved {
    double u;
    double v;
    std::int64_t tMs;
};

struct GestureRecognized {
    GestureId id;
    std::int64_t tMs;
};

struct Tick {
    std::int64_t tMs;
};

using ActivityInput = std::variant<CursorMoved, GestureRecognized, Tick>;

std::int64_t timestampOf(const ActivityInput& input);

class ActivityError : public Error {
public:
    enum class Kind { SpecMismatch, InputAfterDone, NonMonotonicTimestamp, InvalidProfile, InsufficientContent };

    ActivityError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct ActivityStart {
    ActivityConfig config;
    ActivityState state;
    std::vector<FeedbackEvent> events;
};

/// Derives the configuration, lays out the first repetition and emits
/// Instructions followed by SceneChanged.
ActivityStart startActivity(const UserProfile& profile, const DeviceInteractionModel& device, const ActivitySpec& spec,
                            const ContentLibrary& content = defaultContent(), std::int64_t startMs = 0);

struct ActivityStep {
    ActivityState state;
    std::vector<FeedbackEvent> events;
    std::optional<RepetitionResult> completed;
};

ActivityStep applyInput(const ActivityState& state, const ActivityConfig& config, const ActivityInput& input);

/// Whole seconds, half rounded up.
int roundedSeconds(std::int64_t elapsedMs);

/// Laterality ball shift for the configured spacing.
double lateralityStep(const ActivityConfig& config);

}  // namespace adapta
