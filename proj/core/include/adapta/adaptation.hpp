#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "adapta/models.hpp"

namespace adapta {

enum class Modality { Audio, Visual, AudioAndVisual };
enum class BackgroundStyle { Black, Image };
enum class ColorScheme { Yellow, Normal };
enum class InteractionMode { Collision, Gestures, DragAndDrop };
enum class ElementSpacing { Standard, Reduced };

/// Everything an activity needs to know about how to present itself to
/// one student. Produced by deriveConfig; never edited by hand.
struct ActivityConfig {
    Modality instructionModality = Modality::Audio;
    BackgroundStyle backgroundStyle = BackgroundStyle::Image;
    ColorScheme objectColorScheme = ColorScheme::Normal;
    InteractionMode interactionMode = InteractionMode::Collision;
    Modality feedbackModality = Modality::AudioAndVisual;
    bool showPictograms = false;
    ElementSpacing elementSpacing = ElementSpacing::Standard;
    Side trackedArm = Side::Right;
    // Forwarded untouched from the device model; only the UI acts on it.
    bool rgbMirror = false;

    friend bool operator==(const ActivityConfig&, const ActivityConfig&) = default;
};

/// The facts a rule condition may look at.
struct RuleInput {
    Disability disability;
    ArmMobility armMobility;
    Posture posture;
};

struct AdaptationRule {
    int id;                      // 1..8, one per row of the rule table
    std::string condition;       // human readable, as printed by `rules dump`
    std::string motionDetection; // the "MD" column label
    std::function<bool(const RuleInput&)> applies;
    std::function<void(ActivityConfig&, const RuleInput&)> apply;
};

/// The compiled-in rule base in table order (rows 1..8).
const std::vector<AdaptationRule>& ruleBase();

/// Ids of the rules that fire for this input, in the order they are applied:
/// the disability row (1-4), then the mobility refinement (6-8), then the
/// wheelchair row (5).
std::vector<int> firedRules(const RuleInput& input);

ActivityConfig deriveConfig(const RuleInput& input);
ActivityConfig deriveConfig(const UserProfile& profile, const DeviceInteractionModel& device);

/// A row of the audit table, one per rule, built by running the engine on
/// that row's representative input.
struct RuleTableRow {
    int id;
    std::string condition;
    ActivityConfig config;
    std::string motionDetection;
};

std::vector<RuleTableRow> ruleTable();

/// Fixed-width text rendering of ruleTable() in the column order
/// # | Disability | I | BC | 3DC | IM | Fed | G | SVI | D | MD.
std::string formatRuleTable();

std::string_view toString(Modality m);
std::string_view toString(BackgroundStyle b);
std::string_view toString(ColorScheme c);
std::string_view toString(InteractionMode m);
std::string_view toString(ElementSpacing s);

/// True when the modality includes the given channel.
bool includesAudio(Modality m);
bool includesVisual(Modality m);

}  // namespace adapta
