#include "adapta/adaptation.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace adapta {

namespace {

bool isPhysical(const RuleInput& in) { return in.disability == Disability::Physical; }

std::vector<AdaptationRule> buildRuleBase() {
    std::vector<AdaptationRule> rules;

    // Rows 1-4 select the base presentation from the disability alone.
    rules.push_back({1, "Visual", "Dominant arm",
                     [](const RuleInput& in) { return in.disability == Disability::Visual; },
                     [](ActivityConfig& c, const RuleInput& in) {
                         c.instructionModality = Modality::Audio;
                         c.backgroundStyle = BackgroundStyle::Black;
                         c.objectColorScheme = ColorScheme::Yellow;
                         c.interactionMode = InteractionMode::Collision;
                         c.feedbackModality = Modality::Audio;
                         c.showPictograms = false;
                         c.elementSpacing = ElementSpacing::Standard;
                         c.trackedArm = in.armMobility.preferredArm();
                     }});
    rules.push_back({2, "Hearing", "Dominant arm",
                     [](const RuleInput& in) { return in.disability == Disability::Hearing; },
                     [](ActivityConfig& c, const RuleInput& in) {
                         c.instructionModality = Modality::Visual;
                         c.backgroundStyle = BackgroundStyle::Image;
                         c.objectColorScheme = ColorScheme::Normal;
                         c.interactionMode = InteractionMode::Gestures;
                         c.feedbackModality = Modality::Visual;
                         c.showPictograms = false;
                         c.elementSpacing = ElementSpacing::Standard;
                         c.trackedArm = in.armMobility.preferredArm();
                     }});
    rules.push_back({3, "Physical", "-",
                     [](const RuleInput& in) { return isPhysical(in); },
                     [](ActivityConfig& c, const RuleInput&) {
                         c.instructionModality = Modality::Audio;
                         c.backgroundStyle = BackgroundStyle::Image;
                         c.objectColorScheme = ColorScheme::Normal;
                         c.interactionMode = InteractionMode::Collision;
                         c.feedbackModality = Modality::AudioAndVisual;
                         c.showPictograms = false;
                         c.elementSpacing = ElementSpacing::Standard;
                         // tracked arm deferred to rows 6-8
                     }});
    rules.push_back({4, "Autism", "Dominant arm",
                     [](const RuleInput& in) { return in.disability == Disability::Autism; },
                     [](ActivityConfig& c, const RuleInput& in) {
                         c.instructionModality = Modality::Audio;
                         c.backgroundStyle = BackgroundStyle::Image;
                         c.objectColorScheme = ColorScheme::Normal;
                         c.interactionMode = InteractionMode::DragAndDrop;
                         c.feedbackModality = Modality::AudioAndVisual;
                         c.showPictograms = true;
                         c.elementSpacing = ElementSpacing::Standard;
                         c.trackedArm = in.armMobility.preferredArm();
                     }});

    rules.push_back({5, "Physical (wheelchair)", "Dominant arm",
                     [](const RuleInput& in) { return isPhysical(in) && in.posture == Posture::Seated; },
                     [](ActivityConfig& c, const RuleInput&) { c.elementSpacing = ElementSpacing::Reduced; }});

    rules.push_back({6, "Physical (mov. right arm)", "Right arm",
                     [](const RuleInput& in) {
                         return isPhysical(in) && in.armMobility.kind() == ArmMobility::Kind::RightArmOnly;
                     },
                     [](ActivityConfig& c, const RuleInput&) { c.trackedArm = Side::Right; }});
    rules.push_back({7, "Physical (mov. left arm)", "Left arm",
                     [](const RuleInput& in) {
                         return isPhysical(in) && in.armMobility.kind() == ArmMobility::Kind::LeftArmOnly;
                     },
                     [](ActivityConfig& c, const RuleInput&) { c.trackedArm = Side::Left; }});
    rules.push_back({8, "Physical (mov. both arms)", "Dominant arm",
                     [](const RuleInput& in) {
                         return isPhysical(in) && in.armMobility.kind() == ArmMobility::Kind::BothArms;
                     },
                     [](ActivityConfig& c, const RuleInput& in) { c.trackedArm = in.armMobility.preferredArm(); }});
    return rules;
}

// Base rows, then mobility refinements, then the wheelchair row.
constexpr int kApplicationOrder[] = {1, 2, 3, 4, 6, 7, 8, 5};

const AdaptationRule& ruleById(int id) { return ruleBase()[static_cast<std::size_t>(id - 1)]; }

RuleInput representativeInput(int ruleId) {
    switch (ruleId) {
        case 1: return {Disability::Visual, ArmMobility::bothArms(Side::Right), Posture::Standing};
        case 2: return {Disability::Hearing, ArmMobility::bothArms(Side::Right), Posture::Standing};
        case 3: return {Disability::Physical, ArmMobility::bothArms(Side::Right), Posture::Standing};
        case 4: return {Disability::Autism, ArmMobility::bothArms(Side::Right), Posture::Standing};
        case 5: return {Disability::Physical, ArmMobility::bothArms(Side::Right), Posture::Seated};
        case 6: return {Disability::Physical, ArmMobility::rightArmOnly(), Posture::Standing};
        case 7: return {Disability::Physical, ArmMobility::leftArmOnly(), Posture::Standing};
        default: return {Disability::Physical, ArmMobility::bothArms(Side::Right), Posture::Standing};
    }
}

std::string_view tableModality(Modality m) {
    switch (m) {
        case Modality::Audio: return "Audio";
        case Modality::Visual: return "Visual";
        case Modality::AudioAndVisual: return "Visual&Audio";
    }
    return "";
}

}  // namespace

const std::vector<AdaptationRule>& ruleBase() {
    static const std::vector<AdaptationRule> rules = buildRuleBase();
    return rules;
}

std::vector<int> firedRules(const RuleInput& input) {
    std::vector<int> fired;
    for (int id : kApplicationOrder) {
        if (ruleById(id).applies(input)) fired.push_back(id);
    }
    return fired;
}

ActivityConfig deriveConfig(const RuleInput& input) {
    ActivityConfig config;
    config.trackedArm = input.armMobility.preferredArm();
    for (int id : firedRules(input)) ruleById(id).apply(config, input);
    return config;
}

ActivityConfig deriveConfig(const UserProfile& profile, const DeviceInteractionModel& device) {
    ActivityConfig config = deriveConfig(RuleInput{profile.disability, device.armMobility, device.posture});
    config.rgbMirror = device.rgbCameraActive;
    return config;
}

std::vector<RuleTableRow> ruleTable() {
    std::vector<RuleTableRow> rows;
    for (const auto& rule : ruleBase()) {
        rows.push_back({rule.id, rule.condition, deriveConfig(representativeInput(rule.id)), rule.motionDetection});
    }
    return rows;
}

std::string formatRuleTable() {
    std::ostringstream out;
    auto row = [&](auto id, auto dis, auto i, auto bc, auto c3, auto im, auto fed, auto g, auto svi, auto d, auto md) {
        out << std::left << std::setw(3) << id << std::setw(27) << dis << std::setw(8) << i << std::setw(7) << bc
            << std::setw(8) << c3 << std::setw(12) << im << std::setw(14) << fed << std::setw(5) << g << std::setw(5)
            << svi << std::setw(10) << d << md << '\n';
    };
    row("#", "Disability", "I", "BC", "3DC", "IM", "Fed", "G", "SVI", "D", "MD");
    for (const auto& r : ruleTable()) {
        const auto& c = r.config;
        row(r.id, r.condition, tableModality(c.instructionModality), toString(c.backgroundStyle),
            toString(c.objectColorScheme),
            c.interactionMode == InteractionMode::DragAndDrop ? std::string_view("Drag&Drop")
                                                              : toString(c.interactionMode),
            tableModality(c.feedbackModality), c.interactionMode == InteractionMode::Gestures ? "Yes" : "No",
            c.showPictograms ? "Yes" : "No", toString(c.elementSpacing), r.motionDetection);
    }
    return out.str();
}

std::string_view toString(Modality m) {
    switch (m) {
        case Modality::Audio: return "Audio";
        case Modality::Visual: return "Visual";
        case Modality::AudioAndVisual: return "AudioAndVisual";
    }
    return "";
}

std::string_view toString(BackgroundStyle b) { return b == BackgroundStyle::Black ? "Black" : "Image"; }
std::string_view toString(ColorScheme c) { return c == ColorScheme::Yellow ? "Yellow" : "Normal"; }

std::string_view toString(InteractionMode m) {
    switch (m) {
        case InteractionMode::Collision: return "Collision";
        case InteractionMode::Gestures: return "Gestures";
        case InteractionMode::DragAndDrop: return "DragAndDrop";
    }
    return "";
}

std::string_view toString(ElementSpacing s) { return s == ElementSpacing::Standard ? "Standard" : "Reduced"; }

bool includesAudio(Modality m) { return m != Modality::Visual; }
bool includesVisual(Modality m) { return m != Modality::Audio; }

}  // namespace adapta
