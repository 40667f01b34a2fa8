#include "adapta/models.hpp"

#include <algorithm>
#include <cmath>

namespace adapta {

namespace {

// Enum spellings, indexed by the underlying value.
constexpr std::string_view kDisabilityNames[] = {"Visual", "Hearing", "Physical", "Autism"};
constexpr std::string_view kLateralityNames[] = {"None", "CannotRecognizeLeft", "CannotRecognizeRight"};
constexpr std::string_view kSexNames[] = {"F", "M", "Other"};
constexpr std::string_view kSideNames[] = {"Left", "Right"};
constexpr std::string_view kPostureNames[] = {"Standing", "Seated"};

template <typename Enum, std::size_t N>
std::optional<Enum> parseEnum(std::string_view text, const std::string_view (&names)[N]) {
    for (std::size_t i = 0; i < N; ++i) {
        if (names[i] == text) return static_cast<Enum>(i);
    }
    return std::nullopt;
}

}  // namespace

bool ValidationResult::hasViolation(std::string_view field) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.field == field; });
}

ValidationResult validateProfile(const UserProfile& profile) {
    ValidationResult result;
    if (profile.id.empty()) result.violations.push_back({"id", "id must not be empty"});
    if (profile.fullName.empty()) result.violations.push_back({"fullName", "full name must not be empty"});
    if (profile.age <= 0 || profile.age >= 120) {
        result.violations.push_back({"age", "age must satisfy 0 < age < 120, got " + std::to_string(profile.age)});
    }
    return result;
}

ValidationResult validateDeviceModel(const DeviceInteractionModel& model) {
    ValidationResult result;
    if (!std::isfinite(model.depthDistance) || model.depthDistance <= 0.0) {
        result.violations.push_back({"depthDistance", "depth distance must be finite and positive"});
    }
    return result;
}

DepthAssessment validateDepthDistance(const DeviceInteractionModel& model) {
    const double d = model.depthDistance;
    const bool within = d >= kRecommendedDepthMin && d <= kRecommendedDepthMax;
    return {within ? DepthAssessment::Status::WithinRecommended : DepthAssessment::Status::OutsideRecommended, d};
}

std::string_view toString(Disability d) { return kDisabilityNames[static_cast<int>(d)]; }
std::string_view toString(LateralityProblem l) { return kLateralityNames[static_cast<int>(l)]; }
std::string_view toString(Sex s) { return kSexNames[static_cast<int>(s)]; }
std::string_view toString(Side s) { return kSideNames[static_cast<int>(s)]; }
std::string_view toString(Posture p) { return kPostureNames[static_cast<int>(p)]; }

std::string toString(const ArmMobility& arm) {
    switch (arm.kind()) {
        case ArmMobility::Kind::BothArms:
            return arm.preferredArm() == Side::Left ? "both-left" : "both-right";
        case ArmMobility::Kind::RightArmOnly:
            return "right-only";
        case ArmMobility::Kind::LeftArmOnly:
            return "left-only";
    }
    return "both-right";
}

std::optional<Disability> parseDisability(std::string_view text) { return parseEnum<Disability>(text, kDisabilityNames); }
std::optional<LateralityProblem> parseLaterality(std::string_view text) {
    return parseEnum<LateralityProblem>(text, kLateralityNames);
}
std::optional<Sex> parseSex(std::string_view text) { return parseEnum<Sex>(text, kSexNames); }
std::optional<Side> parseSide(std::string_view text) { return parseEnum<Side>(text, kSideNames); }
std::optional<Posture> parsePosture(std::string_view text) { return parseEnum<Posture>(text, kPostureNames); }

std::optional<ArmMobility> parseArmMobility(std::string_view text) {
    if (text == "both-left") return ArmMobility::bothArms(Side::Left);
    if (text == "both-right") return ArmMobility::bothArms(Side::Right);
    if (text == "left-only") return ArmMobility::leftArmOnly();
    if (text == "right-only") return ArmMobility::rightArmOnly();
    return std::nullopt;
}

}  // namespace adapta
