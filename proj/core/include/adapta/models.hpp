#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace adapta {

enum class Disability { Visual, Hearing, Physical, Autism };

/// Which side of the body the student cannot reliably recognise.
enum class LateralityProblem { None, CannotRecognizeLeft, CannotRecognizeRight };

enum class Sex { F, M, Other };

enum class Side { Left, Right };

enum class Posture { Standing, Seated };

/// Feature-based student model registered by the tutor.
struct UserProfile {
    std::string id;
    std::string fullName;
    int age = 0;
    Sex sex = Sex::Other;
    LateralityProblem laterality = LateralityProblem::None;
    Disability disability = Disability::Visual;

    friend bool operator==(const UserProfile&, const UserProfile&) = default;
};

/// Arm mobility as recorded in the device-interaction model. There is no
/// value meaning "no usable arm": a student must move at least one.
class ArmMobility {
public:
    enum class Kind { BothArms, RightArmOnly, LeftArmOnly };

    static ArmMobility bothArms(Side dominant) { return ArmMobility(Kind::BothArms, dominant); }
    static ArmMobility rightArmOnly() { return ArmMobility(Kind::RightArmOnly, Side::Right); }
    static ArmMobility leftArmOnly() { return ArmMobility(Kind::LeftArmOnly, Side::Left); }

    Kind kind() const { return kind_; }

    /// The arm the student would naturally interact with: the dominant arm
    /// when both move, otherwise the only one that does.
    Side preferredArm() const { return arm_; }

    friend bool operator==(const ArmMobility&, const ArmMobility&) = default;

private:
    ArmMobility(Kind kind, Side arm) : kind_(kind), arm_(arm) {}

    Kind kind_;
    Side arm_;
};

/// How this particular student meets the depth sensor.
struct DeviceInteractionModel {
    Posture posture = Posture::Standing;
    bool rgbCameraActive = false;
    double depthDistance = 2.0;  // metres
    ArmMobility armMobility = ArmMobility::bothArms(Side::Right);

    friend bool operator==(const DeviceInteractionModel&, const DeviceInteractionModel&) = default;
};

struct Violation {
    std::string field;
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationResult {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool hasViolation(std::string_view field) const;
};

ValidationResult validateProfile(const UserProfile& profile);

/// depthDistance must be finite and strictly positive.
ValidationResult validateDeviceModel(const DeviceInteractionModel& model);

inline constexpr double kRecommendedDepthMin = 1.2;
inline constexpr double kRecommendedDepthMax = 3.5;

struct DepthAssessment {
    enum class Status { WithinRecommended, OutsideRecommended };

    Status status;
    double measured;

    bool within() const { return status == Status::WithinRecommended; }
};

/// Compares the stored distance against the sensor's recommended range
/// [1.2, 3.5] m. Advisory only: nothing is rejected.
DepthAssessment validateDepthDistance(const DeviceInteractionModel& model);

// Stable spellings used by the CLI and every file format.
std::string_view toString(Disability d);
std::string_view toString(LateralityProblem l);
std::string_view toString(Sex s);
std::string_view toString(Side s);
std::string_view toString(Posture p);
std::string toString(const ArmMobility& arm);

std::optional<Disability> parseDisability(std::string_view text);
std::optional<LateralityProblem> parseLaterality(std::string_view text);
std::optional<Sex> parseSex(std::string_view text);
std::optional<Side> parseSide(std::string_view text);
std::optional<Posture> parsePosture(std::string_view text);

/// Accepts "both-left", "both-right", "left-only", "right-only".
std::optional<ArmMobility> parseArmMobility(std::string_view text);

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

}  // namespace adapta
