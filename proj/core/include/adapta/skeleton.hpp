#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adapta/error.hpp"
#include "adapta/models.hpp"

namespace adapta {

enum class JointId : std::uint8_t {
    Head,
    Neck,
    SpineShoulder,
    SpineMid,
    SpineBase,
    ShoulderLeft,
    ShoulderRight,
    ElbowLeft,
    ElbowRight,
    WristLeft,
    WristRight,
    HandLeft,
    HandRight,
    HandTipLeft,
    HandTipRight,
    ThumbLeft,
    ThumbRight,
    HipLeft,
    HipRight,
    KneeLeft,
    KneeRight,
    AnkleLeft,
    AnkleRight,
    FootLeft,
    FootRight,
};

inline constexpr std::size_t kJointCount = 25;

std::string_view toString(JointId joint);
std::optional<JointId> parseJoint(std::string_view name);

/// Everything above the hips. Hips, knees, ankles and feet are excluded.
bool isUpperBody(JointId joint);

JointId handOf(Side arm);
JointId shoulderOf(Side arm);

/// Left/right counterpart; spine joints and the head map to themselves.
JointId mirrored(JointId joint);

/// Camera space, metres: x right, y up, z away from the sensor.
struct JointPosition {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const JointPosition&, const JointPosition&) = default;
};

class MissingJoint : public Error {
public:
    explicit MissingJoint(JointId joint);
    JointId joint() const { return joint_; }

private:
    JointId joint_;
};

struct SkeletonFrame {
    std::int64_t timestampMs = 0;
    std::array<std::optional<JointPosition>, kJointCount> joints{};

    bool has(JointId j) const { return joints[static_cast<std::size_t>(j)].has_value(); }

    /// Throws MissingJoint when the joint is not present in this frame.
    const JointPosition& at(JointId j) const;

    void set(JointId j, JointPosition p) { joints[static_cast<std::size_t>(j)] = p; }
    void erase(JointId j) { joints[static_cast<std::size_t>(j)].reset(); }
    std::size_t jointCount() const;

    friend bool operator==(const SkeletonFrame&, const SkeletonFrame&) = default;
};

/// Ordered frames with strictly increasing timestamps.
struct Trace {
    std::vector<SkeletonFrame> frames;

    friend bool operator==(const Trace&, const Trace&) = default;
};

/// Seated students are tracked on the upper body only; standing ones keep
/// the full skeleton.
SkeletonFrame filterJointsForPosture(const SkeletonFrame& frame, Posture posture);

/// Normalised screen position, u to the right and v downwards.
struct CursorPosition {
    double u = 0.5;
    double v = 0.5;

    friend bool operator==(const CursorPosition&, const CursorPosition&) = default;
};

/// Half-width of the shoulder-centred reach box, metres.
inline constexpr double kReachMeters = 0.5;

/// Shoulder-relative affine map of the tracked hand onto the screen.
/// Depth is ignored; results are clamped to [0,1].
CursorPosition mapHandToCursor(const SkeletonFrame& frame, Side trackedArm);

class TraceError : public Error {
public:
    enum class Kind { MalformedLine, NonMonotonicTimestamp, IncompleteFirstFrame };

    TraceError(Kind kind, std::size_t lineNo, const std::string& detail);

    Kind kind() const { return kind_; }
    /// 1-based line number in the source; 0 when not tied to a line.
    std::size_t lineNo() const { return lineNo_; }

private:
    Kind kind_;
    std::size_t lineNo_;
};

/// Parses the one-frame-per-line trace format. Joints absent from a line
/// are forward-filled from the previous frame; blank lines are skipped.
Trace loadTrace(std::istream& in);
Trace loadTraceFile(const std::string& path);

void saveTrace(const Trace& trace, std::ostream& out);
void saveTraceFile(const Trace& trace, const std::string& path);

/// One frame as a single-line record, e.g.
/// {"joints":{"Head":[0.0,0.6,2.0],...},"t":33}
std::string encodeFrame(const SkeletonFrame& frame);

}  // namespace adapta
