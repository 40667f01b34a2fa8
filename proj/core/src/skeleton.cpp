#include "adapta/skeleton.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace adapta {

namespace {

constexpr std::string_view kJointNames[kJointCount] = {
    "Head",        "Neck",         "SpineShoulder", "SpineMid",   "SpineBase",  "ShoulderLeft", "ShoulderRight",
    "ElbowLeft",   "ElbowRight",   "WristLeft",     "WristRight", "HandLeft",   "HandRight",    "HandTipLeft",
    "HandTipRight", "ThumbLeft",   "ThumbRight",    "HipLeft",    "HipRight",   "KneeLeft",     "KneeRight",
    "AnkleLeft",   "AnkleRight",   "FootLeft",      "FootRight",
};

std::string traceErrorText(TraceError::Kind kind, std::size_t lineNo, const std::string& detail) {
    std::string head;
    switch (kind) {
        case TraceError::Kind::MalformedLine: head = "malformed trace line"; break;
        case TraceError::Kind::NonMonotonicTimestamp: head = "non-monotonic timestamp"; break;
        case TraceError::Kind::IncompleteFirstFrame: head = "incomplete first frame"; break;
    }
    if (lineNo > 0) head += " at line " + std::to_string(lineNo);
    if (!detail.empty()) head += ": " + detail;
    return head;
}

SkeletonFrame parseFrameLine(const std::string& line, std::size_t lineNo) {
    auto malformed = [&](const std::string& why) {
        return TraceError(TraceError::Kind::MalformedLine, lineNo, why);
    };
    nlohmann::json record;
    try {
        record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw malformed(e.what());
    }
    if (!record.is_object()) throw malformed("record is not an object");
    if (!record.contains("t") || !record["t"].is_number_integer()) throw malformed("missing integer field 't'");
    if (!record.contains("joints") || !record["joints"].is_object()) throw malformed("missing object field 'joints'");

    SkeletonFrame frame;
    frame.timestampMs = record["t"].get<std::int64_t>();
    if (frame.timestampMs < 0) throw malformed("negative timestamp");

    for (const auto& [name, value] : record["joints"].items()) {
        const auto joint = parseJoint(name);
        if (!joint) throw malformed("unknown joint '" + name + "'");
        if (!value.is_array() || value.size() != 3) throw malformed("joint '" + name + "' is not [x,y,z]");
        JointPosition p;
        double* coords[] = {&p.x, &p.y, &p.z};
        for (std::size_t i = 0; i < 3; ++i) {
            if (!value[i].is_number()) throw malformed("joint '" + name + "' has a non-numeric coordinate");
            *coords[i] = value[i].get<double>();
            if (!std::isfinite(*coords[i])) throw malformed("joint '" + name + "' has a non-finite coordinate");
        }
        if (p.z <= 0.0) throw malformed("joint '" + name + "' has z <= 0");
        frame.set(*joint, p);
    }
    return frame;
}

}  // namespace

std::string_view toString(JointId joint) { return kJointNames[static_cast<std::size_t>(joint)]; }

std::optional<JointId> parseJoint(std::string_view name) {
    for (std::size_t i = 0; i < kJointCount; ++i) {
        if (kJointNames[i] == name) return static_cast<JointId>(i);
    }
    return std::nullopt;
}

bool isUpperBody(JointId joint) { return static_cast<std::size_t>(joint) < static_cast<std::size_t>(JointId::HipLeft); }

JointId handOf(Side arm) { return arm == Side::Left ? JointId::HandLeft : JointId::HandRight; }
JointId shoulderOf(Side arm) { return arm == Side::Left ? JointId::ShoulderLeft : JointId::ShoulderRight; }

JointId mirrored(JointId joint) {
    const auto index = static_cast<std::size_t>(joint);
    // Paired joints alternate Left, Right from ShoulderLeft onwards.
    if (index < static_cast<std::size_t>(JointId::ShoulderLeft)) return joint;
    const auto offset = index - static_cast<std::size_t>(JointId::ShoulderLeft);
    return static_cast<JointId>(offset % 2 == 0 ? index + 1 : index - 1);
}

MissingJoint::MissingJoint(JointId joint)
    : Error("missing joint " + std::string(toString(joint))), joint_(joint) {}

const JointPosition& SkeletonFrame::at(JointId j) const {
    const auto& slot = joints[static_cast<std::size_t>(j)];
    if (!slot) throw MissingJoint(j);
    return *slot;
}

std::size_t SkeletonFrame::jointCount() const {
    return static_cast<std::size_t>(std::count_if(joints.begin(), joints.end(), [](const auto& j) { return j.has_value(); }));
}

SkeletonFrame filterJointsForPosture(const SkeletonFrame& frame, Posture posture) {
    if (posture == Posture::Standing) return frame;
    SkeletonFrame filtered = frame;
    for (std::size_t i = 0; i < kJointCount; ++i) {
        if (!isUpperBody(static_cast<JointId>(i))) filtered.joints[i].reset();
    }
    return filtered;
}

CursorPosition mapHandToCursor(const SkeletonFrame& frame, Side trackedArm) {
    const JointPosition& hand = frame.at(handOf(trackedArm));
    const JointPosition& shoulder = frame.at(shoulderOf(trackedArm));
    const double u = (hand.x - shoulder.x) / kReachMeters + 0.5;
    const double v = (shoulder.y - hand.y) / kReachMeters + 0.5;
    return {std::clamp(u, 0.0, 1.0), std::clamp(v, 0.0, 1.0)};
}

TraceError::TraceError(Kind kind, std::size_t lineNo, const std::string& detail)
    : Error(traceErrorText(kind, lineNo, detail)), kind_(kind), lineNo_(lineNo) {}

Trace loadTrace(std::istream& in) {
    Trace trace;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;

        SkeletonFrame frame = parseFrameLine(line, lineNo);
        if (trace.frames.empty()) {
            if (frame.jointCount() != kJointCount) {
                for (std::size_t i = 0; i < kJointCount; ++i) {
                    if (!frame.joints[i]) {
                        throw TraceError(TraceError::Kind::IncompleteFirstFrame, lineNo,
                                         "missing " + std::string(kJointNames[i]));
                    }
                }
            }
        } else {
            const SkeletonFrame& previous = trace.frames.back();
            if (frame.timestampMs <= previous.timestampMs) {
                throw TraceError(TraceError::Kind::NonMonotonicTimestamp, lineNo,
                                 std::to_string(frame.timestampMs) + " after " + std::to_string(previous.timestampMs));
            }
            for (std::size_t i = 0; i < kJointCount; ++i) {
                if (!frame.joints[i]) frame.joints[i] = previous.joints[i];
            }
        }
        trace.frames.push_back(std::move(frame));
    }
    return trace;
}

Trace loadTraceFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open trace file " + path);
    return loadTrace(in);
}

std::string encodeFrame(const SkeletonFrame& frame) {
    nlohmann::json joints = nlohmann::json::object();
    for (std::size_t i = 0; i < kJointCount; ++i) {
        if (const auto& p = frame.joints[i]) joints[std::string(kJointNames[i])] = {p->x, p->y, p->z};
    }
    nlohmann::json record = {{"t", frame.timestampMs}, {"joints", std::move(joints)}};
    return record.dump();
}

void saveTrace(const Trace& trace, std::ostream& out) {
    for (const auto& frame : trace.frames) out << encodeFrame(frame) << '\n';
}

void saveTraceFile(const Trace& trace, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write trace file " + path);
    saveTrace(trace, out);
}

}  // namespace adapta
