#include "adapta/gesture.hpp"

#include <algorithm>
#include <sstream>

namespace adapta {

std::string_view toString(GestureId id) { return id == GestureId::RaiseLeftArm ? "RaiseLeftArm" : "RaiseRightArm"; }

std::optional<GestureId> parseGesture(std::string_view name) {
    if (name == "RaiseLeftArm") return GestureId::RaiseLeftArm;
    if (name == "RaiseRightArm") return GestureId::RaiseRightArm;
    return std::nullopt;
}

bool PosePredicate::holds(const SkeletonFrame& frame) const {
    const double hand = frame.at(handOf(arm)).y;
    const double shoulder = frame.at(shoulderOf(arm)).y;
    const double head = frame.at(JointId::Head).y;
    switch (kind) {
        case Kind::HandBelowShoulder:
            return hand < shoulder - kPoseDeadBand;
        case Kind::HandBetweenShoulderAndHead:
            return hand > shoulder + kPoseDeadBand && hand < head - kPoseDeadBand;
        case Kind::HandAboveHead:
            // Also above the shoulder band, so the three poses never overlap
            // even if the head is tracked below the shoulder.
            return hand > head + kPoseDeadBand && hand > shoulder + kPoseDeadBand;
    }
    return false;
}

std::string PosePredicate::describe() const {
    const std::string side(toString(arm));
    switch (kind) {
        case Kind::HandBelowShoulder:
            return "Hand" + side + ".y < Shoulder" + side + ".y - eps";
        case Kind::HandBetweenShoulderAndHead:
            return "Shoulder" + side + ".y + eps < Hand" + side + ".y < Head.y - eps";
        case Kind::HandAboveHead:
            return "Hand" + side + ".y > max(Head.y, Shoulder" + side + ".y) + eps";
    }
    return {};
}

GestureDefinition raiseArmGesture(Side arm, std::int64_t maxDurationMs) {
    using K = PosePredicate::Kind;
    return GestureDefinition{
        arm == Side::Left ? GestureId::RaiseLeftArm : GestureId::RaiseRightArm,
        {{K::HandBelowShoulder, arm}, {K::HandBetweenShoulderAndHead, arm}, {K::HandAboveHead, arm}},
        maxDurationMs,
    };
}

std::vector<GestureDefinition> defaultGestures(std::int64_t maxDurationMs) {
    return {raiseArmGesture(Side::Left, maxDurationMs), raiseArmGesture(Side::Right, maxDurationMs)};
}

void validateDefinition(const GestureDefinition& def) {
    if (def.states.size() < 3) {
        throw Error("gesture " + std::string(toString(def.id)) + " needs an initial, an intermediate and a final state");
    }
    if (def.maxDurationMs <= 0) throw Error("gesture " + std::string(toString(def.id)) + " needs a positive window");
}

RecognizerStep advanceRecognizer(const RecognizerState& state, const SkeletonFrame& frame,
                                 const std::vector<GestureDefinition>& defs) {
    RecognizerStep step{state, {}};
    step.state.progress.resize(defs.size());

    for (std::size_t g = 0; g < defs.size(); ++g) {
        const GestureDefinition& def = defs[g];
        auto& p = step.state.progress[g];

        if (p.nextState > 0 && frame.timestampMs - p.startMs > def.maxDurationMs) {
            p = {};  // too slow: silently back to listening
        }

        if (p.nextState == 0) {
            if (def.states.front().holds(frame)) {
                p.nextState = 1;
                p.startMs = frame.timestampMs;
            }
            continue;
        }

        // Frames that do not satisfy the next pose are transit frames.
        if (def.states[p.nextState].holds(frame)) {
            ++p.nextState;
            if (p.nextState == def.states.size()) {
                step.events.push_back({def.id, p.startMs, frame.timestampMs});
                p = {};
            }
        }
    }
    return step;
}

std::vector<GestureEvent> recognizeTrace(const Trace& trace, const std::vector<GestureDefinition>& defs) {
    RecognizerState state = RecognizerState::idle(defs.size());
    std::vector<GestureEvent> events;
    for (const auto& frame : trace.frames) {
        auto step = advanceRecognizer(state, frame, defs);
        state = std::move(step.state);
        events.insert(events.end(), step.events.begin(), step.events.end());
    }
    // Already grouped by frame; stable sort keeps definition order on ties.
    std::stable_sort(events.begin(), events.end(),
                     [](const GestureEvent& a, const GestureEvent& b) { return a.endMs < b.endMs; });
    return events;
}

GestureListener::GestureListener(std::vector<GestureDefinition> defs)
    : defs_(std::move(defs)), state_(RecognizerState::idle(defs_.size())) {
    for (const auto& def : defs_) validateDefinition(def);
}

std::vector<GestureEvent> GestureListener::onFrame(const SkeletonFrame& frame) {
    auto step = advanceRecognizer(state_, frame, defs_);
    state_ = std::move(step.state);
    return std::move(step.events);
}

void GestureListener::reset() { state_ = RecognizerState::idle(defs_.size()); }

std::string describeGestures(const std::vector<GestureDefinition>& defs) {
    std::ostringstream out;
    out << "dead-band eps = " << kPoseDeadBand << " m\n";
    for (const auto& def : defs) {
        out << toString(def.id) << " (window " << def.maxDurationMs << " ms, emitted on entering the final state)\n";
        for (std::size_t i = 0; i < def.states.size(); ++i) {
            const char* role = i == 0 ? "initial" : (i + 1 == def.states.size() ? "final" : "intermediate");
            out << "  " << i << ' ' << role << ": " << def.states[i].describe() << '\n';
        }
    }
    return out.str();
}

}  // namespace adapta
