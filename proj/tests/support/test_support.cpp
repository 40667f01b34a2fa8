#include "test_support.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include <unistd.h>

#include <json.hpp>

#include "adapta/replay.hpp"

namespace testsupport {

namespace {

constexpr std::size_t kJoints = kJointCount;

void placeHand(SkeletonFrame& f, Side arm, double x, double y) { f.set(handOf(arm), {x, y, 2.0}); }

double sideSign(Side s) { return s == Side::Right ? 1.0 : -1.0; }

}  // namespace

SkeletonFrame restingFrame(std::int64_t t) {
    SkeletonFrame f;
    f.timestampMs = t;
    for (std::size_t j = 0; j < kJoints; ++j) f.joints[j] = JointPosition{0.0, -0.2, 2.0};
    f.set(JointId::Head, {0.0, kHeadY, 2.0});
    f.set(JointId::ShoulderLeft, {-kShoulderX, kShoulderY, 2.0});
    f.set(JointId::ShoulderRight, {kShoulderX, kShoulderY, 2.0});
    placeHand(f, Side::Left, -kShoulderX, kHandDownY);
    placeHand(f, Side::Right, kShoulderX, kHandDownY);
    return f;
}

SkeletonFrame cursorFrame(std::int64_t t, Side arm, double u, double v) {
    SkeletonFrame f = restingFrame(t);
    const double sx = sideSign(arm) * kShoulderX;
    placeHand(f, arm, sx + (u - 0.5) * kReachMeters, kShoulderY - (v - 0.5) * kReachMeters);
    return f;
}

SkeletonFrame mirrorFrame(const SkeletonFrame& frame) {
    SkeletonFrame out;
    out.timestampMs = frame.timestampMs;
    for (std::size_t j = 0; j < kJoints; ++j) {
        const auto id = static_cast<JointId>(j);
        if (auto p = frame.joints[j]) {
            p->x = -p->x;
            out.set(mirrored(id), *p);
        }
    }
    return out;
}

Trace mirrorTrace(const Trace& trace) {
    Trace out;
    for (const auto& f : trace.frames) out.frames.push_back(mirrorFrame(f));
    return out;
}

Trace randomGestureTrace(std::mt19937& rng, std::size_t maxFrames) {
    std::uniform_int_distribution<std::size_t> length(1, maxFrames);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    // Gaps: short transit steps, mid-size steps and exact window multiples.
    const std::vector<std::int64_t> fixedGaps = {250, 500, 750, 1000, 1500, 1501, 1499};
    std::uniform_int_distribution<std::size_t> pickFixed(0, fixedGaps.size() - 1);
    std::uniform_int_distribution<std::int64_t> shortGap(1, 400);

    // Hand heights drawn from bands around the pose thresholds.
    const auto height = [&](double shoulder, double head) {
        const double r = unit(rng);
        const double eps = kPoseDeadBand;
        if (r < 0.3) return shoulder - eps - 0.3 * unit(rng);                          // below
        if (r < 0.4) return shoulder - eps + 2 * eps * unit(rng);                      // shoulder band
        if (r < 0.65) return shoulder + eps + std::max(0.0, head - shoulder - 2 * eps) * unit(rng);  // between
        if (r < 0.72) return head - eps + 2 * eps * unit(rng);                         // head band
        return std::max(head, shoulder) + eps + 0.3 * unit(rng);                       // above
    };

    Trace trace;
    const std::size_t n = length(rng);
    const bool inverted = unit(rng) < 0.05;  // head tracked below the shoulders
    std::int64_t t = static_cast<std::int64_t>(unit(rng) * 100);
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) t += unit(rng) < 0.8 ? shortGap(rng) : fixedGaps[pickFixed(rng)];
        SkeletonFrame f = restingFrame(t);
        const double shoulder = 0.4 + 0.02 * (unit(rng) - 0.5);
        const double head = inverted ? 0.3 : 0.6 + 0.04 * (unit(rng) - 0.5);
        f.set(JointId::Head, {0.0, head, 2.0});
        f.set(JointId::ShoulderLeft, {-kShoulderX, shoulder, 2.0});
        f.set(JointId::ShoulderRight, {kShoulderX, shoulder, 2.0});
        placeHand(f, Side::Left, -kShoulderX, height(shoulder, head));
        placeHand(f, Side::Right, kShoulderX, height(shoulder, head));
        trace.frames.push_back(f);
    }
    return trace;
}

std::vector<GestureEvent> oracleGestures(const Trace& trace, const std::vector<GestureDefinition>& defs) {
    std::vector<GestureEvent> all;
    const auto& frames = trace.frames;
    for (const auto& def : defs) {
        std::size_t i = 0;
        while (i < frames.size()) {
            // Earliest initial pose at or after i.
            std::size_t a = i;
            while (a < frames.size() && !def.states.front().holds(frames[a])) ++a;
            if (a == frames.size()) break;
            const std::int64_t deadline = frames[a].timestampMs + def.maxDurationMs;

            // Earliest ordered completion of the remaining poses in the window.
            std::size_t k = a + 1;
            std::size_t matched = 1;
            while (k < frames.size() && frames[k].timestampMs <= deadline && matched < def.states.size()) {
                if (def.states[matched].holds(frames[k])) ++matched;
                if (matched == def.states.size()) break;
                ++k;
            }
            if (matched == def.states.size()) {
                all.push_back({def.id, frames[a].timestampMs, frames[k].timestampMs});
                i = k + 1;
                continue;
            }
            // No completion: resume at the first frame past the window.
            std::size_t next = a + 1;
            while (next < frames.size() && frames[next].timestampMs <= deadline) ++next;
            i = next;
        }
    }
    std::stable_sort(all.begin(), all.end(), [](const GestureEvent& x, const GestureEvent& y) { return x.endMs < y.endMs; });
    return all;
}

namespace {

ProfileRecord record(const std::string& id, Disability d, LateralityProblem l, DeviceInteractionModel device) {
    ProfileRecord r;
    r.profile = {id, "Student " + id, 12, Sex::F, l, d};
    r.device = device;
    return r;
}

}  // namespace

ProfileRecord visualStudent() {
    return record("visual-1", Disability::Visual, LateralityProblem::CannotRecognizeLeft,
                  {Posture::Standing, false, 2.0, ArmMobility::bothArms(Side::Right)});
}

ProfileRecord hearingStudent(LateralityProblem laterality) {
    return record("hearing-1", Disability::Hearing, laterality, {Posture::Standing, true, 2.4, ArmMobility::bothArms(Side::Left)});
}

ProfileRecord physicalStudent(Posture posture, ArmMobility arms, LateralityProblem laterality) {
    return record("physical-1", Disability::Physical, laterality, {posture, false, 1.8, arms});
}

ProfileRecord autismStudent(LateralityProblem laterality) {
    return record("autism-1", Disability::Autism, laterality, {Posture::Standing, false, 2.2, ArmMobility::bothArms(Side::Right)});
}

ActivitySpec lateralitySpecFor(const ProfileRecord& record) {
    const Side side = record.profile.laterality == LateralityProblem::CannotRecognizeLeft ? Side::Left : Side::Right;
    return ActivitySpec{Laterality{side}};
}

namespace {

struct Intent {
    enum class Kind { Cursor, Raise } kind = Kind::Cursor;
    double u = 0.5;
    double v = 0.95;  // resting spot clear of every element
    Side side = Side::Right;
};

Intent cursorAt(const SceneElement& e) { return {Intent::Kind::Cursor, e.u, e.v, Side::Right}; }
Intent rest() { return {}; }
Intent raise(Side s) { return {Intent::Kind::Raise, 0.5, 0.95, s}; }

const SceneElement& firstOf(const ActivityState& s, ElementRole role, const std::string& notId = {}) {
    for (const auto& e : s.elements) {
        if (e.role == role && e.id != notId) return e;
    }
    throw std::logic_error("scene lacks the element the script needs");
}

Intent nextIntent(const ActivityState& s, const ActivityConfig& c, const std::set<int>& mistakes) {
    const bool mistakeDue = mistakes.count(s.repetitionIndex) > 0 && s.errorsThisRepetition == 0;

    if (const auto* lat = std::get_if<Laterality>(&s.spec.kind)) {
        switch (c.interactionMode) {
            case InteractionMode::Gestures:
                return raise(mistakeDue ? opposite(lat->side) : lat->side);
            case InteractionMode::Collision:
                return s.awaitingRelease ? rest() : cursorAt(*s.element("ball"));
            case InteractionMode::DragAndDrop:
                if (s.dragging) return cursorAt(*s.element("basket"));
                return s.awaitingRelease ? rest() : cursorAt(*s.element("ball"));
        }
    }

    switch (c.interactionMode) {
        case InteractionMode::Gestures: {
            const Side targetSide = s.element(s.promptTargetId)->u < 0.5 ? Side::Left : Side::Right;
            return raise(mistakeDue ? opposite(targetSide) : targetSide);
        }
        case InteractionMode::Collision:
            if (s.awaitingRelease) return rest();
            if (s.phase == ActivityPhase::ConfirmWindow) return cursorAt(*s.element(s.selectedId));
            return cursorAt(mistakeDue ? firstOf(s, ElementRole::Option, s.promptTargetId) : *s.element(s.promptTargetId));
        case InteractionMode::DragAndDrop: {
            if (!s.dragging) return s.awaitingRelease ? rest() : cursorAt(firstOf(s, ElementRole::Option));
            const std::string match = "target:" + std::find_if(s.content.begin(), s.content.end(), [&](const ContentItem& i) {
                                                      return i.optionId == *s.dragging;
                                                  })->matchesTargetId;
            return cursorAt(mistakeDue ? firstOf(s, ElementRole::Target, match) : *s.element(match));
        }
    }
    return rest();
}

std::vector<SkeletonFrame> render(const Intent& in, const ActivityConfig& c, std::int64_t& t, std::int64_t frameMs) {
    std::vector<SkeletonFrame> frames;
    if (in.kind == Intent::Kind::Cursor) {
        t += frameMs;
        frames.push_back(cursorFrame(t, c.trackedArm, in.u, in.v));
        return frames;
    }
    const double sx = sideSign(in.side) * kShoulderX;
    for (double y : {kHandDownY, kHandMidY, kHandUpY, kHandDownY}) {
        t += frameMs;
        SkeletonFrame f = restingFrame(t);
        placeHand(f, in.side, sx, y);
        frames.push_back(f);
    }
    return frames;
}

}  // namespace

Script scriptedStudent(const ProfileRecord& record, const ActivitySpec& spec, const ContentLibrary& content,
                       const std::set<int>& mistakes, std::int64_t frameMs) {
    const auto start = startActivity(record.profile, record.device, spec, content, 0);
    const auto& config = start.config;
    ActivityState state = start.state;
    Script script;
    std::size_t applied = 0;
    std::int64_t t = 0;

    for (int guard = 0; state.phase != ActivityPhase::Done; ++guard) {
        if (guard > 50000) throw std::runtime_error("scripted student made no progress");
        for (const auto& frame : render(nextIntent(state, config, mistakes), config, t, frameMs)) {
            script.trace.frames.push_back(frame);
            script.inputs = traceInputs(script.trace, config, record.device.posture);
            for (; applied < script.inputs.size(); ++applied) {
                state = applyInput(state, config, script.inputs[applied]).state;
            }
            if (state.phase == ActivityPhase::Done) break;
        }
    }
    return script;
}

std::vector<std::string> protocolLines(const std::vector<ActivityInput>& inputs) {
    std::vector<std::string> lines;
    for (const auto& input : inputs) {
        nlohmann::json j;
        if (const auto* c = std::get_if<CursorMoved>(&input)) {
            j = {{"type", "pointer"}, {"u", c->u}, {"v", c->v}, {"t", c->tMs}};
        } else if (const auto* g = std::get_if<GestureRecognized>(&input)) {
            j = {{"type", "gesture"}, {"name", toString(g->id)}, {"t", g->tMs}};
        } else {
            j = {{"type", "tick"}, {"t", std::get<Tick>(input).tMs}};
        }
        lines.push_back(j.dump());
    }
    return lines;
}

std::vector<UeqResponse> paperTable5() {
    // Items down, participants across, exactly as printed.
    static constexpr int table[26][5] = {
        {6, 7, 6, 5, 6}, {5, 5, 7, 5, 6}, {3, 5, 3, 3, 1}, {5, 3, 1, 2, 1}, {2, 4, 3, 2, 2}, {4, 6, 5, 5, 5},
        {6, 5, 6, 5, 6}, {7, 6, 6, 7, 7}, {3, 5, 4, 2, 3}, {1, 2, 1, 3, 1}, {6, 7, 6, 5, 6}, {1, 1, 1, 2, 1},
        {5, 6, 6, 6, 7}, {6, 6, 7, 5, 6}, {7, 6, 6, 5, 7}, {4, 5, 6, 6, 6}, {2, 2, 3, 1, 1}, {3, 4, 2, 2, 1},
        {2, 2, 3, 2, 2}, {5, 6, 5, 5, 6}, {3, 2, 2, 6, 1}, {7, 6, 6, 6, 6}, {2, 1, 2, 1, 1}, {1, 1, 1, 2, 1},
        {1, 2, 2, 2, 2}, {7, 6, 6, 5, 6},
    };
    std::vector<UeqResponse> out(5);
    for (std::size_t p = 0; p < 5; ++p) {
        out[p].participant = "P" + std::to_string(p + 1);
        for (std::size_t i = 0; i < kUeqItemCount; ++i) out[p].items[i] = table[i][p];
    }
    return out;
}

std::filesystem::path scratchDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    const auto dir = std::filesystem::temp_directory_path() /
                     ("adapta-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace testsupport
