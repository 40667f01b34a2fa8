#include "adapta/replay.hpp"

#include "adapta/gesture.hpp"

namespace adapta {

std::vector<ActivityInput> traceInputs(const Trace& trace, const ActivityConfig& config, Posture posture) {
    std::vector<ActivityInput> inputs;
    inputs.reserve(trace.frames.size());
    if (config.interactionMode == InteractionMode::Gestures) {
        GestureListener listener;
        for (const auto& raw : trace.frames) {
            const auto frame = filterJointsForPosture(raw, posture);
            const auto events = listener.onFrame(frame);
            for (const auto& e : events) inputs.emplace_back(GestureRecognized{e.id, e.endMs});
            if (events.empty()) inputs.emplace_back(Tick{frame.timestampMs});
        }
    } else {
        for (const auto& raw : trace.frames) {
            const auto frame = filterJointsForPosture(raw, posture);
            const auto cursor = mapHandToCursor(frame, config.trackedArm);
            inputs.emplace_back(CursorMoved{cursor.u, cursor.v, frame.timestampMs});
        }
    }
    return inputs;
}

SessionLog runInputs(const ProfileRecord& record, const ActivitySpec& spec, const ContentLibrary& content,
                     const std::vector<ActivityInput>& inputs, const ReplayOptions& options) {
    auto start = startActivity(record.profile, record.device, spec, content, 0);
    SessionLog log;
    log.userId = record.profile.id;
    log.disability = record.profile.disability;
    log.iteration = options.iteration;
    log.sessionIndex = options.sessionIndex;
    log.activity = toString(spec);

    ActivityState state = std::move(start.state);
    for (const auto& input : inputs) {
        if (state.phase == ActivityPhase::Done) break;
        auto step = applyInput(state, start.config, input);
        if (step.completed) log.results.push_back(*step.completed);
        state = std::move(step.state);
    }
    log.incomplete = state.phase != ActivityPhase::Done;
    return log;
}

SessionLog replayTrace(const ProfileRecord& record, const ActivitySpec& spec, const ContentLibrary& content,
                       const Trace& trace, const ReplayOptions& options) {
    const auto config = deriveConfig(record.profile, record.device);
    return runInputs(record, spec, content, traceInputs(trace, config, record.device.posture), options);
}

SessionLog runReplay(const DataStore& store, const std::string& profileId, const ActivitySpec& spec,
                     const std::filesystem::path& tracePath, const ReplayOptions& options) {
    const auto record = store.findProfile(profileId);
    if (!record) throw StoreError(StoreError::Kind::UnknownUser, "no profile '" + profileId + "'");
    auto path = tracePath;
    if (path.is_relative() && !std::filesystem::exists(path) && std::filesystem::exists(store.tracesDir() / path)) {
        path = store.tracesDir() / path;
    }
    const auto trace = loadTraceFile(path.string());
    return replayTrace(*record, spec, store.content(), trace, options);
}

}  // namespace adapta
