#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "adapta/activity.hpp"
#include "adapta/analytics.hpp"
#include "adapta/codec.hpp"
#include "adapta/skeleton.hpp"
#include "adapta/store.hpp"

namespace adapta {

struct ReplayOptions {
    int iteration = 1;
    int sessionIndex = 1;
};

/// Activity inputs a trace produces under a configuration: one cursor move
/// per frame in the cursor modes; in Gestures mode the recognised gestures
/// of each frame, or a tick when the frame completes none.
std::vector<ActivityInput> traceInputs(const Trace& trace, const ActivityConfig& config, Posture posture);

/// Runs the activity over a sequence of inputs from time 0 and returns its
/// log. Inputs after completion are ignored; a sequence that stops early
/// yields the finished repetitions flagged incomplete.
SessionLog runInputs(const ProfileRecord& record, const ActivitySpec& spec, const ContentLibrary& content,
                     const std::vector<ActivityInput>& inputs, const ReplayOptions& options = {});

SessionLog replayTrace(const ProfileRecord& record, const ActivitySpec& spec, const ContentLibrary& content,
                       const Trace& trace, const ReplayOptions& options = {});

/// Loads the profile and content from the store and the trace from disk.
/// A relative trace path that does not exist is looked up in the store's
/// traces directory. Nothing is written to the store.
SessionLog runReplay(const DataStore& store, const std::string& profileId, const ActivitySpec& spec,
                     const std::filesystem::path& tracePath, const ReplayOptions& options = {});

}  // namespace adapta
