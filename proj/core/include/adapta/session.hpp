#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adapta/activity.hpp"
#include "adapta/analytics.hpp"
#include "adapta/codec.hpp"
#include "adapta/replay.hpp"
#include "adapta/store.hpp"

namespace adapta {

/// One client connection's view of the engine. Each inbound message is a
/// single-line JSON object with a "type"; the handler answers with zero or
/// more outbound lines of the same shape.
///
///   in:  hello{profileId[,iteration,session]}  start{activity}
///        pointer{u,v,t}  gesture{name,t}  tick{t}
///   out: config{config}  scene{elements,rgbMirror}  selection{elementId}
///        feedback{kind,modalities}  progress{repetition,errors}
///        done{summary}  error{reason}
///
/// A rejected message yields a single error line and leaves the session as
/// it was. Not thread-safe; one owner per connection.
class SessionHandler {
public:
    explicit SessionHandler(DataStore store);

    std::vector<std::string> handleMessage(std::string_view message);

    bool greeted() const { return record_.has_value(); }
    bool active() const { return activity_.has_value() && !finished_; }
    bool finished() const { return finished_; }
    /// The log appended to the store when the activity finished.
    const std::optional<SessionLog>& log() const { return log_; }

private:
    struct Running {
        ActivitySpec spec;
        ActivityConfig config;
        ActivityState state;
        std::vector<RepetitionResult> results;
    };

    std::vector<std::string> onHello(const std::string& profileId, const ReplayOptions& options);
    std::vector<std::string> onStart(const std::string& activity);
    std::vector<std::string> onInput(const ActivityInput& input);

    DataStore store_;
    std::optional<ProfileRecord> record_;
    ReplayOptions options_;
    std::optional<Running> activity_;
    bool finished_ = false;
    std::optional<SessionLog> log_;
};

}  // namespace adapta
