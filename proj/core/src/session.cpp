#include "adapta/session.hpp"

#include <cmath>

#include "json_codec.hpp"

namespace adapta {

using detail::json;

namespace {

std::string line(const json& j) { return j.dump(); }

std::string errorLine(const std::string& reason) { return line({{"type", "error"}, {"reason", reason}}); }

json modalitiesJson(Modality m) {
    json channels = json::array();
    if (includesAudio(m)) channels.push_back("Audio");
    if (includesVisual(m)) channels.push_back("Visual");
    return channels;
}

std::string sceneLine(const ActivityState& state, const ActivityConfig& config) {
    json elements = json::array();
    for (const auto& e : state.elements) elements.push_back(detail::toJson(e));
    return line({{"type", "scene"}, {"elements", elements}, {"rgbMirror", config.rgbMirror}});
}

void appendEvents(std::vector<std::string>& out, const std::vector<FeedbackEvent>& events, const ActivityState& state,
                  const ActivityConfig& config) {
    for (const auto& e : events) {
        switch (e.kind) {
            case FeedbackKind::SceneChanged:
                out.push_back(sceneLine(state, config));
                break;
            case FeedbackKind::SelectionFrame:
                out.push_back(line({{"type", "selection"}, {"elementId", e.elementId}}));
                break;
            default:
                out.push_back(line({{"type", "feedback"}, {"kind", toString(e.kind)}, {"modalities", modalitiesJson(e.modalities)}}));
                break;
        }
    }
}

double unitMember(const json& msg, const char* key) {
    const double v = detail::numberMember(msg, key);
    if (!(v >= 0.0 && v <= 1.0)) throw CodecError(std::string("\"") + key + "\" must be within [0,1]");
    return v;
}

int optionalInt(const json& msg, const char* key, int fallback, int lo, int hi) {
    if (!msg.contains(key)) return fallback;
    const auto v = detail::integerMember(msg, key);
    if (v < lo || v > hi) {
        throw CodecError(std::string("\"") + key + "\" must be between " + std::to_string(lo) + " and " + std::to_string(hi));
    }
    return static_cast<int>(v);
}

}  // namespace

SessionHandler::SessionHandler(DataStore store) : store_(std::move(store)) {}

std::vector<std::string> SessionHandler::handleMessage(std::string_view message) {
    try {
        const json msg = detail::parseObject(message);
        const std::string type = detail::stringMember(msg, "type");
        if (type == "hello") {
            ReplayOptions options;
            options.iteration = optionalInt(msg, "iteration", 1, 1, 2);
            options.sessionIndex = optionalInt(msg, "session", 1, 1, kSessionsPerIteration);
            return onHello(detail::stringMember(msg, "profileId"), options);
        }
        if (type == "start") return onStart(detail::stringMember(msg, "activity"));
        if (type == "pointer") {
            return onInput(CursorMoved{unitMember(msg, "u"), unitMember(msg, "v"), detail::integerMember(msg, "t")});
        }
        if (type == "gesture") {
            const auto name = detail::stringMember(msg, "name");
            const auto id = parseGesture(name);
            if (!id) throw CodecError("unknown gesture '" + name + "'");
            return onInput(GestureRecognized{*id, detail::integerMember(msg, "t")});
        }
        if (type == "tick") return onInput(Tick{detail::integerMember(msg, "t")});
        return {errorLine("unknown message type '" + type + "'")};
    } catch (const Error& e) {
        return {errorLine(e.what())};
    }
}

std::vector<std::string> SessionHandler::onHello(const std::string& profileId, const ReplayOptions& options) {
    if (record_) return {errorLine("session already established")};
    auto record = store_.findProfile(profileId);
    if (!record) return {errorLine("no profile '" + profileId + "'")};
    record_ = std::move(record);
    options_ = options;
    return {};
}

std::vector<std::string> SessionHandler::onStart(const std::string& activity) {
    if (!record_) return {errorLine("send hello first")};
    if (activity_) return {errorLine("an activity was already started on this connection")};
    const auto spec = parseActivity(activity);
    if (!spec) return {errorLine("unknown activity '" + activity + "'")};

    auto start = startActivity(record_->profile, record_->device, *spec, store_.content(), 0);
    std::vector<std::string> out;
    json config = detail::toJson(start.config);
    config["type"] = "config";
    out.push_back(line(config));
    appendEvents(out, start.events, start.state, start.config);
    activity_ = Running{*spec, start.config, std::move(start.state), {}};
    return out;
}

std::vector<std::string> SessionHandler::onInput(const ActivityInput& input) {
    if (!activity_) return {errorLine(record_ ? "start an activity first" : "send hello first")};
    if (finished_) return {errorLine("activity already finished")};

    auto step = applyInput(activity_->state, activity_->config, input);
    std::vector<std::string> out;
    appendEvents(out, step.events, step.state, activity_->config);
    if (step.completed) {
        activity_->results.push_back(*step.completed);
        out.push_back(line({{"type", "progress"}, {"repetition", step.completed->repetitionIndex}, {"errors", step.completed->errors}}));
    }
    activity_->state = std::move(step.state);

    if (activity_->state.phase == ActivityPhase::Done) {
        finished_ = true;
        SessionLog log;
        log.userId = record_->profile.id;
        log.disability = record_->profile.disability;
        log.iteration = options_.iteration;
        log.sessionIndex = options_.sessionIndex;
        log.activity = toString(activity_->spec);
        log.incomplete = false;
        log.results = activity_->results;
        log_ = log;
        try {
            store_.appendSession(log);
        } catch (const StoreError& e) {
            out.push_back(errorLine(std::string("session not stored: ") + e.what()));
        }
        out.push_back(line({{"type", "done"}, {"summary", detail::toJson(log)}}));
    }
    return out;
}

}  // namespace adapta
