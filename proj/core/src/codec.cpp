#include "json_codec.hpp"

#include <cmath>
#include <limits>

namespace adapta {

namespace detail {

namespace {

template <typename T, typename Parse>
T enumMember(const json& object, const char* key, Parse parse) {
    const auto text = stringMember(object, key);
    const auto value = parse(text);
    if (!value) throw CodecError("unknown value '" + text + "' for \"" + key + "\"");
    return *value;
}

}  // namespace

json parseObject(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw CodecError("not valid JSON");
    if (!j.is_object()) throw CodecError("expected a JSON object");
    return j;
}

const json& member(const json& object, const char* key) {
    const auto it = object.find(key);
    if (it == object.end()) throw CodecError(std::string("missing \"") + key + "\"");
    return *it;
}

std::string stringMember(const json& object, const char* key) {
    const auto& v = member(object, key);
    if (!v.is_string()) throw CodecError(std::string("\"") + key + "\" must be a string");
    return v.get<std::string>();
}

double numberMember(const json& object, const char* key) {
    const auto& v = member(object, key);
    if (!v.is_number()) throw CodecError(std::string("\"") + key + "\" must be a number");
    return v.get<double>();
}

std::int64_t integerMember(const json& object, const char* key) {
    const auto& v = member(object, key);
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_number_float()) {
        const double d = v.get<double>();
        if (std::isfinite(d) && d == std::floor(d) && std::abs(d) < 9.0e15) return static_cast<std::int64_t>(d);
    }
    throw CodecError(std::string("\"") + key + "\" must be an integer");
}

bool boolMember(const json& object, const char* key) {
    const auto& v = member(object, key);
    if (!v.is_boolean()) throw CodecError(std::string("\"") + key + "\" must be true or false");
    return v.get<bool>();
}

json toJson(const ProfileRecord& record) {
    const auto& p = record.profile;
    const auto& d = record.device;
    return {{"id", p.id},
            {"fullName", p.fullName},
            {"age", p.age},
            {"sex", toString(p.sex)},
            {"laterality", toString(p.laterality)},
            {"disability", toString(p.disability)},
            {"device",
             {{"posture", toString(d.posture)},
              {"rgbCameraActive", d.rgbCameraActive},
              {"depthDistance", d.depthDistance},
              {"armMobility", toString(d.armMobility)}}}};
}

ProfileRecord profileRecordFromJson(const json& j) {
    if (!j.is_object()) throw CodecError("profile must be an object");
    ProfileRecord r;
    r.profile.id = stringMember(j, "id");
    r.profile.fullName = stringMember(j, "fullName");
    const auto age = integerMember(j, "age");
    if (age < std::numeric_limits<int>::min() || age > std::numeric_limits<int>::max()) {
        throw CodecError("\"age\" out of range");
    }
    r.profile.age = static_cast<int>(age);
    r.profile.sex = enumMember<Sex>(j, "sex", parseSex);
    r.profile.laterality = enumMember<LateralityProblem>(j, "laterality", parseLaterality);
    r.profile.disability = enumMember<Disability>(j, "disability", parseDisability);

    const auto& d = member(j, "device");
    if (!d.is_object()) throw CodecError("\"device\" must be an object");
    r.device.posture = enumMember<Posture>(d, "posture", parsePosture);
    r.device.rgbCameraActive = boolMember(d, "rgbCameraActive");
    r.device.depthDistance = numberMember(d, "depthDistance");
    r.device.armMobility = enumMember<ArmMobility>(d, "armMobility", parseArmMobility);
    return r;
}

json toJson(const ContentItem& item) {
    return {{"topic", toString(item.topic)},
            {"optionId", item.optionId},
            {"label", item.label},
            {"pictogramId", item.pictogramId},
            {"matchesTargetId", item.matchesTargetId}};
}

ContentItem contentItemFromJson(const json& j) {
    if (!j.is_object()) throw CodecError("content item must be an object");
    ContentItem item;
    item.topic = enumMember<Topic>(j, "topic", parseTopic);
    item.optionId = stringMember(j, "optionId");
    item.label = stringMember(j, "label");
    item.pictogramId = stringMember(j, "pictogramId");
    item.matchesTargetId = stringMember(j, "matchesTargetId");
    return item;
}

json toJson(const SessionLog& log) {
    json results = json::array();
    for (const auto& r : log.results) {
        results.push_back({{"repetition", r.repetitionIndex}, {"seconds", r.durationSeconds}, {"errors", r.errors}});
    }
    return {{"userId", log.userId},
            {"disability", toString(log.disability)},
            {"iteration", log.iteration},
            {"session", log.sessionIndex},
            {"activity", log.activity},
            {"incomplete", log.incomplete},
            {"results", results}};
}

SessionLog sessionLogFromJson(const json& j) {
    if (!j.is_object()) throw CodecError("session log must be an object");
    SessionLog log;
    log.userId = stringMember(j, "userId");
    log.disability = enumMember<Disability>(j, "disability", parseDisability);
    log.iteration = static_cast<int>(integerMember(j, "iteration"));
    log.sessionIndex = static_cast<int>(integerMember(j, "session"));
    log.activity = stringMember(j, "activity");
    log.incomplete = boolMember(j, "incomplete");
    const auto& results = member(j, "results");
    if (!results.is_array()) throw CodecError("\"results\" must be an array");
    for (const auto& r : results) {
        if (!r.is_object()) throw CodecError("repetition result must be an object");
        log.results.push_back({static_cast<int>(integerMember(r, "repetition")),
                               static_cast<int>(integerMember(r, "seconds")),
                               static_cast<int>(integerMember(r, "errors"))});
    }
    return log;
}

json toJson(const ActivityConfig& c) {
    return {{"instructionModality", toString(c.instructionModality)},
            {"backgroundStyle", toString(c.backgroundStyle)},
            {"objectColorScheme", toString(c.objectColorScheme)},
            {"interactionMode", toString(c.interactionMode)},
            {"feedbackModality", toString(c.feedbackModality)},
            {"showPictograms", c.showPictograms},
            {"elementSpacing", toString(c.elementSpacing)},
            {"trackedArm", toString(c.trackedArm)},
            {"rgbMirror", c.rgbMirror}};
}

json toJson(const SceneElement& e) {
    json j = {{"id", e.id}, {"label", e.label}, {"u", e.u}, {"v", e.v}, {"radius", e.radius}, {"role", toString(e.role)}};
    if (e.pictogramId) j["pictogramId"] = *e.pictogramId;
    return j;
}

}  // namespace detail

using detail::json;

std::string encodeProfileRecord(const ProfileRecord& record) { return detail::toJson(record).dump(); }

ProfileRecord decodeProfileRecord(std::string_view text) {
    return detail::profileRecordFromJson(detail::parseObject(text));
}

std::string encodeProfiles(const std::vector<ProfileRecord>& records) {
    json list = json::array();
    for (const auto& r : records) list.push_back(detail::toJson(r));
    return json{{"profiles", list}}.dump(2) + "\n";
}

std::vector<ProfileRecord> decodeProfiles(std::string_view text) {
    const auto doc = detail::parseObject(text);
    const auto& list = detail::member(doc, "profiles");
    if (!list.is_array()) throw CodecError("\"profiles\" must be an array");
    std::vector<ProfileRecord> records;
    for (const auto& j : list) records.push_back(detail::profileRecordFromJson(j));
    return records;
}

std::string encodeContent(const ContentLibrary& content) {
    json list = json::array();
    for (const auto& item : content.items) list.push_back(detail::toJson(item));
    return json{{"items", list}}.dump(2) + "\n";
}

ContentLibrary decodeContent(std::string_view text) {
    const auto doc = detail::parseObject(text);
    const auto& list = detail::member(doc, "items");
    if (!list.is_array()) throw CodecError("\"items\" must be an array");
    ContentLibrary content;
    for (const auto& j : list) content.items.push_back(detail::contentItemFromJson(j));
    return content;
}

std::string encodeSessionLog(const SessionLog& log) { return detail::toJson(log).dump(); }

SessionLog decodeSessionLog(std::string_view text) { return detail::sessionLogFromJson(detail::parseObject(text)); }

std::string encodeConfig(const ActivityConfig& config) { return detail::toJson(config).dump(); }

std::string encodeSceneElement(const SceneElement& element) { return detail::toJson(element).dump(); }

}  // namespace adapta
