#pragma once

#include <string>

#include <json.hpp>

#include "adapta/codec.hpp"

namespace adapta::detail {

using nlohmann::json;

/// Parses text that must hold one JSON object.
json parseObject(std::string_view text);

/// Typed access to a required member; CodecError names the key on failure.
const json& member(const json& object, const char* key);
std::string stringMember(const json& object, const char* key);
double numberMember(const json& object, const char* key);
std::int64_t integerMember(const json& object, const char* key);
bool boolMember(const json& object, const char* key);

json toJson(const ProfileRecord& record);
ProfileRecord profileRecordFromJson(const json& j);

json toJson(const ContentItem& item);
ContentItem contentItemFromJson(const json& j);

json toJson(const SessionLog& log);
SessionLog sessionLogFromJson(const json& j);

json toJson(const ActivityConfig& config);
json toJson(const SceneElement& element);

}  // namespace adapta::detail
