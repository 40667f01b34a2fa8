#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "adapta/activity.hpp"
#include "adapta/adaptation.hpp"
#include "adapta/analytics.hpp"
#include "adapta/content.hpp"
#include "adapta/error.hpp"
#include "adapta/models.hpp"

namespace adapta {

/// A student profile together with the device model registered for it.
struct ProfileRecord {
    UserProfile profile;
    DeviceInteractionModel device;

    friend bool operator==(const ProfileRecord&, const ProfileRecord&) = default;
};

class CodecError : public Error {
public:
    explicit CodecError(const std::string& message) : Error(message) {}
};

// All records are JSON objects. Documents (profiles, content) are written
// indented; records destined for line-oriented logs fit on one line.

std::string encodeProfileRecord(const ProfileRecord& record);
ProfileRecord decodeProfileRecord(std::string_view text);

/// {"profiles":[...]}
std::string encodeProfiles(const std::vector<ProfileRecord>& records);
std::vector<ProfileRecord> decodeProfiles(std::string_view text);

/// {"items":[...]}
std::string encodeContent(const ContentLibrary& content);
ContentLibrary decodeContent(std::string_view text);

std::string encodeSessionLog(const SessionLog& log);
SessionLog decodeSessionLog(std::string_view text);

std::string encodeConfig(const ActivityConfig& config);
std::string encodeSceneElement(const SceneElement& element);

}  // namespace adapta
