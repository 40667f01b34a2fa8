#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "adapta/analytics.hpp"
#include "adapta/codec.hpp"
#include "adapta/content.hpp"
#include "adapta/error.hpp"

namespace adapta {

class StoreError : public Error {
public:
    enum class Kind { UnknownUser, DuplicateId, InvalidProfile, ProfileInUse, StorageFailure, CorruptFile };

    StoreError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// File-backed store rooted at one directory:
///   profiles.json   profiles with their device models
///   content.json    content library (the built-in one when absent)
///   traces/         recorded skeleton traces
///   sessions.jsonl  append-only session log, one record per line
///
/// Copies share one writer lock, so a store handed to several sessions
/// serialises its writes.
class DataStore {
public:
    /// Opens the store, creating the directory layout if needed.
    static DataStore open(const std::filesystem::path& root);

    const std::filesystem::path& root() const { return root_; }
    std::filesystem::path profilesPath() const { return root_ / "profiles.json"; }
    std::filesystem::path contentPath() const { return root_ / "content.json"; }
    std::filesystem::path tracesDir() const { return root_ / "traces"; }
    std::filesystem::path sessionsPath() const { return root_ / "sessions.jsonl"; }

    std::vector<ProfileRecord> profiles() const;
    std::optional<ProfileRecord> findProfile(const std::string& id) const;

    /// Validates the profile and device model; ids are unique.
    void addProfile(const ProfileRecord& record);
    void updateProfile(const ProfileRecord& record);
    /// Refuses profiles that logged sessions still refer to.
    void removeProfile(const std::string& id);

    ContentLibrary content() const;
    void saveContent(const ContentLibrary& content);

    /// Appends one line and flushes it to disk before returning.
    void appendSession(const SessionLog& log);
    std::vector<SessionLog> sessions() const;

private:
    explicit DataStore(std::filesystem::path root);

    void writeProfiles(const std::vector<ProfileRecord>& records);

    std::filesystem::path root_;
    std::shared_ptr<std::mutex> writeLock_;
};

/// Loads session logs from a sessions.jsonl style file.
std::vector<SessionLog> readSessionLogs(const std::filesystem::path& path);

}  // namespace adapta
