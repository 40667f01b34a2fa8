#include "adapta/store.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include <fcntl.h>
#include <unistd.h>

namespace adapta {

namespace fs = std::filesystem;

namespace {

std::string readFile(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StoreError(StoreError::Kind::StorageFailure, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string systemError(const std::string& what, const fs::path& path) {
    return what + " " + path.string() + ": " + std::strerror(errno);
}

void writeAll(int fd, const std::string& data, const fs::path& path) {
    std::size_t done = 0;
    while (done < data.size()) {
        const ssize_t n = ::write(fd, data.data() + done, data.size() - done);
        if (n < 0) {
            if (errno == EINTR) continue;
            const auto message = systemError("cannot write", path);
            ::close(fd);
            throw StoreError(StoreError::Kind::StorageFailure, message);
        }
        done += static_cast<std::size_t>(n);
    }
    if (::fsync(fd) != 0) {
        const auto message = systemError("cannot sync", path);
        ::close(fd);
        throw StoreError(StoreError::Kind::StorageFailure, message);
    }
    if (::close(fd) != 0) throw StoreError(StoreError::Kind::StorageFailure, systemError("cannot close", path));
}

// Whole-file replacement through a temporary so readers never see a torn file.
void replaceFile(const fs::path& path, const std::string& data) {
    const fs::path tmp = path.string() + ".tmp";
    const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
    if (fd < 0) throw StoreError(StoreError::Kind::StorageFailure, systemError("cannot create", tmp));
    writeAll(fd, data, tmp);
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw StoreError(StoreError::Kind::StorageFailure, "cannot replace " + path.string() + ": " + ec.message());
}

bool validId(const std::string& id) {
    return !id.empty() && std::all_of(id.begin(), id.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '-' || c == '_' || c == '.';
    });
}

void checkRecord(const ProfileRecord& record) {
    if (!validId(record.profile.id)) {
        throw StoreError(StoreError::Kind::InvalidProfile,
                         "profile id '" + record.profile.id + "' must be letters, digits, '-', '_' or '.'");
    }
    auto result = validateProfile(record.profile);
    const auto device = validateDeviceModel(record.device);
    result.violations.insert(result.violations.end(), device.violations.begin(), device.violations.end());
    if (!result.ok()) {
        const auto& v = result.violations.front();
        throw StoreError(StoreError::Kind::InvalidProfile, v.field + ": " + v.message);
    }
}

}  // namespace

DataStore::DataStore(fs::path root) : root_(std::move(root)), writeLock_(std::make_shared<std::mutex>()) {}

DataStore DataStore::open(const fs::path& root) {
    std::error_code ec;
    fs::create_directories(root / "traces", ec);
    if (ec) throw StoreError(StoreError::Kind::StorageFailure, "cannot create store at " + root.string() + ": " + ec.message());
    return DataStore(root);
}

std::vector<ProfileRecord> DataStore::profiles() const {
    if (!fs::exists(profilesPath())) return {};
    try {
        return decodeProfiles(readFile(profilesPath()));
    } catch (const CodecError& e) {
        throw StoreError(StoreError::Kind::CorruptFile, profilesPath().string() + ": " + e.what());
    }
}

std::optional<ProfileRecord> DataStore::findProfile(const std::string& id) const {
    for (auto& r : profiles()) {
        if (r.profile.id == id) return r;
    }
    return std::nullopt;
}

void DataStore::writeProfiles(const std::vector<ProfileRecord>& records) {
    replaceFile(profilesPath(), encodeProfiles(records));
}

void DataStore::addProfile(const ProfileRecord& record) {
    checkRecord(record);
    std::lock_guard lock(*writeLock_);
    auto records = profiles();
    for (const auto& r : records) {
        if (r.profile.id == record.profile.id) {
            throw StoreError(StoreError::Kind::DuplicateId, "profile '" + record.profile.id + "' already exists");
        }
    }
    records.push_back(record);
    writeProfiles(records);
}

void DataStore::updateProfile(const ProfileRecord& record) {
    checkRecord(record);
    std::lock_guard lock(*writeLock_);
    auto records = profiles();
    auto it = std::find_if(records.begin(), records.end(),
                           [&](const ProfileRecord& r) { return r.profile.id == record.profile.id; });
    if (it == records.end()) throw StoreError(StoreError::Kind::UnknownUser, "no profile '" + record.profile.id + "'");
    *it = record;
    writeProfiles(records);
}

void DataStore::removeProfile(const std::string& id) {
    std::lock_guard lock(*writeLock_);
    auto records = profiles();
    auto it = std::find_if(records.begin(), records.end(), [&](const ProfileRecord& r) { return r.profile.id == id; });
    if (it == records.end()) throw StoreError(StoreError::Kind::UnknownUser, "no profile '" + id + "'");
    const auto logs = sessions();
    if (std::any_of(logs.begin(), logs.end(), [&](const SessionLog& l) { return l.userId == id; })) {
        throw StoreError(StoreError::Kind::ProfileInUse, "profile '" + id + "' has logged sessions");
    }
    records.erase(it);
    writeProfiles(records);
}

ContentLibrary DataStore::content() const {
    if (!fs::exists(contentPath())) return defaultContent();
    try {
        return decodeContent(readFile(contentPath()));
    } catch (const CodecError& e) {
        throw StoreError(StoreError::Kind::CorruptFile, contentPath().string() + ": " + e.what());
    }
}

void DataStore::saveContent(const ContentLibrary& content) {
    std::lock_guard lock(*writeLock_);
    replaceFile(contentPath(), encodeContent(content));
}

void DataStore::appendSession(const SessionLog& log) {
    std::lock_guard lock(*writeLock_);
    if (!findProfile(log.userId)) throw StoreError(StoreError::Kind::UnknownUser, "no profile '" + log.userId + "'");
    const auto path = sessionsPath();
    const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    if (fd < 0) throw StoreError(StoreError::Kind::StorageFailure, systemError("cannot append to", path));
    writeAll(fd, encodeSessionLog(log) + "\n", path);
}

std::vector<SessionLog> DataStore::sessions() const {
    if (!fs::exists(sessionsPath())) return {};
    return readSessionLogs(sessionsPath());
}

std::vector<SessionLog> readSessionLogs(const fs::path& path) {
    const std::string text = readFile(path);
    std::vector<SessionLog> logs;
    std::size_t lineNo = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto end = text.find('\n', pos);
        // An unterminated last line is an append still in progress.
        if (end == std::string::npos) break;
        ++lineNo;
        const std::string_view line(text.data() + pos, end - pos);
        pos = end + 1;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        try {
            logs.push_back(decodeSessionLog(line));
        } catch (const CodecError& e) {
            throw StoreError(StoreError::Kind::CorruptFile,
                             path.string() + ":" + std::to_string(lineNo) + ": " + e.what());
        }
    }
    return logs;
}

}  // namespace adapta
