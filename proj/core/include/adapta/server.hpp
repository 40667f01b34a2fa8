#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "adapta/store.hpp"

namespace adapta {

struct ServerOptions {
    std::string address = "0.0.0.0";
    unsigned short port = 8080;  // 0 picks a free port
    std::optional<std::filesystem::path> staticDir;
};

/// HTTP and websocket front end over a DataStore.
///
///   GET /session (websocket upgrade)   one SessionHandler per connection
///   GET  /profiles                     {"profiles":[...]}
///   POST /profiles                     create, 201
///   PUT  /profiles/{id}                replace, 200
///   DELETE /profiles/{id}              204
///   GET  /content                      {"items":[...]}
///   GET  anything else                 file under staticDir, if configured
///
/// Each connection is served on its own thread.
class Server {
public:
    /// Binds and listens immediately; throws Error when the address is taken.
    Server(DataStore store, ServerOptions options);
    ~Server();

    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    unsigned short port() const;

    /// Accepts connections until stop() is called.
    void run();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace adapta
