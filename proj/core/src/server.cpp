#include "adapta/server.hpp"

#include <sys/socket.h>

#include <atomic>
#include <fstream>
#include <list>
#include <mutex>
#include <sstream>
#include <thread>

#include <boost/asio/ip/tcp.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>

#include "adapta/session.hpp"

namespace adapta {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

namespace {

using Request = http::request<http::string_body>;
using Response = http::response<http::string_body>;

Response reply(const Request& req, http::status status, std::string body,
               std::string_view contentType = "application/json") {
    Response res{status, req.version()};
    res.set(http::field::server, "adapta");
    res.set(http::field::content_type, std::string(contentType));
    res.keep_alive(req.keep_alive());
    res.body() = std::move(body);
    res.prepare_payload();
    return res;
}

Response errorReply(const Request& req, http::status status, const std::string& message) {
    std::string escaped;
    for (char c : message) {
        if (c == '"' || c == '\\') escaped += '\\';
        if (static_cast<unsigned char>(c) >= 0x20) escaped += c;
    }
    return reply(req, status, "{\"error\":\"" + escaped + "\"}\n");
}

std::string_view mimeType(const std::filesystem::path& path) {
    const auto ext = path.extension().string();
    if (ext == ".html" || ext == ".htm") return "text/html";
    if (ext == ".js" || ext == ".mjs") return "application/javascript";
    if (ext == ".css") return "text/css";
    if (ext == ".json") return "application/json";
    if (ext == ".svg") return "image/svg+xml";
    if (ext == ".png") return "image/png";
    if (ext == ".jpg" || ext == ".jpeg") return "image/jpeg";
    if (ext == ".wav") return "audio/wav";
    if (ext == ".mp3") return "audio/mpeg";
    return "application/octet-stream";
}

http::status statusFor(const StoreError& e) {
    switch (e.kind()) {
        case StoreError::Kind::UnknownUser: return http::status::not_found;
        case StoreError::Kind::DuplicateId:
        case StoreError::Kind::ProfileInUse: return http::status::conflict;
        case StoreError::Kind::InvalidProfile: return http::status::bad_request;
        default: return http::status::internal_server_error;
    }
}

Response serveStatic(const Request& req, const std::optional<std::filesystem::path>& root, std::string_view target) {
    if (!root) return errorReply(req, http::status::not_found, "not found");
    std::string rel(target.substr(1));
    if (rel.empty() || rel.back() == '/') rel += "index.html";
    const std::filesystem::path relPath(rel);
    for (const auto& part : relPath) {
        if (part == "..") return errorReply(req, http::status::bad_request, "invalid path");
    }
    const auto path = *root / relPath;
    std::ifstream in(path, std::ios::binary);
    if (!in || std::filesystem::is_directory(path)) return errorReply(req, http::status::not_found, "not found");
    std::ostringstream data;
    data << in.rdbuf();
    auto res = reply(req, http::status::ok, data.str(), mimeType(path));
    if (req.method() == http::verb::head) res.body().clear();
    return res;
}

Response route(DataStore& store, const std::optional<std::filesystem::path>& staticDir, const Request& req) {
    std::string_view target(req.target().data(), req.target().size());
    if (const auto q = target.find('?'); q != std::string_view::npos) target = target.substr(0, q);
    const auto method = req.method();

    try {
        if (target == "/profiles") {
            if (method == http::verb::get) return reply(req, http::status::ok, encodeProfiles(store.profiles()));
            if (method == http::verb::post) {
                const auto record = decodeProfileRecord(req.body());
                store.addProfile(record);
                return reply(req, http::status::created, encodeProfileRecord(record) + "\n");
            }
            return errorReply(req, http::status::method_not_allowed, "use GET or POST");
        }
        if (target.rfind("/profiles/", 0) == 0) {
            const std::string id(target.substr(10));
            if (method == http::verb::get) {
                const auto record = store.findProfile(id);
                if (!record) return errorReply(req, http::status::not_found, "no profile '" + id + "'");
                return reply(req, http::status::ok, encodeProfileRecord(*record) + "\n");
            }
            if (method == http::verb::put) {
                const auto record = decodeProfileRecord(req.body());
                if (record.profile.id != id) {
                    return errorReply(req, http::status::bad_request, "profile id does not match the path");
                }
                store.updateProfile(record);
                return reply(req, http::status::ok, encodeProfileRecord(record) + "\n");
            }
            if (method == http::verb::delete_) {
                store.removeProfile(id);
                return reply(req, http::status::no_content, "");
            }
            return errorReply(req, http::status::method_not_allowed, "use GET, PUT or DELETE");
        }
        if (target == "/content") {
            if (method == http::verb::get) return reply(req, http::status::ok, encodeContent(store.content()));
            return errorReply(req, http::status::method_not_allowed, "use GET");
        }
        if (target == "/session") return errorReply(req, http::status::upgrade_required, "websocket upgrade required");
        if (method == http::verb::get || method == http::verb::head) return serveStatic(req, staticDir, target);
        return errorReply(req, http::status::not_found, "not found");
    } catch (const StoreError& e) {
        return errorReply(req, statusFor(e), e.what());
    } catch (const Error& e) {
        return errorReply(req, http::status::bad_request, e.what());
    }
}

void runWebsocket(tcp::socket& socket, const Request& upgrade, DataStore store) {
    websocket::stream<tcp::socket&> ws(socket);
    ws.set_option(websocket::stream_base::decorator(
        [](websocket::response_type& res) { res.set(http::field::server, "adapta"); }));
    ws.accept(upgrade);
    ws.text(true);

    SessionHandler handler(std::move(store));
    beast::flat_buffer buffer;
    for (;;) {
        buffer.clear();
        beast::error_code ec;
        ws.read(buffer, ec);
        if (ec) break;
        const auto message = beast::buffers_to_string(buffer.data());
        for (const auto& out : handler.handleMessage(message)) ws.write(asio::buffer(out));
    }
}

void serveConnection(tcp::socket& socket, DataStore store, std::optional<std::filesystem::path> staticDir) {
    try {
        beast::flat_buffer buffer;
        for (;;) {
            Request req;
            beast::error_code ec;
            http::read(socket, buffer, req, ec);
            if (ec) break;
            if (websocket::is_upgrade(req)) {
                std::string_view target(req.target().data(), req.target().size());
                if (target == "/session") {
                    runWebsocket(socket, req, std::move(store));
                    return;
                }
                http::write(socket, errorReply(req, http::status::not_found, "websocket endpoint is /session"));
                break;
            }
            const auto res = route(store, staticDir, req);
            http::write(socket, res, ec);
            if (ec || !res.keep_alive()) break;
        }
        beast::error_code ignored;
        socket.shutdown(tcp::socket::shutdown_send, ignored);
    } catch (const std::exception&) {
        // Connection dropped mid-message; nothing to report to anyone.
    }
}

}  // namespace

struct Server::Impl {
    Impl(DataStore s, ServerOptions o) : store(std::move(s)), options(std::move(o)), acceptor(io) {}

    struct Connection {
        tcp::socket socket;
        std::atomic<bool> finished{false};
        std::thread thread;
        explicit Connection(tcp::socket s) : socket(std::move(s)) {}
    };

    void accept() {
        acceptor.async_accept([this](beast::error_code ec, tcp::socket socket) {
            if (ec) return;
            std::lock_guard lock(mutex);
            connections.remove_if([](Connection& c) {
                if (!c.finished) return false;
                c.thread.join();
                return true;
            });
            auto& c = connections.emplace_back(std::move(socket));
            c.thread = std::thread([this, &c] {
                serveConnection(c.socket, store, options.staticDir);
                c.finished = true;
            });
            accept();
        });
    }

    // Unblocks every connection thread and waits for it; sockets must not outlive io.
    void closeConnections() {
        std::lock_guard lock(mutex);
        for (auto& c : connections) ::shutdown(c.socket.native_handle(), SHUT_RDWR);
        for (auto& c : connections) c.thread.join();
        connections.clear();
    }

    DataStore store;
    ServerOptions options;
    asio::io_context io;
    tcp::acceptor acceptor;
    std::mutex mutex;
    std::list<Connection> connections;
};

Server::Server(DataStore store, ServerOptions options) : impl_(std::make_unique<Impl>(std::move(store), std::move(options))) {
    beast::error_code ec;
    const auto address = asio::ip::make_address(impl_->options.address, ec);
    if (ec) throw Error("invalid listen address '" + impl_->options.address + "'");
    const tcp::endpoint endpoint(address, impl_->options.port);
    auto& acceptor = impl_->acceptor;
    acceptor.open(endpoint.protocol(), ec);
    if (!ec) acceptor.set_option(asio::socket_base::reuse_address(true), ec);
    if (!ec) acceptor.bind(endpoint, ec);
    if (!ec) acceptor.listen(asio::socket_base::max_listen_connections, ec);
    if (ec) {
        throw Error("cannot listen on " + impl_->options.address + ":" + std::to_string(impl_->options.port) + ": " +
                    ec.message());
    }
}

Server::~Server() {
    stop();
    impl_->closeConnections();
}

unsigned short Server::port() const { return impl_->acceptor.local_endpoint().port(); }

void Server::run() {
    impl_->accept();
    impl_->io.run();
}

void Server::stop() { impl_->io.stop(); }

}  // namespace adapta
