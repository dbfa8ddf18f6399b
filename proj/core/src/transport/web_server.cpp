/*
 * Copyright 2026 The viewsync Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "viewsync/transport/web_server.hpp"

#include <spdlog/spdlog.h>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>
#include <atomic>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "viewsync/error.hpp"

namespace viewsync {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

namespace {

constexpr std::size_t kMaxFrameBytes = 256u << 20;

constexpr std::string_view kLandingPage = R"(<!doctype html>
<html><head><meta charset="utf-8"><title>viewsync</title></head>
<body><p>viewsync server is running. The browser client bundle was not found;
build it and start the server with its directory as the static root.</p></body></html>
)";

std::string_view mime_type(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".html") return "text/html; charset=utf-8";
    if (ext == ".js" || ext == ".mjs") return "text/javascript";
    if (ext == ".css") return "text/css";
    if (ext == ".json") return "application/json";
    if (ext == ".svg") return "image/svg+xml";
    if (ext == ".png") return "image/png";
    if (ext == ".wasm") return "application/wasm";
    return "application/octet-stream";
}

std::optional<std::string> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

class WebServer::Impl {
public:
    Impl(WebServerOptions options, WebSocketHandler& handler)
        : options_(std::move(options)), handler_(handler), acceptor_(ioc_) {}

    void start();
    void stop();

    void send(SessionId id, std::vector<std::uint8_t> frame);
    void close(SessionId id);

    std::uint16_t port() const { return port_; }
    const std::string& host() const { return options_.host; }

    class WsSession;
    class HttpSession;

    void do_accept();
    http::response<http::string_body> serve(const http::request<http::string_body>& req) const;

    WebServerOptions options_;
    WebSocketHandler& handler_;
    asio::io_context ioc_;
    tcp::acceptor acceptor_;
    std::thread thread_;
    std::uint16_t port_ = 0;
    bool stopped_ = false;
    std::mutex stop_mutex_;
    std::atomic<bool> stopping_{false};

    // Touched only from the I/O thread.
    std::map<SessionId, std::shared_ptr<WsSession>> sessions_;
    SessionId next_session_ = 1;
};

class WebServer::Impl::WsSession : public std::enable_shared_from_this<WsSession> {
public:
    WsSession(Impl* server, SessionId id, tcp::socket socket)
        : server_(server), id_(id), ws_(std::move(socket)) {}

    void start(http::request<http::string_body> req) {
        ws_.binary(true);
        ws_.read_message_max(kMaxFrameBytes);
        ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
        ws_.async_accept(req, [self = shared_from_this()](beast::error_code ec) {
            if (ec) {
                spdlog::debug("websocket handshake failed: {}", ec.message());
                return;
            }
            if (self->server_->stopping_) return;
            self->open_ = true;
            self->server_->sessions_.emplace(self->id_, self);
            self->server_->handler_.on_open(self->id_);
            self->read();
        });
    }

    void push(std::vector<std::uint8_t> frame) {
        if (closing_ || !open_) return;
        queue_.push_back(std::move(frame));
        if (queue_.size() == 1) write_next();
    }

    void request_close() {
        if (closing_ || !open_) return;
        closing_ = true;
        if (queue_.empty()) close_now();
    }

    void abort() {
        beast::error_code ignored;
        beast::get_lowest_layer(ws_).socket().close(ignored);
    }

    void finish() {
        if (!open_) return;
        open_ = false;
        server_->sessions_.erase(id_);
        if (!server_->stopping_) server_->handler_.on_close(id_);
    }

private:
    void read() {
        ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
            if (ec) {
                if (ec != websocket::error::closed) spdlog::debug("session {} read: {}", self->id_, ec.message());
                self->finish();
                return;
            }
            const auto data = self->buffer_.cdata();
            std::vector<std::uint8_t> frame(static_cast<const std::uint8_t*>(data.data()),
                                            static_cast<const std::uint8_t*>(data.data()) + data.size());
            self->buffer_.consume(self->buffer_.size());
            if (self->open_ && !self->server_->stopping_) self->server_->handler_.on_frame(self->id_, std::move(frame));
            self->read();
        });
    }

    void write_next() {
        ws_.async_write(asio::buffer(queue_.front()), [self = shared_from_this()](beast::error_code ec, std::size_t) {
            if (ec) {
                spdlog::debug("session {} write: {}", self->id_, ec.message());
                self->queue_.clear();
                self->finish();
                return;
            }
            self->queue_.pop_front();
            if (!self->queue_.empty()) {
                self->write_next();
            } else if (self->closing_) {
                self->close_now();
            }
        });
    }

    void close_now() {
        ws_.async_close(websocket::close_code::normal, [self = shared_from_this()](beast::error_code) {});
    }

    Impl* server_;
    SessionId id_;
    websocket::stream<beast::tcp_stream> ws_;
    beast::flat_buffer buffer_;
    std::deque<std::vector<std::uint8_t>> queue_;
    bool open_ = false;
    bool closing_ = false;
};

class WebServer::Impl::HttpSession : public std::enable_shared_from_this<HttpSession> {
public:
    HttpSession(Impl* server, tcp::socket socket)
        : server_(server), stream_(std::move(socket)) {}

    void read() {
        req_ = {};
        stream_.expires_after(std::chrono::seconds(30));
        http::async_read(stream_, buffer_, req_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
            if (ec) return;
            self->handle();
        });
    }

private:
    void handle() {
        if (websocket::is_upgrade(req_)) {
            if (req_.target() != "/ws") {
                respond(error(http::status::not_found, "websocket endpoint is /ws"));
                return;
            }
            stream_.expires_never();
            const SessionId id = server_->next_session_++;
            std::make_shared<WsSession>(server_, id, stream_.release_socket())->start(std::move(req_));
            return;
        }
        respond(server_->serve(req_));
    }

    http::response<http::string_body> error(http::status status, std::string_view body) const {
        http::response<http::string_body> res{status, req_.version()};
        res.set(http::field::content_type, "text/plain");
        res.body() = body;
        res.prepare_payload();
        return res;
    }

    void respond(http::response<http::string_body> res) {
        res.keep_alive(req_.keep_alive());
        auto shared = std::make_shared<http::response<http::string_body>>(std::move(res));
        http::async_write(stream_, *shared, [self = shared_from_this(), shared](beast::error_code ec, std::size_t) {
            if (ec || !shared->keep_alive()) {
                beast::error_code ignored;
                self->stream_.socket().shutdown(tcp::socket::shutdown_send, ignored);
                return;
            }
            self->read();
        });
    }

    Impl* server_;
    beast::tcp_stream stream_;
    beast::flat_buffer buffer_;
    http::request<http::string_body> req_;
};

http::response<http::string_body> WebServer::Impl::serve(const http::request<http::string_body>& req) const {
    http::response<http::string_body> res{http::status::ok, req.version()};
    auto reply = [&](http::status status, std::string_view type, std::string body) {
        res.result(status);
        res.set(http::field::content_type, std::string(type));
        res.body() = std::move(body);
        res.prepare_payload();
        return res;
    };

    if (req.method() != http::verb::get && req.method() != http::verb::head) {
        return reply(http::status::method_not_allowed, "text/plain", "GET only");
    }
    std::string target(req.target());
    target = target.substr(0, target.find('?'));
    if (target == "/healthz") return reply(http::status::ok, "text/plain", "ok");
    if (target == "/ws") return reply(http::status::upgrade_required, "text/plain", "websocket upgrade required");
    if (target.empty() || target.front() != '/' || target.find("..") != std::string::npos) {
        return reply(http::status::bad_request, "text/plain", "bad path");
    }
    if (target.back() == '/') target += "index.html";

    if (!options_.static_dir.empty() && std::filesystem::is_directory(options_.static_dir)) {
        const std::filesystem::path file = std::filesystem::path(options_.static_dir) / target.substr(1);
        if (auto body = read_file(file)) {
            return reply(http::status::ok, mime_type(file), std::move(*body));
        }
        return reply(http::status::not_found, "text/plain", "not found");
    }
    if (target == "/index.html") return reply(http::status::ok, "text/html; charset=utf-8", std::string(kLandingPage));
    return reply(http::status::not_found, "text/plain", "not found");
}

void WebServer::Impl::start() {
    beast::error_code ec;
    const auto address = asio::ip::make_address(options_.host, ec);
    const std::string where = options_.host + ":" + std::to_string(options_.port);
    if (ec) throw BindError("cannot bind " + where + ": " + ec.message());
    const tcp::endpoint endpoint(address, options_.port);
    acceptor_.open(endpoint.protocol(), ec);
    if (!ec) acceptor_.set_option(asio::socket_base::reuse_address(true), ec);
    if (!ec) acceptor_.bind(endpoint, ec);
    if (!ec) acceptor_.listen(asio::socket_base::max_listen_connections, ec);
    if (ec) throw BindError("cannot bind " + where + ": " + ec.message());
    port_ = acceptor_.local_endpoint().port();

    do_accept();
    thread_ = std::thread([self = this] {
        try {
            self->ioc_.run();
        } catch (const std::exception& e) {
            spdlog::error("web server I/O thread stopped: {}", e.what());
        }
    });
}

void WebServer::Impl::do_accept() {
    acceptor_.async_accept(ioc_, [self = this](beast::error_code ec, tcp::socket s) {
        if (ec) {
            if (ec != asio::error::operation_aborted) spdlog::warn("accept failed: {}", ec.message());
            if (!self->acceptor_.is_open()) return;
        } else {
            std::make_shared<HttpSession>(self, std::move(s))->read();
        }
        self->do_accept();
    });
}

void WebServer::Impl::send(SessionId id, std::vector<std::uint8_t> frame) {
    asio::post(ioc_, [self = this, id, frame = std::move(frame)]() mutable {
        if (auto it = self->sessions_.find(id); it != self->sessions_.end()) it->second->push(std::move(frame));
    });
}

void WebServer::Impl::close(SessionId id) {
    asio::post(ioc_, [self = this, id] {
        if (auto it = self->sessions_.find(id); it != self->sessions_.end()) it->second->request_close();
    });
}

void WebServer::Impl::stop() {
    std::lock_guard lock(stop_mutex_);
    if (stopped_) return;
    stopped_ = true;
    stopping_ = true;
    asio::post(ioc_, [self = this] {
        beast::error_code ignored;
        self->acceptor_.close(ignored);
        for (auto& [id, session] : self->sessions_) session->abort();
        self->sessions_.clear();
        self->ioc_.stop();
    });
    // Pending handlers (and the sessions they own) are destroyed with ioc_.
    if (thread_.joinable()) thread_.join();
}

WebServer::WebServer(WebServerOptions options, WebSocketHandler& handler)
    : impl_(std::make_shared<Impl>(std::move(options), handler)) {
    impl_->start();
}

WebServer::~WebServer() { stop(); }

std::uint16_t WebServer::port() const { return impl_->port(); }
const std::string& WebServer::host() const { return impl_->host(); }
void WebServer::send(SessionId session, std::vector<std::uint8_t> frame) { impl_->send(session, std::move(frame)); }
void WebServer::close(SessionId session) { impl_->close(session); }
void WebServer::stop() { impl_->stop(); }

}  // namespace viewsync
