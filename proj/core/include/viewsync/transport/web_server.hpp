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

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace viewsync {

using SessionId = std::uint64_t;

/// Receives WebSocket lifecycle events. Called from the server's I/O thread.
class WebSocketHandler {
public:
    virtual ~WebSocketHandler() = default;
    virtual void on_open(SessionId session) = 0;
    virtual void on_frame(SessionId session, std::vector<std::uint8_t> frame) = 0;
    virtual void on_close(SessionId session) = 0;
};

struct WebServerOptions {
    std::string host = "127.0.0.1";
    /// 0 picks a free port; see WebServer::port().
    std::uint16_t port = 8080;
    /// Directory holding the browser client bundle served at "/". When empty
    /// or missing, a built-in landing page is served instead.
    std::string static_dir;
};

/// HTTP + WebSocket endpoint on one port.
///
///   GET /         browser client bundle (index.html and its assets)
///   GET /healthz  200 "ok"
///   GET /ws       WebSocket upgrade; binary frames only
///
/// Binds in the constructor (BindError naming host:port on failure) and
/// serves from a background I/O thread until destroyed.
class WebServer {
public:
    WebServer(WebServerOptions options, WebSocketHandler& handler);
    ~WebServer();

    WebServer(const WebServer&) = delete;
    WebServer& operator=(const WebServer&) = delete;

    std::uint16_t port() const;
    const std::string& host() const;

    /// Queues a binary frame. Thread-safe; frames to one session are written
    /// in call order. Unknown sessions are ignored.
    void send(SessionId session, std::vector<std::uint8_t> frame);

    /// Closes a session after its queued frames are written.
    void close(SessionId session);

    void stop();

private:
    class Impl;
    std::shared_ptr<Impl> impl_;
};

}  // namespace viewsync
