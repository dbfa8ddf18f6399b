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

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "viewsync/client/mirror.hpp"
#include "viewsync/protocol.hpp"

namespace viewsync {

struct HeadlessOptions {
    /// Round-trip time to simulate. Each received batch is applied after half
    /// of it and acknowledged after the other half; outgoing frames are also
    /// delayed by half.
    std::chrono::milliseconds simulated_rtt{0};
    /// Hash sent in the hello frame; defaults to this build's schema hash.
    std::optional<std::string> schema_hash;
    /// Keep every applied message for inspection.
    bool record_messages = false;
    std::chrono::milliseconds connect_timeout{5000};
};

/// Protocol-conformant client without rendering. Maintains a mirror and can
/// send GUI, click, and camera frames like the browser client does.
class HeadlessClient {
public:
    /// Connects, performs the handshake, and starts receiving. Throws
    /// HandshakeRejected with the server's reason, or Error when the server
    /// is unreachable.
    static std::unique_ptr<HeadlessClient> connect(const std::string& url, HeadlessOptions options = {});

    ~HeadlessClient();
    HeadlessClient(const HeadlessClient&) = delete;
    HeadlessClient& operator=(const HeadlessClient&) = delete;

    ClientId id() const;

    std::string canonical_state() const;
    std::uint64_t last_seq() const;
    std::uint64_t batches_received() const;
    std::uint64_t messages_received() const;
    /// Applied messages, when recording is enabled.
    std::vector<Message> received_messages() const;
    /// Largest gap between two consecutive received batches.
    std::chrono::milliseconds max_batch_gap() const;

    /// Runs `fn` with the mirror locked.
    void inspect(const std::function<void(const ClientMirror&)>& fn) const;

    /// Waits until `predicate(mirror)` holds. Returns false on timeout or
    /// when the connection dropped.
    bool wait_until(const std::function<bool(const ClientMirror&)>& predicate,
                    std::chrono::milliseconds timeout) const;

    void send_gui_value(Uid uid, Value value);
    void click_button(Uid uid);
    void click(const protocol::SceneClick& click);
    /// Reports the camera, throttled to 30 Hz. A report inside the throttle
    /// window is held back and sent when the window ends (latest wins).
    void report_camera(const CameraState& camera);

    bool connected() const;
    /// Set when the connection was torn down by a protocol error.
    std::optional<std::string> error() const;

    void close();

private:
    class Impl;
    explicit HeadlessClient(std::shared_ptr<Impl> impl);
    std::shared_ptr<Impl> impl_;
};

}  // namespace viewsync
