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

#include <deque>
#include <memory>
#include <random>

#include "random_ops.hpp"
#include "viewsync/client/mirror.hpp"
#include "viewsync/transport/connection.hpp"

namespace viewsync::testing {

/// In-process stand-in for the server's sequencing path: validated state,
/// the persistent buffer, and per-client connections whose frames are
/// delivered to mirrors on a caller-controlled schedule. No sockets, no
/// threads. Emits the same messages the real server does for each op.
class SimServer : public OpSink {
public:
    SimServer();

    void add_node(const ScenePath& path, NodeKind kind, PropMap props, const Placement& placement) override;
    void set_node_prop(const ScenePath& path, std::string_view name, Value value) override;
    void remove_node(const ScenePath& path) override;
    Uid add_gui(Uid container, GuiKind kind, PropMap props, std::optional<Value> initial) override;
    void set_gui_value(Uid uid, Value value) override;
    void set_gui_prop(Uid uid, std::string_view name, Value value) override;
    void remove_gui(Uid uid) override;
    void client_update(Uid uid, Value value) override;

    /// Connects a new client; its snapshot is queued like on the real server.
    std::size_t connect();

    /// One random network step: flush some connection, or deliver/ack some
    /// in-flight frame.
    void pump(std::mt19937_64& rng);
    /// Runs flush/deliver/ack until nothing is queued or in flight.
    void drain();

    const ClientMirror& mirror(std::size_t client) const { return clients_.at(client)->mirror; }
    const ClientConnection& connection(std::size_t client) const { return clients_.at(client)->connection; }
    std::size_t client_count() const { return clients_.size(); }

    const SceneGraph& scene() const { return scene_; }
    const GuiRegistry& gui() const { return gui_; }
    const PersistentBuffer& persistent() const { return persistent_; }
    std::size_t max_outstanding_seen() const { return max_outstanding_; }

private:
    struct Client {
        explicit Client(ClientId id);
        ClientConnection connection;
        ClientMirror mirror;
        std::deque<OutgoingFrame> in_flight;
        std::deque<std::uint64_t> acks;
    };

    void emit(Message message);
    void deliver(Client& client);

    SceneGraph scene_;
    GuiRegistry gui_;
    PersistentBuffer persistent_{BufferRole::persistent};
    std::vector<std::unique_ptr<Client>> clients_;
    Uid next_uid_ = 1;
    std::size_t max_outstanding_ = 0;
};

}  // namespace viewsync::testing
