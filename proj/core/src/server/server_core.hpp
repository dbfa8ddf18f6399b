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

#include <condition_variable>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <thread>

#include "viewsync/protocol.hpp"
#include "viewsync/server/server.hpp"
#include "viewsync/transport/connection.hpp"
#include "viewsync/transport/web_server.hpp"

namespace viewsync::detail {

using ScopeId = std::optional<ClientId>;

/// Owns all server state. One mutex serializes every mutation, which makes
/// the order messages enter the buffers the single source of truth.
class ServerCore : public WebSocketHandler, public std::enable_shared_from_this<ServerCore> {
public:
    explicit ServerCore(ServerOptions options);
    ~ServerCore() override;

    void start();
    void stop();

    // Scene.
    std::uint64_t add_node(ScopeId scope, const ScenePath& path, NodeKind kind, PropMap props,
                           const Placement& placement);
    std::uint64_t node_incarnation(ScopeId scope, const ScenePath& path) const;
    bool node_alive(ScopeId scope, const ScenePath& path, std::uint64_t incarnation) const;
    SceneNode read_node(ScopeId scope, const ScenePath& path, std::uint64_t incarnation) const;
    void set_node_prop(ScopeId scope, const ScenePath& path, std::uint64_t incarnation, std::string_view name,
                       Value value);
    void remove_node(ScopeId scope, const ScenePath& path, std::uint64_t incarnation);
    bool remove_node(ScopeId scope, const ScenePath& path);
    Subscription on_node_click(ScopeId scope, const ScenePath& path, std::uint64_t incarnation,
                               ClickCallback callback);
    Subscription on_pointer(ScopeId scope, ClickCallback callback);
    Pose world_transform(ScopeId scope, const ScenePath& path) const;
    bool effective_visibility(ScopeId scope, const ScenePath& path) const;

    // GUI.
    Uid add_gui(ScopeId scope, Uid container, GuiKind kind, PropMap props, std::optional<Value> initial);
    GuiElement read_gui(ScopeId scope, Uid uid) const;
    bool gui_alive(ScopeId scope, Uid uid) const;
    void set_gui_value(ScopeId scope, Uid uid, Value value);
    void set_gui_prop(ScopeId scope, Uid uid, std::string_view name, Value value);
    Subscription on_gui_update(ScopeId scope, Uid uid, GuiCallback callback);
    void remove_gui_checked(ScopeId scope, Uid uid);
    bool remove_gui(ScopeId scope, Uid uid);

    // Clients.
    std::vector<ClientId> client_ids() const;
    bool client_connected(ClientId id) const;
    CameraState client_camera(ClientId id) const;
    void set_client_camera(ClientId id, const CameraState& camera);
    Subscription on_client_connect(ClientCallback callback);
    Subscription on_client_disconnect(ClientCallback callback);

    std::uint16_t port() const { return web_->port(); }
    const std::string& host() const { return web_->host(); }
    const std::string& schema_hash() const { return schema_hash_; }

    std::vector<Message> snapshot(ScopeId client) const;
    std::size_t persisted_entries() const;
    ConnectionStats connection_stats(ClientId id) const;
    bool wait_idle(std::chrono::milliseconds timeout) const;

    // WebSocketHandler.
    void on_open(SessionId session) override;
    void on_frame(SessionId session, std::vector<std::uint8_t> frame) override;
    void on_close(SessionId session) override;

private:
    using CallbackList = std::vector<std::pair<std::uint64_t, ClickCallback>>;

    struct ScopeState {
        SceneGraph scene;
        GuiRegistry gui;
        std::map<ScenePath, std::uint64_t, PathLess> incarnations;
        std::map<ScenePath, CallbackList, PathLess> click_callbacks;
        CallbackList pointer_callbacks;
    };

    struct ClientState {
        SessionId session = 0;
        std::unique_ptr<ClientConnection> connection;
        ScopeState scope;
    };

    ScopeState& scope_state(ScopeId scope);
    const ScopeState& scope_state(ScopeId scope) const;
    const SceneNode& live_node(const ScopeState& state, const ScenePath& path, std::uint64_t incarnation) const;
    void emit(ScopeId scope, Message message);
    void forget_nodes(ScopeState& state, const std::vector<ScenePath>& removed);
    void remove_node_locked(ScopeId scope, const ScenePath& path);
    void remove_gui_locked(ScopeId scope, Uid uid);
    Subscription make_subscription(std::function<void(ServerCore&)> cancel);
    void post(std::function<void()> task);

    void handle_hello(SessionId session, const std::vector<std::uint8_t>& frame);
    void handle_client_message(ClientState& client, const Message& message);
    void handle_click(ClientState& client, const protocol::SceneClick& click);
    void reject(SessionId session, const std::string& reason, const std::string& client_hash);
    void send_control(SessionId session, const Message& message);

    void dispatch_loop();
    void flush_loop();
    bool idle_locked() const;

    ServerOptions options_;
    std::string schema_hash_;
    std::unique_ptr<WebServer> web_;

    mutable std::mutex mutex_;
    mutable std::condition_variable idle_cv_;
    std::condition_variable task_cv_;
    std::condition_variable flush_cv_;
    bool stopping_ = false;
    bool stopped_ = false;

    ScopeState shared_;
    PersistentBuffer persistent_{BufferRole::persistent};
    std::map<ClientId, ClientState> clients_;
    std::map<SessionId, ClientId> session_clients_;
    std::set<SessionId> handshaking_;
    std::vector<std::pair<std::uint64_t, ClientCallback>> connect_callbacks_;
    std::vector<std::pair<std::uint64_t, ClientCallback>> disconnect_callbacks_;

    ClientId next_client_ = 1;
    Uid next_uid_ = 1;
    std::uint64_t next_incarnation_ = 1;
    std::uint64_t next_subscription_ = 1;

    std::deque<std::function<void()>> tasks_;
    bool dispatcher_busy_ = false;
    std::thread dispatcher_;
    std::thread flusher_;
};

}  // namespace viewsync::detail
