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

#include "server/server_core.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <utility>

#include "viewsync/error.hpp"
#include "viewsync/schema/codec.hpp"
#include "viewsync/schema/schema_document.hpp"

namespace viewsync::detail {

namespace {

std::string scope_name(ScopeId scope) { return scope ? "client " + std::to_string(*scope) : "shared scene"; }

template <class List>
bool erase_subscription(List& list, std::uint64_t id) {
    auto it = std::find_if(list.begin(), list.end(), [id](const auto& entry) { return entry.first == id; });
    if (it == list.end()) return false;
    list.erase(it);
    return true;
}

}  // namespace

ServerCore::ServerCore(ServerOptions options)
    : options_(std::move(options)),
      schema_hash_(viewsync::schema_hash(export_schema(protocol::registry(), std::string(protocol::kSchemaVersion)))) {}

ServerCore::~ServerCore() { stop(); }

void ServerCore::start() {
    web_ = std::make_unique<WebServer>(WebServerOptions{options_.host, options_.port, options_.static_dir}, *this);
    dispatcher_ = std::thread([this] { dispatch_loop(); });
    flusher_ = std::thread([this] { flush_loop(); });
    spdlog::info("viewsync server listening on ws://{}:{}/ws", web_->host(), web_->port());
}

void ServerCore::stop() {
    {
        std::lock_guard lock(mutex_);
        if (stopped_) return;
        stopped_ = true;
        stopping_ = true;
        tasks_.clear();
    }
    task_cv_.notify_all();
    flush_cv_.notify_all();
    idle_cv_.notify_all();
    if (flusher_.joinable()) flusher_.join();
    if (dispatcher_.joinable()) {
        // A callback may stop the server; it cannot join its own thread.
        if (dispatcher_.get_id() == std::this_thread::get_id()) {
            dispatcher_.detach();
        } else {
            dispatcher_.join();
        }
    }
    if (web_) web_->stop();

    // Callbacks usually capture handles, and handles own the core; dropping
    // the callbacks breaks that cycle. They are destroyed outside the lock in
    // case a captured object's destructor calls back into the API.
    std::vector<GuiCallback> gui_callbacks;
    std::vector<std::map<ScenePath, CallbackList, PathLess>> click_callbacks;
    std::vector<CallbackList> pointer_callbacks;
    decltype(connect_callbacks_) on_connect;
    decltype(disconnect_callbacks_) on_disconnect;
    {
        std::lock_guard lock(mutex_);
        std::vector<ScopeState*> scopes{&shared_};
        for (auto& [id, client] : clients_) scopes.push_back(&client.scope);
        for (ScopeState* state : scopes) {
            for (auto& cb : state->gui.take_subscriptions()) gui_callbacks.push_back(std::move(cb));
            click_callbacks.push_back(std::exchange(state->click_callbacks, {}));
            pointer_callbacks.push_back(std::exchange(state->pointer_callbacks, {}));
        }
        on_connect = std::exchange(connect_callbacks_, {});
        on_disconnect = std::exchange(disconnect_callbacks_, {});
    }
}

// ---------------------------------------------------------------------------
// State access

ServerCore::ScopeState& ServerCore::scope_state(ScopeId scope) {
    if (!scope) return shared_;
    auto it = clients_.find(*scope);
    if (it == clients_.end()) {
        throw UseAfterRemoveError("client " + std::to_string(*scope) + " is disconnected");
    }
    return it->second.scope;
}

const ServerCore::ScopeState& ServerCore::scope_state(ScopeId scope) const {
    return const_cast<ServerCore*>(this)->scope_state(scope);
}

const SceneNode& ServerCore::live_node(const ScopeState& state, const ScenePath& path,
                                       std::uint64_t incarnation) const {
    auto it = state.incarnations.find(path);
    if (it == state.incarnations.end() || it->second != incarnation) {
        throw UseAfterRemoveError("scene node " + path.str() + " was removed");
    }
    return state.scene.at(path);
}

void ServerCore::emit(ScopeId scope, Message message) {
    if (!scope) {
        message.scope = Scope::broadcast();
        persistent_.apply(message);
        for (auto& [id, client] : clients_) client.connection->enqueue(message);
        return;
    }
    message.scope = Scope::to_client(*scope);
    ClientConnection& connection = *clients_.at(*scope).connection;
    connection.overlay().apply(message);
    connection.enqueue(std::move(message));
}

void ServerCore::forget_nodes(ScopeState& state, const std::vector<ScenePath>& removed) {
    for (const auto& p : removed) {
        state.incarnations.erase(p);
        state.click_callbacks.erase(p);
    }
}

Subscription ServerCore::make_subscription(std::function<void(ServerCore&)> cancel) {
    return Subscription([weak = weak_from_this(), cancel = std::move(cancel)] {
        if (auto core = weak.lock()) cancel(*core);
    });
}

void ServerCore::post(std::function<void()> task) {
    if (stopping_) return;
    tasks_.push_back(std::move(task));
    task_cv_.notify_one();
}

// ---------------------------------------------------------------------------
// Scene

std::uint64_t ServerCore::add_node(ScopeId scope, const ScenePath& path, NodeKind kind, PropMap props,
                                   const Placement& placement) {
    std::lock_guard lock(mutex_);
    ScopeState& state = scope_state(scope);
    if (scope && shared_.scene.contains(path)) {
        throw ValidationError(path.str() + " belongs to the shared scene and cannot be added for one client");
    }
    const std::vector<ScenePath> created =
        state.scene.upsert_node(path, kind, std::move(props), Pose{placement.wxyz, placement.position},
                                placement.visible, state.scene.contains(path) && state.scene.at(path).clickable);
    for (const auto& ancestor : created) {
        state.incarnations[ancestor] = next_incarnation_++;
        if (!scope || !shared_.scene.contains(ancestor)) emit(scope, protocol::node_upsert(state.scene.at(ancestor)));
    }
    auto [it, inserted] = state.incarnations.try_emplace(path, 0);
    if (inserted) it->second = next_incarnation_++;
    emit(scope, protocol::node_upsert(state.scene.at(path)));
    return it->second;
}

std::uint64_t ServerCore::node_incarnation(ScopeId scope, const ScenePath& path) const {
    std::lock_guard lock(mutex_);
    const ScopeState& state = scope_state(scope);
    auto it = state.incarnations.find(path);
    if (it == state.incarnations.end()) {
        throw NotFoundError("no scene node " + path.str() + " in the " + scope_name(scope));
    }
    return it->second;
}

bool ServerCore::node_alive(ScopeId scope, const ScenePath& path, std::uint64_t incarnation) const {
    std::lock_guard lock(mutex_);
    if (scope && !clients_.contains(*scope)) return false;
    const ScopeState& state = scope_state(scope);
    auto it = state.incarnations.find(path);
    return it != state.incarnations.end() && it->second == incarnation;
}

SceneNode ServerCore::read_node(ScopeId scope, const ScenePath& path, std::uint64_t incarnation) const {
    std::lock_guard lock(mutex_);
    return live_node(scope_state(scope), path, incarnation);
}

void ServerCore::set_node_prop(ScopeId scope, const ScenePath& path, std::uint64_t incarnation,
                               std::string_view name, Value value) {
    std::lock_guard lock(mutex_);
    ScopeState& state = scope_state(scope);
    live_node(state, path, incarnation);
    if (state.scene.set_node_prop(path, name, std::move(value))) {
        emit(scope, protocol::node_set(path, name, node_property(state.scene.at(path), name)));
    }
}

void ServerCore::remove_node_locked(ScopeId scope, const ScenePath& path) {
    ScopeState& state = scope_state(scope);
    forget_nodes(state, state.scene.remove_node(path));
    emit(scope, protocol::node_remove(path));
    if (scope) return;
    // Client-scoped nodes below a removed shared node disappear from that
    // client's view, so drop them server-side as well.
    const Message removal = protocol::node_remove(path);
    for (auto& [id, client] : clients_) {
        ScopeState& own = client.scope;
        std::vector<ScenePath> doomed;
        for (const auto& [p, node] : own.scene.nodes()) {
            if (p.is_within(path)) doomed.push_back(p);
        }
        for (const auto& p : doomed) {
            if (own.scene.contains(p)) forget_nodes(own, own.scene.remove_node(p));
        }
        if (!doomed.empty()) client.connection->overlay().apply(removal);
    }
}

void ServerCore::remove_node(ScopeId scope, const ScenePath& path, std::uint64_t incarnation) {
    std::lock_guard lock(mutex_);
    live_node(scope_state(scope), path, incarnation);
    remove_node_locked(scope, path);
}

bool ServerCore::remove_node(ScopeId scope, const ScenePath& path) {
    std::lock_guard lock(mutex_);
    ScopeState& state = scope_state(scope);
    if (path.is_root()) {
        throw ValidationError("the scene root cannot be removed");
    }
    if (!state.scene.contains(path) || (scope && shared_.scene.contains(path))) {
        spdlog::warn("remove: no scene node {} in the {}", path.str(), scope_name(scope));
        return false;
    }
    remove_node_locked(scope, path);
    return true;
}

Subscription ServerCore::on_node_click(ScopeId scope, const ScenePath& path, std::uint64_t incarnation,
                                       ClickCallback callback) {
    std::uint64_t id = 0;
    {
        std::lock_guard lock(mutex_);
        ScopeState& state = scope_state(scope);
        live_node(state, path, incarnation);
        id = next_subscription_++;
        state.click_callbacks[path].emplace_back(id, std::move(callback));
        if (state.scene.set_node_prop(path, "clickable", true)) {
            emit(scope, protocol::node_set(path, "clickable", true));
        }
    }
    return make_subscription([scope, path, id](ServerCore& core) {
        std::lock_guard lock(core.mutex_);
        if (scope && !core.clients_.contains(*scope)) return;
        auto& callbacks = core.scope_state(scope).click_callbacks;
        if (auto it = callbacks.find(path); it != callbacks.end()) erase_subscription(it->second, id);
    });
}

Subscription ServerCore::on_pointer(ScopeId scope, ClickCallback callback) {
    std::uint64_t id = 0;
    {
        std::lock_guard lock(mutex_);
        id = next_subscription_++;
        scope_state(scope).pointer_callbacks.emplace_back(id, std::move(callback));
    }
    return make_subscription([scope, id](ServerCore& core) {
        std::lock_guard lock(core.mutex_);
        if (scope && !core.clients_.contains(*scope)) return;
        erase_subscription(core.scope_state(scope).pointer_callbacks, id);
    });
}

Pose ServerCore::world_transform(ScopeId scope, const ScenePath& path) const {
    std::lock_guard lock(mutex_);
    if (!scope) return shared_.scene.world_transform(path);
    const ScopeState& own = scope_state(scope);
    if (!own.scene.contains(path) && !shared_.scene.contains(path)) {
        throw NotFoundError("no scene node " + path.str());
    }
    // A client sees shared nodes and its own nodes in one tree.
    Pose pose;
    ScenePath current;
    for (const auto& segment : path.segments()) {
        current = current.child(segment);
        const SceneNode* node = shared_.scene.find(current);
        if (node == nullptr) node = &own.scene.at(current);
        pose = compose(pose, node->local_pose);
    }
    return pose;
}

bool ServerCore::effective_visibility(ScopeId scope, const ScenePath& path) const {
    std::lock_guard lock(mutex_);
    if (!scope) return shared_.scene.effective_visibility(path);
    const ScopeState& own = scope_state(scope);
    if (!own.scene.contains(path) && !shared_.scene.contains(path)) {
        throw NotFoundError("no scene node " + path.str());
    }
    ScenePath current;
    for (const auto& segment : path.segments()) {
        current = current.child(segment);
        const SceneNode* node = shared_.scene.find(current);
        if (node == nullptr) node = &own.scene.at(current);
        if (!node->visible) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// GUI

Uid ServerCore::add_gui(ScopeId scope, Uid container, GuiKind kind, PropMap props, std::optional<Value> initial) {
    std::lock_guard lock(mutex_);
    ScopeState& state = scope_state(scope);
    const Uid uid = state.gui.add_element(kind, std::move(props), std::move(initial), container, next_uid_);
    ++next_uid_;
    emit(scope, protocol::gui_add(state.gui.at(uid)));
    return uid;
}

GuiElement ServerCore::read_gui(ScopeId scope, Uid uid) const {
    std::lock_guard lock(mutex_);
    const GuiElement* e = scope_state(scope).gui.find(uid);
    if (e == nullptr) {
        throw UseAfterRemoveError("GUI element #" + std::to_string(uid) + " was removed");
    }
    return *e;
}

bool ServerCore::gui_alive(ScopeId scope, Uid uid) const {
    std::lock_guard lock(mutex_);
    if (scope && !clients_.contains(*scope)) return false;
    return scope_state(scope).gui.contains(uid);
}

void ServerCore::set_gui_value(ScopeId scope, Uid uid, Value value) {
    std::lock_guard lock(mutex_);
    ScopeState& state = scope_state(scope);
    if (!state.gui.contains(uid)) {
        throw UseAfterRemoveError("GUI element #" + std::to_string(uid) + " was removed");
    }
    if (state.gui.set_value_from_server(uid, std::move(value))) {
        emit(scope, protocol::gui_set_value(uid, *state.gui.at(uid).value));
    }
}

void ServerCore::set_gui_prop(ScopeId scope, Uid uid, std::string_view name, Value value) {
    std::lock_guard lock(mutex_);
    ScopeState& state = scope_state(scope);
    if (!state.gui.contains(uid)) {
        throw UseAfterRemoveError("GUI element #" + std::to_string(uid) + " was removed");
    }
    const bool value_changed = state.gui.set_element_prop(uid, name, std::move(value));
    const GuiElement& e = state.gui.at(uid);
    emit(scope, protocol::gui_set_prop(uid, name, e.props.find(name)->second));
    if (value_changed) emit(scope, protocol::gui_set_value(uid, *e.value));
}

Subscription ServerCore::on_gui_update(ScopeId scope, Uid uid, GuiCallback callback) {
    SubscriptionId id = 0;
    {
        std::lock_guard lock(mutex_);
        ScopeState& state = scope_state(scope);
        if (!state.gui.contains(uid)) {
            throw UseAfterRemoveError("GUI element #" + std::to_string(uid) + " was removed");
        }
        id = state.gui.subscribe(uid, std::move(callback));
    }
    return make_subscription([scope, id](ServerCore& core) {
        std::lock_guard lock(core.mutex_);
        if (scope && !core.clients_.contains(*scope)) return;
        core.scope_state(scope).gui.unsubscribe(id);
    });
}

void ServerCore::remove_gui_locked(ScopeId scope, Uid uid) {
    scope_state(scope).gui.remove_element(uid);
    emit(scope, protocol::gui_remove(uid));
}

void ServerCore::remove_gui_checked(ScopeId scope, Uid uid) {
    std::lock_guard lock(mutex_);
    if (!scope_state(scope).gui.contains(uid)) {
        throw UseAfterRemoveError("GUI element #" + std::to_string(uid) + " was removed");
    }
    remove_gui_locked(scope, uid);
}

bool ServerCore::remove_gui(ScopeId scope, Uid uid) {
    std::lock_guard lock(mutex_);
    if (!scope_state(scope).gui.contains(uid)) {
        spdlog::warn("remove: no GUI element #{} in the {}", uid, scope_name(scope));
        return false;
    }
    remove_gui_locked(scope, uid);
    return true;
}

// ---------------------------------------------------------------------------
// Clients

std::vector<ClientId> ServerCore::client_ids() const {
    std::lock_guard lock(mutex_);
    std::vector<ClientId> ids;
    for (const auto& [id, client] : clients_) ids.push_back(id);
    return ids;
}

bool ServerCore::client_connected(ClientId id) const {
    std::lock_guard lock(mutex_);
    return clients_.contains(id);
}

CameraState ServerCore::client_camera(ClientId id) const {
    std::lock_guard lock(mutex_);
    auto it = clients_.find(id);
    if (it == clients_.end()) {
        throw UseAfterRemoveError("client " + std::to_string(id) + " is disconnected");
    }
    return it->second.connection->camera();
}

void ServerCore::set_client_camera(ClientId id, const CameraState& camera) {
    const CameraState checked = validated(camera);
    std::lock_guard lock(mutex_);
    auto it = clients_.find(id);
    if (it == clients_.end()) {
        throw UseAfterRemoveError("client " + std::to_string(id) + " is disconnected");
    }
    it->second.connection->set_camera(checked);
    emit(id, protocol::camera_set(checked));
}

Subscription ServerCore::on_client_connect(ClientCallback callback) {
    std::lock_guard lock(mutex_);
    const std::uint64_t id = next_subscription_++;
    connect_callbacks_.emplace_back(id, std::move(callback));
    return make_subscription([id](ServerCore& core) {
        std::lock_guard inner(core.mutex_);
        erase_subscription(core.connect_callbacks_, id);
    });
}

Subscription ServerCore::on_client_disconnect(ClientCallback callback) {
    std::lock_guard lock(mutex_);
    const std::uint64_t id = next_subscription_++;
    disconnect_callbacks_.emplace_back(id, std::move(callback));
    return make_subscription([id](ServerCore& core) {
        std::lock_guard inner(core.mutex_);
        erase_subscription(core.disconnect_callbacks_, id);
    });
}

std::vector<Message> ServerCore::snapshot(ScopeId client) const {
    std::lock_guard lock(mutex_);
    if (!client) return persistent_.messages();
    auto it = clients_.find(*client);
    if (it == clients_.end()) {
        throw NotFoundError("no client " + std::to_string(*client));
    }
    return snapshot_for_new_client(persistent_, it->second.connection->overlay());
}

std::size_t ServerCore::persisted_entries() const {
    std::lock_guard lock(mutex_);
    return persistent_.size();
}

ConnectionStats ServerCore::connection_stats(ClientId id) const {
    std::lock_guard lock(mutex_);
    auto it = clients_.find(id);
    if (it == clients_.end()) {
        throw NotFoundError("no client " + std::to_string(id));
    }
    const ClientConnection& c = *it->second.connection;
    return {c.stats().batches_sent, c.stats().messages_sent, c.stats().bytes_sent,
            c.outstanding(),        c.stats().max_outstanding, c.pending().size()};
}

bool ServerCore::idle_locked() const {
    if (!tasks_.empty() || dispatcher_busy_) return false;
    for (const auto& [id, client] : clients_) {
        if (!client.connection->pending().empty() || client.connection->outstanding() > 0) return false;
    }
    return true;
}

bool ServerCore::wait_idle(std::chrono::milliseconds timeout) const {
    std::unique_lock lock(mutex_);
    return idle_cv_.wait_for(lock, timeout, [this] { return stopping_ || idle_locked(); }) && !stopping_;
}

// ---------------------------------------------------------------------------
// Network

void ServerCore::send_control(SessionId session, const Message& message) {
    const std::vector<Message> one{message};
    web_->send(session, encode_batch(protocol::registry(), 0, one));
}

void ServerCore::reject(SessionId session, const std::string& reason, const std::string& client_hash) {
    spdlog::warn("rejecting session {}: {}", session, reason);
    send_control(session, protocol::server_reject(reason, schema_hash_, client_hash));
    web_->close(session);
    handshaking_.erase(session);
}

void ServerCore::on_open(SessionId session) {
    std::lock_guard lock(mutex_);
    if (stopping_) return;
    handshaking_.insert(session);
}

void ServerCore::handle_hello(SessionId session, const std::vector<std::uint8_t>& frame) {
    Batch batch;
    try {
        batch = decode_batch(protocol::registry(), frame);
    } catch (const Error& e) {
        reject(session, std::string("malformed handshake: ") + e.what(), "");
        return;
    }
    if (batch.messages.size() != 1 || batch.messages.front().type != protocol::kClientHello) {
        reject(session, "expected a single ClientHello message", "");
        return;
    }
    const std::string& client_hash = batch.messages.front().field<std::string>("schema_hash");
    if (client_hash != schema_hash_) {
        reject(session, "schema hash mismatch", client_hash);
        return;
    }

    handshaking_.erase(session);
    const ClientId id = next_client_++;
    ClientState& client = clients_[id];
    client.session = session;
    client.connection = std::make_unique<ClientConnection>(id, protocol::registry());
    session_clients_[session] = id;
    send_control(session, protocol::server_accept(id, schema_hash_));
    for (auto& message : persistent_.messages()) client.connection->enqueue(std::move(message));
    spdlog::info("client {} connected", id);

    for (const auto& [sub, callback] : connect_callbacks_) {
        post([callback, handle = ClientHandle(shared_from_this(), id)] { callback(handle); });
    }
}

void ServerCore::handle_click(ClientState& client, const protocol::SceneClick& click) {
    const ClientId id = client.connection->id();
    ClickEvent event{std::nullopt, id, click.ray_origin, click.ray_direction, click.screen_pos};
    std::vector<ClickCallback> callbacks;
    if (click.path) {
        for (ScopeState* state : {&client.scope, &shared_}) {
            const SceneNode* node = state->scene.find(*click.path);
            if (node == nullptr || !node->clickable) continue;
            event.path = *click.path;
            if (auto it = state->click_callbacks.find(*click.path); it != state->click_callbacks.end()) {
                for (const auto& [sub, cb] : it->second) callbacks.push_back(cb);
            }
        }
    }
    for (ScopeState* state : {&client.scope, &shared_}) {
        for (const auto& [sub, cb] : state->pointer_callbacks) callbacks.push_back(cb);
    }
    for (auto& cb : callbacks) {
        post([cb = std::move(cb), event] { cb(event); });
    }
}

void ServerCore::handle_client_message(ClientState& client, const Message& message) {
    const ClientId id = client.connection->id();
    const auto info = protocol::classify(message.type);
    using protocol::Family;
    switch (info->family) {
        case Family::ack:
            client.connection->on_ack(static_cast<std::uint64_t>(message.field<std::int64_t>("seq")));
            return;
        case Family::camera_report:
            client.connection->set_camera(validated(protocol::read_camera(message)));
            return;
        case Family::scene_click: handle_click(client, protocol::read_scene_click(message)); return;
        case Family::gui_update: {
            const Uid uid = message.field<std::int64_t>("uid");
            const ScopeId scope = client.scope.gui.contains(uid) ? ScopeId{id} : std::nullopt;
            ScopeState& state = scope ? client.scope : shared_;
            if (!state.gui.contains(uid)) {
                spdlog::debug("client {} updated unknown GUI element #{}", id, uid);
                return;
            }
            const auto now = std::chrono::system_clock::now().time_since_epoch();
            GuiEvent event{uid, id, message.payload.at("value"),
                           std::chrono::duration_cast<std::chrono::milliseconds>(now).count()};
            ClientUpdateResult result = state.gui.apply_client_update(event);
            emit(scope, protocol::gui_set_value(uid, result.event.value));
            for (auto& cb : result.callbacks) {
                post([cb = std::move(cb), event = result.event] { cb(event); });
            }
            return;
        }
        default: throw ProtocolError("clients may not send " + message.type);
    }
}

void ServerCore::on_frame(SessionId session, std::vector<std::uint8_t> frame) {
    std::lock_guard lock(mutex_);
    if (stopping_) return;
    if (handshaking_.contains(session)) {
        handle_hello(session, frame);
        idle_cv_.notify_all();
        return;
    }
    auto sc = session_clients_.find(session);
    if (sc == session_clients_.end()) return;
    ClientState& client = clients_.at(sc->second);

    Batch batch;
    try {
        batch = decode_batch(protocol::registry(), frame);
    } catch (const Error& e) {
        spdlog::warn("client {} sent an undecodable frame, closing: {}", sc->second, e.what());
        web_->close(session);
        return;
    }
    for (const auto& message : batch.messages) {
        try {
            handle_client_message(client, message);
        } catch (const NotFoundError& e) {
            spdlog::debug("client {}: {}", sc->second, e.what());
        } catch (const Error& e) {
            spdlog::warn("client {}: dropped {}: {}", sc->second, message.type, e.what());
        }
    }
    idle_cv_.notify_all();
}

void ServerCore::on_close(SessionId session) {
    std::lock_guard lock(mutex_);
    handshaking_.erase(session);
    auto sc = session_clients_.find(session);
    if (sc == session_clients_.end()) return;
    const ClientId id = sc->second;
    session_clients_.erase(sc);
    clients_.erase(id);
    spdlog::info("client {} disconnected", id);
    for (const auto& [sub, callback] : disconnect_callbacks_) {
        post([callback, handle = ClientHandle(shared_from_this(), id)] { callback(handle); });
    }
    idle_cv_.notify_all();
}

void ServerCore::dispatch_loop() {
    std::unique_lock lock(mutex_);
    while (true) {
        task_cv_.wait(lock, [this] { return stopping_ || !tasks_.empty(); });
        if (stopping_) return;
        std::function<void()> task = std::move(tasks_.front());
        tasks_.pop_front();
        dispatcher_busy_ = true;
        lock.unlock();
        try {
            task();
        } catch (const std::exception& e) {
            spdlog::error("callback threw: {}", e.what());
        } catch (...) {
            spdlog::error("callback threw a non-standard exception");
        }
        task = nullptr;
        lock.lock();
        dispatcher_busy_ = false;
        idle_cv_.notify_all();
    }
}

void ServerCore::flush_loop() {
    std::unique_lock lock(mutex_);
    auto next = std::chrono::steady_clock::now();
    while (!stopping_) {
        next += kFlushInterval;
        flush_cv_.wait_until(lock, next, [this] { return stopping_; });
        if (stopping_) return;
        for (auto& [id, client] : clients_) {
            try {
                if (auto frame = client.connection->flush_tick()) web_->send(client.session, std::move(frame->bytes));
            } catch (const std::exception& e) {
                spdlog::error("flush to client {} failed: {}", id, e.what());
            }
        }
        if (std::chrono::steady_clock::now() > next + 10 * kFlushInterval) next = std::chrono::steady_clock::now();
        idle_cv_.notify_all();
    }
}

}  // namespace viewsync::detail
