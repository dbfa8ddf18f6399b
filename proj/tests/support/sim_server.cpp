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

#include "sim_server.hpp"

#include "viewsync/protocol.hpp"

namespace viewsync::testing {

SimServer::Client::Client(ClientId id) : connection(id, protocol::registry()) {}

SimServer::SimServer() = default;

void SimServer::emit(Message message) {
    persistent_.apply(message);
    for (auto& c : clients_) c->connection.enqueue(message);
}

void SimServer::add_node(const ScenePath& path, NodeKind kind, PropMap props, const Placement& placement) {
    const bool clickable = scene_.contains(path) && scene_.at(path).clickable;
    const auto created = scene_.upsert_node(path, kind, std::move(props), Pose{placement.wxyz, placement.position},
                                            placement.visible, clickable);
    for (const auto& ancestor : created) emit(protocol::node_upsert(scene_.at(ancestor)));
    emit(protocol::node_upsert(scene_.at(path)));
}

void SimServer::set_node_prop(const ScenePath& path, std::string_view name, Value value) {
    if (scene_.set_node_prop(path, name, std::move(value))) {
        emit(protocol::node_set(path, name, node_property(scene_.at(path), name)));
    }
}

void SimServer::remove_node(const ScenePath& path) {
    scene_.remove_node(path);
    emit(protocol::node_remove(path));
}

Uid SimServer::add_gui(Uid container, GuiKind kind, PropMap props, std::optional<Value> initial) {
    const Uid uid = gui_.add_element(kind, std::move(props), std::move(initial), container, next_uid_);
    ++next_uid_;
    emit(protocol::gui_add(gui_.at(uid)));
    return uid;
}

void SimServer::set_gui_value(Uid uid, Value value) {
    if (gui_.set_value_from_server(uid, std::move(value))) emit(protocol::gui_set_value(uid, *gui_.at(uid).value));
}

void SimServer::set_gui_prop(Uid uid, std::string_view name, Value value) {
    const bool value_changed = gui_.set_element_prop(uid, name, std::move(value));
    const GuiElement& e = gui_.at(uid);
    emit(protocol::gui_set_prop(uid, name, e.props.find(name)->second));
    if (value_changed) emit(protocol::gui_set_value(uid, *e.value));
}

void SimServer::remove_gui(Uid uid) {
    gui_.remove_element(uid);
    emit(protocol::gui_remove(uid));
}

void SimServer::client_update(Uid uid, Value value) {
    const ClientUpdateResult result = gui_.apply_client_update(GuiEvent{uid, 1, std::move(value), 0});
    emit(protocol::gui_set_value(uid, result.event.value));
}

std::size_t SimServer::connect() {
    auto client = std::make_unique<Client>(clients_.size() + 1);
    for (auto& m : persistent_.messages()) client->connection.enqueue(std::move(m));
    clients_.push_back(std::move(client));
    return clients_.size() - 1;
}

void SimServer::deliver(Client& client) {
    OutgoingFrame frame = std::move(client.in_flight.front());
    client.in_flight.pop_front();
    client.mirror.apply_batch(decode_batch(protocol::registry(), frame.bytes));
    client.acks.push_back(frame.seq);
}

void SimServer::pump(std::mt19937_64& rng) {
    if (clients_.empty()) return;
    Client& c = *clients_[std::uniform_int_distribution<std::size_t>(0, clients_.size() - 1)(rng)];
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0:
            if (auto frame = c.connection.flush_tick()) c.in_flight.push_back(std::move(*frame));
            break;
        case 1:
            if (!c.in_flight.empty()) deliver(c);
            break;
        default:
            if (!c.acks.empty()) {
                c.connection.on_ack(c.acks.front());
                c.acks.pop_front();
            }
            break;
    }
    max_outstanding_ = std::max(max_outstanding_, c.connection.outstanding());
}

void SimServer::drain() {
    for (bool busy = true; busy;) {
        busy = false;
        for (auto& c : clients_) {
            if (auto frame = c->connection.flush_tick()) {
                c->in_flight.push_back(std::move(*frame));
                busy = true;
            }
            max_outstanding_ = std::max(max_outstanding_, c->connection.outstanding());
            while (!c->in_flight.empty()) {
                deliver(*c);
                busy = true;
            }
            while (!c->acks.empty()) {
                c->connection.on_ack(c->acks.front());
                c->acks.pop_front();
                busy = true;
            }
        }
    }
}

}  // namespace viewsync::testing
