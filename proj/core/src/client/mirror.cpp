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

#include "viewsync/client/mirror.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>

#include "util/digest.hpp"
#include "viewsync/protocol.hpp"

namespace viewsync {

namespace {

std::string real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string blob(std::string_view tag, const void* data, std::size_t size, std::size_t count) {
    const std::string digest = detail::sha256_hex({static_cast<const char*>(data), size});
    return std::string(tag) + "[" + std::to_string(count) + ":" + digest.substr(0, 16) + "]";
}

template <class T, class F>
std::string list(const std::vector<T>& items, F render) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ',';
        out += render(items[i]);
    }
    return out + "]";
}

std::string text(const std::string& s) { return nlohmann::json(s).dump(); }

std::string render(const Value& value) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, double>) {
                return real(v);
            } else if constexpr (std::is_same_v<T, std::string>) {
                return text(v);
            } else if constexpr (std::is_same_v<T, Bytes>) {
                return blob("bytes", v.data.data(), v.data.size(), v.data.size());
            } else if constexpr (std::is_same_v<T, std::vector<float>>) {
                return blob("f32", v.data(), v.size() * sizeof(float), v.size());
            } else if constexpr (std::is_same_v<T, std::vector<double>>) {
                return list(v, real);
            } else if constexpr (std::is_same_v<T, std::vector<std::int64_t>>) {
                return list(v, [](std::int64_t i) { return std::to_string(i); });
            } else {
                return list(v, text);
            }
        },
        value);
}

template <std::size_t N>
std::string render(const std::array<double, N>& a) {
    return render(Value{std::vector<double>(a.begin(), a.end())});
}

std::string render(const PropMap& props) {
    std::string out;
    for (const auto& [name, value] : props) out += " " + name + "=" + render(value);
    return out;
}

}  // namespace

void ClientMirror::apply(const Message& message) {
    const auto info = protocol::classify(message.type);
    if (!info) {
        throw SchemaError("unknown message type '" + message.type + "'");
    }
    using protocol::Family;
    switch (info->family) {
        case Family::node_upsert: {
            SceneNode node = protocol::read_node_upsert(message);
            if (node.path.is_root()) return;
            scene_.upsert_node(node.path, node.kind, std::move(node.props), node.local_pose, node.visible,
                               node.clickable, ApplyMode::replay);
            return;
        }
        case Family::node_set: {
            const ScenePath path = ScenePath::parse(message.field<std::string>("path"));
            if (!scene_.contains(path)) return;
            scene_.set_node_prop(path, message.field<std::string>("prop"), message.payload.at("value"),
                                 ApplyMode::replay);
            return;
        }
        case Family::node_remove: {
            const ScenePath path = ScenePath::parse(message.field<std::string>("path"));
            if (path.is_root() || !scene_.contains(path)) return;
            scene_.remove_node(path);
            return;
        }
        case Family::gui_add: {
            GuiElement e = protocol::read_gui_add(message);
            if (e.container != kRootContainer && !gui_.contains(e.container)) return;
            gui_.add_element(e.kind, std::move(e.props), std::move(e.value), e.container, e.uid, e.order,
                             ApplyMode::replay);
            return;
        }
        case Family::gui_set_prop: {
            const Uid uid = message.field<std::int64_t>("uid");
            if (!gui_.contains(uid)) return;
            gui_.set_element_prop(uid, message.field<std::string>("prop"), message.payload.at("value"),
                                  ApplyMode::replay);
            return;
        }
        case Family::gui_set_value: {
            const Uid uid = message.field<std::int64_t>("uid");
            if (!gui_.contains(uid)) return;
            gui_.set_value_from_server(uid, message.payload.at("value"), ApplyMode::replay);
            return;
        }
        case Family::gui_remove: {
            const Uid uid = message.field<std::int64_t>("uid");
            if (gui_.contains(uid)) gui_.remove_element(uid);
            return;
        }
        case Family::camera_set: camera_ = validated(protocol::read_camera(message)); return;
        default: throw ProtocolError("message type " + message.type + " is not a server-to-client state update");
    }
}

void ClientMirror::apply_batch(const Batch& batch) {
    if (batch.seq <= last_seq_) {
        throw ProtocolError("batch seq " + std::to_string(batch.seq) + " does not follow " +
                            std::to_string(last_seq_));
    }
    for (const auto& m : batch.messages) apply(m);
    last_seq_ = batch.seq;
}

std::string ClientMirror::canonical_state() const { return viewsync::canonical_state(scene_, gui_, camera_); }

std::string canonical_state(const SceneGraph& scene, const GuiRegistry& gui, const CameraState& camera) {
    std::string out = "camera wxyz=" + render(camera.pose.wxyz) + " position=" + render(camera.pose.position) +
                      " fov=" + real(camera.fov) + " aspect=" + real(camera.aspect) +
                      " look_at=" + render(camera.look_at) + "\n";
    for (const auto& [path, node] : scene.nodes()) {
        out += "node " + path.str() + " " + std::string(to_string(node.kind)) +
               " wxyz=" + render(node.local_pose.wxyz) + " position=" + render(node.local_pose.position) +
               " visible=" + (node.visible ? "true" : "false") + " clickable=" + (node.clickable ? "true" : "false") +
               render(node.props) + "\n";
    }
    for (const auto& [uid, e] : gui.elements()) {
        out += "gui " + std::to_string(uid) + " " + std::string(to_string(e.kind)) +
               " container=" + std::to_string(e.container) + " order=" + std::to_string(e.order) + render(e.props);
        if (e.value) out += " value=" + render(*e.value);
        out += "\n";
    }
    return out;
}

}  // namespace viewsync
