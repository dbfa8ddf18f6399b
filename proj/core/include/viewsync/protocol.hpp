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

#include <optional>
#include <string>
#include <string_view>

#include "viewsync/gui/gui_registry.hpp"
#include "viewsync/scene/scene_graph.hpp"
#include "viewsync/schema/message.hpp"
#include "viewsync/transport/camera_state.hpp"

/// The closed catalogue of wire messages and helpers to build and read them.
namespace viewsync::protocol {

inline constexpr std::string_view kSchemaVersion = "viewsync-schema/1";

inline constexpr std::string_view kClientHello = "ClientHello";
inline constexpr std::string_view kServerAccept = "ServerAccept";
inline constexpr std::string_view kServerReject = "ServerReject";
inline constexpr std::string_view kAck = "Ack";
inline constexpr std::string_view kSceneNodeRemove = "SceneNodeRemove";
inline constexpr std::string_view kGuiRemove = "GuiRemove";
inline constexpr std::string_view kCameraSet = "CameraSet";
inline constexpr std::string_view kCameraReport = "CameraReport";
inline constexpr std::string_view kSceneClick = "SceneClick";

/// The registry every server and client in this build speaks.
const MessageRegistry& registry();

/// Message families that share decoding logic.
enum class Family : std::uint8_t {
    client_hello,
    server_accept,
    server_reject,
    ack,
    node_upsert,
    node_set,
    node_remove,
    gui_add,
    gui_set_prop,
    gui_set_value,
    gui_remove,
    gui_update,
    camera_set,
    camera_report,
    scene_click,
};

struct TypeInfo {
    Family family;
    std::optional<NodeKind> node_kind;
    std::optional<GuiKind> gui_kind;
    std::optional<ValueKind> value_kind;
};

/// Classifies a registered type name; nullopt for names outside the catalogue.
std::optional<TypeInfo> classify(std::string_view type_name);

std::string node_upsert_type(NodeKind kind);
std::string node_set_type(ValueKind kind);
std::string gui_add_type(GuiKind kind);
std::string gui_set_prop_type(ValueKind kind);
std::string gui_set_value_type(ValueKind kind);
std::string gui_update_type(ValueKind kind);

Message client_hello(std::string schema_hash);
Message server_accept(ClientId id, std::string schema_hash);
Message server_reject(std::string reason, std::string server_hash, std::string client_hash);
Message ack(std::uint64_t seq);

Message node_upsert(const SceneNode& node);
Message node_set(const ScenePath& path, std::string_view prop, Value value);
Message node_remove(const ScenePath& path);

Message gui_add(const GuiElement& element);
Message gui_set_prop(Uid uid, std::string_view prop, Value value);
Message gui_set_value(Uid uid, Value value);
Message gui_remove(Uid uid);
Message gui_update(Uid uid, Value value);

Message camera_set(const CameraState& camera);
Message camera_report(const CameraState& camera);

struct SceneClick {
    std::optional<ScenePath> path;
    Vec3 ray_origin{};
    Vec3 ray_direction{0.0, 0.0, -1.0};
    std::array<double, 2> screen_pos{};
};
Message scene_click(const SceneClick& click);

SceneNode read_node_upsert(const Message& message);
GuiElement read_gui_add(const Message& message);
CameraState read_camera(const Message& message);
SceneClick read_scene_click(const Message& message);

}  // namespace viewsync::protocol
