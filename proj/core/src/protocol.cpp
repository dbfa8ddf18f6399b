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

#include "viewsync/protocol.hpp"

#include <cctype>
#include <unordered_map>

namespace viewsync::protocol {

namespace {

constexpr std::array kValueKinds{
    ValueKind::boolean,       ValueKind::integer,   ValueKind::real,         ValueKind::text,      ValueKind::bytes,
    ValueKind::float32_array, ValueKind::real_list, ValueKind::integer_list, ValueKind::text_list,
};

std::string_view suffix(ValueKind kind) {
    switch (kind) {
        case ValueKind::boolean: return "Bool";
        case ValueKind::integer: return "Int";
        case ValueKind::real: return "Float";
        case ValueKind::text: return "String";
        case ValueKind::bytes: return "Bytes";
        case ValueKind::float32_array: return "Float32Array";
        case ValueKind::real_list: return "FloatList";
        case ValueKind::integer_list: return "IntList";
        case ValueKind::text_list: return "StringList";
    }
    return "";
}

// "camera_frustum" -> "CameraFrustum"
std::string pascal(std::string_view snake) {
    std::string out;
    bool upper = true;
    for (char c : snake) {
        if (c == '_') {
            upper = true;
            continue;
        }
        out += upper ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
        upper = false;
    }
    return out;
}

FieldType plain(ValueKind kind) { return FieldType{kind}; }

std::vector<FieldSpec> camera_fields() {
    return {
        {"wxyz", types::real_tuple(4)},
        {"position", types::real_tuple(3)},
        {"fov", types::real()},
        {"aspect", types::real()},
        {"look_at", types::real_tuple(3)},
    };
}

struct Catalogue {
    std::vector<MessageType> types;
    std::unordered_map<std::string, TypeInfo> info;

    void add(MessageType type, TypeInfo ti) {
        info.emplace(type.name, ti);
        types.push_back(std::move(type));
    }
};

Catalogue build_catalogue() {
    using enum DedupPolicy;
    Catalogue c;
    c.add({std::string(kClientHello), {{"schema_hash", types::text()}}}, {Family::client_hello});
    c.add({std::string(kServerAccept), {{"client_id", types::integer()}, {"schema_hash", types::text()}}},
          {Family::server_accept});
    c.add({std::string(kServerReject),
           {{"reason", types::text()}, {"server_hash", types::text()}, {"client_hash", types::text()}}},
          {Family::server_reject});
    c.add({std::string(kAck), {{"seq", types::integer()}}}, {Family::ack});

    for (NodeKind kind : kAllNodeKinds) {
        std::vector<FieldSpec> fields{
            {"path", types::text()},
            {"wxyz", types::real_tuple(4)},
            {"position", types::real_tuple(3)},
            {"visible", types::boolean()},
            {"clickable", types::boolean()},
        };
        for (const auto& spec : node_prop_schema(kind)) fields.push_back({spec.name, spec.type});
        c.add({node_upsert_type(kind), std::move(fields), by_key, KeyClass::node_upsert},
              {Family::node_upsert, kind});
    }
    for (ValueKind vk : kValueKinds) {
        c.add({node_set_type(vk), {{"path", types::text()}, {"prop", types::text()}, {"value", plain(vk)}}, by_key,
               KeyClass::node_prop},
              {Family::node_set, std::nullopt, std::nullopt, vk});
    }
    c.add({std::string(kSceneNodeRemove), {{"path", types::text()}}, purge_prefix, KeyClass::node_remove_purge},
          {Family::node_remove});

    for (GuiKind kind : kAllGuiKinds) {
        std::vector<FieldSpec> fields{
            {"uid", types::integer()},
            {"container", types::integer()},
            {"order", types::integer()},
        };
        for (const auto& spec : gui_prop_schema(kind)) fields.push_back({spec.name, spec.type});
        if (auto vt = gui_value_type(kind)) fields.push_back({"value", *vt});
        c.add({gui_add_type(kind), std::move(fields), by_key, KeyClass::gui_add},
              {Family::gui_add, std::nullopt, kind});
    }
    for (ValueKind vk : kValueKinds) {
        c.add({gui_set_prop_type(vk), {{"uid", types::integer()}, {"prop", types::text()}, {"value", plain(vk)}},
               by_key, KeyClass::gui_prop},
              {Family::gui_set_prop, std::nullopt, std::nullopt, vk});
    }
    for (ValueKind vk : kValueKinds) {
        c.add({gui_set_value_type(vk), {{"uid", types::integer()}, {"value", plain(vk)}}, by_key, KeyClass::gui_value},
              {Family::gui_set_value, std::nullopt, std::nullopt, vk});
    }
    c.add({std::string(kGuiRemove), {{"uid", types::integer()}}, purge_prefix, KeyClass::gui_remove_purge},
          {Family::gui_remove});
    for (ValueKind vk : kValueKinds) {
        c.add({gui_update_type(vk), {{"uid", types::integer()}, {"value", plain(vk)}}},
              {Family::gui_update, std::nullopt, std::nullopt, vk});
    }

    c.add({std::string(kCameraSet), camera_fields(), by_key, KeyClass::camera_set}, {Family::camera_set});
    c.add({std::string(kCameraReport), camera_fields()}, {Family::camera_report});
    c.add({std::string(kSceneClick),
           {
               {"path", types::optional(types::text())},
               {"ray_origin", types::real_tuple(3)},
               {"ray_direction", types::real_tuple(3)},
               {"screen_pos", types::real_tuple(2)},
           }},
          {Family::scene_click});
    return c;
}

const Catalogue& catalogue() {
    static const Catalogue c = build_catalogue();
    return c;
}

template <std::size_t N>
std::vector<double> to_list(const std::array<double, N>& a) {
    return {a.begin(), a.end()};
}

template <std::size_t N>
std::array<double, N> to_array(const std::vector<double>& v) {
    std::array<double, N> out{};
    if (v.size() != N) {
        throw SchemaError("expected " + std::to_string(N) + " components, got " + std::to_string(v.size()));
    }
    std::copy(v.begin(), v.end(), out.begin());
    return out;
}

const TypeInfo& info_for(const Message& message, Family family) {
    auto info = catalogue().info.find(message.type);
    if (info == catalogue().info.end() || info->second.family != family) {
        throw SchemaError("unexpected message type " + message.type);
    }
    return info->second;
}

Message make(std::string type, Payload payload) { return Message{std::move(type), std::move(payload), {}}; }

void fill_camera(Payload& p, const CameraState& camera) {
    p["wxyz"] = to_list(camera.pose.wxyz);
    p["position"] = to_list(camera.pose.position);
    p["fov"] = camera.fov;
    p["aspect"] = camera.aspect;
    p["look_at"] = to_list(camera.look_at);
}

}  // namespace

const MessageRegistry& registry() {
    static const MessageRegistry r(catalogue().types);
    return r;
}

std::optional<TypeInfo> classify(std::string_view type_name) {
    auto it = catalogue().info.find(std::string(type_name));
    if (it == catalogue().info.end()) return std::nullopt;
    return it->second;
}

std::string node_upsert_type(NodeKind kind) { return "Scene" + pascal(to_string(kind)) + "Upsert"; }
std::string node_set_type(ValueKind kind) { return "SceneNodeSet" + std::string(suffix(kind)); }
std::string gui_add_type(GuiKind kind) { return "GuiAdd" + pascal(to_string(kind)); }
std::string gui_set_prop_type(ValueKind kind) { return "GuiSetProp" + std::string(suffix(kind)); }
std::string gui_set_value_type(ValueKind kind) { return "GuiSetValue" + std::string(suffix(kind)); }
std::string gui_update_type(ValueKind kind) { return "GuiUpdate" + std::string(suffix(kind)); }

Message client_hello(std::string schema_hash) {
    return make(std::string(kClientHello), {{"schema_hash", std::move(schema_hash)}});
}

Message server_accept(ClientId id, std::string schema_hash) {
    return make(std::string(kServerAccept),
                {{"client_id", static_cast<std::int64_t>(id)}, {"schema_hash", std::move(schema_hash)}});
}

Message server_reject(std::string reason, std::string server_hash, std::string client_hash) {
    return make(std::string(kServerReject), {{"reason", std::move(reason)},
                                             {"server_hash", std::move(server_hash)},
                                             {"client_hash", std::move(client_hash)}});
}

Message ack(std::uint64_t seq) { return make(std::string(kAck), {{"seq", static_cast<std::int64_t>(seq)}}); }

Message node_upsert(const SceneNode& node) {
    Payload p(node.props.begin(), node.props.end());
    p["path"] = node.path.str();
    p["wxyz"] = to_list(node.local_pose.wxyz);
    p["position"] = to_list(node.local_pose.position);
    p["visible"] = node.visible;
    p["clickable"] = node.clickable;
    return make(node_upsert_type(node.kind), std::move(p));
}

Message node_set(const ScenePath& path, std::string_view prop, Value value) {
    const ValueKind vk = kind_of(value);
    return make(node_set_type(vk), {{"path", path.str()}, {"prop", std::string(prop)}, {"value", std::move(value)}});
}

Message node_remove(const ScenePath& path) { return make(std::string(kSceneNodeRemove), {{"path", path.str()}}); }

Message gui_add(const GuiElement& element) {
    Payload p(element.props.begin(), element.props.end());
    p["uid"] = element.uid;
    p["container"] = element.container;
    p["order"] = element.order;
    if (element.value) p["value"] = *element.value;
    return make(gui_add_type(element.kind), std::move(p));
}

Message gui_set_prop(Uid uid, std::string_view prop, Value value) {
    const ValueKind vk = kind_of(value);
    return make(gui_set_prop_type(vk), {{"uid", uid}, {"prop", std::string(prop)}, {"value", std::move(value)}});
}

Message gui_set_value(Uid uid, Value value) {
    const ValueKind vk = kind_of(value);
    return make(gui_set_value_type(vk), {{"uid", uid}, {"value", std::move(value)}});
}

Message gui_remove(Uid uid) { return make(std::string(kGuiRemove), {{"uid", uid}}); }

Message gui_update(Uid uid, Value value) {
    const ValueKind vk = kind_of(value);
    return make(gui_update_type(vk), {{"uid", uid}, {"value", std::move(value)}});
}

Message camera_set(const CameraState& camera) {
    Message m = make(std::string(kCameraSet), {});
    fill_camera(m.payload, camera);
    return m;
}

Message camera_report(const CameraState& camera) {
    Message m = make(std::string(kCameraReport), {});
    fill_camera(m.payload, camera);
    return m;
}

Message scene_click(const SceneClick& click) {
    Payload p{
        {"ray_origin", to_list(click.ray_origin)},
        {"ray_direction", to_list(click.ray_direction)},
        {"screen_pos", to_list(click.screen_pos)},
    };
    if (click.path) p["path"] = click.path->str();
    return make(std::string(kSceneClick), std::move(p));
}

SceneNode read_node_upsert(const Message& message) {
    const TypeInfo& info = info_for(message, Family::node_upsert);
    SceneNode node;
    node.path = ScenePath::parse(message.field<std::string>("path"));
    node.kind = *info.node_kind;
    node.local_pose.wxyz = to_array<4>(message.field<std::vector<double>>("wxyz"));
    node.local_pose.position = to_array<3>(message.field<std::vector<double>>("position"));
    node.visible = message.field<bool>("visible");
    node.clickable = message.field<bool>("clickable");
    for (const auto& [name, value] : message.payload) {
        if (name == "path" || name == "wxyz" || name == "position" || name == "visible" || name == "clickable") {
            continue;
        }
        node.props.emplace(name, value);
    }
    return node;
}

GuiElement read_gui_add(const Message& message) {
    const TypeInfo& info = info_for(message, Family::gui_add);
    GuiElement e;
    e.kind = *info.gui_kind;
    e.uid = message.field<std::int64_t>("uid");
    e.container = message.field<std::int64_t>("container");
    e.order = message.field<std::int64_t>("order");
    for (const auto& [name, value] : message.payload) {
        if (name == "uid" || name == "container" || name == "order") continue;
        if (name == "value") {
            e.value = value;
        } else {
            e.props.emplace(name, value);
        }
    }
    return e;
}

CameraState read_camera(const Message& message) {
    if (message.type != kCameraSet && message.type != kCameraReport) {
        throw SchemaError("unexpected message type " + message.type);
    }
    CameraState camera;
    camera.pose.wxyz = to_array<4>(message.field<std::vector<double>>("wxyz"));
    camera.pose.position = to_array<3>(message.field<std::vector<double>>("position"));
    camera.fov = message.field<double>("fov");
    camera.aspect = message.field<double>("aspect");
    camera.look_at = to_array<3>(message.field<std::vector<double>>("look_at"));
    return camera;
}

SceneClick read_scene_click(const Message& message) {
    info_for(message, Family::scene_click);
    SceneClick click;
    if (message.has("path")) click.path = ScenePath::parse(message.field<std::string>("path"));
    click.ray_origin = to_array<3>(message.field<std::vector<double>>("ray_origin"));
    click.ray_direction = to_array<3>(message.field<std::vector<double>>("ray_direction"));
    click.screen_pos = to_array<2>(message.field<std::vector<double>>("screen_pos"));
    return click;
}

}  // namespace viewsync::protocol
