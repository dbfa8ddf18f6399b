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

#include "viewsync/server/server.hpp"

#include "server/server_core.hpp"
#include "viewsync/error.hpp"

namespace viewsync {

namespace {

std::vector<std::int64_t> rgb(const Rgb& c) { return {c.begin(), c.end()}; }

Bytes bytes(const std::vector<std::uint8_t>& data) { return Bytes{data}; }

}  // namespace

void Subscription::unsubscribe() {
    if (!cancel_) return;
    auto cancel = std::move(cancel_);
    cancel_ = nullptr;
    cancel();
}

// NodeHandle -----------------------------------------------------------------

NodeKind NodeHandle::kind() const { return core_->read_node(scope_, path_, incarnation_).kind; }

Value NodeHandle::get(std::string_view prop) const {
    return node_property(core_->read_node(scope_, path_, incarnation_), prop);
}

void NodeHandle::set(std::string_view prop, Value value) {
    core_->set_node_prop(scope_, path_, incarnation_, prop, std::move(value));
}

Pose NodeHandle::pose() const { return core_->read_node(scope_, path_, incarnation_).local_pose; }
bool NodeHandle::visible() const { return core_->read_node(scope_, path_, incarnation_).visible; }

void NodeHandle::set_wxyz(const Quaternion& wxyz) { set("wxyz", std::vector<double>(wxyz.begin(), wxyz.end())); }

void NodeHandle::set_position(const Vec3& position) {
    set("position", std::vector<double>(position.begin(), position.end()));
}

void NodeHandle::set_visible(bool visible) { set("visible", visible); }
void NodeHandle::set_clickable(bool clickable) { set("clickable", clickable); }
void NodeHandle::set_color(const Rgb& color) { set("color", rgb(color)); }

Subscription NodeHandle::on_click(ClickCallback callback) {
    return core_->on_node_click(scope_, path_, incarnation_, std::move(callback));
}

void NodeHandle::remove() { core_->remove_node(scope_, path_, incarnation_); }
bool NodeHandle::removed() const { return !core_->node_alive(scope_, path_, incarnation_); }

// SceneApi -------------------------------------------------------------------

NodeHandle SceneApi::add(std::string_view path, NodeKind kind, PropMap props, const Placement& placement) {
    ScenePath p = ScenePath::parse(path);
    const std::uint64_t incarnation = core_->add_node(scope_, p, kind, std::move(props), placement);
    return NodeHandle(core_, scope_, std::move(p), incarnation);
}

NodeHandle SceneApi::add_frame(std::string_view path, const FrameParams& params, const Placement& placement) {
    return add(path, NodeKind::frame,
               {{"axes_length", params.axes_length},
                {"axes_radius", params.axes_radius},
                {"show_axes", params.show_axes}},
               placement);
}

NodeHandle SceneApi::add_grid(std::string_view path, const GridParams& params, const Placement& placement) {
    return add(path, NodeKind::grid,
               {{"width", params.width},
                {"height", params.height},
                {"cell_size", params.cell_size},
                {"color", rgb(params.color)}},
               placement);
}

NodeHandle SceneApi::add_point_cloud(std::string_view path, const PointCloudParams& params,
                                     const Placement& placement) {
    return add(path, NodeKind::point_cloud,
               {{"positions", params.positions}, {"colors", bytes(params.colors)}, {"point_size", params.point_size}},
               placement);
}

NodeHandle SceneApi::add_line_segments(std::string_view path, const LineSegmentsParams& params,
                                       const Placement& placement) {
    return add(path, NodeKind::line_segments,
               {{"points", params.points}, {"colors", bytes(params.colors)}, {"line_width", params.line_width}},
               placement);
}

NodeHandle SceneApi::add_mesh(std::string_view path, const MeshParams& params, const Placement& placement) {
    return add(path, NodeKind::mesh,
               {{"vertices", params.vertices},
                {"faces", params.faces},
                {"color", rgb(params.color)},
                {"wireframe", params.wireframe},
                {"flat_shading", params.flat_shading}},
               placement);
}

NodeHandle SceneApi::add_box(std::string_view path, const BoxParams& params, const Placement& placement) {
    return add(path, NodeKind::box,
               {{"dimensions", std::vector<double>(params.dimensions.begin(), params.dimensions.end())},
                {"color", rgb(params.color)},
                {"wireframe", params.wireframe}},
               placement);
}

NodeHandle SceneApi::add_icosphere(std::string_view path, const IcosphereParams& params,
                                   const Placement& placement) {
    return add(path, NodeKind::icosphere,
               {{"radius", params.radius}, {"subdivisions", params.subdivisions}, {"color", rgb(params.color)}},
               placement);
}

NodeHandle SceneApi::add_camera_frustum(std::string_view path, const CameraFrustumParams& params,
                                        const Placement& placement) {
    return add(path, NodeKind::camera_frustum,
               {{"fov", params.fov},
                {"aspect", params.aspect},
                {"scale", params.scale},
                {"color", rgb(params.color)},
                {"line_width", params.line_width}},
               placement);
}

NodeHandle SceneApi::add_label(std::string_view path, const LabelParams& params, const Placement& placement) {
    return add(path, NodeKind::label, {{"text", params.text}, {"font_height", params.font_height}}, placement);
}

NodeHandle SceneApi::add_image(std::string_view path, const ImageParams& params, const Placement& placement) {
    return add(path, NodeKind::image,
               {{"width", params.width},
                {"height", params.height},
                {"rgb", bytes(params.rgb)},
                {"render_width", params.render_width},
                {"render_height", params.render_height}},
               placement);
}

NodeHandle SceneApi::node(std::string_view path) const {
    ScenePath p = ScenePath::parse(path);
    const std::uint64_t incarnation = core_->node_incarnation(scope_, p);
    return NodeHandle(core_, scope_, std::move(p), incarnation);
}

bool SceneApi::remove(std::string_view path) { return core_->remove_node(scope_, ScenePath::parse(path)); }

Pose SceneApi::world_transform(std::string_view path) const {
    return core_->world_transform(scope_, ScenePath::parse(path));
}

bool SceneApi::effective_visibility(std::string_view path) const {
    return core_->effective_visibility(scope_, ScenePath::parse(path));
}

Subscription SceneApi::on_pointer(ClickCallback callback) { return core_->on_pointer(scope_, std::move(callback)); }

// GuiHandle ------------------------------------------------------------------

GuiKind GuiHandle::kind() const { return core_->read_gui(scope_, uid_).kind; }

Value GuiHandle::value() const {
    auto e = core_->read_gui(scope_, uid_);
    if (!e.value) {
        throw ValidationError(std::string(to_string(e.kind)) + " elements have no value");
    }
    return *e.value;
}

void GuiHandle::set_value(Value value) { core_->set_gui_value(scope_, uid_, std::move(value)); }

Value GuiHandle::prop(std::string_view name) const {
    const auto e = core_->read_gui(scope_, uid_);
    auto it = e.props.find(name);
    if (it == e.props.end()) {
        throw ValidationError(std::string(to_string(e.kind)) + " has no property '" + std::string(name) + "'");
    }
    return it->second;
}

void GuiHandle::set_prop(std::string_view name, Value value) {
    core_->set_gui_prop(scope_, uid_, name, std::move(value));
}

void GuiHandle::set_color(const Rgb& color) { set_prop("color", rgb(color)); }

Subscription GuiHandle::on_update(GuiCallback callback) {
    return core_->on_gui_update(scope_, uid_, std::move(callback));
}

void GuiHandle::remove() { core_->remove_gui_checked(scope_, uid_); }
bool GuiHandle::removed() const { return !core_->gui_alive(scope_, uid_); }

// GuiApi ---------------------------------------------------------------------

GuiHandle GuiApi::add(GuiKind kind, PropMap props, std::optional<Value> initial) {
    const Uid uid = core_->add_gui(scope_, container_, kind, std::move(props), std::move(initial));
    return GuiHandle(core_, scope_, uid);
}

GuiHandle GuiApi::add_button(std::string label) { return add(GuiKind::button, {{"label", std::move(label)}}); }

GuiHandle GuiApi::add_checkbox(std::string label, bool initial) {
    return add(GuiKind::checkbox, {{"label", std::move(label)}}, initial);
}

GuiHandle GuiApi::add_slider(std::string label, double min, double max, double step, std::optional<double> initial) {
    std::optional<Value> value;
    if (initial) value = *initial;
    return add(GuiKind::slider, {{"label", std::move(label)}, {"min", min}, {"max", max}, {"step", step}}, value);
}

GuiHandle GuiApi::add_number(std::string label, double initial, double min, double max, double step) {
    return add(GuiKind::number, {{"label", std::move(label)}, {"min", min}, {"max", max}, {"step", step}}, initial);
}

GuiHandle GuiApi::add_text(std::string label, std::string initial) {
    return add(GuiKind::text, {{"label", std::move(label)}}, std::move(initial));
}

GuiHandle GuiApi::add_dropdown(std::string label, std::vector<std::string> options,
                               std::optional<std::string> initial) {
    std::optional<Value> value;
    if (initial) value = std::move(*initial);
    return add(GuiKind::dropdown, {{"label", std::move(label)}, {"options", std::move(options)}}, value);
}

GuiHandle GuiApi::add_rgb(std::string label, const Rgb& initial) {
    return add(GuiKind::rgb, {{"label", std::move(label)}}, rgb(initial));
}

GuiHandle GuiApi::add_vector3(std::string label, const Vec3& initial, double step) {
    return add(GuiKind::vector3, {{"label", std::move(label)}, {"step", step}},
               std::vector<double>(initial.begin(), initial.end()));
}

GuiHandle GuiApi::add_folder(std::string label) { return add(GuiKind::folder, {{"label", std::move(label)}}); }
GuiHandle GuiApi::add_tab_group() { return add(GuiKind::tab_group, {}); }
GuiHandle GuiApi::add_tab(std::string label) { return add(GuiKind::tab, {{"label", std::move(label)}}); }

GuiHandle GuiApi::add_markdown(std::string content) {
    return add(GuiKind::markdown, {{"content", std::move(content)}});
}

GuiApi GuiApi::within(const GuiHandle& container) const { return GuiApi(core_, scope_, container.uid()); }

bool GuiApi::remove(Uid uid) { return core_->remove_gui(scope_, uid); }

// Clients --------------------------------------------------------------------

CameraState CameraHandle::get() const { return core_->client_camera(id_); }
void CameraHandle::set(const CameraState& camera) { core_->set_client_camera(id_, camera); }

bool ClientHandle::connected() const { return core_->client_connected(id_); }
SceneApi ClientHandle::scene() const { return SceneApi(core_, id_); }
GuiApi ClientHandle::gui() const { return GuiApi(core_, id_, kRootContainer); }
CameraHandle ClientHandle::camera() const { return CameraHandle(core_, id_); }

// Server ---------------------------------------------------------------------

Server::Server(ServerOptions options) : core_(std::make_shared<detail::ServerCore>(std::move(options))) {
    core_->start();
}

Server::~Server() { core_->stop(); }

SceneApi Server::scene() { return SceneApi(core_, std::nullopt); }
GuiApi Server::gui() { return GuiApi(core_, std::nullopt, kRootContainer); }

std::vector<ClientHandle> Server::clients() const {
    std::vector<ClientHandle> out;
    for (ClientId id : core_->client_ids()) out.push_back(ClientHandle(core_, id));
    return out;
}

ClientHandle Server::client(ClientId id) const {
    if (!core_->client_connected(id)) {
        throw NotFoundError("no connected client " + std::to_string(id));
    }
    return ClientHandle(core_, id);
}

Subscription Server::on_client_connect(ClientCallback callback) {
    return core_->on_client_connect(std::move(callback));
}

Subscription Server::on_client_disconnect(ClientCallback callback) {
    return core_->on_client_disconnect(std::move(callback));
}

std::uint16_t Server::port() const { return core_->port(); }
const std::string& Server::host() const { return core_->host(); }
std::string Server::url() const { return "ws://" + host() + ":" + std::to_string(port()) + "/ws"; }
const std::string& Server::schema_hash() const { return core_->schema_hash(); }

std::vector<Message> Server::snapshot(std::optional<ClientId> client) const { return core_->snapshot(client); }
std::size_t Server::persisted_entries() const { return core_->persisted_entries(); }
ConnectionStats Server::connection_stats(ClientId id) const { return core_->connection_stats(id); }
bool Server::wait_idle(std::chrono::milliseconds timeout) const { return core_->wait_idle(timeout); }
void Server::stop() { core_->stop(); }

}  // namespace viewsync
