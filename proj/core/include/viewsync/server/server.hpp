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

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "viewsync/gui/gui_registry.hpp"
#include "viewsync/scene/scene_graph.hpp"
#include "viewsync/transport/camera_state.hpp"

namespace viewsync {

namespace detail {
class ServerCore;
}

using Rgb = std::array<std::int64_t, 3>;

/// Pose and visibility shared by every `add_*` call.
struct Placement {
    Quaternion wxyz{1.0, 0.0, 0.0, 0.0};
    Vec3 position{0.0, 0.0, 0.0};
    bool visible = true;
};

struct FrameParams {
    double axes_length = 0.5;
    double axes_radius = 0.025;
    bool show_axes = true;
};

struct GridParams {
    double width = 10.0;
    double height = 10.0;
    double cell_size = 1.0;
    Rgb color{200, 200, 200};
};

/// Positions are xyz triples; colors are rgb triples, one per point.
struct PointCloudParams {
    std::vector<float> positions;
    std::vector<std::uint8_t> colors;
    double point_size = 0.01;
};

/// Points are pairs of xyz endpoints; colors are rgb per endpoint.
struct LineSegmentsParams {
    std::vector<float> points;
    std::vector<std::uint8_t> colors;
    double line_width = 1.0;
};

struct MeshParams {
    std::vector<float> vertices;
    std::vector<std::int64_t> faces;
    Rgb color{90, 200, 255};
    bool wireframe = false;
    bool flat_shading = false;
};

struct BoxParams {
    Vec3 dimensions{1.0, 1.0, 1.0};
    Rgb color{255, 255, 255};
    bool wireframe = false;
};

struct IcosphereParams {
    double radius = 1.0;
    std::int64_t subdivisions = 3;
    Rgb color{255, 255, 255};
};

struct CameraFrustumParams {
    double fov = std::numbers::pi / 2.0;
    double aspect = 1.0;
    double scale = 0.3;
    Rgb color{20, 20, 20};
    double line_width = 1.0;
};

struct LabelParams {
    std::string text;
    double font_height = 0.1;
};

struct ImageParams {
    std::int64_t width = 1;
    std::int64_t height = 1;
    std::vector<std::uint8_t> rgb{0, 0, 0};
    double render_width = 1.0;
    double render_height = 1.0;
};

/// A click on a clickable node (or on empty space for scene-wide pointer
/// listeners, where `path` is nullopt).
struct ClickEvent {
    std::optional<ScenePath> path;
    ClientId client_id = 0;
    Vec3 ray_origin{};
    Vec3 ray_direction{0.0, 0.0, -1.0};
    std::array<double, 2> screen_pos{};
};

using ClickCallback = std::function<void(const ClickEvent&)>;

class ClientHandle;
using ClientCallback = std::function<void(ClientHandle)>;

/// Token returned by callback registration. Callbacks stay registered until
/// `unsubscribe()` is called or the element is removed; destroying the
/// token does not unregister.
class Subscription {
public:
    Subscription() = default;
    void unsubscribe();
    bool active() const { return static_cast<bool>(cancel_); }

private:
    friend class detail::ServerCore;
    explicit Subscription(std::function<void()> cancel) : cancel_(std::move(cancel)) {}
    std::function<void()> cancel_;
};

/// Handle to one scene node. Reads come from server-side state without any
/// network round-trip; writes apply immediately and are queued for clients.
/// Every operation after the node is removed throws UseAfterRemoveError.
class NodeHandle {
public:
    const ScenePath& path() const { return path_; }
    NodeKind kind() const;

    Value get(std::string_view prop) const;
    void set(std::string_view prop, Value value);

    Pose pose() const;
    bool visible() const;
    void set_wxyz(const Quaternion& wxyz);
    void set_position(const Vec3& position);
    void set_visible(bool visible);
    void set_clickable(bool clickable);
    void set_color(const Rgb& color);

    /// Registers a click callback and marks the node clickable.
    Subscription on_click(ClickCallback callback);

    void remove();
    bool removed() const;

private:
    friend class SceneApi;
    NodeHandle(std::shared_ptr<detail::ServerCore> core, std::optional<ClientId> scope, ScenePath path,
               std::uint64_t incarnation)
        : core_(std::move(core)), scope_(scope), path_(std::move(path)), incarnation_(incarnation) {}

    std::shared_ptr<detail::ServerCore> core_;
    std::optional<ClientId> scope_;
    ScenePath path_;
    // Identifies this node among nodes that occupied the same path over time.
    std::uint64_t incarnation_;
};

/// Scene facade, bound either to the shared state or to one client.
class SceneApi {
public:
    NodeHandle add_frame(std::string_view path, const FrameParams& params = {}, const Placement& placement = {});
    NodeHandle add_grid(std::string_view path, const GridParams& params = {}, const Placement& placement = {});
    NodeHandle add_point_cloud(std::string_view path, const PointCloudParams& params,
                               const Placement& placement = {});
    NodeHandle add_line_segments(std::string_view path, const LineSegmentsParams& params,
                                 const Placement& placement = {});
    NodeHandle add_mesh(std::string_view path, const MeshParams& params, const Placement& placement = {});
    NodeHandle add_box(std::string_view path, const BoxParams& params = {}, const Placement& placement = {});
    NodeHandle add_icosphere(std::string_view path, const IcosphereParams& params = {},
                             const Placement& placement = {});
    NodeHandle add_camera_frustum(std::string_view path, const CameraFrustumParams& params = {},
                                  const Placement& placement = {});
    NodeHandle add_label(std::string_view path, const LabelParams& params, const Placement& placement = {});
    NodeHandle add_image(std::string_view path, const ImageParams& params, const Placement& placement = {});

    /// Generic form; unspecified properties take the kind's defaults.
    NodeHandle add(std::string_view path, NodeKind kind, PropMap props, const Placement& placement = {});

    /// Handle for an existing node. Throws NotFoundError.
    NodeHandle node(std::string_view path) const;

    /// Removes a node and its subtree. Unknown paths are logged and ignored;
    /// returns whether anything was removed.
    bool remove(std::string_view path);

    Pose world_transform(std::string_view path) const;
    bool effective_visibility(std::string_view path) const;

    /// Listener for every click reported by clients, including clicks that
    /// hit no clickable node.
    Subscription on_pointer(ClickCallback callback);

private:
    friend class Server;
    friend class ClientHandle;
    SceneApi(std::shared_ptr<detail::ServerCore> core, std::optional<ClientId> scope)
        : core_(std::move(core)), scope_(scope) {}

    std::shared_ptr<detail::ServerCore> core_;
    std::optional<ClientId> scope_;
};

/// Handle to one GUI element. `value()` returns the latest validated value,
/// whether written by the server or received from a client.
class GuiHandle {
public:
    Uid uid() const { return uid_; }
    GuiKind kind() const;

    Value value() const;
    template <class T>
    T value_as() const {
        return std::get<T>(value());
    }
    /// Server-side write. Does not fire on_update callbacks.
    void set_value(Value value);

    Value prop(std::string_view name) const;
    void set_prop(std::string_view name, Value value);
    void set_label(std::string label) { set_prop("label", std::move(label)); }
    void set_disabled(bool disabled) { set_prop("disabled", disabled); }
    void set_visible(bool visible) { set_prop("visible", visible); }
    void set_color(const Rgb& color);

    /// Fires on client-originated value changes, in registration order.
    Subscription on_update(GuiCallback callback);
    /// Alias of on_update, reads better for buttons.
    Subscription on_click(GuiCallback callback) { return on_update(std::move(callback)); }

    void remove();
    bool removed() const;

private:
    friend class GuiApi;
    GuiHandle(std::shared_ptr<detail::ServerCore> core, std::optional<ClientId> scope, Uid uid)
        : core_(std::move(core)), scope_(scope), uid_(uid) {}

    std::shared_ptr<detail::ServerCore> core_;
    std::optional<ClientId> scope_;
    Uid uid_;
};

/// GUI facade, bound to a scope and a container (the root panel by default).
class GuiApi {
public:
    GuiHandle add_button(std::string label);
    GuiHandle add_checkbox(std::string label, bool initial = false);
    GuiHandle add_slider(std::string label, double min, double max, double step = 1.0,
                         std::optional<double> initial = std::nullopt);
    GuiHandle add_number(std::string label, double initial, double min = -1e9, double max = 1e9, double step = 1.0);
    GuiHandle add_text(std::string label, std::string initial = "");
    GuiHandle add_dropdown(std::string label, std::vector<std::string> options,
                           std::optional<std::string> initial = std::nullopt);
    GuiHandle add_rgb(std::string label, const Rgb& initial);
    GuiHandle add_vector3(std::string label, const Vec3& initial, double step = 0.1);
    GuiHandle add_folder(std::string label);
    GuiHandle add_tab_group();
    GuiHandle add_tab(std::string label);
    GuiHandle add_markdown(std::string content);

    GuiHandle add(GuiKind kind, PropMap props, std::optional<Value> initial = std::nullopt);

    /// Facade that adds elements inside `container` (a folder, tab, or tab
    /// group).
    GuiApi within(const GuiHandle& container) const;

    /// Removes an element and its contents. Unknown uids are logged and
    /// ignored; returns whether anything was removed.
    bool remove(Uid uid);

private:
    friend class Server;
    friend class ClientHandle;
    GuiApi(std::shared_ptr<detail::ServerCore> core, std::optional<ClientId> scope, Uid container)
        : core_(std::move(core)), scope_(scope), container_(container) {}

    std::shared_ptr<detail::ServerCore> core_;
    std::optional<ClientId> scope_;
    Uid container_ = kRootContainer;
};

class CameraHandle {
public:
    /// Latest state reported by the client. Throws UseAfterRemoveError once
    /// the client disconnected.
    CameraState get() const;
    /// Moves the client's camera.
    void set(const CameraState& camera);

private:
    friend class ClientHandle;
    CameraHandle(std::shared_ptr<detail::ServerCore> core, ClientId id) : core_(std::move(core)), id_(id) {}

    std::shared_ptr<detail::ServerCore> core_;
    ClientId id_;
};

/// One connected client. Its scene and gui facades write to state only this
/// client sees.
class ClientHandle {
public:
    ClientId id() const { return id_; }
    bool connected() const;
    SceneApi scene() const;
    GuiApi gui() const;
    CameraHandle camera() const;

private:
    friend class Server;
    friend class detail::ServerCore;
    ClientHandle(std::shared_ptr<detail::ServerCore> core, ClientId id) : core_(std::move(core)), id_(id) {}

    std::shared_ptr<detail::ServerCore> core_;
    ClientId id_;
};

struct ServerOptions {
    std::string host = "127.0.0.1";
    /// 0 picks a free port.
    std::uint16_t port = 8080;
    std::string static_dir;
};

struct ConnectionStats {
    std::uint64_t batches_sent = 0;
    std::uint64_t messages_sent = 0;
    std::uint64_t bytes_sent = 0;
    std::size_t outstanding = 0;
    std::size_t max_outstanding = 0;
    std::size_t pending = 0;
};

/// Visualization server. Construction binds and starts serving; all API
/// calls are thread-safe and never wait on the network. Callbacks run one at
/// a time on a dedicated dispatcher thread and may call back into the API.
class Server {
public:
    explicit Server(ServerOptions options = {});
    ~Server();

    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    SceneApi scene();
    GuiApi gui();

    std::vector<ClientHandle> clients() const;
    /// Throws NotFoundError for an unknown id.
    ClientHandle client(ClientId id) const;

    /// Runs on the dispatcher after the new client's snapshot is queued.
    Subscription on_client_connect(ClientCallback callback);
    Subscription on_client_disconnect(ClientCallback callback);

    std::uint16_t port() const;
    const std::string& host() const;
    /// "ws://host:port/ws"
    std::string url() const;
    const std::string& schema_hash() const;

    /// Messages a client connecting now would receive: shared state, plus the
    /// overlay of `client` when given.
    std::vector<Message> snapshot(std::optional<ClientId> client = std::nullopt) const;
    std::size_t persisted_entries() const;
    ConnectionStats connection_stats(ClientId id) const;

    /// Blocks until no client has queued or unacknowledged batches and the
    /// dispatcher is idle. Returns false on timeout.
    bool wait_idle(std::chrono::milliseconds timeout) const;

    void stop();

private:
    std::shared_ptr<detail::ServerCore> core_;
};

}  // namespace viewsync
