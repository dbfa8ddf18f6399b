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

#include "viewsync/scene/scene_graph.hpp"

#include <algorithm>
#include <cmath>

#include "viewsync/error.hpp"

namespace viewsync {

namespace {

Vec3 checked_position(const Vec3& p) {
    for (double c : p) {
        if (!std::isfinite(c)) {
            throw ValidationError("position has a non-finite component");
        }
    }
    return p;
}

template <std::size_t N>
std::array<double, N> to_array(const Value& v) {
    const auto& list = std::get<std::vector<double>>(v);
    std::array<double, N> out{};
    std::copy(list.begin(), list.end(), out.begin());
    return out;
}

std::string node_name(const ScenePath& path, NodeKind kind) {
    return std::string(to_string(kind)) + " " + path.str();
}

}  // namespace

SceneGraph::SceneGraph() {
    nodes_.emplace(ScenePath::root(), SceneNode{ScenePath::root(), NodeKind::placeholder, {}, Pose::identity(), true, false});
}

std::vector<ScenePath> SceneGraph::upsert_node(const ScenePath& path, NodeKind kind, PropMap props, Pose pose,
                                               bool visible, bool clickable, ApplyMode mode) {
    if (path.is_root()) {
        throw ValidationError("the root node cannot be replaced");
    }
    props = complete_props(node_prop_schema(kind), std::move(props), node_name(path, kind));
    if (mode == ApplyMode::validated) {
        check_node_props(kind, props);
    }
    pose.wxyz = normalized(pose.wxyz);
    pose.position = checked_position(pose.position);

    std::vector<ScenePath> created;
    for (ScenePath p = path.parent(); !nodes_.contains(p); p = p.parent()) {
        created.push_back(p);
    }
    std::reverse(created.begin(), created.end());
    for (const auto& p : created) {
        nodes_.emplace(p, SceneNode{p, NodeKind::placeholder, {}, Pose::identity(), true, false});
    }

    SceneNode& node = nodes_[path];
    node.path = path;
    node.kind = kind;
    node.props = std::move(props);
    node.local_pose = pose;
    node.visible = visible;
    node.clickable = clickable;
    return created;
}

bool SceneGraph::set_node_prop(const ScenePath& path, std::string_view name, Value value, ApplyMode mode) {
    if (path.is_root()) {
        throw ValidationError("the root node has no settable properties");
    }
    SceneNode& node = mutable_at(path);
    try {
        if (name == "wxyz") {
            const Quaternion q = normalized(to_array<4>(coerce(types::real_tuple(4), std::move(value))));
            return std::exchange(node.local_pose.wxyz, q) != q;
        }
        if (name == "position") {
            const Vec3 p = checked_position(to_array<3>(coerce(types::real_tuple(3), std::move(value))));
            return std::exchange(node.local_pose.position, p) != p;
        }
        if (name == "visible" || name == "clickable") {
            const bool flag = std::get<bool>(coerce(types::boolean(), std::move(value)));
            bool& target = name == "visible" ? node.visible : node.clickable;
            return std::exchange(target, flag) != flag;
        }
    } catch (const ValidationError& e) {
        throw ValidationError(node_name(path, node.kind) + ": property '" + std::string(name) + "': " + e.what());
    }

    const PropSpec* spec = find_prop(node_prop_schema(node.kind), name);
    if (spec == nullptr) {
        throw ValidationError(node_name(path, node.kind) + " has no property '" + std::string(name) + "'");
    }
    value = check_prop(*spec, std::move(value));
    auto it = node.props.find(name);
    if (it->second == value) {
        return false;
    }
    Value previous = std::exchange(it->second, std::move(value));
    if (mode == ApplyMode::validated) {
        try {
            check_node_props(node.kind, node.props);
        } catch (...) {
            it->second = std::move(previous);
            throw;
        }
    }
    return true;
}

std::vector<ScenePath> SceneGraph::remove_node(const ScenePath& path) {
    if (path.is_root()) {
        throw ValidationError("the root node cannot be removed");
    }
    if (!nodes_.contains(path)) {
        throw NotFoundError("no scene node at " + path.str());
    }
    std::vector<ScenePath> removed = subtree(path);
    for (const auto& p : removed) nodes_.erase(p);
    return removed;
}

std::vector<ScenePath> SceneGraph::subtree(const ScenePath& path) const {
    std::vector<ScenePath> out;
    if (!nodes_.contains(path)) return out;
    out.push_back(path);
    // Descendants of "/a" are exactly the keys in ["/a/", "/a0"): '0' follows '/'.
    const std::string prefix = path.is_root() ? std::string("/") : path.str() + "/";
    const std::string limit = path.is_root() ? std::string("0") : path.str() + "0";
    for (auto it = nodes_.lower_bound(std::string_view(prefix)); it != nodes_.end() && it->first.str() < limit;
         ++it) {
        if (it->first != path) out.push_back(it->first);
    }
    return out;
}

std::vector<ScenePath> SceneGraph::children(const ScenePath& path) const {
    std::vector<ScenePath> out;
    const std::size_t depth = path.depth() + 1;
    for (const auto& p : subtree(path)) {
        if (p.depth() == depth) out.push_back(p);
    }
    return out;
}

Pose SceneGraph::world_transform(const ScenePath& path) const {
    const SceneNode& node = at(path);
    if (path.is_root()) return node.local_pose;
    return compose(world_transform(path.parent()), node.local_pose);
}

bool SceneGraph::effective_visibility(const ScenePath& path) const {
    for (ScenePath p = path;; p = p.parent()) {
        if (!at(p).visible) return false;
        if (p.is_root()) return true;
    }
}

const SceneNode* SceneGraph::find(const ScenePath& path) const {
    auto it = nodes_.find(path);
    return it == nodes_.end() ? nullptr : &it->second;
}

const SceneNode& SceneGraph::at(const ScenePath& path) const {
    const SceneNode* node = find(path);
    if (node == nullptr) {
        throw NotFoundError("no scene node at " + path.str());
    }
    return *node;
}

SceneNode& SceneGraph::mutable_at(const ScenePath& path) {
    auto it = nodes_.find(path);
    if (it == nodes_.end()) {
        throw NotFoundError("no scene node at " + path.str());
    }
    return it->second;
}

Value node_property(const SceneNode& node, std::string_view name) {
    if (name == "wxyz") {
        return std::vector<double>(node.local_pose.wxyz.begin(), node.local_pose.wxyz.end());
    }
    if (name == "position") {
        return std::vector<double>(node.local_pose.position.begin(), node.local_pose.position.end());
    }
    if (name == "visible") return node.visible;
    if (name == "clickable") return node.clickable;
    auto it = node.props.find(name);
    if (it == node.props.end()) {
        throw ValidationError(node_name(node.path, node.kind) + " has no property '" + std::string(name) + "'");
    }
    return it->second;
}

}  // namespace viewsync
