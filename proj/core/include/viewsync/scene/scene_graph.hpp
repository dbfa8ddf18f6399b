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

#include <map>
#include <vector>

#include "viewsync/scene/node_kind.hpp"

namespace viewsync {

struct SceneNode {
    ScenePath path;
    NodeKind kind = NodeKind::placeholder;
    PropMap props;
    Pose local_pose;
    bool visible = true;
    bool clickable = false;

    friend bool operator==(const SceneNode&, const SceneNode&) = default;
};

/// Path-addressed node tree. A plain value type with no networking; every
/// non-root node's parent is present (parent closure).
class SceneGraph {
public:
    SceneGraph();

    /// Creates or replaces the node at `path`. Missing ancestors are created
    /// as placeholders and returned, shallowest first. Replacing keeps the
    /// node's children. Throws ValidationError for bad props or a root path.
    std::vector<ScenePath> upsert_node(const ScenePath& path, NodeKind kind, PropMap props, Pose pose,
                                       bool visible = true, bool clickable = false,
                                       ApplyMode mode = ApplyMode::validated);

    /// Sets one property (kind-specific or one of wxyz/position/visible/clickable).
    /// Returns false if the value equals the current one and nothing changed.
    bool set_node_prop(const ScenePath& path, std::string_view name, Value value,
                       ApplyMode mode = ApplyMode::validated);

    /// Removes `path` and its subtree; returns removed paths in lexicographic
    /// order. Throws NotFoundError for an unknown path and ValidationError for
    /// the root.
    std::vector<ScenePath> remove_node(const ScenePath& path);

    Pose world_transform(const ScenePath& path) const;
    bool effective_visibility(const ScenePath& path) const;

    const SceneNode* find(const ScenePath& path) const;
    const SceneNode& at(const ScenePath& path) const;
    bool contains(const ScenePath& path) const { return nodes_.contains(path); }

    /// Direct children in lexicographic order.
    std::vector<ScenePath> children(const ScenePath& path) const;
    /// `path` followed by every node below it, in lexicographic order.
    std::vector<ScenePath> subtree(const ScenePath& path) const;

    const std::map<ScenePath, SceneNode, PathLess>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }

    friend bool operator==(const SceneGraph&, const SceneGraph&) = default;

private:
    SceneNode& mutable_at(const ScenePath& path);

    std::map<ScenePath, SceneNode, PathLess> nodes_;
};

/// Reads a node property or a common field (wxyz, position, visible,
/// clickable) as a Value.
Value node_property(const SceneNode& node, std::string_view name);

}  // namespace viewsync
