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
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "viewsync/scene/pose.hpp"
#include "viewsync/scene/scene_path.hpp"
#include "viewsync/schema/props.hpp"

namespace viewsync {

enum class NodeKind : std::uint8_t {
    frame,
    grid,
    point_cloud,
    line_segments,
    mesh,
    box,
    icosphere,
    camera_frustum,
    label,
    image,
    placeholder,
};

inline constexpr std::array kAllNodeKinds{
    NodeKind::frame,     NodeKind::grid,           NodeKind::point_cloud, NodeKind::line_segments,
    NodeKind::mesh,      NodeKind::box,            NodeKind::icosphere,   NodeKind::camera_frustum,
    NodeKind::label,     NodeKind::image,          NodeKind::placeholder,
};

std::string_view to_string(NodeKind kind);
std::optional<NodeKind> node_kind_from_string(std::string_view name);

/// Kind-specific property schema. Placeholders have none.
const PropSchema& node_prop_schema(NodeKind kind);

/// Property names every node carries in addition to its kind's schema.
inline constexpr std::array<std::string_view, 4> kNodeCommonProps{"wxyz", "position", "visible", "clickable"};

/// Checks relations between properties of one node (point/color counts,
/// face indices against vertex count, image byte length). Throws
/// ValidationError.
void check_node_props(NodeKind kind, const PropMap& props);

}  // namespace viewsync
