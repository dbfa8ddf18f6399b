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

#include "viewsync/scene/node_kind.hpp"

#include <numbers>

#include "viewsync/error.hpp"

namespace viewsync {

namespace {

using C = Constraint;

Value rgb(std::int64_t r, std::int64_t g, std::int64_t b) { return std::vector<std::int64_t>{r, g, b}; }

PropSchema make_schema(NodeKind kind) {
    switch (kind) {
        case NodeKind::frame:
            return {
                {"axes_length", types::real(), 0.5, C::positive},
                {"axes_radius", types::real(), 0.025, C::positive},
                {"show_axes", types::boolean(), true},
            };
        case NodeKind::grid:
            return {
                {"width", types::real(), 10.0, C::positive},
                {"height", types::real(), 10.0, C::positive},
                {"cell_size", types::real(), 1.0, C::positive},
                {"color", types::integer_tuple(3), rgb(200, 200, 200), C::rgb},
            };
        case NodeKind::point_cloud:
            return {
                {"positions", types::float32_array(), std::vector<float>{}, C::triples},
                {"colors", types::bytes(), Bytes{}, C::triples},
                {"point_size", types::real(), 0.01, C::positive},
            };
        case NodeKind::line_segments:
            return {
                {"points", types::float32_array(), std::vector<float>{}, C::segment_pairs},
                {"colors", types::bytes(), Bytes{}, C::segment_pairs},
                {"line_width", types::real(), 1.0, C::positive},
            };
        case NodeKind::mesh:
            return {
                {"vertices", types::float32_array(), std::vector<float>{}, C::triples},
                {"faces", types::integer_list(), std::vector<std::int64_t>{}, C::index_triples},
                {"color", types::integer_tuple(3), rgb(90, 200, 255), C::rgb},
                {"wireframe", types::boolean(), false},
                {"flat_shading", types::boolean(), false},
            };
        case NodeKind::box:
            return {
                {"dimensions", types::real_tuple(3), std::vector<double>{1.0, 1.0, 1.0}, C::positive},
                {"color", types::integer_tuple(3), rgb(255, 255, 255), C::rgb},
                {"wireframe", types::boolean(), false},
            };
        case NodeKind::icosphere:
            return {
                {"radius", types::real(), 1.0, C::positive},
                {"subdivisions", types::integer(), std::int64_t{3}, C::subdivision_level},
                {"color", types::integer_tuple(3), rgb(255, 255, 255), C::rgb},
            };
        case NodeKind::camera_frustum:
            return {
                {"fov", types::real(), std::numbers::pi / 2.0, C::open_half_turn},
                {"aspect", types::real(), 1.0, C::positive},
                {"scale", types::real(), 0.3, C::positive},
                {"color", types::integer_tuple(3), rgb(20, 20, 20), C::rgb},
                {"line_width", types::real(), 1.0, C::positive},
            };
        case NodeKind::label:
            return {
                {"text", types::text(), std::string{}},
                {"font_height", types::real(), 0.1, C::positive},
            };
        case NodeKind::image:
            return {
                {"width", types::integer(), std::int64_t{1}, C::at_least_one},
                {"height", types::integer(), std::int64_t{1}, C::at_least_one},
                {"rgb", types::bytes(), Bytes{{0, 0, 0}}},
                {"render_width", types::real(), 1.0, C::positive},
                {"render_height", types::real(), 1.0, C::positive},
            };
        case NodeKind::placeholder: return {};
    }
    return {};
}

std::size_t blob_size(const PropMap& props, std::string_view name) {
    const Value& v = props.find(name)->second;
    if (const auto* b = std::get_if<Bytes>(&v)) return b->data.size();
    return std::get<std::vector<float>>(v).size();
}

}  // namespace

std::string_view to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::frame: return "frame";
        case NodeKind::grid: return "grid";
        case NodeKind::point_cloud: return "point_cloud";
        case NodeKind::line_segments: return "line_segments";
        case NodeKind::mesh: return "mesh";
        case NodeKind::box: return "box";
        case NodeKind::icosphere: return "icosphere";
        case NodeKind::camera_frustum: return "camera_frustum";
        case NodeKind::label: return "label";
        case NodeKind::image: return "image";
        case NodeKind::placeholder: return "placeholder";
    }
    return "?";
}

std::optional<NodeKind> node_kind_from_string(std::string_view name) {
    for (NodeKind k : kAllNodeKinds) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

const PropSchema& node_prop_schema(NodeKind kind) {
    static const auto schemas = [] {
        std::array<PropSchema, kAllNodeKinds.size()> out;
        for (NodeKind k : kAllNodeKinds) out[static_cast<std::size_t>(k)] = make_schema(k);
        return out;
    }();
    return schemas[static_cast<std::size_t>(kind)];
}

void check_node_props(NodeKind kind, const PropMap& props) {
    switch (kind) {
        case NodeKind::point_cloud:
            if (blob_size(props, "colors") != blob_size(props, "positions")) {
                throw ValidationError("point_cloud: " + std::to_string(blob_size(props, "colors") / 3) +
                                      " colors for " + std::to_string(blob_size(props, "positions") / 3) +
                                      " points");
            }
            return;
        case NodeKind::line_segments:
            if (blob_size(props, "colors") != blob_size(props, "points")) {
                throw ValidationError("line_segments: color count does not match endpoint count");
            }
            return;
        case NodeKind::mesh: {
            const auto vertex_count = static_cast<std::int64_t>(blob_size(props, "vertices") / 3);
            for (auto index : std::get<std::vector<std::int64_t>>(props.find("faces")->second)) {
                if (index >= vertex_count) {
                    throw ValidationError("mesh: face index " + std::to_string(index) + " out of range for " +
                                          std::to_string(vertex_count) + " vertices");
                }
            }
            return;
        }
        case NodeKind::image: {
            const auto w = std::get<std::int64_t>(props.find("width")->second);
            const auto h = std::get<std::int64_t>(props.find("height")->second);
            if (blob_size(props, "rgb") != static_cast<std::size_t>(3 * w * h)) {
                throw ValidationError("image: rgb holds " + std::to_string(blob_size(props, "rgb")) +
                                      " bytes, expected 3*width*height = " + std::to_string(3 * w * h));
            }
            return;
        }
        default: return;
    }
}

}  // namespace viewsync
