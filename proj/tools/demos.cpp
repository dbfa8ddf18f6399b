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

#include "demos.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "viewsync/error.hpp"

namespace viewsync::demos {

namespace {

float unit(std::mt19937& rng) { return static_cast<float>(rng() >> 8) * (1.0f / 16777216.0f); }

Quaternion axis_angle(const Vec3& axis, double angle) {
    const double s = std::sin(angle / 2.0);
    return {std::cos(angle / 2.0), axis[0] * s, axis[1] * s, axis[2] * s};
}

class PointCloudFrustums : public Demo {
public:
    explicit PointCloudFrustums(Server& server) {
        auto scene = server.scene();
        scene.add_grid("/ground", {});
        scene.add_point_cloud("/cloud", synthetic_point_cloud(kPointCloudSize, kPointCloudSeed));
        for (std::size_t i = 0; i < kFrustumCount; ++i) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / kFrustumCount;
            Placement at;
            at.position = {3.0 * std::cos(angle), 3.0 * std::sin(angle), 1.0};
            at.wxyz = axis_angle({0.0, 0.0, 1.0}, angle + std::numbers::pi);
            scene.add_camera_frustum("/cameras/cam" + std::to_string(i), {.fov = std::numbers::pi / 2.0}, at);
        }
    }
};

class SliderDouble : public Demo {
public:
    explicit SliderDouble(Server& server) {
        auto gui = server.gui();
        GuiHandle slider = gui.add_slider("Value", 0.0, 100.0);
        GuiHandle out = gui.add_text("Doubled", "0");
        slider.on_update([out](const GuiEvent& event) mutable {
            out.set_value(doubled_text(std::get<double>(event.value)));
        });
    }
};

class Counter : public Demo {
public:
    explicit Counter(Server& server) {
        auto gui = server.gui();
        GuiHandle label = gui.add_text("Counter", "Count: 0");
        GuiHandle button = gui.add_button("Increment");
        // Callbacks are copied when dispatched, so the count lives outside.
        auto counter = std::make_shared<int>(0);
        button.on_click([label, counter](const GuiEvent&) mutable {
            *counter += 1;
            label.set_value("Count: " + std::to_string(*counter));
        });
    }
};

class KinematicChain : public Demo {
public:
    explicit KinematicChain(Server& server) {
        auto scene = server.scene();
        std::string path = "/chain";
        for (std::size_t i = 0; i < kChainLinks; ++i) {
            path += "/link" + std::to_string(i);
            const Pose pose = chain_link_pose(i, 0.0);
            links_.push_back(scene.add_frame(path, {.axes_length = 0.3, .axes_radius = 0.015},
                                             {.wxyz = pose.wxyz, .position = pose.position}));
        }
    }

    void tick(double seconds) override {
        for (std::size_t i = 0; i < links_.size(); ++i) links_[i].set_wxyz(chain_link_pose(i, seconds).wxyz);
    }

    double rate_hz() const override { return kChainRateHz; }

private:
    std::vector<NodeHandle> links_;
};

}  // namespace

PointCloudParams synthetic_point_cloud(std::size_t points, std::uint32_t seed) {
    std::mt19937 rng(seed);
    PointCloudParams cloud;
    cloud.positions.reserve(points * 3);
    cloud.colors.reserve(points * 3);
    for (std::size_t i = 0; i < points; ++i) {
        // Points on a noisy torus, so the shape is recognizable in a viewer.
        const float u = 2.0f * std::numbers::pi_v<float> * unit(rng);
        const float v = 2.0f * std::numbers::pi_v<float> * unit(rng);
        const float r = 0.4f + 0.05f * (unit(rng) - 0.5f);
        const float x = (1.0f + r * std::cos(v)) * std::cos(u);
        const float y = (1.0f + r * std::cos(v)) * std::sin(u);
        const float z = r * std::sin(v) + 0.5f;
        cloud.positions.insert(cloud.positions.end(), {x, y, z});
        const float t = std::clamp((z - 0.1f) / 0.8f, 0.0f, 1.0f);
        cloud.colors.insert(cloud.colors.end(), {static_cast<std::uint8_t>(255.0f * t), 80,
                                                 static_cast<std::uint8_t>(255.0f * (1.0f - t))});
    }
    cloud.point_size = 0.02;
    return cloud;
}

Pose chain_link_pose(std::size_t index, double seconds) {
    const double phase = 0.6 * static_cast<double>(index);
    const double angle = 0.5 * std::sin(2.0 * std::numbers::pi * 0.25 * seconds + phase);
    const Vec3 axis = index % 2 == 0 ? Vec3{0.0, 0.0, 1.0} : Vec3{0.0, 1.0, 0.0};
    return Pose{axis_angle(axis, angle), {index == 0 ? 0.0 : 0.5, 0.0, index == 0 ? 0.5 : 0.0}};
}

std::string doubled_text(double value) {
    const double doubled = value * 2.0;
    char buf[32];
    if (doubled == std::round(doubled) && std::abs(doubled) < 1e15) {
        std::snprintf(buf, sizeof buf, "%.0f", doubled);
    } else {
        std::snprintf(buf, sizeof buf, "%g", doubled);
    }
    return buf;
}

std::unique_ptr<Demo> make_demo(std::string_view name, Server& server) {
    if (name == "pointcloud_frustums") return std::make_unique<PointCloudFrustums>(server);
    if (name == "slider_double") return std::make_unique<SliderDouble>(server);
    if (name == "counter") return std::make_unique<Counter>(server);
    if (name == "kinematic_chain") return std::make_unique<KinematicChain>(server);
    throw ValidationError("unknown demo '" + std::string(name) + "'");
}

}  // namespace viewsync::demos
