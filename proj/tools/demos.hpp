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
#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "viewsync/server/server.hpp"

namespace viewsync::demos {

inline constexpr std::array<std::string_view, 4> kDemoNames{
    "pointcloud_frustums",
    "slider_double",
    "counter",
    "kinematic_chain",
};

inline constexpr std::uint32_t kPointCloudSeed = 4;
inline constexpr std::size_t kPointCloudSize = 10'000;
inline constexpr std::size_t kFrustumCount = 5;
inline constexpr std::size_t kChainLinks = 6;
inline constexpr double kChainRateHz = 30.0;

/// Deterministic colored point cloud: xyz triples in a unit-ish blob and one
/// rgb triple per point derived from height.
PointCloudParams synthetic_point_cloud(std::size_t points, std::uint32_t seed);

/// A running demo. Demos that animate are ticked by the caller's main loop.
class Demo {
public:
    virtual ~Demo() = default;
    /// Advances the animation to `seconds` since start. No-op for static demos.
    virtual void tick(double /*seconds*/) {}
    /// Tick period, or zero for static demos.
    virtual double rate_hz() const { return 0.0; }
};

/// Builds the named demo on `server`. Throws ValidationError for an unknown
/// name.
std::unique_ptr<Demo> make_demo(std::string_view name, Server& server);

/// Local pose of chain link `index` at time `seconds`.
Pose chain_link_pose(std::size_t index, double seconds);

/// Renders `2 * value` the way a person would type it: integers without a
/// fractional part.
std::string doubled_text(double value);

}  // namespace viewsync::demos
