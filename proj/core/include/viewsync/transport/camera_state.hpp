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

#include <numbers>

#include "viewsync/scene/pose.hpp"

namespace viewsync {

/// Viewpoint of one client: camera pose, vertical field of view (radians),
/// aspect ratio (width / height), and the orbit target.
struct CameraState {
    Pose pose{{1.0, 0.0, 0.0, 0.0}, {3.0, 3.0, 3.0}};
    double fov = std::numbers::pi / 4.0;
    double aspect = 1.0;
    Vec3 look_at{0.0, 0.0, 0.0};

    friend bool operator==(const CameraState&, const CameraState&) = default;
};

/// Normalizes the quaternion and checks fov in (0, pi), aspect > 0, finite
/// values. Throws ValidationError.
CameraState validated(CameraState camera);

}  // namespace viewsync
