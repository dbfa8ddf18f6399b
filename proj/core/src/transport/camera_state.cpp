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

#include "viewsync/transport/camera_state.hpp"

#include <cmath>
#include <numbers>

#include "viewsync/error.hpp"

namespace viewsync {

namespace {

void require_finite(const auto& values, const char* what) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw ValidationError(std::string("camera ") + what + " must be finite");
        }
    }
}

}  // namespace

CameraState validated(CameraState camera) {
    camera.pose.wxyz = normalized(camera.pose.wxyz);
    require_finite(camera.pose.position, "position");
    require_finite(camera.look_at, "look_at");
    if (!(camera.fov > 0.0 && camera.fov < std::numbers::pi)) {
        throw ValidationError("camera fov must lie in (0, pi), got " + std::to_string(camera.fov));
    }
    if (!(camera.aspect > 0.0) || !std::isfinite(camera.aspect)) {
        throw ValidationError("camera aspect must be positive, got " + std::to_string(camera.aspect));
    }
    return camera;
}

}  // namespace viewsync
