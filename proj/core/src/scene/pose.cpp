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

#include "viewsync/scene/pose.hpp"

#include <cmath>

#include "viewsync/error.hpp"

namespace viewsync {

Quaternion normalized(const Quaternion& q) {
    double norm2 = 0.0;
    for (double c : q) {
        if (!std::isfinite(c)) {
            throw ValidationError("quaternion has a non-finite component");
        }
        norm2 += c * c;
    }
    const double norm = std::sqrt(norm2);
    if (norm < 1e-8) {
        throw ValidationError("quaternion norm below 1e-8");
    }
    return {q[0] / norm, q[1] / norm, q[2] / norm, q[3] / norm};
}

Quaternion multiply(const Quaternion& a, const Quaternion& b) {
    const auto [aw, ax, ay, az] = a;
    const auto [bw, bx, by, bz] = b;
    return {
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    };
}

Vec3 rotate(const Quaternion& q, const Vec3& v) {
    // v' = v + 2w(u x v) + 2 u x (u x v), u = (x, y, z)
    const auto [w, x, y, z] = q;
    const Vec3 t{2.0 * (y * v[2] - z * v[1]), 2.0 * (z * v[0] - x * v[2]), 2.0 * (x * v[1] - y * v[0])};
    return {
        v[0] + w * t[0] + (y * t[2] - z * t[1]),
        v[1] + w * t[1] + (z * t[0] - x * t[2]),
        v[2] + w * t[2] + (x * t[1] - y * t[0]),
    };
}

Pose compose(const Pose& parent, const Pose& local) {
    const Vec3 offset = rotate(parent.wxyz, local.position);
    return {
        multiply(parent.wxyz, local.wxyz),
        {parent.position[0] + offset[0], parent.position[1] + offset[1], parent.position[2] + offset[2]},
    };
}

}  // namespace viewsync
