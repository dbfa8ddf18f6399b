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

namespace viewsync {

using Quaternion = std::array<double, 4>;  // w, x, y, z
using Vec3 = std::array<double, 3>;

/// Rigid transform: rotation as a unit quaternion (scalar first) followed by
/// a translation in meters.
struct Pose {
    Quaternion wxyz{1.0, 0.0, 0.0, 0.0};
    Vec3 position{0.0, 0.0, 0.0};

    static Pose identity() { return {}; }

    friend bool operator==(const Pose&, const Pose&) = default;
};

/// Returns `q / |q|`. Throws ValidationError for non-finite components or a
/// norm below 1e-8.
Quaternion normalized(const Quaternion& q);

Quaternion multiply(const Quaternion& a, const Quaternion& b);
Vec3 rotate(const Quaternion& q, const Vec3& v);

/// (q, t) ∘ (q', t') = (q·q', t + rotate(q, t')).
Pose compose(const Pose& parent, const Pose& local);

}  // namespace viewsync
