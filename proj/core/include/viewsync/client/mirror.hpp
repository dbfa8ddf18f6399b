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

#include <cstdint>
#include <string>

#include "viewsync/gui/gui_registry.hpp"
#include "viewsync/scene/scene_graph.hpp"
#include "viewsync/schema/codec.hpp"
#include "viewsync/transport/camera_state.hpp"

namespace viewsync {

/// A client's copy of server state, driven only by applied messages. Uses
/// the same scene-graph and GUI state machines as the server, in replay mode.
class ClientMirror {
public:
    /// Applies one server-to-client message. Writes addressed to paths or
    /// uids the mirror does not hold are ignored, which makes snapshot replay
    /// idempotent. Throws ProtocolError for client-to-server message types.
    void apply(const Message& message);

    /// Applies a batch in order. Throws ProtocolError unless
    /// `batch.seq > last_seq()`.
    void apply_batch(const Batch& batch);

    const SceneGraph& scene() const { return scene_; }
    const GuiRegistry& gui() const { return gui_; }
    const CameraState& camera() const { return camera_; }
    std::uint64_t last_seq() const { return last_seq_; }

    /// Deterministic text rendering: nodes by path, GUI elements by uid,
    /// reals with 9 significant digits, blobs as length plus digest.
    std::string canonical_state() const;

private:
    SceneGraph scene_;
    GuiRegistry gui_;
    CameraState camera_;
    std::uint64_t last_seq_ = 0;
};

/// The canonical text rendering used by ClientMirror::canonical_state, for
/// any scene/GUI/camera triple (e.g. server-side state in tests).
std::string canonical_state(const SceneGraph& scene, const GuiRegistry& gui, const CameraState& camera);

}  // namespace viewsync
