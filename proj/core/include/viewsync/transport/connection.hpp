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

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "viewsync/transport/camera_state.hpp"
#include "viewsync/transport/persistent_buffer.hpp"

namespace viewsync {

/// Maximum sent-but-unacknowledged batches per connection.
inline constexpr std::size_t kAckWindow = 2;
/// Period of the flush timer.
inline constexpr std::chrono::milliseconds kFlushInterval{20};

struct OutgoingFrame {
    std::uint64_t seq = 0;
    std::size_t message_count = 0;
    std::vector<std::uint8_t> bytes;
};

struct FlowStats {
    std::uint64_t batches_sent = 0;
    std::uint64_t messages_sent = 0;
    std::uint64_t bytes_sent = 0;
    std::size_t max_outstanding = 0;
    std::uint64_t ignored_acks = 0;
};

/// Per-connection synchronization state. Pure bookkeeping; the server owns
/// one per client and serializes access.
class ClientConnection {
public:
    explicit ClientConnection(ClientId id, const MessageRegistry& registry);

    ClientId id() const { return id_; }

    /// Queues a message for this client. Deduplicates against messages that
    /// are still waiting to be sent.
    void enqueue(Message message) { pending_.apply(std::move(message)); }

    /// Drains `pending` into one encoded batch unless it is empty or the ack
    /// window is full.
    std::optional<OutgoingFrame> flush_tick();

    /// Marks `seq` acknowledged. Unknown or repeated seqs are ignored and
    /// return false.
    bool on_ack(std::uint64_t seq);

    std::size_t outstanding() const { return unacked_.size(); }
    std::uint64_t next_seq() const { return next_seq_; }
    const PersistentBuffer& pending() const { return pending_; }
    PersistentBuffer& overlay() { return overlay_; }
    const PersistentBuffer& overlay() const { return overlay_; }
    const FlowStats& stats() const { return stats_; }

    const CameraState& camera() const { return camera_; }
    void set_camera(const CameraState& camera) { camera_ = camera; }

private:
    ClientId id_;
    const MessageRegistry* registry_;
    PersistentBuffer pending_;
    PersistentBuffer overlay_;
    std::set<std::uint64_t> unacked_;
    std::uint64_t next_seq_ = 1;
    CameraState camera_;
    FlowStats stats_;
};

}  // namespace viewsync
