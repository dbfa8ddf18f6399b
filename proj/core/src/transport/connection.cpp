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

#include "viewsync/transport/connection.hpp"

#include <algorithm>

#include "viewsync/schema/codec.hpp"

namespace viewsync {

ClientConnection::ClientConnection(ClientId id, const MessageRegistry& registry)
    : id_(id),
      registry_(&registry),
      pending_(BufferRole::pending, registry),
      overlay_(BufferRole::persistent, registry) {}

std::optional<OutgoingFrame> ClientConnection::flush_tick() {
    if (pending_.empty() || unacked_.size() >= kAckWindow) return std::nullopt;
    const std::vector<Message> messages = pending_.drain();
    OutgoingFrame frame;
    frame.seq = next_seq_++;
    frame.message_count = messages.size();
    frame.bytes = encode_batch(*registry_, frame.seq, messages);
    unacked_.insert(frame.seq);
    stats_.batches_sent += 1;
    stats_.messages_sent += frame.message_count;
    stats_.bytes_sent += frame.bytes.size();
    stats_.max_outstanding = std::max(stats_.max_outstanding, unacked_.size());
    return frame;
}

bool ClientConnection::on_ack(std::uint64_t seq) {
    if (unacked_.erase(seq) == 0) {
        stats_.ignored_acks += 1;
        return false;
    }
    return true;
}

}  // namespace viewsync
