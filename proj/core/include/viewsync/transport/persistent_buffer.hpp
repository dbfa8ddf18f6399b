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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "viewsync/schema/message.hpp"

namespace viewsync {

/// Identifies the piece of mirrored state a message writes. A later message
/// with the same key supersedes an earlier one.
struct RedundancyKey {
    KeyClass cls = KeyClass::other;
    std::string target;  // scene path or GUI uid
    std::string sub;     // property name, or a synthetic id for unkeyed messages

    friend bool operator==(const RedundancyKey&, const RedundancyKey&) = default;
    friend auto operator<=>(const RedundancyKey&, const RedundancyKey&) = default;
};

std::string to_string(const RedundancyKey& key);

/// Key for `message`, or nullopt when its type has dedup policy `none`.
std::optional<RedundancyKey> redundancy_key(const MessageRegistry& registry, const Message& message);

/// What a buffer does with removal messages.
///
/// A `persistent` buffer (late-joiner state) drops everything under the
/// removed path or uid and does not keep the removal. A `pending` buffer
/// (not yet sent to one client) drops the same entries but keeps the removal
/// so the connected client still learns about it.
enum class BufferRole : std::uint8_t { persistent, pending };

/// Insertion-ordered, key-deduplicated message store.
///
/// A message whose key is already present replaces that entry in place; the
/// entry keeps the position of its first insertion. A node upsert also drops
/// stored property writes for the same path, since the upsert carries every
/// property.
class PersistentBuffer {
public:
    explicit PersistentBuffer(BufferRole role = BufferRole::persistent);
    PersistentBuffer(BufferRole role, const MessageRegistry& registry);

    void apply(Message message);

    /// Entries in buffer order.
    std::vector<Message> messages() const;
    std::vector<RedundancyKey> keys() const;

    /// Returns the entries in order and leaves the buffer empty.
    std::vector<Message> drain();

    const Message* find(const RedundancyKey& key) const;
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    BufferRole role() const { return role_; }

private:
    struct Entry {
        RedundancyKey key;
        Message message;
    };

    void erase_where(const auto& predicate);
    void put(RedundancyKey key, Message message);

    const MessageRegistry* registry_;
    BufferRole role_;
    std::map<std::uint64_t, Entry> entries_;             // position -> entry
    std::map<RedundancyKey, std::uint64_t> index_;       // key -> position
    std::uint64_t next_position_ = 0;
    std::uint64_t next_synthetic_ = 0;
};

/// Messages a new client replays to reconstruct state: shared entries in
/// order, then that client's overlay entries in order.
std::vector<Message> snapshot_for_new_client(const PersistentBuffer& global, const PersistentBuffer& overlay);

}  // namespace viewsync
