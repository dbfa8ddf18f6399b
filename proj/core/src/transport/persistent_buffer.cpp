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

#include "viewsync/transport/persistent_buffer.hpp"

#include <set>

#include "viewsync/protocol.hpp"

namespace viewsync {

namespace {

bool path_within(std::string_view candidate, std::string_view path) {
    return candidate == path ||
           (candidate.size() > path.size() && candidate.starts_with(path) && candidate[path.size()] == '/');
}

std::string target_of(const Message& message, KeyClass cls) {
    switch (cls) {
        case KeyClass::node_upsert:
        case KeyClass::node_prop:
        case KeyClass::node_remove_purge: return message.field<std::string>("path");
        case KeyClass::gui_add:
        case KeyClass::gui_prop:
        case KeyClass::gui_value:
        case KeyClass::gui_remove_purge: return std::to_string(message.field<std::int64_t>("uid"));
        default: return {};
    }
}

}  // namespace

std::string to_string(const RedundancyKey& key) {
    std::string out(to_string(key.cls));
    if (!key.target.empty()) out += ":" + key.target;
    if (!key.sub.empty()) out += ":" + key.sub;
    return out;
}

std::optional<RedundancyKey> redundancy_key(const MessageRegistry& registry, const Message& message) {
    const MessageType& type = registry.at(message.type);
    if (type.dedup == DedupPolicy::none) return std::nullopt;
    RedundancyKey key{type.key_class, target_of(message, type.key_class), {}};
    if (type.key_class == KeyClass::node_prop || type.key_class == KeyClass::gui_prop) {
        key.sub = message.field<std::string>("prop");
    }
    return key;
}

PersistentBuffer::PersistentBuffer(BufferRole role) : PersistentBuffer(role, protocol::registry()) {}

PersistentBuffer::PersistentBuffer(BufferRole role, const MessageRegistry& registry)
    : registry_(&registry), role_(role) {}

void PersistentBuffer::erase_where(const auto& predicate) {
    for (auto it = entries_.begin(); it != entries_.end();) {
        if (predicate(it->second)) {
            index_.erase(it->second.key);
            it = entries_.erase(it);
        } else {
            ++it;
        }
    }
}

void PersistentBuffer::put(RedundancyKey key, Message message) {
    if (auto it = index_.find(key); it != index_.end()) {
        entries_.at(it->second).message = std::move(message);
        return;
    }
    const std::uint64_t position = next_position_++;
    index_.emplace(key, position);
    entries_.emplace(position, Entry{std::move(key), std::move(message)});
}

void PersistentBuffer::apply(Message message) {
    std::optional<RedundancyKey> key = redundancy_key(*registry_, message);
    if (!key) {
        put(RedundancyKey{KeyClass::other, {}, std::to_string(next_synthetic_++)}, std::move(message));
        return;
    }

    switch (key->cls) {
        case KeyClass::node_upsert: {
            const std::string& path = key->target;
            erase_where([&](const Entry& e) { return e.key.cls == KeyClass::node_prop && e.key.target == path; });
            break;
        }
        case KeyClass::node_remove_purge: {
            const std::string& path = key->target;
            erase_where([&](const Entry& e) {
                const bool node_entry = e.key.cls == KeyClass::node_upsert || e.key.cls == KeyClass::node_prop ||
                                        e.key.cls == KeyClass::node_remove_purge;
                return node_entry && path_within(e.key.target, path);
            });
            if (role_ == BufferRole::persistent) return;
            break;
        }
        case KeyClass::gui_remove_purge: {
            std::set<std::string> doomed{key->target};
            for (bool grew = true; grew;) {
                grew = false;
                for (const auto& [position, e] : entries_) {
                    if (e.key.cls != KeyClass::gui_add || doomed.contains(e.key.target)) continue;
                    const auto container = std::to_string(e.message.field<std::int64_t>("container"));
                    if (doomed.contains(container)) {
                        doomed.insert(e.key.target);
                        grew = true;
                    }
                }
            }
            erase_where([&](const Entry& e) {
                const bool gui_entry = e.key.cls == KeyClass::gui_add || e.key.cls == KeyClass::gui_prop ||
                                       e.key.cls == KeyClass::gui_value || e.key.cls == KeyClass::gui_remove_purge;
                return gui_entry && doomed.contains(e.key.target);
            });
            if (role_ == BufferRole::persistent) return;
            break;
        }
        default: break;
    }
    put(std::move(*key), std::move(message));
}

std::vector<Message> PersistentBuffer::messages() const {
    std::vector<Message> out;
    out.reserve(entries_.size());
    for (const auto& [position, e] : entries_) out.push_back(e.message);
    return out;
}

std::vector<RedundancyKey> PersistentBuffer::keys() const {
    std::vector<RedundancyKey> out;
    out.reserve(entries_.size());
    for (const auto& [position, e] : entries_) out.push_back(e.key);
    return out;
}

std::vector<Message> PersistentBuffer::drain() {
    std::vector<Message> out;
    out.reserve(entries_.size());
    for (auto& [position, e] : entries_) out.push_back(std::move(e.message));
    entries_.clear();
    index_.clear();
    return out;
}

const Message* PersistentBuffer::find(const RedundancyKey& key) const {
    auto it = index_.find(key);
    return it == index_.end() ? nullptr : &entries_.at(it->second).message;
}

std::vector<Message> snapshot_for_new_client(const PersistentBuffer& global, const PersistentBuffer& overlay) {
    std::vector<Message> out = global.messages();
    for (auto& m : overlay.messages()) out.push_back(std::move(m));
    return out;
}

}  // namespace viewsync
