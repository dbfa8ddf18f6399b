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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "viewsync/error.hpp"
#include "viewsync/schema/value.hpp"

namespace viewsync {

using ClientId = std::uint64_t;

/// Field name -> value. Ordered so that equal payloads compare and print
/// identically.
using Payload = std::map<std::string, Value, std::less<>>;

/// Where a message is delivered: every client (and the late-joiner snapshot),
/// or one client's overlay only.
struct Scope {
    std::optional<ClientId> client;

    static Scope broadcast() { return {}; }
    static Scope to_client(ClientId id) { return Scope{id}; }
    bool is_broadcast() const { return !client.has_value(); }

    friend bool operator==(const Scope&, const Scope&) = default;
};

struct Message {
    std::string type;
    Payload payload;
    Scope scope;

    friend bool operator==(const Message&, const Message&) = default;

    /// Typed field access; throws SchemaError when absent or of another kind.
    template <class T>
    const T& field(std::string_view name) const {
        auto it = payload.find(name);
        if (it == payload.end()) {
            throw SchemaError("message " + type + " has no field '" + std::string(name) + "'");
        }
        const T* v = std::get_if<T>(&it->second);
        if (v == nullptr) {
            throw SchemaError("field '" + std::string(name) + "' of " + type + " has kind " +
                              std::string(to_string(kind_of(it->second))));
        }
        return *v;
    }

    bool has(std::string_view name) const { return payload.find(name) != payload.end(); }
};

enum class DedupPolicy : std::uint8_t { none, by_key, purge_prefix };

/// Which part of the mirrored state a message supersedes. Determines the
/// redundancy key a buffer files it under.
enum class KeyClass : std::uint8_t {
    node_upsert,
    node_prop,
    node_remove_purge,
    gui_add,
    gui_prop,
    gui_value,
    gui_remove_purge,
    camera_set,
    other,
};

std::string_view to_string(DedupPolicy policy);
std::string_view to_string(KeyClass cls);

struct FieldSpec {
    std::string name;
    FieldType type;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct MessageType {
    std::string name;
    std::vector<FieldSpec> fields;
    DedupPolicy dedup = DedupPolicy::none;
    KeyClass key_class = KeyClass::other;

    const FieldSpec* find_field(std::string_view field) const;

    friend bool operator==(const MessageType&, const MessageType&) = default;
};

/// Immutable set of message types. The process-wide registry returned by
/// `protocol::registry()` is the only one the server and clients speak; custom
/// registries exist for schema tooling and tests.
class MessageRegistry {
public:
    explicit MessageRegistry(std::vector<MessageType> types);

    const MessageType* find(std::string_view name) const;
    const MessageType& at(std::string_view name) const;
    std::span<const MessageType> types() const { return types_; }
    std::size_t size() const { return types_.size(); }

    /// Checks the payload against the registered type and returns it with
    /// every field coerced to its declared representation. Throws SchemaError.
    Message validate(Message message) const;

private:
    std::vector<MessageType> types_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

}  // namespace viewsync
