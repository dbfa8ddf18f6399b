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

#include "viewsync/schema/message.hpp"

namespace viewsync {

std::string_view to_string(DedupPolicy policy) {
    switch (policy) {
        case DedupPolicy::none: return "none";
        case DedupPolicy::by_key: return "by_key";
        case DedupPolicy::purge_prefix: return "purge_prefix";
    }
    return "?";
}

std::string_view to_string(KeyClass cls) {
    switch (cls) {
        case KeyClass::node_upsert: return "node_upsert";
        case KeyClass::node_prop: return "node_prop";
        case KeyClass::node_remove_purge: return "node_remove_purge";
        case KeyClass::gui_add: return "gui_add";
        case KeyClass::gui_prop: return "gui_prop";
        case KeyClass::gui_value: return "gui_value";
        case KeyClass::gui_remove_purge: return "gui_remove_purge";
        case KeyClass::camera_set: return "camera_set";
        case KeyClass::other: return "other";
    }
    return "?";
}

const FieldSpec* MessageType::find_field(std::string_view field) const {
    for (const auto& f : fields) {
        if (f.name == field) return &f;
    }
    return nullptr;
}

MessageRegistry::MessageRegistry(std::vector<MessageType> types) : types_(std::move(types)) {
    for (std::size_t i = 0; i < types_.size(); ++i) {
        const auto& t = types_[i];
        if (!index_.emplace(t.name, i).second) {
            throw SchemaError("duplicate message type '" + t.name + "'");
        }
        for (std::size_t a = 0; a < t.fields.size(); ++a) {
            if (t.fields[a].name == "type") {
                throw SchemaError("message type '" + t.name + "' declares reserved field 'type'");
            }
            for (std::size_t b = a + 1; b < t.fields.size(); ++b) {
                if (t.fields[a].name == t.fields[b].name) {
                    throw SchemaError("message type '" + t.name + "' declares field '" + t.fields[a].name +
                                      "' twice");
                }
            }
        }
    }
}

const MessageType* MessageRegistry::find(std::string_view name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &types_[it->second];
}

const MessageType& MessageRegistry::at(std::string_view name) const {
    const auto* t = find(name);
    if (t == nullptr) {
        throw SchemaError("unregistered message type '" + std::string(name) + "'");
    }
    return *t;
}

Message MessageRegistry::validate(Message message) const {
    const MessageType& type = at(message.type);
    for (const auto& [name, value] : message.payload) {
        if (type.find_field(name) == nullptr) {
            throw SchemaError(message.type + " has no field '" + name + "'");
        }
    }
    for (const auto& field : type.fields) {
        auto it = message.payload.find(field.name);
        if (it == message.payload.end()) {
            if (!field.type.optional) {
                throw SchemaError(message.type + " is missing field '" + field.name + "'");
            }
            continue;
        }
        try {
            it->second = coerce(field.type, std::move(it->second));
        } catch (const ValidationError& e) {
            throw SchemaError(message.type + "." + field.name + ": " + e.what());
        }
    }
    return message;
}

}  // namespace viewsync
