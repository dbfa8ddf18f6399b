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

#include "viewsync/schema/schema_document.hpp"

#include <array>
#include <memory>
#include <nlohmann/json.hpp>
#include <sstream>

#include "util/digest.hpp"

namespace viewsync {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json types_json(const std::vector<MessageType>& types) {
    ordered_json out = ordered_json::array();
    for (const auto& t : types) {
        ordered_json fields = ordered_json::array();
        for (const auto& f : t.fields) {
            fields.push_back({{"name", f.name}, {"type", f.type.spelling()}});
        }
        out.push_back({{"name", t.name}, {"dedup", std::string(to_string(t.dedup))}, {"fields", std::move(fields)}});
    }
    return out;
}


std::string ts_type(const FieldType& type) {
    auto element = [](ValueKind kind) -> std::string {
        switch (kind) {
            case ValueKind::real_list:
            case ValueKind::integer_list: return "number";
            case ValueKind::text_list: return "string";
            default: return "";
        }
    };
    if (!type.enum_values.empty()) {
        std::string out;
        for (std::size_t i = 0; i < type.enum_values.size(); ++i) {
            if (i > 0) out += " | ";
            out += "\"" + type.enum_values[i] + "\"";
        }
        return out;
    }
    switch (type.kind) {
        case ValueKind::boolean: return "boolean";
        case ValueKind::integer:
        case ValueKind::real: return "number";
        case ValueKind::text: return "string";
        case ValueKind::bytes:
        case ValueKind::float32_array: return "Uint8Array";
        case ValueKind::real_list:
        case ValueKind::integer_list:
        case ValueKind::text_list: {
            const std::string e = element(type.kind);
            if (type.tuple_size == 0) return e + "[]";
            std::string out = "[";
            for (std::size_t i = 0; i < type.tuple_size; ++i) {
                if (i > 0) out += ", ";
                out += e;
            }
            return out + "]";
        }
    }
    throw SchemaError("no TypeScript mapping for field type " + type.spelling());
}

}  // namespace

std::string SchemaDocument::to_json() const {
    ordered_json doc;
    doc["version"] = version;
    doc["types"] = types_json(types);
    return doc.dump(2) + "\n";
}

SchemaDocument export_schema(const MessageRegistry& registry, std::string version) {
    SchemaDocument doc;
    doc.version = std::move(version);
    doc.types.assign(registry.types().begin(), registry.types().end());
    return doc;
}

std::string schema_hash(const SchemaDocument& doc) { return detail::sha256_hex(types_json(doc.types).dump()); }

std::string generate_client_declarations(const SchemaDocument& doc) {
    std::ostringstream out;
    out << "// Generated by `viewsync gen-schema`. Do not edit.\n";
    out << "// Schema version: " << doc.version << "\n\n";
    out << "export const SCHEMA_HASH = \"" << schema_hash(doc) << "\";\n";
    if (doc.types.empty()) return out.str();

    for (const auto& t : doc.types) {
        out << "\n/** dedup: " << to_string(t.dedup) << " */\n";
        out << "export interface " << t.name << " {\n";
        out << "  type: \"" << t.name << "\";\n";
        for (const auto& f : t.fields) {
            out << "  " << f.name << (f.type.optional ? "?" : "") << ": " << ts_type(f.type) << ";\n";
        }
        out << "}\n";
    }
    out << "\nexport type Message =\n";
    for (std::size_t i = 0; i < doc.types.size(); ++i) {
        out << "  | " << doc.types[i].name << (i + 1 == doc.types.size() ? ";\n" : "\n");
    }
    out << "\nexport type MessageType = Message[\"type\"];\n";
    return out.str();
}

}  // namespace viewsync
