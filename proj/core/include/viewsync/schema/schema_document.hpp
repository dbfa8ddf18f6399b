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

#include <string>
#include <vector>

#include "viewsync/schema/message.hpp"

namespace viewsync {

/// Exportable description of a registry: every type with its fields and
/// dedup policy, in registration order.
struct SchemaDocument {
    std::string version;
    std::vector<MessageType> types;

    /// Canonical JSON rendering. Deterministic: same registry, same bytes.
    std::string to_json() const;
};

SchemaDocument export_schema(const MessageRegistry& registry, std::string version);

/// SHA-256 (lowercase hex, 64 chars) over the wire-relevant content: type
/// names, field names, field types, dedup policies. The version string is
/// not covered.
std::string schema_hash(const SchemaDocument& doc);

/// TypeScript declarations: one interface per message type, a union of all
/// of them, and a SCHEMA_HASH constant. Throws SchemaError for a field type
/// the generator cannot map.
std::string generate_client_declarations(const SchemaDocument& doc);

}  // namespace viewsync
