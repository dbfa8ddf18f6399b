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

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "viewsync/protocol.hpp"
#include "viewsync/schema/schema_document.hpp"

namespace viewsync {
namespace {

MessageRegistry small(std::string field = "x", DedupPolicy dedup = DedupPolicy::none,
                      FieldType type = types::real()) {
    return MessageRegistry({MessageType{"M", {{field, type}}, dedup, KeyClass::other},
                            MessageType{"N", {{"tag", types::optional(types::enumeration({"a", "b"}))}}}});
}

std::string hash_of(const MessageRegistry& reg, std::string version = "v1") {
    return schema_hash(export_schema(reg, std::move(version)));
}

TEST(SchemaHash, IsLowercaseHexSha256) {
    const std::string h = hash_of(protocol::registry());
    ASSERT_EQ(h.size(), 64u);
    for (char c : h) EXPECT_TRUE((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')) << h;
}

TEST(SchemaHash, IsDeterministicAndIgnoresVersion) {
    EXPECT_EQ(hash_of(small()), hash_of(small()));
    EXPECT_EQ(hash_of(small(), "v1"), hash_of(small(), "v2"));
}

TEST(SchemaHash, CoversNamesTypesAndDedup) {
    const std::string base = hash_of(small());
    EXPECT_NE(base, hash_of(small("y")));
    EXPECT_NE(base, hash_of(small("x", DedupPolicy::by_key)));
    EXPECT_NE(base, hash_of(small("x", DedupPolicy::none, types::integer())));
    EXPECT_NE(base, hash_of(small("x", DedupPolicy::none, types::optional(types::real()))));
}

TEST(SchemaDocument, JsonListsTypesInRegistrationOrder) {
    const auto doc = export_schema(small(), "v9");
    const auto json = nlohmann::json::parse(doc.to_json());
    EXPECT_EQ(json["version"], "v9");
    ASSERT_EQ(json["types"].size(), 2u);
    EXPECT_EQ(json["types"][0]["name"], "M");
    EXPECT_EQ(json["types"][1]["fields"][0]["type"], "optional<enum<a|b>>");
    EXPECT_EQ(doc.to_json(), export_schema(small(), "v9").to_json());
}

TEST(SchemaDocument, ProtocolRegistryCoversEveryFamily) {
    const auto doc = export_schema(protocol::registry(), std::string(protocol::kSchemaVersion));
    for (const auto& type : doc.types) {
        EXPECT_TRUE(protocol::classify(type.name).has_value()) << type.name;
    }
    for (NodeKind k : kAllNodeKinds) EXPECT_NE(protocol::registry().find(protocol::node_upsert_type(k)), nullptr);
    for (GuiKind k : kAllGuiKinds) EXPECT_NE(protocol::registry().find(protocol::gui_add_type(k)), nullptr);
}

TEST(ClientDeclarations, EmitInterfacesUnionAndHash) {
    const auto doc = export_schema(small(), "v1");
    const std::string ts = generate_client_declarations(doc);
    EXPECT_NE(ts.find("export const SCHEMA_HASH = \"" + schema_hash(doc) + "\";"), std::string::npos) << ts;
    EXPECT_NE(ts.find("export interface M {"), std::string::npos) << ts;
    EXPECT_NE(ts.find("  type: \"M\";"), std::string::npos) << ts;
    EXPECT_NE(ts.find("  x: number;"), std::string::npos) << ts;
    EXPECT_NE(ts.find("  tag?: \"a\" | \"b\";"), std::string::npos) << ts;
    EXPECT_NE(ts.find("| N"), std::string::npos) << ts;
}

TEST(ClientDeclarations, MapTuplesAndBlobs) {
    const MessageRegistry reg({MessageType{"T",
                                           {{"q", types::real_tuple(3)},
                                            {"ids", types::integer_list()},
                                            {"blob", types::bytes()},
                                            {"pts", types::float32_array()}}}});
    const std::string ts = generate_client_declarations(export_schema(reg, "v1"));
    EXPECT_NE(ts.find("q: [number, number, number];"), std::string::npos) << ts;
    EXPECT_NE(ts.find("ids: number[];"), std::string::npos) << ts;
    EXPECT_NE(ts.find("blob: Uint8Array;"), std::string::npos) << ts;
    EXPECT_NE(ts.find("pts: Uint8Array;"), std::string::npos) << ts;
}

}  // namespace
}  // namespace viewsync
