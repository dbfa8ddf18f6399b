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

#include "viewsync/schema/codec.hpp"

#include <bit>
#include <cstring>

#include "msgpack.hpp"

namespace viewsync {

static_assert(std::endian::native == std::endian::little, "float32 blobs are copied as little-endian");

namespace {

void write_value(msgpack::Writer& w, const Value& value) {
    std::visit(
        [&w](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, bool>) {
                w.boolean(x);
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                w.integer(x);
            } else if constexpr (std::is_same_v<T, double>) {
                w.real(x);
            } else if constexpr (std::is_same_v<T, std::string>) {
                w.str(x);
            } else if constexpr (std::is_same_v<T, Bytes>) {
                w.bin(x.data);
            } else if constexpr (std::is_same_v<T, std::vector<float>>) {
                w.bin({reinterpret_cast<const std::uint8_t*>(x.data()), x.size() * sizeof(float)});
            } else {
                w.array_header(x.size());
                for (const auto& e : x) {
                    if constexpr (std::is_same_v<T, std::vector<double>>) {
                        w.real(e);
                    } else if constexpr (std::is_same_v<T, std::vector<std::int64_t>>) {
                        w.integer(e);
                    } else {
                        w.str(e);
                    }
                }
            }
        },
        value);
}

[[noreturn]] void mismatch(const msgpack::Node& node, const FieldSpec& field) {
    throw DecodeError("field '" + field.name + "' expects " + field.type.spelling() + ", frame has " +
                          std::string(msgpack::type_name(node.type)),
                      node.offset);
}

double as_real(const msgpack::Node& node, const FieldSpec& field) {
    switch (node.type) {
        case msgpack::Node::Type::real: return node.d;
        case msgpack::Node::Type::integer: return static_cast<double>(node.i);
        case msgpack::Node::Type::uinteger: return static_cast<double>(node.u);
        default: mismatch(node, field);
    }
}

std::int64_t as_integer(const msgpack::Node& node, const FieldSpec& field) {
    if (node.type != msgpack::Node::Type::integer) mismatch(node, field);
    return node.i;
}

Value read_value(const msgpack::Node& node, const FieldSpec& field) {
    using T = msgpack::Node::Type;
    switch (field.type.kind) {
        case ValueKind::boolean:
            if (node.type != T::boolean) mismatch(node, field);
            return node.b;
        case ValueKind::integer: return as_integer(node, field);
        case ValueKind::real: return as_real(node, field);
        case ValueKind::text:
            if (node.type != T::str) mismatch(node, field);
            return node.s;
        case ValueKind::bytes:
            if (node.type != T::bin) mismatch(node, field);
            return Bytes{node.bytes};
        case ValueKind::float32_array: {
            if (node.type != T::bin) mismatch(node, field);
            if (node.bytes.size() % sizeof(float) != 0) {
                throw DecodeError("field '" + field.name + "': float32 blob length " +
                                      std::to_string(node.bytes.size()) + " is not a multiple of 4",
                                  node.offset);
            }
            std::vector<float> out(node.bytes.size() / sizeof(float));
            std::memcpy(out.data(), node.bytes.data(), node.bytes.size());
            return out;
        }
        case ValueKind::real_list: {
            if (node.type != T::array) mismatch(node, field);
            std::vector<double> out;
            out.reserve(node.items.size());
            for (const auto& item : node.items) out.push_back(as_real(item, field));
            return out;
        }
        case ValueKind::integer_list: {
            if (node.type != T::array) mismatch(node, field);
            std::vector<std::int64_t> out;
            out.reserve(node.items.size());
            for (const auto& item : node.items) out.push_back(as_integer(item, field));
            return out;
        }
        case ValueKind::text_list: {
            if (node.type != T::array) mismatch(node, field);
            std::vector<std::string> out;
            out.reserve(node.items.size());
            for (const auto& item : node.items) {
                if (item.type != T::str) mismatch(item, field);
                out.push_back(item.s);
            }
            return out;
        }
    }
    mismatch(node, field);
}

Message read_message(const MessageRegistry& registry, const msgpack::Node& node) {
    using T = msgpack::Node::Type;
    if (node.type != T::map) {
        throw DecodeError("message must be a map, frame has " + std::string(msgpack::type_name(node.type)),
                          node.offset);
    }
    const msgpack::Node* type_node = nullptr;
    for (std::size_t k = 0; k + 1 < node.items.size(); k += 2) {
        const auto& key = node.items[k];
        if (key.type != T::str) {
            throw DecodeError("message keys must be strings", key.offset);
        }
        if (key.s == "type") type_node = &node.items[k + 1];
    }
    if (type_node == nullptr) {
        throw DecodeError("message has no \"type\" field", node.offset);
    }
    if (type_node->type != T::str) {
        throw DecodeError("\"type\" must be a string", type_node->offset);
    }
    const MessageType* type = registry.find(type_node->s);
    if (type == nullptr) {
        throw SchemaError("unknown message type \"" + type_node->s + "\" (at byte offset " +
                          std::to_string(type_node->offset) + ")");
    }

    Message message;
    message.type = type->name;
    for (std::size_t k = 0; k + 1 < node.items.size(); k += 2) {
        const auto& key = node.items[k];
        const auto& value = node.items[k + 1];
        if (key.s == "type") continue;
        const FieldSpec* field = type->find_field(key.s);
        if (field == nullptr) continue;  // forward compatibility
        if (field->type.optional && value.type == T::nil) continue;
        Value v = read_value(value, *field);
        try {
            v = coerce(field->type, std::move(v));
        } catch (const ValidationError& e) {
            throw DecodeError("field '" + field->name + "': " + e.what(), value.offset);
        }
        message.payload.insert_or_assign(key.s, std::move(v));
    }
    for (const auto& field : type->fields) {
        if (!field.type.optional && !message.payload.contains(field.name)) {
            throw DecodeError(type->name + " is missing field '" + field.name + "'", node.offset);
        }
    }
    return message;
}

}  // namespace

std::vector<std::uint8_t> encode_batch(const MessageRegistry& registry, std::uint64_t seq,
                                       std::span<const Message> messages) {
    msgpack::Writer w;
    w.array_header(2);
    w.uinteger(seq);
    w.array_header(messages.size());
    for (const auto& original : messages) {
        const Message message = registry.validate(original);
        const MessageType& type = registry.at(message.type);
        w.map_header(1 + message.payload.size());
        w.str("type");
        w.str(message.type);
        for (const auto& field : type.fields) {
            auto it = message.payload.find(field.name);
            if (it == message.payload.end()) continue;
            w.str(field.name);
            write_value(w, it->second);
        }
    }
    return w.take();
}

Batch decode_batch(const MessageRegistry& registry, std::span<const std::uint8_t> frame) {
    using T = msgpack::Node::Type;
    msgpack::Reader reader(frame);
    const msgpack::Node root = reader.read();
    if (!reader.at_end()) {
        throw DecodeError("trailing bytes after batch", reader.position());
    }
    if (root.type != T::array || root.items.size() != 2) {
        throw DecodeError("batch must be a 2-element array [seq, messages]", root.offset);
    }
    const auto& seq = root.items[0];
    if (seq.type != T::integer && seq.type != T::uinteger) {
        throw DecodeError("batch seq must be an unsigned integer", seq.offset);
    }
    if (seq.type == T::integer && seq.i < 0) {
        throw DecodeError("batch seq must be non-negative", seq.offset);
    }
    const auto& list = root.items[1];
    if (list.type != T::array) {
        throw DecodeError("batch messages must be an array", list.offset);
    }

    Batch batch;
    batch.seq = seq.type == T::integer ? static_cast<std::uint64_t>(seq.i) : seq.u;
    batch.messages.reserve(list.items.size());
    for (const auto& item : list.items) batch.messages.push_back(read_message(registry, item));
    return batch;
}

}  // namespace viewsync
