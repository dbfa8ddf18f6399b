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
#include <span>
#include <vector>

#include "viewsync/schema/message.hpp"

namespace viewsync {

/// One wire frame: `[seq, [message, ...]]` in MessagePack, where each message
/// is a string-keyed map holding "type" followed by its payload fields in
/// schema order. Reals are float64, float32 arrays and byte blobs are bin.
struct Batch {
    std::uint64_t seq = 0;
    std::vector<Message> messages;
};

/// Validates every message against `registry` (SchemaError on failure) and
/// encodes the batch.
std::vector<std::uint8_t> encode_batch(const MessageRegistry& registry, std::uint64_t seq,
                                       std::span<const Message> messages);

/// Decodes a frame. Fields not declared by the message type are skipped.
/// Throws DecodeError (with byte offset) for malformed input and SchemaError
/// naming the value of "type" for unregistered types. Nothing is returned on
/// failure; a batch is all or nothing.
Batch decode_batch(const MessageRegistry& registry, std::span<const std::uint8_t> frame);

}  // namespace viewsync
