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

// Minimal MessagePack reader/writer covering the subset the wire format
// uses: nil, bool, int, float, str, bin, array, map.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace viewsync::msgpack {

class Writer {
public:
    void nil();
    void boolean(bool v);
    void integer(std::int64_t v);
    void uinteger(std::uint64_t v);
    void real(double v);
    void str(std::string_view v);
    void bin(std::span<const std::uint8_t> v);
    void array_header(std::size_t n);
    void map_header(std::size_t n);

    void reserve(std::size_t n) { out_.reserve(n); }
    std::vector<std::uint8_t> take() { return std::move(out_); }

private:
    void put(std::uint8_t b) { out_.push_back(b); }
    void put_be(std::uint64_t v, int bytes);

    std::vector<std::uint8_t> out_;
};

struct Node {
    enum class Type : std::uint8_t { nil, boolean, integer, uinteger, real, str, bin, array, map };

    Type type = Type::nil;
    std::size_t offset = 0;
    bool b = false;
    std::int64_t i = 0;
    std::uint64_t u = 0;
    double d = 0.0;
    std::string s;                      // str
    std::vector<std::uint8_t> bytes;    // bin
    std::vector<Node> items;            // array elements, or map key/value pairs flattened

    bool is_integral() const { return type == Type::integer || type == Type::uinteger; }
};

std::string_view type_name(Node::Type t);

/// Parses one value. Throws DecodeError with the failing byte offset.
class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> data) : data_(data) {}

    Node read();
    bool at_end() const { return pos_ == data_.size(); }
    std::size_t position() const { return pos_; }

private:
    Node read_node(int depth);
    std::uint8_t byte();
    std::uint64_t be(int bytes);
    void need(std::size_t n) const;

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

}  // namespace viewsync::msgpack
