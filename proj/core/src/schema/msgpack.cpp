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

#include "msgpack.hpp"

#include <bit>
#include <cstring>
#include <limits>

#include "viewsync/error.hpp"

namespace viewsync::msgpack {

namespace {
constexpr int kMaxDepth = 32;
}

void Writer::put_be(std::uint64_t v, int bytes) {
    for (int shift = (bytes - 1) * 8; shift >= 0; shift -= 8) {
        put(static_cast<std::uint8_t>(v >> shift));
    }
}

void Writer::nil() { put(0xc0); }

void Writer::boolean(bool v) { put(v ? 0xc3 : 0xc2); }

void Writer::integer(std::int64_t v) {
    if (v >= 0) {
        uinteger(static_cast<std::uint64_t>(v));
    } else if (v >= -32) {
        put(static_cast<std::uint8_t>(v));
    } else if (v >= std::numeric_limits<std::int8_t>::min()) {
        put(0xd0);
        put_be(static_cast<std::uint8_t>(v), 1);
    } else if (v >= std::numeric_limits<std::int16_t>::min()) {
        put(0xd1);
        put_be(static_cast<std::uint16_t>(v), 2);
    } else if (v >= std::numeric_limits<std::int32_t>::min()) {
        put(0xd2);
        put_be(static_cast<std::uint32_t>(v), 4);
    } else {
        put(0xd3);
        put_be(static_cast<std::uint64_t>(v), 8);
    }
}

void Writer::uinteger(std::uint64_t v) {
    if (v < 0x80) {
        put(static_cast<std::uint8_t>(v));
    } else if (v <= 0xff) {
        put(0xcc);
        put_be(v, 1);
    } else if (v <= 0xffff) {
        put(0xcd);
        put_be(v, 2);
    } else if (v <= 0xffffffffULL) {
        put(0xce);
        put_be(v, 4);
    } else {
        put(0xcf);
        put_be(v, 8);
    }
}

void Writer::real(double v) {
    put(0xcb);
    put_be(std::bit_cast<std::uint64_t>(v), 8);
}

void Writer::str(std::string_view v) {
    const auto n = v.size();
    if (n < 32) {
        put(static_cast<std::uint8_t>(0xa0 | n));
    } else if (n <= 0xff) {
        put(0xd9);
        put_be(n, 1);
    } else if (n <= 0xffff) {
        put(0xda);
        put_be(n, 2);
    } else {
        put(0xdb);
        put_be(n, 4);
    }
    out_.insert(out_.end(), v.begin(), v.end());
}

void Writer::bin(std::span<const std::uint8_t> v) {
    const auto n = v.size();
    if (n <= 0xff) {
        put(0xc4);
        put_be(n, 1);
    } else if (n <= 0xffff) {
        put(0xc5);
        put_be(n, 2);
    } else {
        put(0xc6);
        put_be(n, 4);
    }
    out_.insert(out_.end(), v.begin(), v.end());
}

void Writer::array_header(std::size_t n) {
    if (n < 16) {
        put(static_cast<std::uint8_t>(0x90 | n));
    } else if (n <= 0xffff) {
        put(0xdc);
        put_be(n, 2);
    } else {
        put(0xdd);
        put_be(n, 4);
    }
}

void Writer::map_header(std::size_t n) {
    if (n < 16) {
        put(static_cast<std::uint8_t>(0x80 | n));
    } else if (n <= 0xffff) {
        put(0xde);
        put_be(n, 2);
    } else {
        put(0xdf);
        put_be(n, 4);
    }
}

std::string_view type_name(Node::Type t) {
    switch (t) {
        case Node::Type::nil: return "nil";
        case Node::Type::boolean: return "bool";
        case Node::Type::integer:
        case Node::Type::uinteger: return "int";
        case Node::Type::real: return "float";
        case Node::Type::str: return "str";
        case Node::Type::bin: return "bin";
        case Node::Type::array: return "array";
        case Node::Type::map: return "map";
    }
    return "?";
}

void Reader::need(std::size_t n) const {
    if (data_.size() - pos_ < n) {
        throw DecodeError("truncated frame: need " + std::to_string(n) + " more bytes", pos_);
    }
}

std::uint8_t Reader::byte() {
    need(1);
    return data_[pos_++];
}

std::uint64_t Reader::be(int bytes) {
    need(static_cast<std::size_t>(bytes));
    std::uint64_t v = 0;
    for (int k = 0; k < bytes; ++k) v = (v << 8) | data_[pos_++];
    return v;
}

Node Reader::read() { return read_node(0); }

Node Reader::read_node(int depth) {
    if (depth > kMaxDepth) {
        throw DecodeError("nesting too deep", pos_);
    }
    Node node;
    node.offset = pos_;
    const std::uint8_t tag = byte();

    auto read_str = [&](std::size_t n) {
        need(n);
        node.type = Node::Type::str;
        node.s.assign(reinterpret_cast<const char*>(data_.data() + pos_), n);
        pos_ += n;
    };
    auto read_bin = [&](std::size_t n) {
        need(n);
        node.type = Node::Type::bin;
        node.bytes.assign(data_.begin() + static_cast<std::ptrdiff_t>(pos_),
                          data_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
        pos_ += n;
    };
    auto read_items = [&](std::size_t n, Node::Type type) {
        // Every element takes at least one byte; reject impossible counts
        // before allocating.
        need(n);
        node.type = type;
        node.items.reserve(n);
        for (std::size_t k = 0; k < n; ++k) node.items.push_back(read_node(depth + 1));
    };
    auto set_uint = [&](std::uint64_t v) {
        node.type = Node::Type::uinteger;
        node.u = v;
        if (v <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
            node.type = Node::Type::integer;
            node.i = static_cast<std::int64_t>(v);
        }
    };
    auto set_int = [&](std::int64_t v) {
        node.type = Node::Type::integer;
        node.i = v;
    };

    if (tag <= 0x7f) {
        set_uint(tag);
    } else if (tag >= 0xe0) {
        set_int(static_cast<std::int8_t>(tag));
    } else if ((tag & 0xe0) == 0xa0) {
        read_str(tag & 0x1f);
    } else if ((tag & 0xf0) == 0x90) {
        read_items(tag & 0x0f, Node::Type::array);
    } else if ((tag & 0xf0) == 0x80) {
        read_items(2 * static_cast<std::size_t>(tag & 0x0f), Node::Type::map);
    } else {
        switch (tag) {
            case 0xc0: node.type = Node::Type::nil; break;
            case 0xc2: node.type = Node::Type::boolean; node.b = false; break;
            case 0xc3: node.type = Node::Type::boolean; node.b = true; break;
            case 0xc4: read_bin(be(1)); break;
            case 0xc5: read_bin(be(2)); break;
            case 0xc6: read_bin(be(4)); break;
            case 0xca:
                node.type = Node::Type::real;
                node.d = std::bit_cast<float>(static_cast<std::uint32_t>(be(4)));
                break;
            case 0xcb:
                node.type = Node::Type::real;
                node.d = std::bit_cast<double>(be(8));
                break;
            case 0xcc: set_uint(be(1)); break;
            case 0xcd: set_uint(be(2)); break;
            case 0xce: set_uint(be(4)); break;
            case 0xcf: set_uint(be(8)); break;
            case 0xd0: set_int(static_cast<std::int8_t>(be(1))); break;
            case 0xd1: set_int(static_cast<std::int16_t>(be(2))); break;
            case 0xd2: set_int(static_cast<std::int32_t>(be(4))); break;
            case 0xd3: set_int(static_cast<std::int64_t>(be(8))); break;
            case 0xd9: read_str(be(1)); break;
            case 0xda: read_str(be(2)); break;
            case 0xdb: read_str(be(4)); break;
            case 0xdc: read_items(be(2), Node::Type::array); break;
            case 0xdd: read_items(be(4), Node::Type::array); break;
            case 0xde: read_items(2 * be(2), Node::Type::map); break;
            case 0xdf: read_items(2 * be(4), Node::Type::map); break;
            default: throw DecodeError("unsupported MessagePack tag 0x" + [tag] {
                         const char* hex = "0123456789abcdef";
                         return std::string{hex[tag >> 4], hex[tag & 0xf]};
                     }(), node.offset);
        }
    }
    return node;
}

}  // namespace viewsync::msgpack
