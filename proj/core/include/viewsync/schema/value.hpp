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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace viewsync {

/// Raw binary blob (colors, image pixels). Distinct from std::string so that
/// text and bytes never convert into each other by accident.
struct Bytes {
    std::vector<std::uint8_t> data;

    friend bool operator==(const Bytes&, const Bytes&) = default;
};

/// The closed set of value shapes that may appear in a message field or in an
/// element property. The variant index matches `ValueKind`.
using Value = std::variant<bool,
                           std::int64_t,
                           double,
                           std::string,
                           Bytes,
                           std::vector<float>,
                           std::vector<double>,
                           std::vector<std::int64_t>,
                           std::vector<std::string>>;

enum class ValueKind : std::uint8_t {
    boolean = 0,
    integer,
    real,
    text,
    bytes,
    float32_array,
    real_list,
    integer_list,
    text_list,
};

inline ValueKind kind_of(const Value& v) { return static_cast<ValueKind>(v.index()); }

std::string_view to_string(ValueKind kind);

/// Wire-level type of a field.
///
/// `tuple_size` > 0 pins the length of a list kind (e.g. a quaternion is a
/// real_list with tuple_size 4). `enum_values` non-empty restricts a text
/// field to that set. `optional` fields may be absent from a payload.
struct FieldType {
    ValueKind kind = ValueKind::boolean;
    std::size_t tuple_size = 0;
    bool optional = false;
    std::vector<std::string> enum_values;

    friend bool operator==(const FieldType&, const FieldType&) = default;

    /// Canonical type spelling used in schema documents and hashes, e.g.
    /// "tuple<float,3>", "optional<string>", "enum<a|b>".
    std::string spelling() const;
};

namespace types {
FieldType boolean();
FieldType integer();
FieldType real();
FieldType text();
FieldType bytes();
FieldType float32_array();
FieldType real_list();
FieldType integer_list();
FieldType text_list();
FieldType real_tuple(std::size_t n);
FieldType integer_tuple(std::size_t n);
FieldType enumeration(std::vector<std::string> values);
FieldType optional(FieldType inner);
}  // namespace types

/// Converts `value` to the representation required by `type`, or throws
/// ValidationError. Integers are accepted where reals are expected (and
/// integer lists where real lists are expected); everything else must match
/// exactly. Tuple lengths and enum membership are checked. Non-finite reals
/// are rejected.
Value coerce(const FieldType& type, Value value);

/// Human-readable rendering for error messages and logs.
std::string describe(const Value& value);

template <class T>
const T* get_if(const Value& v) {
    return std::get_if<T>(&v);
}

}  // namespace viewsync
