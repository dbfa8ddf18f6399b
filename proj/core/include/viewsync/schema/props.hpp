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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "viewsync/schema/value.hpp"

namespace viewsync {

/// How strictly a state machine checks an incoming mutation.
///
/// `validated` enforces every invariant and is what the server applies to
/// user calls. `replay` is used by mirrors applying wire messages: property
/// types and shapes are still checked, but relations between properties are
/// not, because a deduplicated snapshot can deliver the latest value of each
/// property in an order where intermediate states would be inconsistent.
enum class ApplyMode : std::uint8_t { validated, replay };

using PropMap = std::map<std::string, Value, std::less<>>;

/// Single-property constraints beyond the wire type.
enum class Constraint : std::uint8_t {
    none,
    positive,          // real (or every element of a real list) > 0
    non_negative,      // real >= 0
    open_half_turn,    // real in (0, pi)
    rgb,               // exactly three integers in [0, 255]
    rgb_or_empty,      // rgb, or an empty list meaning "theme default"
    triples,           // element count divisible by 3
    segment_pairs,     // element count divisible by 6 (two xyz endpoints)
    index_triples,     // integer count divisible by 3, all >= 0
    at_least_one,      // integer >= 1
    subdivision_level, // integer in [0, 6]
    non_empty,         // list has at least one element
};

/// One named, typed property of a node or GUI kind.
struct PropSpec {
    std::string name;
    FieldType type;
    Value default_value;
    Constraint constraint = Constraint::none;
};

using PropSchema = std::vector<PropSpec>;

const PropSpec* find_prop(const PropSchema& schema, std::string_view name);

/// Coerces `value` to the spec's type and checks its constraint. Throws
/// ValidationError naming the property.
Value check_prop(const PropSpec& spec, Value value);

/// Validates every given property, rejects unknown names, and fills missing
/// properties with their defaults.
PropMap complete_props(const PropSchema& schema, PropMap given, std::string_view owner);

}  // namespace viewsync
