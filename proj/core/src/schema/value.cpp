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

#include "viewsync/schema/value.hpp"

#include <cmath>
#include <sstream>

#include "viewsync/error.hpp"

namespace viewsync {

std::string_view to_string(ValueKind kind) {
    switch (kind) {
        case ValueKind::boolean: return "bool";
        case ValueKind::integer: return "int";
        case ValueKind::real: return "float";
        case ValueKind::text: return "string";
        case ValueKind::bytes: return "bytes";
        case ValueKind::float32_array: return "float32[]";
        case ValueKind::real_list: return "list<float>";
        case ValueKind::integer_list: return "list<int>";
        case ValueKind::text_list: return "list<string>";
    }
    return "?";
}

namespace {

std::string_view element_spelling(ValueKind kind) {
    switch (kind) {
        case ValueKind::real_list: return "float";
        case ValueKind::integer_list: return "int";
        case ValueKind::text_list: return "string";
        default: return to_string(kind);
    }
}

bool is_list(ValueKind kind) {
    return kind == ValueKind::real_list || kind == ValueKind::integer_list || kind == ValueKind::text_list;
}

std::size_t list_size(const Value& v) {
    return std::visit(
        [](const auto& x) -> std::size_t {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::vector<double>> || std::is_same_v<T, std::vector<std::int64_t>> ||
                          std::is_same_v<T, std::vector<std::string>>) {
                return x.size();
            } else {
                return 0;
            }
        },
        v);
}

void require_finite(double x) {
    if (!std::isfinite(x)) {
        throw ValidationError("non-finite number");
    }
}

}  // namespace

std::string FieldType::spelling() const {
    std::string base;
    if (!enum_values.empty()) {
        base = "enum<";
        for (std::size_t i = 0; i < enum_values.size(); ++i) {
            if (i > 0) base += '|';
            base += enum_values[i];
        }
        base += '>';
    } else if (tuple_size > 0 && is_list(kind)) {
        base = "tuple<" + std::string(element_spelling(kind)) + "," + std::to_string(tuple_size) + ">";
    } else {
        base = std::string(to_string(kind));
    }
    return optional ? "optional<" + base + ">" : base;
}

namespace types {
FieldType boolean() { return {ValueKind::boolean}; }
FieldType integer() { return {ValueKind::integer}; }
FieldType real() { return {ValueKind::real}; }
FieldType text() { return {ValueKind::text}; }
FieldType bytes() { return {ValueKind::bytes}; }
FieldType float32_array() { return {ValueKind::float32_array}; }
FieldType real_list() { return {ValueKind::real_list}; }
FieldType integer_list() { return {ValueKind::integer_list}; }
FieldType text_list() { return {ValueKind::text_list}; }
FieldType real_tuple(std::size_t n) { return {ValueKind::real_list, n}; }
FieldType integer_tuple(std::size_t n) { return {ValueKind::integer_list, n}; }
FieldType enumeration(std::vector<std::string> values) { return {ValueKind::text, 0, false, std::move(values)}; }
FieldType optional(FieldType inner) {
    inner.optional = true;
    return inner;
}
}  // namespace types

Value coerce(const FieldType& type, Value value) {
    const ValueKind have = kind_of(value);
    if (have != type.kind) {
        if (type.kind == ValueKind::real && have == ValueKind::integer) {
            value = static_cast<double>(std::get<std::int64_t>(value));
        } else if (type.kind == ValueKind::real_list && have == ValueKind::integer_list) {
            const auto& ints = std::get<std::vector<std::int64_t>>(value);
            value = std::vector<double>(ints.begin(), ints.end());
        } else {
            throw ValidationError("expected " + type.spelling() + ", got " + std::string(to_string(have)));
        }
    }

    if (type.tuple_size > 0 && list_size(value) != type.tuple_size) {
        throw ValidationError("expected " + type.spelling() + ", got " + std::to_string(list_size(value)) +
                              " elements");
    }

    if (const auto* d = std::get_if<double>(&value)) {
        require_finite(*d);
    } else if (const auto* ds = std::get_if<std::vector<double>>(&value)) {
        for (double x : *ds) require_finite(x);
    } else if (const auto* fs = std::get_if<std::vector<float>>(&value)) {
        for (float x : *fs) require_finite(x);
    } else if (const auto* s = std::get_if<std::string>(&value); s != nullptr && !type.enum_values.empty()) {
        bool member = false;
        for (const auto& e : type.enum_values) member = member || e == *s;
        if (!member) {
            throw ValidationError("'" + *s + "' is not one of " + type.spelling());
        }
    }
    return value;
}

std::string describe(const Value& value) {
    std::ostringstream out;
    std::visit(
        [&out](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, bool>) {
                out << (x ? "true" : "false");
            } else if constexpr (std::is_same_v<T, std::int64_t> || std::is_same_v<T, double>) {
                out << x;
            } else if constexpr (std::is_same_v<T, std::string>) {
                out << '"' << x << '"';
            } else if constexpr (std::is_same_v<T, Bytes>) {
                out << "bytes[" << x.data.size() << "]";
            } else if constexpr (std::is_same_v<T, std::vector<float>>) {
                out << "float32[" << x.size() << "]";
            } else {
                out << '[';
                for (std::size_t i = 0; i < x.size(); ++i) {
                    if (i > 0) out << ", ";
                    if constexpr (std::is_same_v<T, std::vector<std::string>>) {
                        out << '"' << x[i] << '"';
                    } else {
                        out << x[i];
                    }
                }
                out << ']';
            }
        },
        value);
    return out.str();
}

}  // namespace viewsync
