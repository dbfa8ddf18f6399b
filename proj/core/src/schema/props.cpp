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

#include "viewsync/schema/props.hpp"

#include <numbers>

#include "viewsync/error.hpp"

namespace viewsync {

namespace {

[[noreturn]] void fail(const PropSpec& spec, const std::string& why) {
    throw ValidationError("property '" + spec.name + "': " + why);
}

std::size_t element_count(const Value& v) {
    if (const auto* b = std::get_if<Bytes>(&v)) return b->data.size();
    if (const auto* f = std::get_if<std::vector<float>>(&v)) return f->size();
    if (const auto* d = std::get_if<std::vector<double>>(&v)) return d->size();
    if (const auto* i = std::get_if<std::vector<std::int64_t>>(&v)) return i->size();
    if (const auto* s = std::get_if<std::vector<std::string>>(&v)) return s->size();
    return 0;
}

void check_rgb(const PropSpec& spec, const Value& v) {
    const auto* rgb = std::get_if<std::vector<std::int64_t>>(&v);
    if (rgb == nullptr || rgb->size() != 3) fail(spec, "expected three integers");
    for (auto c : *rgb) {
        if (c < 0 || c > 255) fail(spec, "color component " + std::to_string(c) + " outside [0, 255]");
    }
}

void check_constraint(const PropSpec& spec, const Value& v) {
    switch (spec.constraint) {
        case Constraint::none: return;
        case Constraint::positive:
            if (const auto* d = std::get_if<double>(&v)) {
                if (!(*d > 0.0)) fail(spec, "must be > 0");
            } else if (const auto* ds = std::get_if<std::vector<double>>(&v)) {
                for (double x : *ds) {
                    if (!(x > 0.0)) fail(spec, "every component must be > 0");
                }
            }
            return;
        case Constraint::non_negative:
            if (const auto* d = std::get_if<double>(&v); d != nullptr && *d < 0.0) fail(spec, "must be >= 0");
            return;
        case Constraint::open_half_turn:
            if (const auto* d = std::get_if<double>(&v); d != nullptr && !(*d > 0.0 && *d < std::numbers::pi)) {
                fail(spec, "must lie in (0, pi)");
            }
            return;
        case Constraint::rgb: check_rgb(spec, v); return;
        case Constraint::rgb_or_empty:
            if (element_count(v) != 0) check_rgb(spec, v);
            return;
        case Constraint::triples:
            if (element_count(v) % 3 != 0) fail(spec, "element count must be a multiple of 3");
            return;
        case Constraint::segment_pairs:
            if (element_count(v) % 6 != 0) fail(spec, "element count must be a multiple of 6");
            return;
        case Constraint::index_triples: {
            if (element_count(v) % 3 != 0) fail(spec, "index count must be a multiple of 3");
            if (const auto* is = std::get_if<std::vector<std::int64_t>>(&v)) {
                for (auto i : *is) {
                    if (i < 0) fail(spec, "indices must be >= 0");
                }
            }
            return;
        }
        case Constraint::at_least_one:
            if (const auto* i = std::get_if<std::int64_t>(&v); i != nullptr && *i < 1) fail(spec, "must be >= 1");
            return;
        case Constraint::subdivision_level:
            if (const auto* i = std::get_if<std::int64_t>(&v); i != nullptr && (*i < 0 || *i > 6)) {
                fail(spec, "must lie in [0, 6]");
            }
            return;
        case Constraint::non_empty:
            if (element_count(v) == 0) fail(spec, "must not be empty");
            return;
    }
}

}  // namespace

const PropSpec* find_prop(const PropSchema& schema, std::string_view name) {
    for (const auto& spec : schema) {
        if (spec.name == name) return &spec;
    }
    return nullptr;
}

Value check_prop(const PropSpec& spec, Value value) {
    try {
        value = coerce(spec.type, std::move(value));
    } catch (const ValidationError& e) {
        fail(spec, e.what());
    }
    check_constraint(spec, value);
    return value;
}

PropMap complete_props(const PropSchema& schema, PropMap given, std::string_view owner) {
    for (const auto& [name, value] : given) {
        if (find_prop(schema, name) == nullptr) {
            throw ValidationError(std::string(owner) + " has no property '" + name + "'");
        }
    }
    PropMap out;
    for (const auto& spec : schema) {
        auto it = given.find(spec.name);
        out.emplace(spec.name, it == given.end() ? spec.default_value : check_prop(spec, std::move(it->second)));
    }
    return out;
}

}  // namespace viewsync
