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

#include "viewsync/gui/gui_kind.hpp"

#include <algorithm>

#include "viewsync/error.hpp"

namespace viewsync {

namespace {

using C = Constraint;

PropSchema input_props() {
    return {
        {"label", types::text(), std::string{}},
        {"hint", types::text(), std::string{}},
        {"disabled", types::boolean(), false},
        {"visible", types::boolean(), true},
    };
}

PropSchema with(PropSchema base, std::initializer_list<PropSpec> extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    return base;
}

PropSchema make_schema(GuiKind kind) {
    switch (kind) {
        case GuiKind::button:
            return with(input_props(), {{"color", types::integer_list(), std::vector<std::int64_t>{}, C::rgb_or_empty}});
        case GuiKind::checkbox:
        case GuiKind::text:
        case GuiKind::rgb: return input_props();
        case GuiKind::slider:
            return with(input_props(), {
                                           {"min", types::real(), 0.0},
                                           {"max", types::real(), 1.0},
                                           {"step", types::real(), 0.01, C::positive},
                                       });
        case GuiKind::number:
            return with(input_props(), {
                                           {"min", types::real(), -1e9},
                                           {"max", types::real(), 1e9},
                                           {"step", types::real(), 1.0, C::positive},
                                       });
        case GuiKind::dropdown:
            return with(input_props(),
                        {{"options", types::text_list(), std::vector<std::string>{""}, C::non_empty}});
        case GuiKind::vector3: return with(input_props(), {{"step", types::real(), 0.1, C::positive}});
        case GuiKind::folder:
            return {
                {"label", types::text(), std::string{}},
                {"visible", types::boolean(), true},
                {"expanded", types::boolean(), true},
            };
        case GuiKind::tab_group: return {{"visible", types::boolean(), true}};
        case GuiKind::tab:
            return {
                {"label", types::text(), std::string{}},
                {"visible", types::boolean(), true},
            };
        case GuiKind::markdown:
            return {
                {"content", types::text(), std::string{}},
                {"visible", types::boolean(), true},
            };
    }
    return {};
}

}  // namespace

std::string_view to_string(GuiKind kind) {
    switch (kind) {
        case GuiKind::button: return "button";
        case GuiKind::checkbox: return "checkbox";
        case GuiKind::slider: return "slider";
        case GuiKind::number: return "number";
        case GuiKind::text: return "text";
        case GuiKind::dropdown: return "dropdown";
        case GuiKind::rgb: return "rgb";
        case GuiKind::vector3: return "vector3";
        case GuiKind::folder: return "folder";
        case GuiKind::tab_group: return "tab_group";
        case GuiKind::tab: return "tab";
        case GuiKind::markdown: return "markdown";
    }
    return "?";
}

std::optional<GuiKind> gui_kind_from_string(std::string_view name) {
    for (GuiKind k : kAllGuiKinds) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

const PropSchema& gui_prop_schema(GuiKind kind) {
    static const auto schemas = [] {
        std::array<PropSchema, kAllGuiKinds.size()> out;
        for (GuiKind k : kAllGuiKinds) out[static_cast<std::size_t>(k)] = make_schema(k);
        return out;
    }();
    return schemas[static_cast<std::size_t>(kind)];
}

std::optional<FieldType> gui_value_type(GuiKind kind) {
    switch (kind) {
        case GuiKind::button: return types::integer();
        case GuiKind::checkbox: return types::boolean();
        case GuiKind::slider:
        case GuiKind::number: return types::real();
        case GuiKind::text:
        case GuiKind::dropdown: return types::text();
        case GuiKind::rgb: return types::integer_tuple(3);
        case GuiKind::vector3: return types::real_tuple(3);
        case GuiKind::folder:
        case GuiKind::tab_group:
        case GuiKind::tab:
        case GuiKind::markdown: return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Value> gui_default_value(GuiKind kind, const PropMap& props) {
    switch (kind) {
        case GuiKind::button: return std::int64_t{0};
        case GuiKind::checkbox: return false;
        case GuiKind::slider:
        case GuiKind::number: {
            const double lo = std::get<double>(props.find("min")->second);
            const double hi = std::get<double>(props.find("max")->second);
            return std::clamp(0.0, lo, std::max(lo, hi));
        }
        case GuiKind::text: return std::string{};
        case GuiKind::dropdown: return std::get<std::vector<std::string>>(props.find("options")->second).front();
        case GuiKind::rgb: return std::vector<std::int64_t>{0, 0, 0};
        case GuiKind::vector3: return std::vector<double>{0.0, 0.0, 0.0};
        default: return std::nullopt;
    }
}

bool is_container(GuiKind kind) {
    return kind == GuiKind::folder || kind == GuiKind::tab_group || kind == GuiKind::tab;
}

}  // namespace viewsync
