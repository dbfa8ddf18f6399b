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

#include <array>
#include <optional>
#include <string_view>

#include "viewsync/schema/props.hpp"

namespace viewsync {

enum class GuiKind : std::uint8_t {
    button,
    checkbox,
    slider,
    number,
    text,
    dropdown,
    rgb,
    vector3,
    folder,
    tab_group,
    tab,
    markdown,
};

inline constexpr std::array kAllGuiKinds{
    GuiKind::button, GuiKind::checkbox, GuiKind::slider, GuiKind::number,    GuiKind::text, GuiKind::dropdown,
    GuiKind::rgb,    GuiKind::vector3,  GuiKind::folder, GuiKind::tab_group, GuiKind::tab,  GuiKind::markdown,
};

std::string_view to_string(GuiKind kind);
std::optional<GuiKind> gui_kind_from_string(std::string_view name);

const PropSchema& gui_prop_schema(GuiKind kind);

/// Wire type of the element's value, or nullopt for kinds without one
/// (containers, markdown). Buttons carry their click count.
std::optional<FieldType> gui_value_type(GuiKind kind);

/// Value a freshly added element takes when none is given.
std::optional<Value> gui_default_value(GuiKind kind, const PropMap& props);

/// Kinds that may contain other elements.
bool is_container(GuiKind kind);

}  // namespace viewsync
