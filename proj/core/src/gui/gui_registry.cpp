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

#include "viewsync/gui/gui_registry.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "viewsync/error.hpp"

namespace viewsync {

namespace {

std::string element_name(GuiKind kind, Uid uid) { return std::string(to_string(kind)) + " #" + std::to_string(uid); }

double real_prop(const PropMap& props, std::string_view name) { return std::get<double>(props.find(name)->second); }

bool has_bounds(GuiKind kind) { return kind == GuiKind::slider || kind == GuiKind::number; }

}  // namespace

void check_gui_element(GuiKind kind, const PropMap& props, const std::optional<Value>& value) {
    const auto value_type = gui_value_type(kind);
    if (value_type.has_value() != value.has_value()) {
        throw ValidationError(std::string(to_string(kind)) + (value_type ? " requires a value" : " takes no value"));
    }
    switch (kind) {
        case GuiKind::slider:
        case GuiKind::number: {
            const double lo = real_prop(props, "min");
            const double hi = real_prop(props, "max");
            if (lo > hi) {
                throw ValidationError(std::string(to_string(kind)) + ": min " + std::to_string(lo) + " exceeds max " +
                                      std::to_string(hi));
            }
            const double v = std::get<double>(*value);
            if (v < lo || v > hi) {
                throw ValidationError(std::string(to_string(kind)) + ": value " + std::to_string(v) +
                                      " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
            }
            return;
        }
        case GuiKind::dropdown: {
            const auto& options = std::get<std::vector<std::string>>(props.find("options")->second);
            const auto& v = std::get<std::string>(*value);
            if (std::find(options.begin(), options.end(), v) == options.end()) {
                throw ValidationError("dropdown: '" + v + "' is not one of its options");
            }
            return;
        }
        case GuiKind::rgb:
            for (auto c : std::get<std::vector<std::int64_t>>(*value)) {
                if (c < 0 || c > 255) {
                    throw ValidationError("rgb: component " + std::to_string(c) + " outside [0, 255]");
                }
            }
            return;
        case GuiKind::button:
            if (std::get<std::int64_t>(*value) < 0) {
                throw ValidationError("button: click count must be >= 0");
            }
            return;
        default: return;
    }
}

void GuiRegistry::check_container(GuiKind kind, Uid container) const {
    if (container == kRootContainer) {
        if (kind == GuiKind::tab) {
            throw ValidationError("a tab must be placed in a tab group");
        }
        return;
    }
    const GuiElement* parent = find(container);
    if (parent == nullptr) {
        throw NotFoundError("no GUI container #" + std::to_string(container));
    }
    if (!is_container(parent->kind)) {
        throw ValidationError(element_name(parent->kind, container) + " is not a container");
    }
    if ((parent->kind == GuiKind::tab_group) != (kind == GuiKind::tab)) {
        throw ValidationError("tab groups hold tabs, and tabs live only in tab groups");
    }
}

Uid GuiRegistry::add_element(GuiKind kind, PropMap props, std::optional<Value> initial_value, Uid container,
                             std::optional<Uid> uid, std::optional<std::int64_t> order, ApplyMode mode) {
    const Uid id = uid.value_or(last_uid_ + 1);
    if (id <= kRootContainer) {
        throw ValidationError("GUI uids must be positive");
    }
    const bool replacing = elements_.contains(id);
    if (replacing && mode == ApplyMode::validated) {
        throw ValidationError("GUI uid #" + std::to_string(id) + " is already in use");
    }
    check_container(kind, container);

    props = complete_props(gui_prop_schema(kind), std::move(props), element_name(kind, id));
    std::optional<Value> value = std::move(initial_value);
    const auto value_type = gui_value_type(kind);
    if (!value && value_type) {
        value = gui_default_value(kind, props);
    }
    if (value && value_type) {
        try {
            value = coerce(*value_type, std::move(*value));
        } catch (const ValidationError& e) {
            throw ValidationError(element_name(kind, id) + ": value: " + e.what());
        }
    }
    if (mode == ApplyMode::validated) {
        check_gui_element(kind, props, value);
    } else if (value.has_value() != value_type.has_value()) {
        throw ValidationError(element_name(kind, id) + ": value presence does not match kind");
    }

    if (replacing) {
        GuiElement& e = elements_[id];
        e.kind = kind;
        e.props = std::move(props);
        e.value = std::move(value);
    } else {
        const std::int64_t position = order.value_or(next_order_);
        elements_.emplace(id, GuiElement{id, kind, container, position, std::move(props), std::move(value)});
        next_order_ = std::max(next_order_, position + 1);
    }
    last_uid_ = std::max(last_uid_, id);
    return id;
}

bool GuiRegistry::set_element_prop(Uid uid, std::string_view prop, Value value, ApplyMode mode) {
    GuiElement& e = mutable_at(uid);
    const PropSpec* spec = find_prop(gui_prop_schema(e.kind), prop);
    if (spec == nullptr) {
        throw ValidationError(element_name(e.kind, uid) + " has no property '" + std::string(prop) + "'");
    }
    value = check_prop(*spec, std::move(value));
    if (mode == ApplyMode::replay) {
        e.props.find(prop)->second = std::move(value);
        return false;
    }

    PropMap props = e.props;
    props.find(prop)->second = std::move(value);
    std::optional<Value> new_value = e.value;
    if (has_bounds(e.kind)) {
        const double lo = real_prop(props, "min");
        const double hi = real_prop(props, "max");
        if (lo > hi) {
            throw ValidationError(element_name(e.kind, uid) + ": min " + std::to_string(lo) + " exceeds max " +
                                  std::to_string(hi));
        }
        new_value = std::clamp(std::get<double>(*new_value), lo, hi);
    } else if (e.kind == GuiKind::dropdown) {
        const auto& options = std::get<std::vector<std::string>>(props.find("options")->second);
        if (std::find(options.begin(), options.end(), std::get<std::string>(*new_value)) == options.end()) {
            new_value = options.front();
        }
    }
    check_gui_element(e.kind, props, new_value);
    const bool value_changed = new_value != e.value;
    e.props = std::move(props);
    e.value = std::move(new_value);
    return value_changed;
}

bool GuiRegistry::set_value_from_server(Uid uid, Value value, ApplyMode mode) {
    GuiElement& e = mutable_at(uid);
    const auto value_type = gui_value_type(e.kind);
    if (!value_type) {
        throw ValidationError(element_name(e.kind, uid) + " has no value");
    }
    try {
        value = coerce(*value_type, std::move(value));
    } catch (const ValidationError& err) {
        throw ValidationError(element_name(e.kind, uid) + ": value: " + err.what());
    }
    if (mode == ApplyMode::validated) {
        check_gui_element(e.kind, e.props, value);
    }
    if (e.value == value) {
        return false;
    }
    e.value = std::move(value);
    return true;
}

ClientUpdateResult GuiRegistry::apply_client_update(const GuiEvent& event) {
    GuiElement& e = mutable_at(event.uid);
    const auto value_type = gui_value_type(e.kind);
    if (!value_type) {
        throw ProtocolError("client sent a value for " + element_name(e.kind, event.uid) + ", which has none");
    }

    Value value;
    if (e.kind == GuiKind::button) {
        value = std::get<std::int64_t>(*e.value) + 1;
    } else {
        try {
            value = coerce(*value_type, event.value);
        } catch (const ValidationError& err) {
            throw ProtocolError("ill-typed update for " + element_name(e.kind, event.uid) + ": " + err.what());
        }
        if (has_bounds(e.kind)) {
            value = std::clamp(std::get<double>(value), real_prop(e.props, "min"), real_prop(e.props, "max"));
        }
        try {
            check_gui_element(e.kind, e.props, value);
        } catch (const ValidationError& err) {
            throw ProtocolError("rejected update for " + element_name(e.kind, event.uid) + ": " + err.what());
        }
    }
    e.value = value;

    ClientUpdateResult result;
    result.event = event;
    result.event.value = std::move(value);
    if (auto it = callbacks_.find(event.uid); it != callbacks_.end()) {
        for (const auto& [id, callback] : it->second) result.callbacks.push_back(callback);
    }
    return result;
}

std::vector<Uid> GuiRegistry::remove_element(Uid uid) {
    if (!elements_.contains(uid)) {
        throw NotFoundError("no GUI element #" + std::to_string(uid));
    }
    std::vector<Uid> removed{uid};
    std::set<Uid> doomed{uid};
    std::deque<Uid> queue{uid};
    while (!queue.empty()) {
        const Uid parent = queue.front();
        queue.pop_front();
        for (const auto& [id, e] : elements_) {
            if (e.container == parent && doomed.insert(id).second) {
                removed.push_back(id);
                queue.push_back(id);
            }
        }
    }
    for (Uid id : removed) {
        elements_.erase(id);
        callbacks_.erase(id);
    }
    return removed;
}

SubscriptionId GuiRegistry::subscribe(Uid uid, GuiCallback callback) {
    if (!elements_.contains(uid)) {
        throw NotFoundError("no GUI element #" + std::to_string(uid));
    }
    const SubscriptionId id = next_subscription_++;
    callbacks_[uid].emplace_back(id, std::move(callback));
    return id;
}

std::vector<GuiCallback> GuiRegistry::take_subscriptions() {
    std::vector<GuiCallback> out;
    for (auto& [uid, list] : callbacks_) {
        for (auto& [id, callback] : list) out.push_back(std::move(callback));
    }
    callbacks_.clear();
    return out;
}

bool GuiRegistry::unsubscribe(SubscriptionId id) {
    for (auto& [uid, list] : callbacks_) {
        auto it = std::find_if(list.begin(), list.end(), [id](const auto& entry) { return entry.first == id; });
        if (it != list.end()) {
            list.erase(it);
            return true;
        }
    }
    return false;
}

const GuiElement* GuiRegistry::find(Uid uid) const {
    auto it = elements_.find(uid);
    return it == elements_.end() ? nullptr : &it->second;
}

const GuiElement& GuiRegistry::at(Uid uid) const {
    const GuiElement* e = find(uid);
    if (e == nullptr) {
        throw NotFoundError("no GUI element #" + std::to_string(uid));
    }
    return *e;
}

GuiElement& GuiRegistry::mutable_at(Uid uid) {
    auto it = elements_.find(uid);
    if (it == elements_.end()) {
        throw NotFoundError("no GUI element #" + std::to_string(uid));
    }
    return it->second;
}

std::vector<Uid> GuiRegistry::children(Uid container) const {
    std::vector<const GuiElement*> inside;
    for (const auto& [id, e] : elements_) {
        if (e.container == container) inside.push_back(&e);
    }
    std::sort(inside.begin(), inside.end(), [](const auto* a, const auto* b) { return a->order < b->order; });
    std::vector<Uid> out;
    for (const auto* e : inside) out.push_back(e->uid);
    return out;
}

}  // namespace viewsync
