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
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "viewsync/gui/gui_kind.hpp"
#include "viewsync/schema/message.hpp"

namespace viewsync {

using Uid = std::int64_t;

/// The implicit root panel every top-level element lives in.
inline constexpr Uid kRootContainer = 0;

struct GuiElement {
    Uid uid = 0;
    GuiKind kind = GuiKind::button;
    Uid container = kRootContainer;
    std::int64_t order = 0;
    PropMap props;
    std::optional<Value> value;

    friend bool operator==(const GuiElement&, const GuiElement&) = default;
};

/// A client-originated value change.
struct GuiEvent {
    Uid uid = 0;
    ClientId client_id = 0;
    Value value;
    std::int64_t timestamp_ms = 0;
};

using GuiCallback = std::function<void(const GuiEvent&)>;
using SubscriptionId = std::uint64_t;

struct ClientUpdateResult {
    /// The event carrying the validated (clamped) value, or the new click
    /// count for buttons.
    GuiEvent event;
    /// Callbacks registered on the element, in registration order.
    std::vector<GuiCallback> callbacks;
};

/// Registry of GUI elements and their callbacks. Value type; the server owns
/// one for shared state and one per client for per-client state.
class GuiRegistry {
public:
    /// Adds an element. `uid` is assigned as one past the largest uid seen
    /// when omitted; an explicit uid must be unused and positive. Throws
    /// ValidationError (bad props/value, non-container parent) or
    /// NotFoundError (unknown container).
    Uid add_element(GuiKind kind, PropMap props, std::optional<Value> initial_value, Uid container = kRootContainer,
                    std::optional<Uid> uid = std::nullopt, std::optional<std::int64_t> order = std::nullopt,
                    ApplyMode mode = ApplyMode::validated);

    /// Sets a property. Tightening slider/number bounds clamps the value;
    /// replacing dropdown options that no longer contain the value resets it
    /// to the first option. Returns true when that changed the value.
    bool set_element_prop(Uid uid, std::string_view prop, Value value, ApplyMode mode = ApplyMode::validated);

    /// Server-initiated value write. Never produces callbacks. Returns false
    /// if the value was already current.
    bool set_value_from_server(Uid uid, Value value, ApplyMode mode = ApplyMode::validated);

    /// Client-initiated value write. Numeric values are clamped into range,
    /// dropdown values outside the options are rejected with ProtocolError,
    /// button updates increment the click count. Throws NotFoundError for an
    /// unknown uid (a stale client) and ProtocolError for ill-typed values.
    ClientUpdateResult apply_client_update(const GuiEvent& event);

    /// Removes the element and, for containers, everything inside it.
    /// Returns removed uids. Throws NotFoundError for an unknown uid.
    std::vector<Uid> remove_element(Uid uid);

    SubscriptionId subscribe(Uid uid, GuiCallback callback);
    bool unsubscribe(SubscriptionId id);
    /// Unregisters every callback and hands them to the caller, who decides
    /// where they are destroyed.
    std::vector<GuiCallback> take_subscriptions();

    const GuiElement* find(Uid uid) const;
    const GuiElement& at(Uid uid) const;
    bool contains(Uid uid) const { return elements_.contains(uid); }
    const std::map<Uid, GuiElement>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    Uid last_uid() const { return last_uid_; }

    /// Elements directly inside `container`, by order.
    std::vector<Uid> children(Uid container) const;

private:
    GuiElement& mutable_at(Uid uid);
    void check_container(GuiKind kind, Uid container) const;

    std::map<Uid, GuiElement> elements_;
    std::map<Uid, std::vector<std::pair<SubscriptionId, GuiCallback>>> callbacks_;
    Uid last_uid_ = kRootContainer;
    std::int64_t next_order_ = 0;
    SubscriptionId next_subscription_ = 1;
};

/// Checks cross-property and value constraints (min <= value <= max, value
/// among options, step > 0). Throws ValidationError.
void check_gui_element(GuiKind kind, const PropMap& props, const std::optional<Value>& value);

}  // namespace viewsync
