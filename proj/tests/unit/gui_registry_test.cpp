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

#include <gtest/gtest.h>

#include "viewsync/error.hpp"
#include "viewsync/gui/gui_registry.hpp"

namespace viewsync {
namespace {

PropMap slider_props(double lo, double hi) { return {{"label", std::string("s")}, {"min", lo}, {"max", hi}}; }

TEST(GuiRegistry, AssignsIncreasingUidsAndOrder) {
    GuiRegistry r;
    const Uid a = r.add_element(GuiKind::button, {{"label", std::string("a")}}, std::nullopt);
    const Uid b = r.add_element(GuiKind::checkbox, {}, true);
    EXPECT_EQ(a, 1);
    EXPECT_EQ(b, 2);
    EXPECT_LT(r.at(a).order, r.at(b).order);
    EXPECT_EQ(r.at(a).value, Value(std::int64_t{0}));
    EXPECT_EQ(r.add_element(GuiKind::text, {}, std::nullopt, kRootContainer, 10), 10);
    EXPECT_EQ(r.add_element(GuiKind::text, {}, std::nullopt), 11);
    EXPECT_THROW(r.add_element(GuiKind::text, {}, std::nullopt, kRootContainer, 10), ValidationError);
    EXPECT_THROW(r.add_element(GuiKind::text, {}, std::nullopt, kRootContainer, 0), ValidationError);
}

TEST(GuiRegistry, DefaultsAndCoercesInitialValues) {
    GuiRegistry r;
    const Uid s = r.add_element(GuiKind::slider, slider_props(2, 5), std::nullopt);
    EXPECT_EQ(r.at(s).value, Value(2.0)) << "zero clamped into range";
    const Uid n = r.add_element(GuiKind::number, {}, std::int64_t{4});
    EXPECT_EQ(r.at(n).value, Value(4.0));
    const Uid d = r.add_element(GuiKind::dropdown, {{"options", std::vector<std::string>{"x", "y"}}}, std::nullopt);
    EXPECT_EQ(r.at(d).value, Value(std::string("x")));
    const Uid f = r.add_element(GuiKind::folder, {}, std::nullopt);
    EXPECT_FALSE(r.at(f).value.has_value());
}

TEST(GuiRegistry, RejectsInconsistentElements) {
    GuiRegistry r;
    EXPECT_THROW(r.add_element(GuiKind::slider, slider_props(0, 1), 2.0), ValidationError);
    EXPECT_THROW(r.add_element(GuiKind::slider, slider_props(3, 1), std::nullopt), ValidationError);
    EXPECT_THROW(r.add_element(GuiKind::slider, {{"step", 0.0}}, std::nullopt), ValidationError);
    EXPECT_THROW(r.add_element(GuiKind::dropdown, {{"options", std::vector<std::string>{}}}, std::nullopt),
                 ValidationError);
    EXPECT_THROW(r.add_element(GuiKind::dropdown, {{"options", std::vector<std::string>{"a"}}}, std::string("b")),
                 ValidationError);
    EXPECT_THROW(r.add_element(GuiKind::rgb, {}, std::vector<std::int64_t>{0, 0, 256}), ValidationError);
    EXPECT_THROW(r.add_element(GuiKind::rgb, {}, std::vector<std::int64_t>{0, 0}), ValidationError);
    EXPECT_THROW(r.add_element(GuiKind::folder, {}, true), ValidationError);
    EXPECT_THROW(r.add_element(GuiKind::checkbox, {{"min", 1.0}}, std::nullopt), ValidationError);
    EXPECT_EQ(r.size(), 0u);
}

TEST(GuiRegistry, ContainerRules) {
    GuiRegistry r;
    const Uid folder = r.add_element(GuiKind::folder, {}, std::nullopt);
    const Uid button = r.add_element(GuiKind::button, {}, std::nullopt, folder);
    EXPECT_EQ(r.at(button).container, folder);
    EXPECT_THROW(r.add_element(GuiKind::button, {}, std::nullopt, button), ValidationError);
    EXPECT_THROW(r.add_element(GuiKind::button, {}, std::nullopt, 999), NotFoundError);
    EXPECT_THROW(r.add_element(GuiKind::tab, {}, std::nullopt), ValidationError);
    const Uid group = r.add_element(GuiKind::tab_group, {}, std::nullopt);
    EXPECT_THROW(r.add_element(GuiKind::button, {}, std::nullopt, group), ValidationError);
    const Uid tab = r.add_element(GuiKind::tab, {}, std::nullopt, group);
    EXPECT_NO_THROW(r.add_element(GuiKind::slider, {}, std::nullopt, tab));
    EXPECT_EQ(r.children(group), std::vector<Uid>{tab});
}

TEST(GuiRegistry, TighteningBoundsClampsTheValue) {
    GuiRegistry r;
    const Uid s = r.add_element(GuiKind::slider, slider_props(0, 10), 8.0);
    EXPECT_TRUE(r.set_element_prop(s, "max", 5.0));
    EXPECT_EQ(r.at(s).value, Value(5.0));
    EXPECT_FALSE(r.set_element_prop(s, "max", 20.0));
    EXPECT_EQ(r.at(s).value, Value(5.0));
    EXPECT_THROW(r.set_element_prop(s, "min", 30.0), ValidationError);
    EXPECT_EQ(r.at(s).props.at("min"), Value(0.0)) << "rejected write leaves props untouched";
    EXPECT_FALSE(r.set_element_prop(s, "label", std::string("renamed")));
}

TEST(GuiRegistry, ReplacingDropdownOptionsResetsAMissingValue) {
    GuiRegistry r;
    const Uid d = r.add_element(GuiKind::dropdown, {{"options", std::vector<std::string>{"a", "b"}}}, std::string("b"));
    EXPECT_FALSE(r.set_element_prop(d, "options", std::vector<std::string>{"b", "c"}));
    EXPECT_TRUE(r.set_element_prop(d, "options", std::vector<std::string>{"c", "d"}));
    EXPECT_EQ(r.at(d).value, Value(std::string("c")));
}

TEST(GuiRegistry, ReplayModeStoresPropsWithoutRelations) {
    GuiRegistry r;
    const Uid s = r.add_element(GuiKind::slider, slider_props(0, 10), 8.0);
    EXPECT_FALSE(r.set_element_prop(s, "max", 5.0, ApplyMode::replay));
    EXPECT_EQ(r.at(s).value, Value(8.0));
    EXPECT_TRUE(r.set_value_from_server(s, 12.0, ApplyMode::replay));
    EXPECT_THROW(r.set_value_from_server(s, std::string("x"), ApplyMode::replay), ValidationError);
}

TEST(GuiRegistry, ServerWritesNeverProduceCallbacks) {
    GuiRegistry r;
    const Uid s = r.add_element(GuiKind::slider, slider_props(0, 10), std::nullopt);
    int fired = 0;
    r.subscribe(s, [&](const GuiEvent&) { ++fired; });
    EXPECT_TRUE(r.set_value_from_server(s, 3.0));
    EXPECT_FALSE(r.set_value_from_server(s, 3.0));
    EXPECT_THROW(r.set_value_from_server(s, 11.0), ValidationError);
    EXPECT_EQ(fired, 0);
}

TEST(GuiRegistry, ClientUpdatesClampAndReturnCallbacksInOrder) {
    GuiRegistry r;
    const Uid s = r.add_element(GuiKind::slider, slider_props(0, 10), std::nullopt);
    std::vector<int> order;
    r.subscribe(s, [&](const GuiEvent&) { order.push_back(1); });
    const SubscriptionId second = r.subscribe(s, [&](const GuiEvent&) { order.push_back(2); });
    r.subscribe(s, [&](const GuiEvent&) { order.push_back(3); });
    EXPECT_TRUE(r.unsubscribe(second));
    EXPECT_FALSE(r.unsubscribe(second));

    auto result = r.apply_client_update(GuiEvent{s, 7, 42.0, 0});
    EXPECT_EQ(result.event.value, Value(10.0));
    EXPECT_EQ(result.event.client_id, 7u);
    EXPECT_EQ(r.at(s).value, Value(10.0));
    for (auto& cb : result.callbacks) cb(result.event);
    EXPECT_EQ(order, (std::vector<int>{1, 3}));
}

TEST(GuiRegistry, ClientUpdateErrors) {
    GuiRegistry r;
    const Uid d = r.add_element(GuiKind::dropdown, {{"options", std::vector<std::string>{"a"}}}, std::nullopt);
    const Uid f = r.add_element(GuiKind::folder, {}, std::nullopt);
    EXPECT_THROW(r.apply_client_update(GuiEvent{d, 1, std::string("zzz"), 0}), ProtocolError);
    EXPECT_THROW(r.apply_client_update(GuiEvent{d, 1, 1.0, 0}), ProtocolError);
    EXPECT_THROW(r.apply_client_update(GuiEvent{f, 1, true, 0}), ProtocolError);
    EXPECT_THROW(r.apply_client_update(GuiEvent{99, 1, true, 0}), NotFoundError);
    EXPECT_EQ(r.at(d).value, Value(std::string("a")));
}

TEST(GuiRegistry, ButtonUpdatesCountClicks) {
    GuiRegistry r;
    const Uid b = r.add_element(GuiKind::button, {}, std::nullopt);
    for (int i = 0; i < 3; ++i) r.apply_client_update(GuiEvent{b, 1, std::int64_t{0}, 0});
    EXPECT_EQ(r.at(b).value, Value(std::int64_t{3}));
}

TEST(GuiRegistry, RemovingAContainerRemovesItsContents) {
    GuiRegistry r;
    const Uid outer = r.add_element(GuiKind::folder, {}, std::nullopt);
    const Uid inner = r.add_element(GuiKind::folder, {}, std::nullopt, outer);
    const Uid leaf = r.add_element(GuiKind::text, {}, std::nullopt, inner);
    const Uid other = r.add_element(GuiKind::text, {}, std::nullopt);
    r.subscribe(leaf, [](const GuiEvent&) {});
    EXPECT_EQ(r.remove_element(outer), (std::vector<Uid>{outer, inner, leaf}));
    EXPECT_EQ(r.size(), 1u);
    EXPECT_TRUE(r.contains(other));
    EXPECT_THROW(r.remove_element(outer), NotFoundError);
    EXPECT_THROW(r.subscribe(leaf, [](const GuiEvent&) {}), NotFoundError);
    EXPECT_EQ(r.add_element(GuiKind::text, {}, std::nullopt), other + 1) << "uids are never reused";
}

}  // namespace
}  // namespace viewsync
