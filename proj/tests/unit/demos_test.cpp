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

#include <cmath>

#include "demos.hpp"
#include "viewsync/client/headless_client.hpp"
#include "viewsync/error.hpp"

namespace viewsync {
namespace {

using namespace std::chrono_literals;

ServerOptions any_port() {
    ServerOptions o;
    o.port = 0;
    return o;
}

std::optional<Uid> uid_labeled(const ClientMirror& m, const std::string& label) {
    for (const auto& [uid, e] : m.gui().elements()) {
        auto it = e.props.find("label");
        if (it != e.props.end() && it->second == Value(label)) return uid;
    }
    return std::nullopt;
}

TEST(Demos, UnknownNameIsAValidationError) {
    Server server(any_port());
    EXPECT_THROW(demos::make_demo("no_such_demo", server), ValidationError);
}

TEST(Demos, DoubledTextDropsTheFractionOfWholeNumbers) {
    EXPECT_EQ(demos::doubled_text(21), "42");
    EXPECT_EQ(demos::doubled_text(1.5), "3");
    EXPECT_EQ(demos::doubled_text(0.25), "0.5");
    EXPECT_EQ(demos::doubled_text(0), "0");
    EXPECT_EQ(demos::doubled_text(-3), "-6");
}

TEST(Demos, SyntheticPointCloudIsDeterministic) {
    const auto a = demos::synthetic_point_cloud(10'000, 4);
    const auto b = demos::synthetic_point_cloud(10'000, 4);
    const auto c = demos::synthetic_point_cloud(10'000, 5);
    EXPECT_EQ(a.positions.size(), 30'000u);
    EXPECT_EQ(a.colors.size(), 30'000u);
    EXPECT_EQ(a.positions, b.positions);
    EXPECT_EQ(a.colors, b.colors);
    EXPECT_NE(a.positions, c.positions);
    for (float v : a.positions) ASSERT_TRUE(std::isfinite(v));
}

TEST(Demos, ChainLinkPoseIsAUnitRotationAboutAnAlternatingAxis) {
    const Pose base = demos::chain_link_pose(0, 0.0);
    EXPECT_EQ(base.wxyz, (Quaternion{1, 0, 0, 0}));
    EXPECT_EQ(base.position, (Vec3{0, 0, 0.5}));
    for (std::size_t i = 0; i < demos::kChainLinks; ++i) {
        const Pose p = demos::chain_link_pose(i, 1.3);
        const auto& q = p.wxyz;
        EXPECT_NEAR(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3], 1.0, 1e-12);
        // Even links turn about z, odd links about y.
        EXPECT_EQ(q[1], 0.0);
        EXPECT_EQ(i % 2 == 0 ? q[2] : q[3], 0.0);
        // The swing never exceeds half a radian.
        EXPECT_LE(2.0 * std::acos(std::min(1.0, q[0])), 0.5 + 1e-12);
    }
}

TEST(Demos, EveryDemoBuildsAndReachesAClient) {
    for (std::string_view name : demos::kDemoNames) {
        Server server(any_port());
        auto demo = demos::make_demo(name, server);
        demo->tick(0.5);
        auto client = HeadlessClient::connect(server.url());
        ASSERT_TRUE(server.wait_idle(5s)) << name;
        const std::string state = client->canonical_state();
        ClientMirror expected;
        for (const auto& m : server.snapshot()) expected.apply(m);
        EXPECT_EQ(state, expected.canonical_state()) << name;
        EXPECT_GT(server.snapshot().size(), 1u) << name;
    }
}

TEST(Demos, PointCloudDemoHasTheCloudAndFrustums) {
    Server server(any_port());
    auto demo = demos::make_demo("pointcloud_frustums", server);
    auto client = HeadlessClient::connect(server.url());
    ASSERT_TRUE(client->wait_until(
        [](const ClientMirror& m) { return m.scene().contains(ScenePath::parse("/cameras/cam4")); }, 5s));
    client->inspect([](const ClientMirror& m) {
        const auto& cloud = m.scene().at(ScenePath::parse("/cloud"));
        EXPECT_EQ(cloud.kind, NodeKind::point_cloud);
        EXPECT_EQ(std::get<std::vector<float>>(cloud.props.at("positions")).size(), 3 * demos::kPointCloudSize);
        EXPECT_EQ(m.scene().at(ScenePath::parse("/ground")).kind, NodeKind::grid);
        for (std::size_t i = 0; i < demos::kFrustumCount; ++i) {
            const auto path = ScenePath::parse("/cameras/cam" + std::to_string(i));
            EXPECT_EQ(m.scene().at(path).kind, NodeKind::camera_frustum);
        }
    });
}

TEST(Demos, KinematicChainTicksMoveTheLinks) {
    Server server(any_port());
    auto demo = demos::make_demo("kinematic_chain", server);
    EXPECT_GT(demo->rate_hz(), 0.0);
    demo->tick(2.0);
    const std::string leaf = "/chain/link0/link1/link2/link3/link4/link5";
    // The server normalizes quaternions, which may move the last bit.
    const Quaternion got = server.scene().node(leaf).pose().wxyz;
    const Quaternion want = demos::chain_link_pose(5, 2.0).wxyz;
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(got[i], want[i], 1e-12);
    EXPECT_EQ(server.scene().node(leaf).kind(), NodeKind::frame);
}

TEST(Demos, SliderDoubleReactsToClients) {
    Server server(any_port());
    auto slider_demo = demos::make_demo("slider_double", server);
    auto client = HeadlessClient::connect(server.url());
    ASSERT_TRUE(client->wait_until([](const ClientMirror& m) { return uid_labeled(m, "Doubled").has_value(); }, 5s));
    Uid slider = 0, doubled = 0;
    client->inspect([&](const ClientMirror& m) {
        slider = *uid_labeled(m, "Value");
        doubled = *uid_labeled(m, "Doubled");
    });
    client->send_gui_value(slider, 21.0);
    EXPECT_TRUE(client->wait_until(
        [&](const ClientMirror& m) { return m.gui().at(doubled).value == Value(std::string("42")); }, 5s));
    // Out-of-range input is clamped before the callback sees it.
    client->send_gui_value(slider, 500.0);
    EXPECT_TRUE(client->wait_until(
        [&](const ClientMirror& m) { return m.gui().at(doubled).value == Value(std::string("200")); }, 5s));
}

TEST(Demos, CounterCountsClicks) {
    Server server(any_port());
    auto demo = demos::make_demo("counter", server);
    auto client = HeadlessClient::connect(server.url());
    ASSERT_TRUE(
        client->wait_until([](const ClientMirror& m) { return uid_labeled(m, "Increment").has_value(); }, 5s));
    Uid button = 0, label = 0;
    client->inspect([&](const ClientMirror& m) {
        button = *uid_labeled(m, "Increment");
        label = *uid_labeled(m, "Counter");
    });
    for (int i = 0; i < 3; ++i) client->click_button(button);
    EXPECT_TRUE(client->wait_until(
        [&](const ClientMirror& m) { return m.gui().at(label).value == Value(std::string("Count: 3")); }, 5s));
}

}  // namespace
}  // namespace viewsync
