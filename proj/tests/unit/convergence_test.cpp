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

#include "random_ops.hpp"
#include "sim_server.hpp"

namespace viewsync {
namespace {

using testing::RandomOps;
using testing::SimServer;

std::string server_canonical(const SimServer& sim) { return canonical_state(sim.scene(), sim.gui(), CameraState{}); }

// Clients that joined at different times, fed through deduplicating buffers
// and an ack window on a random delivery schedule, end in the same state as
// the server and as each other.
TEST(ConvergenceProperty, EarlyMidAndLateMirrorsAgree) {
    constexpr int kSequences = 1000;
    constexpr int kOps = 1000;
    std::size_t applied = 0;
    for (int seq = 0; seq < kSequences; ++seq) {
        RandomOps ops(static_cast<std::uint64_t>(seq));
        SimServer sim;
        sim.connect();
        for (int op = 0; op < kOps; ++op) {
            ops.step(sim);
            if (op == kOps / 2) sim.connect();
            const int pumps = static_cast<int>(ops.rng()() % 3);
            for (int p = 0; p < pumps; ++p) sim.pump(ops.rng());
        }
        sim.connect();
        sim.drain();

        const std::string expected = server_canonical(sim);
        for (std::size_t c = 0; c < sim.client_count(); ++c) {
            ASSERT_EQ(sim.mirror(c).canonical_state(), expected) << "sequence " << seq << ", client " << c;
        }
        ASSERT_LE(sim.max_outstanding_seen(), kAckWindow);
        applied += ops.stats().applied;
    }
    RecordProperty("applied_ops", std::to_string(applied));
}

TEST(ConvergenceProperty, ModelAndServerAgreeOnExistence) {
    RandomOps ops(99);
    SimServer sim;
    ops.run(sim, 5000);
    std::vector<std::string> model, server;
    for (const auto& [p, n] : ops.model_scene().nodes()) model.push_back(p.str());
    for (const auto& [p, n] : sim.scene().nodes()) server.push_back(p.str());
    EXPECT_EQ(model, server);
    std::vector<Uid> model_uids, server_uids;
    for (const auto& [u, e] : ops.model_gui().elements()) model_uids.push_back(u);
    for (const auto& [u, e] : sim.gui().elements()) server_uids.push_back(u);
    EXPECT_EQ(model_uids, server_uids);
    EXPECT_GT(ops.stats().applied, 2000u);
}

TEST(ConvergenceProperty, SnapshotIsNoLargerThanTheLiveState) {
    RandomOps ops(5);
    SimServer sim;
    ops.run(sim, 20'000);
    // One upsert per node plus at most one write per property; one add per
    // element plus its props and value.
    std::size_t bound = 0;
    for (const auto& [p, n] : sim.scene().nodes()) bound += p.is_root() ? 0 : 1 + 4 + n.props.size();
    for (const auto& [u, e] : sim.gui().elements()) bound += 2 + e.props.size();
    EXPECT_LE(sim.persistent().size(), bound);
}

}  // namespace
}  // namespace viewsync
