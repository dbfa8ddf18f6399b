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

#include <deque>
#include <random>

#include "viewsync/protocol.hpp"
#include "viewsync/schema/codec.hpp"
#include "viewsync/transport/connection.hpp"

namespace viewsync {
namespace {

Message write(int key, int value) {
    return protocol::gui_set_value(key + 1, static_cast<double>(value));
}

TEST(ClientConnection, NothingToFlushWhenEmpty) {
    ClientConnection c(1, protocol::registry());
    EXPECT_FALSE(c.flush_tick().has_value());
    EXPECT_EQ(c.next_seq(), 1u);
}

TEST(ClientConnection, FramesCarryIncreasingSeqAndThePendingMessages) {
    ClientConnection c(1, protocol::registry());
    c.enqueue(write(0, 1));
    c.enqueue(write(1, 1));
    c.enqueue(write(0, 2));
    const auto frame = c.flush_tick();
    ASSERT_TRUE(frame);
    EXPECT_EQ(frame->seq, 1u);
    EXPECT_EQ(frame->message_count, 2u);
    const Batch batch = decode_batch(protocol::registry(), frame->bytes);
    EXPECT_EQ(batch.seq, 1u);
    EXPECT_EQ(batch.messages[0].field<double>("value"), 2.0);
    EXPECT_TRUE(c.pending().empty());

    c.enqueue(write(0, 3));
    EXPECT_EQ(c.flush_tick()->seq, 2u);
    EXPECT_EQ(c.stats().batches_sent, 2u);
    EXPECT_EQ(c.stats().messages_sent, 3u);
}

TEST(ClientConnection, FullWindowHoldsMessagesBack) {
    ClientConnection c(1, protocol::registry());
    for (int seq = 1; seq <= 2; ++seq) {
        c.enqueue(write(0, seq));
        ASSERT_TRUE(c.flush_tick());
    }
    EXPECT_EQ(c.outstanding(), 2u);
    for (int i = 0; i < 100; ++i) c.enqueue(write(0, i));
    EXPECT_FALSE(c.flush_tick().has_value());
    EXPECT_EQ(c.pending().size(), 1u) << "held-back writes keep deduplicating";

    EXPECT_TRUE(c.on_ack(1));
    EXPECT_FALSE(c.on_ack(1));
    EXPECT_FALSE(c.on_ack(77));
    EXPECT_EQ(c.stats().ignored_acks, 2u);
    const auto frame = c.flush_tick();
    ASSERT_TRUE(frame);
    EXPECT_EQ(frame->message_count, 1u);
    EXPECT_EQ(c.stats().max_outstanding, 2u);
}

// Random interleavings of writes, flushes, deliveries and out-of-order acks.
TEST(ClientConnectionProperty, OutstandingNeverExceedsTheWindow) {
    std::mt19937_64 rng(3);
    ClientConnection c(1, protocol::registry());
    std::deque<std::uint64_t> in_flight;
    std::uint64_t last_seq = 0;
    for (int step = 0; step < 10'000; ++step) {
        switch (rng() % 4) {
            case 0: c.enqueue(write(static_cast<int>(rng() % 10), step)); break;
            case 1:
                if (auto frame = c.flush_tick()) {
                    ASSERT_EQ(frame->seq, last_seq + 1);
                    last_seq = frame->seq;
                    in_flight.push_back(frame->seq);
                }
                break;
            default:
                if (!in_flight.empty()) {
                    const std::size_t i = rng() % in_flight.size();
                    ASSERT_TRUE(c.on_ack(in_flight[i]));
                    in_flight.erase(in_flight.begin() + static_cast<std::ptrdiff_t>(i));
                }
                break;
        }
        ASSERT_LE(c.outstanding(), kAckWindow);
        ASSERT_LE(c.pending().size(), 10u);
    }
    EXPECT_EQ(c.stats().max_outstanding, kAckWindow);
}

}  // namespace
}  // namespace viewsync
