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

#include "viewsync/client/headless_client.hpp"

#include <spdlog/spdlog.h>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <thread>

#include "viewsync/error.hpp"
#include "viewsync/schema/schema_document.hpp"

namespace viewsync {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;
using Clock = std::chrono::steady_clock;

namespace {

constexpr auto kCameraReportInterval = std::chrono::milliseconds(1000) / 30;

struct Endpoint {
    std::string host;
    std::string port;
    std::string target;
};

Endpoint parse_url(const std::string& url) {
    constexpr std::string_view scheme = "ws://";
    if (!url.starts_with(scheme)) {
        throw Error("unsupported URL '" + url + "': expected ws://host:port/path");
    }
    const std::string rest = url.substr(scheme.size());
    const auto slash = rest.find('/');
    const std::string authority = rest.substr(0, slash);
    Endpoint ep;
    ep.target = slash == std::string::npos ? "/ws" : rest.substr(slash);
    const auto colon = authority.rfind(':');
    if (colon == std::string::npos) {
        ep.host = authority;
        ep.port = "80";
    } else {
        ep.host = authority.substr(0, colon);
        ep.port = authority.substr(colon + 1);
    }
    if (ep.host.empty() || ep.port.empty()) {
        throw Error("malformed URL '" + url + "'");
    }
    return ep;
}

std::vector<std::uint8_t> frame_of(const Message& message) {
    const std::vector<Message> one{message};
    return encode_batch(protocol::registry(), 0, one);
}

/// Runs actions in order after a fixed delay. Delays are equal, so due times
/// are non-decreasing and one timer suffices.
class DelayLine {
public:
    DelayLine(asio::io_context& ioc, Clock::duration delay) : timer_(ioc), delay_(delay) {}

    void push(std::function<void()> action) {
        if (delay_ <= Clock::duration::zero()) {
            action();
            return;
        }
        queue_.emplace_back(Clock::now() + delay_, std::move(action));
        if (queue_.size() == 1) arm();
    }

    void cancel() {
        queue_.clear();
        timer_.cancel();
    }

private:
    void arm() {
        timer_.expires_at(queue_.front().first);
        timer_.async_wait([this](beast::error_code ec) {
            if (ec) return;
            while (!queue_.empty() && queue_.front().first <= Clock::now()) {
                auto action = std::move(queue_.front().second);
                queue_.pop_front();
                action();
            }
            if (!queue_.empty()) arm();
        });
    }

    asio::steady_timer timer_;
    Clock::duration delay_;
    std::deque<std::pair<Clock::time_point, std::function<void()>>> queue_;
};

}  // namespace

class HeadlessClient::Impl {
public:
    explicit Impl(HeadlessOptions options)
        : options_(std::move(options)),
          ws_(ioc_),
          inbound_(ioc_, options_.simulated_rtt / 2),
          outbound_(ioc_, options_.simulated_rtt / 2),
          camera_timer_(ioc_) {}

    ~Impl() { shutdown(); }

    void connect(const std::string& url);
    void shutdown();

    void send(Message message) {
        auto frame = std::make_shared<std::vector<std::uint8_t>>(frame_of(message));
        asio::post(ioc_, [this, frame] { outbound_.push([this, frame] { write(std::move(*frame)); }); });
    }

    void report_camera(const CameraState& camera);

    mutable std::mutex mutex_;
    mutable std::condition_variable changed_;
    ClientMirror mirror_;
    ClientId id_ = 0;
    std::uint64_t batches_ = 0;
    std::uint64_t messages_ = 0;
    std::vector<Message> recorded_;
    Clock::duration max_gap_{};
    std::optional<Clock::time_point> last_batch_;
    bool connected_ = false;
    std::optional<std::string> error_;

private:
    void read();
    void on_batch(Batch batch);
    void write(std::vector<std::uint8_t> frame);
    void write_next();
    void fail(const std::string& reason);

    HeadlessOptions options_;
    asio::io_context ioc_;
    websocket::stream<beast::tcp_stream> ws_;
    beast::flat_buffer buffer_;
    DelayLine inbound_;
    DelayLine outbound_;
    std::deque<std::vector<std::uint8_t>> writes_;
    asio::steady_timer camera_timer_;
    std::optional<CameraState> held_camera_;
    Clock::time_point last_camera_report_{};
    bool closing_ = false;
    std::thread thread_;
};

void HeadlessClient::Impl::connect(const std::string& url) {
    const Endpoint ep = parse_url(url);
    const std::string hash = options_.schema_hash.value_or(
        schema_hash(export_schema(protocol::registry(), std::string(protocol::kSchemaVersion))));
    try {
        tcp::resolver resolver(ioc_);
        auto& stream = beast::get_lowest_layer(ws_);
        stream.expires_after(options_.connect_timeout);
        stream.connect(resolver.resolve(ep.host, ep.port));
        ws_.binary(true);
        ws_.read_message_max(256u << 20);
        ws_.handshake(ep.host + ":" + ep.port, ep.target);
        ws_.write(asio::buffer(frame_of(protocol::client_hello(hash))));
        beast::flat_buffer reply;
        ws_.read(reply);
        stream.expires_never();
        const auto data = reply.cdata();
        const Batch batch = decode_batch(
            protocol::registry(),
            std::span<const std::uint8_t>(static_cast<const std::uint8_t*>(data.data()), data.size()));
        if (batch.messages.size() != 1) throw ProtocolError("malformed handshake reply");
        const Message& m = batch.messages.front();
        if (m.type == protocol::kServerReject) {
            throw HandshakeRejected(m.field<std::string>("reason") + " (server " + m.field<std::string>("server_hash") +
                                    ", client " + m.field<std::string>("client_hash") + ")");
        }
        if (m.type != protocol::kServerAccept) throw ProtocolError("unexpected handshake reply " + m.type);
        id_ = static_cast<ClientId>(m.field<std::int64_t>("client_id"));
    } catch (const beast::system_error& e) {
        throw Error("cannot connect to " + url + ": " + e.code().message());
    }
    connected_ = true;
    read();
    thread_ = std::thread([this] {
        try {
            ioc_.run();
        } catch (const std::exception& e) {
            spdlog::error("headless client I/O thread stopped: {}", e.what());
        }
    });
}

void HeadlessClient::Impl::shutdown() {
    if (thread_.joinable()) {
        asio::post(ioc_, [this] {
            closing_ = true;
            inbound_.cancel();
            outbound_.cancel();
            camera_timer_.cancel();
            beast::error_code ignored;
            beast::get_lowest_layer(ws_).socket().shutdown(tcp::socket::shutdown_both, ignored);
            beast::get_lowest_layer(ws_).close();
            ioc_.stop();
        });
        thread_.join();
    }
    std::lock_guard lock(mutex_);
    connected_ = false;
    changed_.notify_all();
}

void HeadlessClient::Impl::fail(const std::string& reason) {
    {
        std::lock_guard lock(mutex_);
        if (!error_ && !closing_) error_ = reason;
        connected_ = false;
    }
    changed_.notify_all();
    if (!closing_) {
        closing_ = true;
        inbound_.cancel();
        outbound_.cancel();
        beast::error_code ignored;
        beast::get_lowest_layer(ws_).socket().close(ignored);
    }
}

void HeadlessClient::Impl::read() {
    ws_.async_read(buffer_, [this](beast::error_code ec, std::size_t) {
        if (ec) {
            {
                std::lock_guard lock(mutex_);
                connected_ = false;
            }
            changed_.notify_all();
            return;
        }
        const auto data = buffer_.cdata();
        Batch batch;
        try {
            batch = decode_batch(protocol::registry(), std::span<const std::uint8_t>(
                                                           static_cast<const std::uint8_t*>(data.data()), data.size()));
        } catch (const Error& e) {
            fail(std::string("undecodable frame: ") + e.what());
            return;
        }
        buffer_.consume(buffer_.size());
        if (batch.seq > 0) {
            const auto now = Clock::now();
            {
                std::lock_guard lock(mutex_);
                if (last_batch_) max_gap_ = std::max(max_gap_, now - *last_batch_);
                last_batch_ = now;
            }
            auto shared = std::make_shared<Batch>(std::move(batch));
            inbound_.push([this, shared] { on_batch(std::move(*shared)); });
        }
        read();
    });
}

void HeadlessClient::Impl::on_batch(Batch batch) {
    const std::uint64_t seq = batch.seq;
    try {
        std::lock_guard lock(mutex_);
        mirror_.apply_batch(batch);
        batches_ += 1;
        messages_ += batch.messages.size();
        if (options_.record_messages) {
            for (auto& m : batch.messages) recorded_.push_back(std::move(m));
        }
    } catch (const Error& e) {
        fail("cannot apply batch " + std::to_string(seq) + ": " + e.what());
        return;
    }
    changed_.notify_all();
    auto frame = frame_of(protocol::ack(seq));
    outbound_.push([this, frame = std::move(frame)]() mutable { write(std::move(frame)); });
}

void HeadlessClient::Impl::write(std::vector<std::uint8_t> frame) {
    if (closing_) return;
    writes_.push_back(std::move(frame));
    if (writes_.size() == 1) write_next();
}

void HeadlessClient::Impl::write_next() {
    ws_.async_write(asio::buffer(writes_.front()), [this](beast::error_code ec, std::size_t) {
        if (ec) {
            writes_.clear();
            return;
        }
        writes_.pop_front();
        if (!writes_.empty()) write_next();
    });
}

void HeadlessClient::Impl::report_camera(const CameraState& camera) {
    const CameraState checked = validated(camera);
    asio::post(ioc_, [this, checked] {
        const bool waiting = held_camera_.has_value();
        held_camera_ = checked;
        if (waiting) return;
        const auto due = last_camera_report_ + kCameraReportInterval;
        auto flush = [this] {
            last_camera_report_ = Clock::now();
            auto frame = frame_of(protocol::camera_report(*held_camera_));
            held_camera_.reset();
            outbound_.push([this, frame = std::move(frame)]() mutable { write(std::move(frame)); });
        };
        if (Clock::now() >= due) {
            flush();
            return;
        }
        camera_timer_.expires_at(due);
        camera_timer_.async_wait([flush](beast::error_code ec) {
            if (!ec) flush();
        });
    });
}

// ---------------------------------------------------------------------------

HeadlessClient::HeadlessClient(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

HeadlessClient::~HeadlessClient() { close(); }

std::unique_ptr<HeadlessClient> HeadlessClient::connect(const std::string& url, HeadlessOptions options) {
    auto impl = std::make_shared<Impl>(std::move(options));
    impl->connect(url);
    return std::unique_ptr<HeadlessClient>(new HeadlessClient(std::move(impl)));
}

ClientId HeadlessClient::id() const { return impl_->id_; }

std::string HeadlessClient::canonical_state() const {
    std::lock_guard lock(impl_->mutex_);
    return impl_->mirror_.canonical_state();
}

std::uint64_t HeadlessClient::last_seq() const {
    std::lock_guard lock(impl_->mutex_);
    return impl_->mirror_.last_seq();
}

std::uint64_t HeadlessClient::batches_received() const {
    std::lock_guard lock(impl_->mutex_);
    return impl_->batches_;
}

std::uint64_t HeadlessClient::messages_received() const {
    std::lock_guard lock(impl_->mutex_);
    return impl_->messages_;
}

std::vector<Message> HeadlessClient::received_messages() const {
    std::lock_guard lock(impl_->mutex_);
    return impl_->recorded_;
}

std::chrono::milliseconds HeadlessClient::max_batch_gap() const {
    std::lock_guard lock(impl_->mutex_);
    return std::chrono::duration_cast<std::chrono::milliseconds>(impl_->max_gap_);
}

void HeadlessClient::inspect(const std::function<void(const ClientMirror&)>& fn) const {
    std::lock_guard lock(impl_->mutex_);
    fn(impl_->mirror_);
}

bool HeadlessClient::wait_until(const std::function<bool(const ClientMirror&)>& predicate,
                                std::chrono::milliseconds timeout) const {
    std::unique_lock lock(impl_->mutex_);
    const bool ok = impl_->changed_.wait_for(
        lock, timeout, [&] { return predicate(impl_->mirror_) || !impl_->connected_; });
    return ok && predicate(impl_->mirror_);
}

void HeadlessClient::send_gui_value(Uid uid, Value value) { impl_->send(protocol::gui_update(uid, std::move(value))); }

void HeadlessClient::click_button(Uid uid) { impl_->send(protocol::gui_update(uid, std::int64_t{1})); }

void HeadlessClient::click(const protocol::SceneClick& click) { impl_->send(protocol::scene_click(click)); }

void HeadlessClient::report_camera(const CameraState& camera) { impl_->report_camera(camera); }

bool HeadlessClient::connected() const {
    std::lock_guard lock(impl_->mutex_);
    return impl_->connected_;
}

std::optional<std::string> HeadlessClient::error() const {
    std::lock_guard lock(impl_->mutex_);
    return impl_->error_;
}

void HeadlessClient::close() {
    if (impl_) impl_->shutdown();
}

}  // namespace viewsync
