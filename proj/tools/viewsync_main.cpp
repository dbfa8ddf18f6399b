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

#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <atomic>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "demos.hpp"
#include "viewsync/client/headless_client.hpp"
#include "viewsync/error.hpp"
#include "viewsync/protocol.hpp"
#include "viewsync/schema/schema_document.hpp"

namespace {

using namespace viewsync;
namespace fs = std::filesystem;

std::atomic<bool> g_interrupted{false};

void on_signal(int) { g_interrupted = true; }

struct SchemaFile {
    std::string name;
    std::string content;
};

std::vector<SchemaFile> schema_files() {
    const SchemaDocument doc = export_schema(protocol::registry(), std::string(protocol::kSchemaVersion));
    return {{"messages.ts", generate_client_declarations(doc)}, {"schema.json", doc.to_json() + "\n"}};
}

std::optional<std::string> slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int gen_schema(const std::string& out, bool check) {
    const fs::path dir(out);
    int status = 0;
    for (const auto& file : schema_files()) {
        const fs::path path = dir / file.name;
        if (check) {
            if (slurp(path) != file.content) {
                std::cerr << "stale: " << path.string() << " (re-run gen-schema " << out << ")\n";
                status = 1;
            }
            continue;
        }
        fs::create_directories(dir);
        std::ofstream(path, std::ios::binary) << file.content;
        std::cout << "wrote " << path.string() << "\n";
    }
    if (check && status == 0) std::cout << "schema up to date (" << out << ")\n";
    return status;
}

int run_demo(const std::string& name, const std::string& host, int port, const std::string& static_dir) {
    Server server({.host = host, .port = static_cast<std::uint16_t>(port), .static_dir = static_dir});
    auto demo = demos::make_demo(name, server);
    std::cout << "demo " << name << " serving at http://" << server.host() << ":" << server.port() << "/ ("
              << server.url() << ")" << std::endl;

    const auto start = std::chrono::steady_clock::now();
    const double rate = demo->rate_hz();
    const auto period = rate > 0.0 ? std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                         std::chrono::duration<double>(1.0 / rate))
                                   : std::chrono::steady_clock::duration(std::chrono::milliseconds(200));
    auto next = start;
    while (!g_interrupted) {
        next += period;
        std::this_thread::sleep_until(next);
        if (rate > 0.0) demo->tick(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    server.stop();
    return 0;
}

int run_headless(const std::string& url, bool dump_state, int rtt_ms, int settle_ms) {
    HeadlessOptions options;
    options.simulated_rtt = std::chrono::milliseconds(rtt_ms);
    auto client = HeadlessClient::connect(url, options);
    spdlog::info("connected as client {}", client->id());

    if (dump_state) {
        // Consider the snapshot complete once no batch has arrived for a while.
        const auto quiet = std::chrono::milliseconds(settle_ms) + options.simulated_rtt;
        std::uint64_t seen = client->batches_received();
        auto last_change = std::chrono::steady_clock::now();
        while (std::chrono::steady_clock::now() - last_change < quiet && client->connected()) {
            std::this_thread::sleep_for(std::chrono::milliseconds(20));
            if (client->batches_received() != seen) {
                seen = client->batches_received();
                last_change = std::chrono::steady_clock::now();
            }
        }
        std::cout << client->canonical_state();
        client->close();
        return client->error() ? 1 : 0;
    }

    std::uint64_t reported = 0;
    while (!g_interrupted && client->connected()) {
        std::this_thread::sleep_for(std::chrono::seconds(1));
        if (client->batches_received() != reported) {
            reported = client->batches_received();
            spdlog::info("seq {} ({} batches, {} messages)", client->last_seq(), reported,
                         client->messages_received());
        }
    }
    if (auto error = client->error()) {
        spdlog::error("{}", *error);
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"viewsync: server-driven 3D visualization over WebSockets"};
    app.require_subcommand(1);

    std::string demo_name;
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string static_dir;
    auto* demo = app.add_subcommand("demo", "Run one of the bundled demos");
    std::vector<std::string> names(demos::kDemoNames.begin(), demos::kDemoNames.end());
    demo->add_option("name", demo_name, "Demo to run")->required()->check(CLI::IsMember(names));
    demo->add_option("--host", host, "Address to bind")->capture_default_str();
    demo->add_option("--port", port, "Port to bind")->capture_default_str()->check(CLI::Range(1, 65535));
    demo->add_option("--static-dir", static_dir, "Directory with the browser client bundle");

    std::string out;
    bool check = false;
    auto* gen = app.add_subcommand("gen-schema", "Write the schema document and TypeScript declarations");
    gen->add_option("out", out, "Output directory")->required();
    gen->add_flag("--check", check, "Exit 1 if the files in <out> are stale instead of writing them");

    std::string url;
    bool dump_state = false;
    int rtt_ms = 0;
    int settle_ms = 500;
    auto* headless = app.add_subcommand("headless", "Headless protocol client");
    headless->require_subcommand(1);
    auto* connect = headless->add_subcommand("connect", "Connect to a server and mirror its state");
    connect->add_option("url", url, "Server URL, e.g. ws://127.0.0.1:8080/ws")->required();
    connect->add_flag("--dump-state", dump_state, "Print the canonical state once the snapshot settles, then exit");
    connect->add_option("--rtt", rtt_ms, "Simulated round-trip time in milliseconds")->check(CLI::NonNegativeNumber);
    connect->add_option("--settle", settle_ms, "Quiet period that ends --dump-state, in milliseconds")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        if (argc <= 1) std::cerr << app.help();
        return 2;
    }

    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    try {
        if (*demo) return run_demo(demo_name, host, port, static_dir);
        if (*gen) return gen_schema(out, check);
        if (*connect) return run_headless(url, dump_state, rtt_ms, settle_ms);
    } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        return 1;
    }
    return 2;
}
