#pragma once

// In-process HTTP server for crawler and pipeline tests, backed by the same
// vendored cpp-httplib the fetcher uses. Records request arrival times so
// politeness can be asserted.

#include "httplib.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace testsupport {

class TestServer {
  public:
    struct Hit {
        std::string path;
        std::chrono::steady_clock::time_point at;
    };

    TestServer() {
        server_.set_pre_routing_handler([this](const httplib::Request& req, httplib::Response&) {
            std::lock_guard<std::mutex> lock(mutex_);
            hits_.push_back({req.path, std::chrono::steady_clock::now()});
            return httplib::Server::HandlerResponse::Unhandled;
        });
    }

    ~TestServer() { stop(); }

    void add_page(const std::string& path, const std::string& body,
                  const std::string& content_type = "text/html") {
        server_.Get(path, [body, content_type](const httplib::Request&, httplib::Response& res) {
            res.set_content(body, content_type);
        });
    }

    void add_redirect(const std::string& path, const std::string& location, int status = 302) {
        server_.Get(path, [location, status](const httplib::Request&, httplib::Response& res) {
            res.status = status;
            res.set_header("Location", location);
        });
    }

    // serves every regular file in the directory under "/<filename>"
    void serve_directory(const std::filesystem::path& dir) {
        for (const auto& entry : std::filesystem::directory_iterator(dir)) {
            if (!entry.is_regular_file()) continue;
            std::ifstream in(entry.path(), std::ios::binary);
            std::string body((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            add_page("/" + entry.path().filename().string(), body);
        }
    }

    // binds an ephemeral port and starts serving; returns the base URL
    std::string start() {
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
        return "http://127.0.0.1:" + std::to_string(port_);
    }

    void stop() {
        if (thread_.joinable()) {
            server_.stop();
            thread_.join();
        }
    }

    int port() const { return port_; }

    std::vector<Hit> hits() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return hits_;
    }

  private:
    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
    mutable std::mutex mutex_;
    std::vector<Hit> hits_;
};

}  // namespace testsupport
