#pragma once

// In-process stand-ins for a browser driver, a web site and an ad-block
// resolver, so runner tests need no browser, no network and no root.

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

namespace httplib {
class Server;
}

namespace fakes {

/// Serves a directory over HTTP on 127.0.0.1 and accepts POST /upload.
class StaticSite {
 public:
  explicit StaticSite(std::filesystem::path root);
  ~StaticSite();

  int port() const { return port_; }
  std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port_); }
  std::size_t uploaded_bytes() const { return uploaded_; }

 private:
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<std::size_t> uploaded_{0};
};

struct FakeElement {
  std::string tag;
  std::map<std::string, std::string> attrs;
  std::vector<std::size_t> ancestors;
};

/// Minimal CSS matching: compound selectors of tag, #id, .class and
/// [attr="value"], joined by descendant whitespace.
bool matches(const std::vector<FakeElement>& doc, std::size_t index, const std::string& selector);
std::vector<FakeElement> parse_html(const std::string& html);

/// W3C WebDriver endpoint that "renders" pages by fetching them and their
/// src/href assets over real HTTP, so loopback counters see the traffic.
class FakeWebDriver {
 public:
  struct Options {
    double click_failure_probability = 0.0;  // per click, seeded
    unsigned seed = 1;
    bool refuse_sessions = false;
  };

  FakeWebDriver();
  explicit FakeWebDriver(Options o);
  ~FakeWebDriver();

  int port() const { return port_; }
  std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port_); }

  int sessions_created() const { return sessions_created_; }
  int sessions_open() const;
  std::vector<nlohmann::json> capabilities() const;
  int injected_failures() const { return injected_failures_; }

 private:
  struct Session {
    std::string url;
    std::vector<FakeElement> doc;
    int generation = 0;
    std::map<std::size_t, std::string> values;
  };

  void load(Session& s, const std::string& url);

  Options options_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = 0;
  mutable std::mutex mu_;
  std::map<std::string, Session> sessions_;
  std::vector<nlohmann::json> capabilities_;
  std::mt19937 rng_;
  std::atomic<int> sessions_created_{0};
  std::atomic<int> injected_failures_{0};
};

/// UDP resolver answering 0.0.0.0 for blocked names and 93.184.216.34 else.
class FakeDns {
 public:
  explicit FakeDns(std::set<std::string> blocked);
  ~FakeDns();

  int port() const { return port_; }
  std::string address() const { return "127.0.0.1:" + std::to_string(port_); }
  int queries() const { return queries_; }

 private:
  void serve();

  std::set<std::string> blocked_;
  int fd_ = -1;
  int port_ = 0;
  std::atomic<bool> stop_{false};
  std::atomic<int> queries_{0};
  std::thread thread_;
};

/// Writes a growing powercap-style energy_uj file from a background thread.
class FakePowercap {
 public:
  FakePowercap(std::filesystem::path dir, double watts);
  ~FakePowercap();
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::atomic<bool> stop_{false};
  std::thread thread_;
};

}  // namespace fakes
