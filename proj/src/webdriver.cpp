#include <httplib.h>

#include <thread>

#include "fubench/runner.hpp"

namespace fubench {

namespace {

constexpr const char* kElementKey = "element-6066-11e4-a52f-4a0d2b12a2fb";

struct Reply {
  int status = 0;
  json value;

  std::string error() const {
    if (value.is_object() && value.contains("error")) return value["error"].get<std::string>();
    return {};
  }
  std::string message() const {
    std::string m = error();
    if (value.is_object() && value.contains("message")) m += ": " + value["message"].get<std::string>();
    return m.empty() ? "HTTP " + std::to_string(status) : m;
  }
};

class WebDriverBrowser final : public Browser {
 public:
  WebDriverBrowser(const WebDriverOptions& o, const BrowserOptions& b) : client_(o.endpoint), poll_ms_(o.poll_interval_ms) {
    if (!client_.is_valid()) throw BrowserCrash("invalid WebDriver endpoint: " + o.endpoint);
    client_.set_connection_timeout(std::chrono::seconds(5));
    client_.set_read_timeout(std::chrono::seconds(300));
    client_.set_write_timeout(std::chrono::seconds(30));

    json always = {{"browserName", o.browser_name}};
    json args = json::array();
    if (o.browser_name == "firefox") {
      if (o.headless) args.push_back("-headless");
      if (!b.profile_dir.empty()) {
        args.push_back("-profile");
        args.push_back(b.profile_dir.string());
      }
      always["moz:firefoxOptions"] = {{"args", args}};
    } else if (o.browser_name == "chrome" || o.browser_name == "chromium" || o.browser_name == "MicrosoftEdge") {
      if (o.headless) args.push_back("--headless=new");
      if (!b.profile_dir.empty()) args.push_back("--user-data-dir=" + b.profile_dir.string());
      always[o.browser_name == "MicrosoftEdge" ? "ms:edgeOptions" : "goog:chromeOptions"] = {{"args", args}};
    }
    const Reply r = call("POST", "/session", {{"capabilities", {{"alwaysMatch", always}}}});
    if (r.status != 200 || !r.value.contains("sessionId"))
      throw BrowserCrash("cannot start browser session at " + o.endpoint + ": " + r.message());
    session_ = "/session/" + r.value["sessionId"].get<std::string>();
  }

  ~WebDriverBrowser() override {
    try {
      quit();
    } catch (...) {
    }
  }

  void navigate(const std::string& url, int timeout_ms) override {
    call("POST", session_ + "/timeouts", {{"pageLoad", timeout_ms}});
    const Reply r = call("POST", session_ + "/url", {{"url", url}});
    if (r.status != 200) throw StepFailure("navigate " + url + ": " + r.message());
  }

  std::optional<std::string> find_now(const std::string& selector) override {
    const Reply r = call("POST", session_ + "/element", {{"using", "css selector"}, {"value", selector}});
    if (r.status == 200) return r.value.at(kElementKey).get<std::string>();
    if (r.error() == "no such element") return std::nullopt;
    throw StepFailure("find " + selector + ": " + r.message());
  }

  std::string find(const std::string& selector, int timeout_ms) override {
    const auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
    for (;;) {
      if (auto e = find_now(selector)) return *e;
      if (std::chrono::steady_clock::now() >= deadline)
        throw StepFailure("timeout after " + std::to_string(timeout_ms) + " ms waiting for " + selector);
      std::this_thread::sleep_for(std::chrono::milliseconds(poll_ms_));
    }
  }

  void click(const std::string& element) override {
    const Reply r = call("POST", session_ + "/element/" + element + "/click", json::object());
    if (r.status != 200) throw StepFailure("click: " + r.message());
  }

  void send_keys(const std::string& element, const std::string& text) override {
    const Reply r = call("POST", session_ + "/element/" + element + "/value", {{"text", text}});
    if (r.status != 200) throw StepFailure("type_text: " + r.message());
  }

  std::string ready_state() override {
    const Reply r =
        call("POST", session_ + "/execute/sync", {{"script", "return document.readyState"}, {"args", json::array()}});
    if (r.status != 200) throw StepFailure("readyState: " + r.message());
    return r.value.is_string() ? r.value.get<std::string>() : std::string{};
  }

  void quit() override {
    if (session_.empty()) return;
    const std::string s = std::exchange(session_, {});
    call("DELETE", s, json());
  }

 private:
  Reply call(const std::string& method, const std::string& path, const json& body) {
    httplib::Result res = method == "DELETE" ? client_.Delete(path)
                          : method == "GET"  ? client_.Get(path)
                                             : client_.Post(path, body.dump(), "application/json");
    if (!res) throw BrowserCrash("WebDriver " + method + " " + path + " failed: " + httplib::to_string(res.error()));
    Reply r;
    r.status = res->status;
    try {
      r.value = json::parse(res->body).value("value", json());
    } catch (const json::parse_error&) {
      throw BrowserCrash("WebDriver " + method + " " + path + ": unparseable response");
    }
    return r;
  }

  httplib::Client client_;
  int poll_ms_;
  std::string session_;
};

}  // namespace

std::unique_ptr<Browser> WebDriverLauncher::launch(const BrowserOptions& options) {
  return std::make_unique<WebDriverBrowser>(options_, options);
}

void run_step(Browser& b, const ScenarioStep& step) {
  switch (step.action) {
    case StepAction::navigate: b.navigate(step.target, step.timeout_ms); return;
    case StepAction::click: b.click(b.find(step.target, step.timeout_ms)); return;
    case StepAction::type_text: b.send_keys(b.find(step.target, step.timeout_ms), step.payload.value_or("")); return;
    case StepAction::wait_for_selector: b.find(step.target, step.timeout_ms); return;
    case StepAction::assert_present:
      if (!b.find_now(step.target)) throw StepFailure("assertion failed: nothing matches " + step.target);
      return;
    case StepAction::wait_page_complete: {
      const auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(step.timeout_ms);
      while (b.ready_state() != "complete") {
        if (std::chrono::steady_clock::now() >= deadline)
          throw StepFailure("timeout after " + std::to_string(step.timeout_ms) + " ms waiting for page load");
        std::this_thread::sleep_for(std::chrono::milliseconds(50));
      }
      return;
    }
  }
}

}  // namespace fubench
