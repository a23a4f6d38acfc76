#include <arpa/inet.h>
#include <fcntl.h>
#include <netdb.h>
#include <netinet/in.h>
#include <poll.h>
#include <spawn.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cmath>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>

#include "fubench/runner.hpp"

extern char** environ;

namespace fubench {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Commands

int SystemCommandRunner::run(const std::vector<std::string>& argv, std::string* output) {
  if (argv.empty()) throw std::invalid_argument("empty command");
  int fds[2];
  if (pipe(fds) != 0) throw std::runtime_error(std::string("pipe: ") + std::strerror(errno));
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_addclose(&actions, fds[0]);
  posix_spawn_file_actions_adddup2(&actions, fds[1], STDOUT_FILENO);
  posix_spawn_file_actions_adddup2(&actions, fds[1], STDERR_FILENO);
  posix_spawn_file_actions_addclose(&actions, fds[1]);

  std::vector<char*> args;
  for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
  args.push_back(nullptr);
  pid_t pid = 0;
  const int rc = posix_spawnp(&pid, args[0], &actions, nullptr, args.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  close(fds[1]);
  if (rc != 0) {
    close(fds[0]);
    if (output) *output = "cannot execute " + argv[0] + ": " + std::strerror(rc);
    return 127;
  }
  std::string out;
  char buf[4096];
  ssize_t n;
  while ((n = read(fds[0], buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(n));
  close(fds[0]);
  int status = 0;
  waitpid(pid, &status, 0);
  if (output) *output = std::move(out);
  return WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
}

// ---------------------------------------------------------------------------
// Resolver and latency shaping

std::string read_text_file(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

void write_text_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << content;
  if (!out.flush()) throw std::runtime_error("cannot write " + p.string());
}

std::pair<std::string, std::string> split_host_port(const std::string& s, const std::string& default_port) {
  if (!s.empty() && s[0] == '[') {
    const auto close = s.find(']');
    if (close == std::string::npos) throw std::invalid_argument("bad address: " + s);
    const std::string host = s.substr(1, close - 1);
    if (close + 1 < s.size() && s[close + 1] == ':') return {host, s.substr(close + 2)};
    return {host, default_port};
  }
  const auto colon = s.find(':');
  if (colon != std::string::npos && s.find(':', colon + 1) == std::string::npos)
    return {s.substr(0, colon), s.substr(colon + 1)};
  return {s, default_port};
}

std::vector<std::string> netem_command(const std::string& iface, int ms) {
  return {"tc", "qdisc", "replace", "dev", iface, "root", "netem", "delay", std::to_string(ms) + "ms"};
}

}  // namespace

void to_json(json& j, const RunConfig& c) {
  j = json{{"condition", c.condition},
           {"iterations", c.iterations},
           {"iteration_cap", c.iteration_cap()},
           {"browser_profile", c.browser_profile},
           {"profile_templates", c.profile_templates.string()},
           {"dns_resolver", c.dns_resolver ? json(*c.dns_resolver) : json()},
           {"resolv_conf", c.resolv_conf.string()},
           {"network_interface", c.network_interface},
           {"attachment_path", c.attachment_path.string()},
           {"settle_ms", c.settle.count()}};
}

ConditionHandle::ConditionHandle(ConditionHandle&& o) noexcept { *this = std::move(o); }

ConditionHandle& ConditionHandle::operator=(ConditionHandle&& o) noexcept {
  if (this != &o) {
    release();
    active_ = std::exchange(o.active_, false);
    commands_ = o.commands_;
    saved_resolv_ = std::move(o.saved_resolv_);
    resolv_path_ = std::move(o.resolv_path_);
    shaped_interface_ = std::move(o.shaped_interface_);
    changes_ = std::move(o.changes_);
  }
  return *this;
}

ConditionHandle::~ConditionHandle() { release(); }

void ConditionHandle::release() {
  if (!active_) return;
  active_ = false;
  if (shaped_interface_ && commands_) {
    std::string out;
    commands_->run({"tc", "qdisc", "del", "dev", *shaped_interface_, "root"}, &out);
    shaped_interface_.reset();
  }
  if (saved_resolv_) {
    try {
      write_text_file(resolv_path_, *saved_resolv_);
    } catch (...) {
    }
    saved_resolv_.reset();
  }
}

ConditionHandle apply_condition(const RunConfig& cfg, CommandRunner& commands) {
  ConditionHandle h;
  h.active_ = true;
  h.commands_ = &commands;
  const ConditionSpec& c = cfg.condition;

  if (c.adblock) {
    if (!cfg.dns_resolver || cfg.dns_resolver->empty())
      throw ConditionError("adblock condition needs dns_resolver (the blocking resolver address)");
    const auto [host, port] = split_host_port(*cfg.dns_resolver, "53");
    try {
      h.saved_resolv_ = fs::exists(cfg.resolv_conf) ? read_text_file(cfg.resolv_conf) : std::string{};
      h.resolv_path_ = cfg.resolv_conf;
      write_text_file(cfg.resolv_conf, "# fubench adblock condition\nnameserver " + host + "\n");
    } catch (const std::exception& e) {
      throw ConditionError(std::string("cannot set resolver: ") + e.what());
    }
    h.changes_.push_back("resolver " + cfg.resolv_conf.string() + " -> " + host);
    DnsAnswer a;
    try {
      a = dns_query(*cfg.dns_resolver, cfg.adblock_probe_domain);
    } catch (const std::exception& e) {
      throw ConditionError("ad-block resolver " + *cfg.dns_resolver + " did not answer the probe for " +
                           cfg.adblock_probe_domain + ": " + e.what());
    }
    if (!is_blocked_answer(a)) {
      std::string ips;
      for (const auto& ip : a.ipv4) ips += (ips.empty() ? "" : ",") + ip;
      throw ConditionError("ad-block resolver " + *cfg.dns_resolver + " resolves " + cfg.adblock_probe_domain +
                           " to routable " + ips + "; blocking is not active");
    }
  }

  if (c.injected_latency_ms < 0) throw ConditionError("injected_latency_ms must not be negative");
  if (c.injected_latency_ms > 0) {
    std::string out;
    const auto cmd = netem_command(cfg.network_interface, c.injected_latency_ms);
    const int rc = commands.run(cmd, &out);
    if (rc != 0)
      throw ConditionError("cannot shape latency on " + cfg.network_interface + " (exit " + std::to_string(rc) +
                           "): " + out);
    h.shaped_interface_ = cfg.network_interface;
    h.changes_.push_back("egress netem delay " + std::to_string(c.injected_latency_ms) + "ms on " +
                         cfg.network_interface + " (full delay on egress, none on ingress)");
  }
  return h;
}

std::vector<std::string> verify_baseline(const RunConfig& cfg, CommandRunner& commands,
                                         const std::optional<std::string>& expected_resolv) {
  std::vector<std::string> problems;
  if (expected_resolv) {
    std::string now;
    try {
      now = fs::exists(cfg.resolv_conf) ? read_text_file(cfg.resolv_conf) : std::string{};
    } catch (const std::exception& e) {
      problems.push_back(e.what());
    }
    if (now != *expected_resolv) problems.push_back("resolver file " + cfg.resolv_conf.string() + " not restored");
  }
  if (cfg.condition.injected_latency_ms > 0) {
    std::string out;
    const int rc = commands.run({"tc", "qdisc", "show", "dev", cfg.network_interface}, &out);
    if (rc != 0)
      problems.push_back("cannot inspect qdisc on " + cfg.network_interface + ": " + out);
    else if (out.find("netem") != std::string::npos)
      problems.push_back("netem still active on " + cfg.network_interface);
  }
  return problems;
}

// ---------------------------------------------------------------------------
// DNS probe

namespace {

class Fd {
 public:
  explicit Fd(int fd) : fd_(fd) {}
  ~Fd() {
    if (fd_ >= 0) close(fd_);
  }
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  int get() const { return fd_; }

 private:
  int fd_;
};

struct AddrInfo {
  addrinfo* head = nullptr;
  ~AddrInfo() {
    if (head) freeaddrinfo(head);
  }
};

void resolve(const std::string& host, const std::string& port, int socktype, AddrInfo& out) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = socktype;
  const int rc = getaddrinfo(host.c_str(), port.c_str(), &hints, &out.head);
  if (rc != 0 || !out.head) throw std::runtime_error("cannot resolve " + host + ": " + gai_strerror(rc));
}

std::size_t skip_name(const std::vector<unsigned char>& m, std::size_t i) {
  while (i < m.size()) {
    const unsigned char len = m[i];
    if (len == 0) return i + 1;
    if ((len & 0xC0) == 0xC0) return i + 2;
    i += 1 + len;
  }
  throw std::runtime_error("truncated DNS name");
}

}  // namespace

DnsAnswer dns_query(const std::string& server, const std::string& name, int timeout_ms) {
  const auto [host, port] = split_host_port(server, "53");
  AddrInfo ai;
  resolve(host, port, SOCK_DGRAM, ai);

  std::vector<unsigned char> q;
  std::mt19937 rng(std::random_device{}());
  const std::uint16_t id = static_cast<std::uint16_t>(rng());
  q.insert(q.end(), {static_cast<unsigned char>(id >> 8), static_cast<unsigned char>(id & 0xff), 0x01, 0x00, 0, 1,
                     0, 0, 0, 0, 0, 0});
  std::istringstream labels(name);
  std::string label;
  while (std::getline(labels, label, '.')) {
    if (label.empty()) continue;
    if (label.size() > 63) throw std::invalid_argument("DNS label too long: " + label);
    q.push_back(static_cast<unsigned char>(label.size()));
    q.insert(q.end(), label.begin(), label.end());
  }
  q.insert(q.end(), {0, 0, 1, 0, 1});

  Fd sock(socket(ai.head->ai_family, SOCK_DGRAM, 0));
  if (sock.get() < 0) throw std::runtime_error(std::string("socket: ") + std::strerror(errno));
  if (sendto(sock.get(), q.data(), q.size(), 0, ai.head->ai_addr, ai.head->ai_addrlen) < 0)
    throw std::runtime_error(std::string("sendto: ") + std::strerror(errno));

  std::vector<unsigned char> m(1500);
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
  for (;;) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) throw std::runtime_error("timeout after " + std::to_string(timeout_ms) + " ms");
    pollfd p{sock.get(), POLLIN, 0};
    if (poll(&p, 1, static_cast<int>(left.count())) <= 0) continue;
    const ssize_t n = recv(sock.get(), m.data(), m.size(), 0);
    if (n < 12) continue;
    if (((m[0] << 8) | m[1]) != id) continue;
    m.resize(static_cast<std::size_t>(n));
    break;
  }
  DnsAnswer a;
  a.rcode = m[3] & 0x0f;
  const int qd = (m[4] << 8) | m[5];
  const int an = (m[6] << 8) | m[7];
  std::size_t i = 12;
  for (int k = 0; k < qd; ++k) i = skip_name(m, i) + 4;
  for (int k = 0; k < an; ++k) {
    i = skip_name(m, i);
    if (i + 10 > m.size()) throw std::runtime_error("truncated DNS answer");
    const int type = (m[i] << 8) | m[i + 1];
    const std::size_t rdlen = static_cast<std::size_t>((m[i + 8] << 8) | m[i + 9]);
    i += 10;
    if (i + rdlen > m.size()) throw std::runtime_error("truncated DNS answer");
    if (type == 1 && rdlen == 4) {
      char buf[INET_ADDRSTRLEN];
      inet_ntop(AF_INET, &m[i], buf, sizeof buf);
      a.ipv4.emplace_back(buf);
    }
    i += rdlen;
  }
  return a;
}

bool is_blocked_answer(const DnsAnswer& a) {
  if (a.rcode == 3) return true;
  if (a.rcode != 0 || a.ipv4.empty()) return false;
  for (const auto& ip : a.ipv4)
    if (ip.rfind("0.", 0) != 0 && ip.rfind("127.", 0) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Latency

LatencyStats measure_latency(const std::string& target, int count, int timeout_ms) {
  if (count < 1) throw std::invalid_argument("probe count must be >= 1");
  const auto [host, port] = split_host_port(target, "443");
  AddrInfo ai;
  resolve(host, port, SOCK_STREAM, ai);
  std::vector<double> rtt;
  rtt.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    Fd sock(socket(ai.head->ai_family, SOCK_STREAM | SOCK_NONBLOCK, 0));
    if (sock.get() < 0) throw std::runtime_error(std::string("socket: ") + std::strerror(errno));
    const auto t0 = std::chrono::steady_clock::now();
    int err = 0;
    if (connect(sock.get(), ai.head->ai_addr, ai.head->ai_addrlen) != 0) {
      if (errno != EINPROGRESS) {
        err = errno;
      } else {
        pollfd p{sock.get(), POLLOUT, 0};
        const int rc = poll(&p, 1, timeout_ms);
        if (rc == 0) throw std::runtime_error("no response from " + target + " within " + std::to_string(timeout_ms) + " ms");
        socklen_t len = sizeof err;
        getsockopt(sock.get(), SOL_SOCKET, SO_ERROR, &err, &len);
      }
    }
    const auto t1 = std::chrono::steady_clock::now();
    const linger abort_close{1, 0};
    setsockopt(sock.get(), SOL_SOCKET, SO_LINGER, &abort_close, sizeof abort_close);
    if (err != 0 && err != ECONNREFUSED)
      throw std::runtime_error("cannot reach " + target + ": " + std::strerror(err));
    rtt.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  LatencyStats s;
  s.count = count;
  double sum = 0.0;
  for (double r : rtt) sum += r;
  s.mean_ms = sum / count;
  if (count > 1) {
    double ss = 0.0;
    for (double r : rtt) ss += (r - s.mean_ms) * (r - s.mean_ms);
    s.sd_ms = std::sqrt(ss / (count - 1));
  }
  return s;
}

}  // namespace fubench
