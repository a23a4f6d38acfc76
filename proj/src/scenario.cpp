#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "fubench/runner.hpp"

namespace fubench {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string where(int line) { return "line " + std::to_string(line) + ": "; }

std::string read_all(const std::filesystem::path& p, const char* what) {
  std::ifstream in(p);
  if (!in) throw ScenarioError(std::string("cannot read ") + what + " file " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string step_action_name(StepAction a) {
  switch (a) {
    case StepAction::navigate: return "navigate";
    case StepAction::click: return "click";
    case StepAction::type_text: return "type_text";
    case StepAction::wait_for_selector: return "wait_for_selector";
    case StepAction::wait_page_complete: return "wait_page_complete";
    case StepAction::assert_present: return "assert_present";
  }
  return "?";
}

StepAction parse_step_action(const std::string& s) {
  for (auto a : {StepAction::navigate, StepAction::click, StepAction::type_text, StepAction::wait_for_selector,
                 StepAction::wait_page_complete, StepAction::assert_present})
    if (step_action_name(a) == s) return a;
  throw ScenarioError("unknown step action: " + s);
}

std::vector<FunctionalUnitKind> ScenarioScript::units() const {
  std::vector<FunctionalUnitKind> out;
  for (const auto& m : unit_marks)
    if (std::find(out.begin(), out.end(), m.unit) == out.end()) out.push_back(m.unit);
  return out;
}

std::map<std::string, std::string> parse_selector_map(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ScenarioError(where(lineno) + "expected 'name = selector'");
    std::string name = trim(std::string_view(t).substr(0, eq));
    std::string sel = trim(std::string_view(t).substr(eq + 1));
    if (name.empty() || sel.empty()) throw ScenarioError(where(lineno) + "empty selector name or value");
    if (!out.emplace(name, sel).second) throw ScenarioError(where(lineno) + "duplicate selector '" + name + "'");
  }
  return out;
}

namespace {

std::string substitute(const std::string& s, const std::map<std::string, std::string>& params,
                       const std::map<std::string, std::string>& defaults, int line) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '{') {
      out += s[i++];
      continue;
    }
    const auto close = s.find('}', i);
    if (close == std::string::npos) throw ScenarioError(where(line) + "unterminated placeholder");
    const std::string name = s.substr(i + 1, close - i - 1);
    if (auto it = params.find(name); it != params.end())
      out += it->second;
    else if (auto d = defaults.find(name); d != defaults.end())
      out += d->second;
    else
      throw ScenarioError(where(line) + "no value for placeholder {" + name + "}");
    i = close + 1;
  }
  return out;
}

struct OpenMark {
  FunctionalUnitKind unit;
  std::size_t first_step;
  int line;
};

}  // namespace

ScenarioScript parse_scenario(std::string_view text, const std::map<std::string, std::string>& selectors,
                              const std::map<std::string, std::string>& params, std::string service) {
  ScenarioScript script;
  script.service = std::move(service);
  std::map<std::string, std::string> defaults;
  std::vector<OpenMark> open;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string t = trim(raw);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream words(t);
    std::string head;
    words >> head;
    std::string rest;
    std::getline(words, rest);
    rest = trim(rest);

    if (head == "set") {
      const auto eq = rest.find('=');
      if (eq == std::string::npos) throw ScenarioError(where(lineno) + "expected 'set name = value'");
      defaults[trim(std::string_view(rest).substr(0, eq))] = trim(std::string_view(rest).substr(eq + 1));
      continue;
    }
    if (head == "begin") {
      if (rest.empty()) throw ScenarioError(where(lineno) + "begin needs a unit name");
      open.push_back({FunctionalUnitKind(rest), script.steps.size(), lineno});
      continue;
    }
    if (head == "end") {
      if (open.empty() || open.back().unit.name() != rest)
        throw ScenarioError(where(lineno) + "'end " + rest + "' does not close the innermost open unit" +
                            (open.empty() ? std::string{} : " (" + open.back().unit.name() + ")"));
      if (open.back().first_step == script.steps.size())
        throw ScenarioError(where(lineno) + "unit " + rest + " has no steps");
      script.unit_marks.push_back({open.back().unit, open.back().first_step, script.steps.size() - 1});
      open.pop_back();
      continue;
    }

    ScenarioStep step;
    step.line = lineno;
    try {
      step.action = parse_step_action(head);
    } catch (const ScenarioError& e) {
      throw ScenarioError(where(lineno) + e.what());
    }
    // trailing timeout=N
    if (auto pos = rest.rfind("timeout="); pos != std::string::npos && (pos == 0 || rest[pos - 1] == ' ')) {
      const std::string num = rest.substr(pos + 8);
      int ms = 0;
      auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), ms);
      if (ec != std::errc{} || p != num.data() + num.size())
        throw ScenarioError(where(lineno) + "bad timeout '" + num + "'");
      step.timeout_ms = ms;
      rest = trim(std::string_view(rest).substr(0, pos));
    }
    if (step.action != StepAction::wait_page_complete) {
      if (rest.empty()) throw ScenarioError(where(lineno) + head + " needs a target");
      std::string target = rest;
      std::string payload;
      if (step.action != StepAction::navigate || rest.find(' ') != std::string::npos) {
        const auto sp = rest.find(' ');
        target = rest.substr(0, sp);
        payload = sp == std::string::npos ? std::string{} : trim(std::string_view(rest).substr(sp + 1));
      }
      if (target[0] == '$') {
        auto it = selectors.find(target.substr(1));
        if (it == selectors.end())
          throw ScenarioError(where(lineno) + "selector " + target + " is not in the selector map");
        target = it->second;
      }
      step.target = substitute(target, params, defaults, lineno);
      if (step.action == StepAction::type_text) {
        if (payload.empty()) throw ScenarioError(where(lineno) + "type_text needs text after the selector");
        step.payload = substitute(payload, params, defaults, lineno);
      } else if (!payload.empty()) {
        throw ScenarioError(where(lineno) + "unexpected text after target: " + payload);
      }
    } else if (!rest.empty()) {
      throw ScenarioError(where(lineno) + "wait_page_complete takes no target");
    }
    script.steps.push_back(std::move(step));
  }
  if (!open.empty())
    throw ScenarioError(where(open.back().line) + "unit " + open.back().unit.name() + " is never closed");
  std::sort(script.unit_marks.begin(), script.unit_marks.end(), [](const UnitMark& a, const UnitMark& b) {
    return a.first_step != b.first_step ? a.first_step < b.first_step : a.last_step > b.last_step;
  });
  validate_scenario(script);
  return script;
}

ScenarioScript load_scenario(const std::filesystem::path& scenario, const std::filesystem::path& selectors,
                             const std::map<std::string, std::string>& params, std::string service) {
  const std::string sel_text = selectors.empty() ? std::string{} : read_all(selectors, "selector map");
  const std::string text = read_all(scenario, "scenario");
  try {
    return parse_scenario(text, parse_selector_map(sel_text), params, std::move(service));
  } catch (const ScenarioError& e) {
    throw ScenarioError(scenario.string() + ": " + e.what());
  }
}

void validate_scenario(const ScenarioScript& s) {
  for (const auto& st : s.steps)
    if (st.timeout_ms <= 0)
      throw ScenarioError(where(st.line) + "timeout must be positive, got " + std::to_string(st.timeout_ms));
  for (const auto& m : s.unit_marks) {
    if (m.first_step > m.last_step || m.last_step >= s.steps.size())
      throw ScenarioError("unit " + m.unit.name() + " references steps outside the script");
  }
  for (std::size_t i = 0; i < s.unit_marks.size(); ++i) {
    for (std::size_t j = i + 1; j < s.unit_marks.size(); ++j) {
      const auto& a = s.unit_marks[i];
      const auto& b = s.unit_marks[j];
      const bool overlap = a.first_step <= b.last_step && b.first_step <= a.last_step;
      if (!overlap) continue;
      const bool a_spans = a.unit.is_session() && a.first_step <= b.first_step && b.last_step <= a.last_step;
      const bool b_spans = b.unit.is_session() && b.first_step <= a.first_step && a.last_step <= b.last_step;
      if (!a_spans && !b_spans)
        throw ScenarioError("units " + a.unit.name() + " and " + b.unit.name() + " overlap");
    }
  }
}

}  // namespace fubench
