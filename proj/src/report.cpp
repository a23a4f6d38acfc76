#include "fubench/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "fubench/emissions.hpp"
#include "fubench/stats.hpp"

namespace fubench {

std::string Endpoint::label() const { return service + ":" + condition.key(); }

Endpoint parse_endpoint(const std::string& s) {
  Endpoint e;
  const auto colon = s.find(':');
  e.service = s.substr(0, colon);
  if (e.service.empty()) throw std::invalid_argument("missing service in '" + s + "'");
  if (colon != std::string::npos) e.condition = parse_condition_key(s.substr(colon + 1));
  return e;
}

std::optional<MeasurementSeries> StoreSeriesSource::series(const Endpoint& e, const FunctionalUnitKind& unit) const {
  return store_.load_series(e.service, e.condition, unit);
}

std::vector<FunctionalUnitKind> StoreSeriesSource::units(const Endpoint& e) const {
  std::vector<FunctionalUnitKind> out;
  for (const auto& r : store_.read_results(e.service, e.condition))
    if (std::find(out.begin(), out.end(), r.unit) == out.end()) out.push_back(r.unit);
  return out;
}

std::string direction_name(Direction d) {
  switch (d) {
    case Direction::saving: return "saving";
    case Direction::increase: return "increase";
    case Direction::neutral: return "neutral";
  }
  return "?";
}

namespace {

Direction direction_of(double delta) {
  return delta > 0 ? Direction::saving : delta < 0 ? Direction::increase : Direction::neutral;
}

// Predefined kinds first in session order, then user-defined ones by name.
void order_units(std::vector<FunctionalUnitKind>& units) {
  auto rank = [](const FunctionalUnitKind& k) -> std::size_t {
    const auto& basic = basic_units();
    if (auto it = std::find(basic.begin(), basic.end(), k); it != basic.end())
      return static_cast<std::size_t>(it - basic.begin());
    return k.is_session() ? basic.size() : basic.size() + 1;
  };
  std::sort(units.begin(), units.end(), [&](const auto& a, const auto& b) {
    const auto ra = rank(a), rb = rank(b);
    return ra != rb ? ra < rb : a < b;
  });
}

std::vector<FunctionalUnitKind> common_units(const ReportSpec& spec, const SeriesSource& source) {
  if (!spec.units.empty()) return spec.units;
  auto a = source.units(spec.baseline);
  const auto b = source.units(spec.variant);
  std::vector<FunctionalUnitKind> out;
  for (const auto& u : a)
    if (std::find(b.begin(), b.end(), u) != b.end()) out.push_back(u);
  order_units(out);
  return out;
}

MeasurementSeries require(const SeriesSource& source, const Endpoint& e, const FunctionalUnitKind& u) {
  auto s = source.series(e, u);
  if (!s) throw MissingSeries("no " + u.name() + " series for " + e.label());
  if (s->results.size() < 2)
    throw MissingSeries(u.name() + " series for " + e.label() + " has " + std::to_string(s->results.size()) +
                        " usable results, need at least 2");
  return *s;
}

struct Means {
  double energy_j = 0.0;
  double bytes = 0.0;
  double duration_s = 0.0;
};

Means measured_means(const MeasurementSeries& s) {
  return {stats::summarize(s, Metric::energy_machine).mean, stats::summarize(s, Metric::network_bytes).mean,
          stats::summarize(s, Metric::duration).mean};
}

std::optional<Means> composed_means(const SeriesSource& source, const Endpoint& e) {
  std::map<FunctionalUnitKind, stats::Summary> energy, bytes, duration;
  for (const auto& [kind, count] : session_recipe()) {
    auto s = source.series(e, kind);
    if (!s || s->results.size() < 2) return std::nullopt;
    energy[kind] = stats::summarize(*s, Metric::energy_machine);
    bytes[kind] = stats::summarize(*s, Metric::network_bytes);
    duration[kind] = stats::summarize(*s, Metric::duration);
  }
  return Means{stats::compose_session(energy).mean, stats::compose_session(bytes).mean,
               stats::compose_session(duration).mean};
}

EmissionComponents breakdown(const Means& m, const EmissionFactors& f) {
  return emissions::emission_breakdown({m.energy_j, m.bytes / kBytesPerMegabyte, m.duration_s}, f);
}

}  // namespace

std::vector<ComparisonRow> comparison_table(const ReportSpec& spec, const SeriesSource& source) {
  std::vector<ComparisonRow> rows;
  for (const auto& u : common_units(spec, source)) {
    const auto a = require(source, spec.baseline, u);
    const auto b = require(source, spec.variant, u);
    for (Metric m : all_metrics()) {
      ComparisonRow row;
      row.unit = u;
      row.delta = stats::compare_series(a, b, m);
      row.direction = direction_of(row.delta.delta);
      row.n_baseline = a.retained_count;
      row.n_variant = b.retained_count;
      row.below_quota = !a.acceptance_grade() || !b.acceptance_grade();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

EmissionReport emission_table(const ReportSpec& spec, const SeriesSource& source) {
  const auto valid = validate_factors(spec.factors);
  if (!valid.ok()) throw std::invalid_argument("invalid emission factors: " + valid.violations.front());
  EmissionReport r;
  r.factors = spec.factors;
  auto units = common_units(spec, source);
  const auto session = FunctionalUnitKind::Session();
  if (spec.units.empty() && std::find(units.begin(), units.end(), session) == units.end()) {
    if (composed_means(source, spec.baseline) && composed_means(source, spec.variant)) units.push_back(session);
  }
  for (const auto& u : units) {
    Means a, b;
    const auto sa = source.series(spec.baseline, u);
    const auto sb = source.series(spec.variant, u);
    if (sa && sb && sa->results.size() >= 2 && sb->results.size() >= 2) {
      a = measured_means(*sa);
      b = measured_means(*sb);
      r.source[u] = "measured";
    } else if (u.is_session()) {
      auto ca = composed_means(source, spec.baseline);
      auto cb = composed_means(source, spec.variant);
      if (!ca || !cb)
        throw MissingSeries("Session is neither measured nor composable for " +
                            (ca ? spec.variant.label() : spec.baseline.label()));
      a = *ca;
      b = *cb;
      r.source[u] = "composed";
    } else {
      require(source, sa ? spec.variant : spec.baseline, u);
    }
    r.per_unit[u] = breakdown({a.energy_j - b.energy_j, a.bytes - b.bytes, a.duration_s - b.duration_s}, spec.factors);
    r.baseline_per_unit[u] = breakdown(a, spec.factors);
  }
  if (!spec.projections.empty()) {
    auto it = r.per_unit.find(session);
    if (it == r.per_unit.end()) throw MissingSeries("projections need a Session result");
    for (const auto& p : spec.projections)
      r.projections.push_back(
          scale_projection(it->second.total_g, p.population, p.sessions_per_year, spec.flight_rt_tonnes));
  }
  return r;
}

ScaleProjection scale_projection(double per_session_g, double population, double sessions_per_year,
                                 double flight_rt_tonnes) {
  if (!(per_session_g > 0)) throw std::invalid_argument("per-session saving must be positive");
  if (!(population > 0)) throw std::invalid_argument("population must be positive");
  if (!(sessions_per_year > 0)) throw std::invalid_argument("sessions per year must be positive");
  if (!(flight_rt_tonnes > 0)) throw std::invalid_argument("flight round-trip tonnes must be positive");
  ScaleProjection p;
  p.per_session_saving_g = per_session_g;
  p.population = population;
  p.sessions_per_year = sessions_per_year;
  p.annual_saving_t = per_session_g * population * sessions_per_year * 1e-6;
  p.flight_equivalents = p.annual_saving_t / flight_rt_tonnes;
  return p;
}

Report build_report(const ReportSpec& spec, const SeriesSource& source) {
  if (spec.baseline == spec.variant) throw std::invalid_argument("baseline and variant must differ");
  Report r;
  r.spec = spec;
  r.comparison = comparison_table(spec, source);
  r.emissions = emission_table(spec, source);
  return r;
}

// ---------------------------------------------------------------------------
// Rendering

Format parse_format(const std::string& s) {
  if (s == "table" || s == "plain" || s == "plain_table") return Format::plain_table;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  if (s == "markdown" || s == "md") return Format::markdown;
  throw std::invalid_argument("unknown format: " + s);
}

namespace {

std::string sig4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double pct(double part, double whole) { return whole == 0.0 ? 0.0 : 100.0 * part / whole; }

using Table = std::vector<std::vector<std::string>>;

Table comparison_rows(const Report& r) {
  Table t = {{"unit", "metric", "baseline", "variant", "delta", "delta_%", "p", "significant", "direction", "n"}};
  for (const auto& row : r.comparison) {
    const auto& d = row.delta;
    t.push_back({row.unit.name(), metric_name(d.metric), sig4(d.mean_a), sig4(d.mean_b), sig4(d.delta),
                 sig4(d.delta_pct), sig4(d.p_value), d.significant ? "yes" : "no", direction_name(row.direction),
                 std::to_string(row.n_baseline) + "/" + std::to_string(row.n_variant) +
                     (row.below_quota ? " (below quota)" : "")});
  }
  return t;
}

Table emission_rows(const Report& r) {
  Table t = {{"unit", "source", "use_user_g", "use_network_g", "embodied_user_g", "embodied_network_g", "total_g",
              "baseline_total_g", "saving_%", "use_saving_%"}};
  const auto& e = r.emissions;
  for (const auto& [unit, c] : e.per_unit) {
    const auto& base = e.baseline_per_unit.at(unit);
    t.push_back({unit.name(), e.source.at(unit), sig4(c.use_user_g), sig4(c.use_network_g), sig4(c.embodied_user_g),
                 sig4(c.embodied_network_g), sig4(c.total_g), sig4(base.total_g), sig4(pct(c.total_g, base.total_g)),
                 sig4(pct(c.use_user_g + c.use_network_g, base.use_user_g + base.use_network_g))});
  }
  return t;
}

Table projection_rows(const Report& r) {
  Table t = {{"per_session_g", "population", "sessions_per_year", "annual_t", "flight_equivalents"}};
  for (const auto& p : r.emissions.projections)
    t.push_back({sig4(p.per_session_saving_g), sig4(p.population), sig4(p.sessions_per_year),
                 sig4(p.annual_saving_t), sig4(p.flight_equivalents)});
  return t;
}

Table factor_rows(const Report& r) {
  Table t = {{"factor", "value"}};
  const json f = r.emissions.factors;
  for (const auto& [k, v] : f.items()) t.push_back({k, v.is_number_float() ? sig4(v.get<double>()) : v.dump()});
  t.push_back({"flight_rt_tonnes", sig4(r.spec.flight_rt_tonnes)});
  return t;
}

void plain(std::ostringstream& out, const std::string& title, const Table& t) {
  out << title << "\n";
  std::vector<std::size_t> w(t.front().size(), 0);
  for (const auto& row : t)
    for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
  for (std::size_t r = 0; r < t.size(); ++r) {
    std::string line;
    for (std::size_t i = 0; i < t[r].size(); ++i) {
      std::string cell = t[r][i];
      if (i + 1 < t[r].size()) cell.resize(w[i], ' ');
      line += (i ? "  " : "") + cell;
    }
    out << line << "\n";
    if (r == 0) {
      std::size_t total = 0;
      for (auto x : w) total += x;
      out << std::string(total + 2 * (w.size() - 1), '-') << "\n";
    }
  }
  out << "\n";
}

void markdown(std::ostringstream& out, const std::string& title, const Table& t) {
  out << "### " << title << "\n\n";
  for (std::size_t r = 0; r < t.size(); ++r) {
    out << "|";
    for (const auto& c : t[r]) out << " " << c << " |";
    out << "\n";
    if (r == 0) {
      out << "|";
      for (std::size_t i = 0; i < t[r].size(); ++i) out << (i < 2 ? " --- |" : " ---: |");
      out << "\n";
    }
  }
  out << "\n";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void csv_line(std::ostringstream& out, const std::string& section, const std::string& unit, const std::string& key,
              const std::string& value) {
  out << csv_field(section) << ',' << csv_field(unit) << ',' << csv_field(key) << ',' << csv_field(value) << "\n";
}

void components_csv(std::ostringstream& out, const std::string& section, const std::string& unit,
                    const EmissionComponents& c) {
  csv_line(out, section, unit, "use_user_g", full(c.use_user_g));
  csv_line(out, section, unit, "use_network_g", full(c.use_network_g));
  csv_line(out, section, unit, "embodied_user_g", full(c.embodied_user_g));
  csv_line(out, section, unit, "embodied_network_g", full(c.embodied_network_g));
  csv_line(out, section, unit, "total_g", full(c.total_g));
}

std::string render_csv(const Report& r) {
  std::ostringstream out;
  out << "section,unit,key,value\n";
  if (!r.spec.baseline.service.empty()) {
    csv_line(out, "meta", "", "baseline", r.spec.baseline.label());
    csv_line(out, "meta", "", "variant", r.spec.variant.label());
  }
  for (const auto& row : r.comparison) {
    const auto& d = row.delta;
    const std::string m = metric_name(d.metric) + ".";
    const std::string u = row.unit.name();
    csv_line(out, "comparison", u, m + "mean_baseline", full(d.mean_a));
    csv_line(out, "comparison", u, m + "mean_variant", full(d.mean_b));
    csv_line(out, "comparison", u, m + "delta", full(d.delta));
    csv_line(out, "comparison", u, m + "delta_pct", full(d.delta_pct));
    csv_line(out, "comparison", u, m + "t", full(d.statistic));
    csv_line(out, "comparison", u, m + "p", full(d.p_value));
    csv_line(out, "comparison", u, m + "significant", d.significant ? "1" : "0");
    csv_line(out, "comparison", u, m + "direction", direction_name(row.direction));
  }
  for (const auto& [unit, c] : r.emissions.per_unit) {
    csv_line(out, "emissions", unit.name(), "source", r.emissions.source.at(unit));
    components_csv(out, "emissions", unit.name(), c);
    components_csv(out, "baseline_emissions", unit.name(), r.emissions.baseline_per_unit.at(unit));
  }
  for (std::size_t i = 0; i < r.emissions.projections.size(); ++i) {
    const auto& p = r.emissions.projections[i];
    const std::string u = std::to_string(i);
    csv_line(out, "projection", u, "per_session_g", full(p.per_session_saving_g));
    csv_line(out, "projection", u, "population", full(p.population));
    csv_line(out, "projection", u, "sessions_per_year", full(p.sessions_per_year));
    csv_line(out, "projection", u, "annual_t", full(p.annual_saving_t));
    csv_line(out, "projection", u, "flight_equivalents", full(p.flight_equivalents));
  }
  if (!r.spec.baseline.service.empty()) {
    const json f = r.emissions.factors;
    for (const auto& [k, v] : f.items())
      csv_line(out, "factors", "", k, v.is_number_float() ? full(v.get<double>()) : v.dump());
    csv_line(out, "factors", "", "flight_rt_tonnes", full(r.spec.flight_rt_tonnes));
  }
  return out.str();
}

std::string render_json(const Report& r) {
  json rows = json::array();
  for (const auto& row : r.comparison) {
    json j = row.delta;
    j["unit"] = row.unit;
    j["direction"] = direction_name(row.direction);
    j["n_baseline"] = row.n_baseline;
    j["n_variant"] = row.n_variant;
    j["below_quota"] = row.below_quota;
    rows.push_back(std::move(j));
  }
  json doc = {{"baseline", r.spec.baseline.label()},
              {"variant", r.spec.variant.label()},
              {"comparison", rows},
              {"emissions", r.emissions},
              {"flight_rt_tonnes", r.spec.flight_rt_tonnes}};
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render(const Report& r, Format format) {
  if (format == Format::csv) return render_csv(r);
  if (format == Format::json) return render_json(r);
  std::ostringstream out;
  const bool md = format == Format::markdown;
  const std::string head = r.spec.baseline.service.empty()
                               ? std::string("empty report")
                               : "baseline " + r.spec.baseline.label() + " vs variant " + r.spec.variant.label();
  out << (md ? "## " : "") << head << "\n\n";
  auto section = [&](const std::string& title, const Table& t) {
    if (md)
      markdown(out, title, t);
    else
      plain(out, title, t);
  };
  section("Comparison (positive delta: variant saves)", comparison_rows(r));
  section("Emission savings per unit (gCO2e)", emission_rows(r));
  if (!r.emissions.projections.empty()) section("Projections", projection_rows(r));
  if (!r.spec.baseline.service.empty()) section("Emission factors", factor_rows(r));
  return out.str();
}

std::vector<CsvRecord> parse_csv(const std::string& text) {
  std::vector<CsvRecord> out;
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  bool header = true;
  auto finish_row = [&] {
    fields.push_back(std::move(cur));
    cur.clear();
    if (header) {
      header = false;
    } else if (fields.size() == 4) {
      out.push_back({fields[0], fields[1], fields[2], fields[3]});
    } else if (!(fields.size() == 1 && fields[0].empty())) {
      throw std::invalid_argument("csv row with " + std::to_string(fields.size()) + " fields");
    }
    fields.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c == '\n') {
      finish_row();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (!cur.empty() || !fields.empty()) finish_row();
  return out;
}

}  // namespace fubench
