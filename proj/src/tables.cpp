#include "gvkit/tables.hpp"

#include <algorithm>
#include <sstream>

#include "gvkit/error.hpp"

namespace gvkit {

template <typename Tag>
GenusDegreeTable<Tag>::GenusDegreeTable(int g_max, int d_max) : g_max_(g_max), d_max_(d_max) {
  if (g_max < 0 || d_max < 0) throw DomainError("table truncation bounds must be nonnegative");
}

template <typename Tag>
Rational GenusDegreeTable<Tag>::get(int g, int d) const {
  if (!in_window(g, d)) {
    throw WindowError("entry (g=" + std::to_string(g) + ", d=" + std::to_string(d) + ") is outside the table window");
  }
  auto it = entries_.find({g, d});
  return it == entries_.end() ? Rational(0) : it->second;
}

template <typename Tag>
void GenusDegreeTable<Tag>::set(int g, int d, const Rational& value) {
  if (!in_window(g, d)) {
    throw DomainError("entry (g=" + std::to_string(g) + ", d=" + std::to_string(d) + ") is outside the table window");
  }
  if (value == 0) entries_.erase({g, d});
  else entries_[{g, d}] = value;
}

template class GenusDegreeTable<GvTag>;
template class GenusDegreeTable<GwTag>;

PtTable::PtTable(Kind kind, std::vector<Window> windows) : kind_(kind), windows_(std::move(windows)) {
  for (const auto& w : windows_) {
    if (w.n_min > w.n_max + 1) throw DomainError("PT window needs n_min <= n_max + 1");
  }
}

PtTable::PtTable(Kind kind, int d_max, int n_min, int n_max)
    : PtTable(kind, std::vector<Window>(static_cast<std::size_t>(std::max(d_max, 0)), Window{n_min, n_max})) {
  if (d_max < 0) throw DomainError("d_max must be nonnegative");
}

const PtTable::Window& PtTable::window(int d) const {
  if (d < 1 || d > d_max()) throw WindowError("degree " + std::to_string(d) + " is outside the table");
  return windows_[static_cast<std::size_t>(d - 1)];
}

PtTable::Window PtTable::q_window() const {
  if (windows_.empty()) return {0, -1};
  Window out = windows_.front();
  for (const auto& w : windows_) {
    out.n_min = std::min(out.n_min, w.n_min);
    out.n_max = std::max(out.n_max, w.n_max);
  }
  return out;
}

bool PtTable::in_window(int n, int d) const {
  if (d < 1 || d > d_max()) return false;
  const auto& w = windows_[static_cast<std::size_t>(d - 1)];
  return n >= w.n_min && n <= w.n_max;
}

Rational PtTable::get(int n, int d) const {
  if (!in_window(n, d)) {
    throw WindowError("entry (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ") is outside the table window");
  }
  auto it = entries_.find({n, d});
  return it == entries_.end() ? Rational(0) : it->second;
}

void PtTable::set(int n, int d, const Rational& value) {
  if (!in_window(n, d)) {
    throw DomainError("entry (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ") is outside the table window");
  }
  if (value == 0) entries_.erase({n, d});
  else entries_[{n, d}] = value;
}

nlohmann::json entries_to_json(const std::vector<TableEntry>& list, const char* index_name) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : list) out.push_back({{index_name, e.index}, {"d", e.d}, {"value", to_string(e.value)}});
  return out;
}

namespace {

using EntryMap = std::map<std::pair<int, int>, Rational>;

std::string csv_body(const EntryMap& entries, const char* index_name) {
  std::vector<std::pair<std::pair<int, int>, const Rational*>> rows;
  for (const auto& [key, value] : entries) rows.push_back({key, &value});
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.second, a.first.first) < std::pair(b.first.second, b.first.first);
  });
  std::ostringstream out;
  out << index_name << ",d,value\n";
  for (const auto& [key, value] : rows) out << key.first << ',' << key.second << ',' << to_string(*value) << '\n';
  return out.str();
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\"");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\"");
  return s.substr(first, last - first + 1);
}

int parse_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": bad integer '" + s + "'");
  }
}

struct CsvRow {
  int index;
  int d;
  Rational value;
};

std::vector<CsvRow> parse_csv(const std::string& text, const char* index_name) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!header_seen) {
      const std::vector<std::string> expected{index_name, "d", "value"};
      if (cells != expected) {
        throw ParseError(std::string("expected CSV header '") + index_name + ",d,value'");
      }
      header_seen = true;
      continue;
    }
    if (cells.size() != 3) throw ParseError("line " + std::to_string(lineno) + ": expected 3 columns");
    Rational v;
    try {
      v = parse_rational(cells[2]);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    rows.push_back({parse_int(cells[0], lineno), parse_int(cells[1], lineno), std::move(v)});
  }
  if (!header_seen) throw ParseError("empty CSV input");
  return rows;
}

template <typename Table>
Table genus_from_csv(const std::string& text, int g_max, int d_max) {
  const auto rows = parse_csv(text, "g");
  int gm = 0, dm = 0;
  for (const auto& r : rows) {
    gm = std::max(gm, r.index);
    dm = std::max(dm, r.d);
  }
  Table t(g_max < 0 ? gm : g_max, d_max < 0 ? dm : d_max);
  for (const auto& r : rows) {
    if (!t.in_window(r.index, r.d)) {
      throw ParseError("row (g=" + std::to_string(r.index) + ", d=" + std::to_string(r.d) + ") is outside the declared window");
    }
    t.set(r.index, r.d, r.value);
  }
  return t;
}

template <typename Table>
nlohmann::json genus_to_json(const Table& t, const char* kind) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, value] : t.entries()) {
    entries.push_back({{"g", key.first}, {"d", key.second}, {"value", to_string(value)}});
  }
  return {{"kind", kind},
          {"g_max", t.g_max()},
          {"d_max", t.d_max()},
          {"castelnuovo_valid", t.castelnuovo_valid},
          {"entries", std::move(entries)}};
}

template <typename T>
T jget(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing JSON field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON field '") + key + "': " + e.what());
  }
}

template <typename Table>
Table genus_from_json(const nlohmann::json& j, const char* kind) {
  if (jget<std::string>(j, "kind") != kind) throw ParseError(std::string("expected a ") + kind + " table");
  Table t(jget<int>(j, "g_max"), jget<int>(j, "d_max"));
  t.castelnuovo_valid = j.value("castelnuovo_valid", false);
  for (const auto& e : jget<nlohmann::json>(j, "entries")) {
    const int g = jget<int>(e, "g");
    const int d = jget<int>(e, "d");
    if (!t.in_window(g, d)) throw ParseError("JSON entry outside the declared window");
    t.set(g, d, parse_rational(jget<std::string>(e, "value")));
  }
  return t;
}

}  // namespace

std::string to_csv(const GvTable& t) { return csv_body(t.entries(), "g"); }
std::string to_csv(const GwTable& t) { return csv_body(t.entries(), "g"); }
std::string to_csv(const PtTable& t) { return csv_body(t.entries(), "n"); }

GvTable gv_from_csv(const std::string& text, int g_max, int d_max) { return genus_from_csv<GvTable>(text, g_max, d_max); }
GwTable gw_from_csv(const std::string& text, int g_max, int d_max) { return genus_from_csv<GwTable>(text, g_max, d_max); }

PtTable pt_from_csv(const std::string& text, PtTable::Kind kind, int d_max, int n_min, int n_max) {
  PtTable t(kind, d_max, n_min, n_max);
  for (const auto& r : parse_csv(text, "n")) {
    if (!t.in_window(r.index, r.d)) {
      throw ParseError("row (n=" + std::to_string(r.index) + ", d=" + std::to_string(r.d) + ") is outside the declared window");
    }
    t.set(r.index, r.d, r.value);
  }
  return t;
}

nlohmann::json to_json(const GvTable& t) { return genus_to_json(t, "gv"); }
nlohmann::json to_json(const GwTable& t) { return genus_to_json(t, "gw"); }

nlohmann::json to_json(const PtTable& t) {
  nlohmann::json windows = nlohmann::json::array();
  for (int d = 1; d <= t.d_max(); ++d) {
    windows.push_back({{"d", d}, {"n_min", t.window(d).n_min}, {"n_max", t.window(d).n_max}});
  }
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, value] : t.entries()) {
    entries.push_back({{"n", key.first}, {"d", key.second}, {"value", to_string(value)}});
  }
  return {{"kind", t.kind() == PtTable::Kind::pt ? "pt" : "dt"},
          {"d_max", t.d_max()},
          {"castelnuovo_valid", t.castelnuovo_valid},
          {"windows", std::move(windows)},
          {"entries", std::move(entries)}};
}

GvTable gv_from_json(const nlohmann::json& j) { return genus_from_json<GvTable>(j, "gv"); }
GwTable gw_from_json(const nlohmann::json& j) { return genus_from_json<GwTable>(j, "gw"); }

PtTable pt_from_json(const nlohmann::json& j) {
  const auto kind_name = jget<std::string>(j, "kind");
  if (kind_name != "pt" && kind_name != "dt") throw ParseError("expected a pt or dt table");
  const int d_max = jget<int>(j, "d_max");
  const auto raw = jget<nlohmann::json>(j, "windows");
  if (!raw.is_array() || static_cast<int>(raw.size()) != d_max) throw ParseError("need one window per degree");
  std::vector<PtTable::Window> windows;
  for (int d = 1; d <= d_max; ++d) {
    const auto& w = raw[static_cast<std::size_t>(d - 1)];
    if (jget<int>(w, "d") != d) throw ParseError("windows must be listed by ascending degree");
    windows.push_back({jget<int>(w, "n_min"), jget<int>(w, "n_max")});
  }
  PtTable t(kind_name == "pt" ? PtTable::Kind::pt : PtTable::Kind::dt, std::move(windows));
  t.castelnuovo_valid = j.value("castelnuovo_valid", false);
  for (const auto& e : jget<nlohmann::json>(j, "entries")) {
    const int n = jget<int>(e, "n");
    const int d = jget<int>(e, "d");
    if (!t.in_window(n, d)) throw ParseError("JSON entry outside the declared window");
    t.set(n, d, parse_rational(jget<std::string>(e, "value")));
  }
  return t;
}

}  // namespace gvkit
