#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gvkit/rational.hpp"

namespace gvkit {

struct GvTag {};
struct GwTag {};

// Finite map (g, d) -> value with g in 0..g_max and d in 1..d_max. Only
// nonzero values are stored; inside the window a missing entry is zero,
// outside it the value is unknown and reading it throws WindowError.
template <typename Tag>
class GenusDegreeTable {
 public:
  GenusDegreeTable(int g_max, int d_max);

  int g_max() const { return g_max_; }
  int d_max() const { return d_max_; }
  bool in_window(int g, int d) const { return g >= 0 && g <= g_max_ && d >= 1 && d <= d_max_; }

  Rational get(int g, int d) const;
  // Throws DomainError outside the window; storing zero erases the entry.
  void set(int g, int d, const Rational& value);

  const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

  // Set when every nonzero entry is known to respect g <= B(d).
  bool castelnuovo_valid = false;

  friend bool operator==(const GenusDegreeTable&, const GenusDegreeTable&) = default;

 private:
  int g_max_;
  int d_max_;
  std::map<std::pair<int, int>, Rational> entries_;
};

using GvTable = GenusDegreeTable<GvTag>;
using GwTable = GenusDegreeTable<GwTag>;

extern template class GenusDegreeTable<GvTag>;
extern template class GenusDegreeTable<GwTag>;

// P_{n,d} (stable pairs) or I_{n,d} (ideal sheaves). Each degree d in
// 1..d_max carries its own window n_min..n_max of known Euler characteristics,
// since exp and log shrink windows degree by degree.
class PtTable {
 public:
  enum class Kind { pt, dt };

  struct Window {
    int n_min;
    int n_max;
    friend bool operator==(const Window&, const Window&) = default;
  };

  // windows[d - 1] is the window of degree d.
  PtTable(Kind kind, std::vector<Window> windows);
  PtTable(Kind kind, int d_max, int n_min, int n_max);

  Kind kind() const { return kind_; }
  int d_max() const { return static_cast<int>(windows_.size()); }
  const Window& window(int d) const;
  // Smallest n_min and largest n_max over all degrees.
  Window q_window() const;
  bool in_window(int n, int d) const;

  Rational get(int n, int d) const;
  void set(int n, int d, const Rational& value);

  const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

  // Set when P_{n,d} = 0 is known for n < 1 - B(d).
  bool castelnuovo_valid = false;

  friend bool operator==(const PtTable&, const PtTable&) = default;

 private:
  Kind kind_;
  std::vector<Window> windows_;
  std::map<std::pair<int, int>, Rational> entries_;
};

// An entry reported by a validation pass: (first index, degree, value),
// where the first index is g for genus tables and n for PT/DT tables.
struct TableEntry {
  int index;
  int d;
  Rational value;
  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

nlohmann::json entries_to_json(const std::vector<TableEntry>& list, const char* index_name);

// CSV with header "g,d,value" or "n,d,value", rows sorted by (d, index).
std::string to_csv(const GvTable& t);
std::string to_csv(const GwTable& t);
std::string to_csv(const PtTable& t);

// Readers take the truncation window explicitly; a value of -1 for g_max or
// d_max means "the largest index present in the file".
GvTable gv_from_csv(const std::string& text, int g_max = -1, int d_max = -1);
GwTable gw_from_csv(const std::string& text, int g_max = -1, int d_max = -1);
// Every degree gets the window n_min..n_max; both are required.
PtTable pt_from_csv(const std::string& text, PtTable::Kind kind, int d_max, int n_min, int n_max);

// JSON mirror carrying the truncation metadata.
nlohmann::json to_json(const GvTable& t);
nlohmann::json to_json(const GwTable& t);
nlohmann::json to_json(const PtTable& t);
GvTable gv_from_json(const nlohmann::json& j);
GwTable gw_from_json(const nlohmann::json& j);
PtTable pt_from_json(const nlohmann::json& j);

}  // namespace gvkit
