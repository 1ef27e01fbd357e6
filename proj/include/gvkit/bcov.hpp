#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gvkit/series.hpp"

namespace gvkit {

enum class AmbiguityStatus { unknown, fixed_regularity, fixed_gap, fixed_castelnuovo, supplied };

std::string_view status_name(AmbiguityStatus s);

// f_g = sum_{i=0}^{3g-3} a_i Y^i with a per-coefficient record of what fixed it.
class HolomorphicAmbiguity {
 public:
  explicit HolomorphicAmbiguity(int g);

  int genus() const { return g_; }
  int size() const { return static_cast<int>(values_.size()); }  // 3g - 2
  const Rational& value(int i) const;
  AmbiguityStatus status(int i) const;
  void set(int i, const Rational& value, AmbiguityStatus status);
  bool complete() const;

  friend bool operator==(const HolomorphicAmbiguity&, const HolomorphicAmbiguity&) = default;

 private:
  int g_;
  std::vector<Rational> values_;
  std::vector<AmbiguityStatus> status_;
};

// {0, ..., ceil((3g-3)/5)}: a_i = 0 there.
std::vector<int> regularity_indices(int g);
// The floor((2g-2)/5) indices strictly between the regularity range and g.
std::vector<int> castelnuovo_indices(int g);
// {g, ..., 3g-3}.
std::vector<int> gap_indices(int g);

// An ambiguity with the regularity indices set to zero.
HolomorphicAmbiguity with_regularity(int g);

// Expansion data near the conifold. Y(Delta) = 1/Delta + O(1) is what the
// gap solve consumes; it is either supplied directly or derived from
// Delta(delta) through Y = 1 + 1/delta(Delta).
struct ConifoldFrame {
  std::optional<LaurentSeries> delta_of_q;
  std::optional<LaurentSeries> Delta_of_delta;
  LaurentSeries Y_of_Delta;
  // False for the toy frame, which only exercises the solver mechanics.
  bool physical = true;

  static ConifoldFrame from_series(std::optional<LaurentSeries> delta_of_q, const LaurentSeries& Delta_of_delta);
  static ConifoldFrame from_Y(const LaurentSeries& Y_of_Delta);
  // Delta = delta, so Y = 1 + 1/Delta exactly; non-physical.
  static ConifoldFrame toy(int trunc);
};

nlohmann::json frame_to_json(const ConifoldFrame& frame);
ConifoldFrame frame_from_json(const nlohmann::json& j);

// (-1)^{g-1} B_{2g} / (2g (2g - 2)).
Rational gap_target(int g);

// Solves sum_{i=1}^{2g-2} a_{i+g-1} Y^i + known_terms = gap_target(g) Delta^{2-2g} + O(Delta^0)
// by matching Delta^{-1} .. Delta^{2-2g}. Returns a_g, ..., a_{3g-3}.
std::vector<Rational> gap_solve(int g, const LaurentSeries& known_terms, const ConifoldFrame& frame);

struct CastelnuovoSolution {
  int g;
  int K;  // floor(2(g-1)/5): unknowns a_{g-1-k}, k = 0..K
  int E;  // min(Dg, K): highest matched power of q
  bool resolved;
  int missing;  // K - E
  // a_{g-1-k} for k = 0..K when resolved, empty otherwise.
  std::vector<Rational> values;
  // The last unknown sits on the top regularity index; true if it came out 0.
  bool regularity_consistent;
};

// Matches q^0 .. q^E of
//   sum_{k=0}^{K} a_{g-1-k} (1 - 5^5 q)^k = sum_{d=0}^{Dg} N_{g,d} Q(q)^d - known_terms(q)
// where Q(q) = q + O(q^2) is the mirror map (identity when absent) and
// gw = (N_{g,0}, ..., N_{g,Dg}). The system is triangular only when E = K;
// with E < K no unknown is individually determined and the result is
// reported unresolved.
CastelnuovoSolution castelnuovo_solve(int g, const LaurentSeries& known_terms, int Dg, const std::vector<Rational>& gw,
                                      const std::optional<LaurentSeries>& mirror_map = std::nullopt);

// sum_{i=1}^{2g-2} a_{i+g-1} Y^i for a_gap = (a_g, ..., a_{3g-3}): the pole part the gap solve inverts.
LaurentSeries gap_combination(int g, const std::vector<Rational>& a_gap, const LaurentSeries& Y);
// sum_k values[k] (1 - 5^5 q)^k, known up to q^trunc.
LaurentSeries castelnuovo_combination(const std::vector<Rational>& values, int trunc);

// M[j-1][i-1] = [Delta^{-j}] Y^i for 1 <= i, j <= 2g-2.
std::vector<std::vector<Rational>> gap_matrix(int g, const ConifoldFrame& frame);
// M[j][k] = [q^j] (1 - 5^5 q)^k for 0 <= j <= E, 0 <= k <= K.
std::vector<std::vector<Rational>> castelnuovo_matrix(int g, int E);

void apply_gap(HolomorphicAmbiguity& amb, const std::vector<Rational>& values);
void apply_castelnuovo(HolomorphicAmbiguity& amb, const CastelnuovoSolution& sol);

// sum a_i Y^i; every coefficient must be known.
LaurentSeries assemble_fg(const HolomorphicAmbiguity& amb, const LaurentSeries& Y);

nlohmann::json ambiguity_to_json(const HolomorphicAmbiguity& amb);

struct Supplement {
  int g;
  int d;
  std::int64_t value;  // n_g^d from the extremal formula
};

struct ResolutionPlan {
  enum class Status { closes, conditional, fails };

  int g;
  std::vector<int> regularity;
  std::vector<int> castelnuovo;
  std::vector<int> gap;
  int K;
  int Dg;
  int unresolved;  // K - min(Dg, K) at genus g itself
  // Extremal values needed at genera <= g.
  std::vector<Supplement> supplements;
  Status status;
  // Smallest genus >= 2 whose system cannot be closed, searching upward.
  int first_failing_genus;
};

std::string_view status_name(ResolutionPlan::Status s);

ResolutionPlan resolution_plan(int g);
nlohmann::json plan_to_json(const ResolutionPlan& plan);

}  // namespace gvkit
