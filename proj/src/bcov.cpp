#include "gvkit/bcov.hpp"

#include <string>

#include "gvkit/bernoulli.hpp"
#include "gvkit/bounds.hpp"
#include "gvkit/error.hpp"
#include "gvkit/series_json.hpp"

namespace gvkit {

namespace {

constexpr std::int64_t kConifold = 3125;  // 5^5

void require_genus(int g) {
  if (g < 2) throw DomainError("holomorphic ambiguity needs g >= 2, got " + std::to_string(g));
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

int top_regularity_index(int g) { return ceil_div(3 * g - 3, 5); }

int castelnuovo_count(int g) { return (2 * g - 2) / 5; }

void validate_Y(const LaurentSeries& Y) {
  if (Y.variable() != Variable::Delta) throw VariableMismatch("Y must be a series in Delta");
  if (Y.is_zero() || Y.min_exp() != -1 || Y.coeff(-1) != 1) {
    throw DomainError("Y must be 1/Delta + O(1)");
  }
}

}  // namespace

std::string_view status_name(AmbiguityStatus s) {
  switch (s) {
    case AmbiguityStatus::unknown: return "unknown";
    case AmbiguityStatus::fixed_regularity: return "fixed-regularity";
    case AmbiguityStatus::fixed_gap: return "fixed-gap";
    case AmbiguityStatus::fixed_castelnuovo: return "fixed-castelnuovo";
    case AmbiguityStatus::supplied: return "supplied";
  }
  return "?";
}

HolomorphicAmbiguity::HolomorphicAmbiguity(int g)
    : g_(g), values_((require_genus(g), 3 * g - 2), Rational(0)), status_(3 * g - 2, AmbiguityStatus::unknown) {}

const Rational& HolomorphicAmbiguity::value(int i) const {
  if (i < 0 || i >= size()) throw DomainError("ambiguity index out of range: " + std::to_string(i));
  return values_[i];
}

AmbiguityStatus HolomorphicAmbiguity::status(int i) const {
  if (i < 0 || i >= size()) throw DomainError("ambiguity index out of range: " + std::to_string(i));
  return status_[i];
}

void HolomorphicAmbiguity::set(int i, const Rational& value, AmbiguityStatus status) {
  if (i < 0 || i >= size()) throw DomainError("ambiguity index out of range: " + std::to_string(i));
  values_[i] = value;
  status_[i] = status;
}

bool HolomorphicAmbiguity::complete() const {
  for (auto s : status_) {
    if (s == AmbiguityStatus::unknown) return false;
  }
  return true;
}

std::vector<int> regularity_indices(int g) {
  require_genus(g);
  std::vector<int> out;
  for (int i = 0; i <= top_regularity_index(g); ++i) out.push_back(i);
  return out;
}

std::vector<int> castelnuovo_indices(int g) {
  require_genus(g);
  std::vector<int> out;
  for (int i = top_regularity_index(g) + 1; i <= g - 1; ++i) out.push_back(i);
  return out;
}

std::vector<int> gap_indices(int g) {
  require_genus(g);
  std::vector<int> out;
  for (int i = g; i <= 3 * g - 3; ++i) out.push_back(i);
  return out;
}

HolomorphicAmbiguity with_regularity(int g) {
  HolomorphicAmbiguity amb(g);
  for (int i : regularity_indices(g)) amb.set(i, 0, AmbiguityStatus::fixed_regularity);
  return amb;
}

ConifoldFrame ConifoldFrame::from_series(std::optional<LaurentSeries> delta_of_q, const LaurentSeries& Delta_of_delta) {
  if (delta_of_q && delta_of_q->variable() != Variable::q) throw VariableMismatch("delta_of_q must be a series in q");
  if (Delta_of_delta.variable() != Variable::delta) throw VariableMismatch("Delta_of_delta must be a series in delta");
  if (Delta_of_delta.is_zero() || Delta_of_delta.min_exp() != 1 || Delta_of_delta.coeff(1) != 1) {
    throw DomainError("Delta_of_delta must be delta + O(delta^2)");
  }
  const LaurentSeries small_delta = series_reversion(Delta_of_delta, Variable::Delta);
  const LaurentSeries inv = series_invert(small_delta);
  LaurentSeries Y = LaurentSeries::one(Variable::Delta, inv.trunc()) + inv;
  validate_Y(Y);
  return {std::move(delta_of_q), Delta_of_delta, std::move(Y), true};
}

ConifoldFrame ConifoldFrame::from_Y(const LaurentSeries& Y_of_Delta) {
  validate_Y(Y_of_Delta);
  return {std::nullopt, std::nullopt, Y_of_Delta, true};
}

ConifoldFrame ConifoldFrame::toy(int trunc) {
  if (trunc < 0) throw DomainError("toy frame needs trunc >= 0");
  ConifoldFrame f = from_series(std::nullopt, LaurentSeries::monomial(Variable::delta, 1, 1, trunc + 2));
  f.physical = false;
  return f;
}

nlohmann::json frame_to_json(const ConifoldFrame& frame) {
  nlohmann::json j;
  j["physical"] = frame.physical;
  if (frame.delta_of_q) j["delta_of_q"] = series_to_json(*frame.delta_of_q);
  if (frame.Delta_of_delta) j["Delta_of_delta"] = series_to_json(*frame.Delta_of_delta);
  j["Y_of_Delta"] = series_to_json(frame.Y_of_Delta);
  return j;
}

ConifoldFrame frame_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("frame must be a JSON object");
  try {
    std::optional<LaurentSeries> dq;
    if (j.contains("delta_of_q")) dq = series_from_json(j.at("delta_of_q"));
    auto build = [&]() {
      if (j.contains("Delta_of_delta")) {
        auto f = ConifoldFrame::from_series(dq, series_from_json(j.at("Delta_of_delta")));
        // A stored Y has to agree with the derived one.
        if (j.contains("Y_of_Delta") && !agree_on_common_window(f.Y_of_Delta, series_from_json(j.at("Y_of_Delta")))) {
          throw DomainError("stored Y_of_Delta disagrees with Delta_of_delta");
        }
        return f;
      }
      if (!j.contains("Y_of_Delta")) throw ParseError("frame needs Delta_of_delta or Y_of_Delta");
      auto f = ConifoldFrame::from_Y(series_from_json(j.at("Y_of_Delta")));
      f.delta_of_q = dq;
      return f;
    };
    ConifoldFrame f = build();
    f.physical = j.value("physical", true);
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("frame: ") + e.what());
  }
}

Rational gap_target(int g) {
  require_genus(g);
  Rational v = bernoulli(2 * g) / (Rational(2 * g) * Rational(2 * g - 2));
  return (g - 1) % 2 == 0 ? v : Rational(-v);
}

std::vector<std::vector<Rational>> gap_matrix(int g, const ConifoldFrame& frame) {
  require_genus(g);
  validate_Y(frame.Y_of_Delta);
  const int n = 2 * g - 2;
  if (frame.Y_of_Delta.trunc() < n - 2) {
    throw WindowError("Y must be known up to Delta^" + std::to_string(n - 2) + " for genus " + std::to_string(g));
  }
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, Rational(0)));
  LaurentSeries pw = frame.Y_of_Delta;
  for (int i = 1; i <= n; ++i) {
    if (i > 1) pw = series_mul(pw, frame.Y_of_Delta);
    for (int j = 1; j <= n; ++j) M[j - 1][i - 1] = pw.coeff(-j);
  }
  return M;
}

std::vector<Rational> gap_solve(int g, const LaurentSeries& known_terms, const ConifoldFrame& frame) {
  require_genus(g);
  if (known_terms.variable() != Variable::Delta) throw VariableMismatch("known terms must be a series in Delta");
  if (known_terms.trunc() < -1) throw WindowError("known terms must be known up to Delta^-1");
  const auto M = gap_matrix(g, frame);
  const int n = 2 * g - 2;
  std::vector<Rational> rhs(n + 1);
  for (int j = 1; j <= n; ++j) rhs[j] = (j == n ? gap_target(g) : Rational(0)) - known_terms.coeff(-j);

  // x[i] multiplies Y^i; Y^i starts at Delta^{-i}, so row j only sees i >= j.
  std::vector<Rational> x(n + 1, Rational(0));
  for (int j = n; j >= 1; --j) {
    Rational s = rhs[j];
    for (int i = j + 1; i <= n; ++i) s -= M[j - 1][i - 1] * x[i];
    const Rational& pivot = M[j - 1][j - 1];
    if (pivot == 0) throw SingularSystem("gap system has a zero pivot at Delta^-" + std::to_string(j));
    x[j] = s / pivot;
  }
  return {x.begin() + 1, x.end()};
}

LaurentSeries gap_combination(int g, const std::vector<Rational>& a_gap, const LaurentSeries& Y) {
  require_genus(g);
  validate_Y(Y);
  const int n = 2 * g - 2;
  if (static_cast<int>(a_gap.size()) != n) throw DomainError("gap combination needs 2g-2 coefficients");
  LaurentSeries pw = Y;
  LaurentSeries acc = a_gap[0] * pw;
  for (int i = 2; i <= n; ++i) {
    pw = series_mul(pw, Y);
    acc = acc + a_gap[i - 1] * pw;
  }
  return acc;
}

std::vector<std::vector<Rational>> castelnuovo_matrix(int g, int E) {
  require_genus(g);
  const int K = castelnuovo_count(g);
  if (E < 0 || E > K) throw DomainError("castelnuovo matrix needs 0 <= E <= K");
  std::vector<std::vector<Rational>> M(E + 1, std::vector<Rational>(K + 1, Rational(0)));
  for (int j = 0; j <= E; ++j) {
    const Rational pj = power(Rational(-kConifold), j);
    for (int k = j; k <= K; ++k) M[j][k] = Rational(binomial(k, j)) * pj;
  }
  return M;
}

LaurentSeries castelnuovo_combination(const std::vector<Rational>& values, int trunc) {
  if (trunc < 0) throw DomainError("castelnuovo combination needs trunc >= 0");
  std::vector<Rational> c(trunc + 1, Rational(0));
  for (std::size_t k = 0; k < values.size(); ++k) {
    for (int j = 0; j <= std::min<int>(k, trunc); ++j) {
      c[j] += values[k] * Rational(binomial(static_cast<std::int64_t>(k), j)) * power(Rational(-kConifold), j);
    }
  }
  return LaurentSeries(Variable::q, 0, std::move(c), trunc);
}

CastelnuovoSolution castelnuovo_solve(int g, const LaurentSeries& known_terms, int Dg, const std::vector<Rational>& gw,
                                      const std::optional<LaurentSeries>& mirror_map) {
  require_genus(g);
  if (Dg < 0) throw DomainError("Dg must be >= 0");
  if (static_cast<int>(gw.size()) != Dg + 1) {
    throw DomainError("castelnuovo solve needs N_{g,0..Dg}: expected " + std::to_string(Dg + 1) + " values, got " +
                      std::to_string(gw.size()));
  }
  if (known_terms.variable() != Variable::q) throw VariableMismatch("known terms must be a series in q");
  const int K = castelnuovo_count(g);
  const int E = std::min(Dg, K);
  CastelnuovoSolution sol{g, K, E, E == K, K - E, {}, false};
  if (!sol.resolved) return sol;

  const LaurentSeries m = mirror_map ? *mirror_map : LaurentSeries::monomial(Variable::q, 1, 1, std::max(Dg, 1));
  if (m.variable() != Variable::q) throw VariableMismatch("mirror map must be a series in q");
  if (m.is_zero() || m.min_exp() != 1 || m.coeff(1) != 1) throw DomainError("mirror map must be q + O(q^2)");
  const LaurentSeries F = series_compose(LaurentSeries(Variable::t, 0, gw, Dg), m);
  const LaurentSeries rhs = F - known_terms;
  if (rhs.trunc() < E) throw WindowError("data must cover q^0..q^" + std::to_string(E));

  const auto M = castelnuovo_matrix(g, E);
  std::vector<Rational> x(K + 1, Rational(0));
  for (int j = E; j >= 0; --j) {
    Rational s = rhs.coeff(j);
    for (int k = j + 1; k <= K; ++k) s -= M[j][k] * x[k];
    if (M[j][j] == 0) throw SingularSystem("castelnuovo system has a zero pivot at q^" + std::to_string(j));
    x[j] = s / M[j][j];
  }
  sol.values = std::move(x);
  sol.regularity_consistent = sol.values[K] == 0;
  return sol;
}

void apply_gap(HolomorphicAmbiguity& amb, const std::vector<Rational>& values) {
  const int g = amb.genus();
  if (static_cast<int>(values.size()) != 2 * g - 2) throw DomainError("gap values must number 2g-2");
  for (int i = 0; i < 2 * g - 2; ++i) amb.set(g + i, values[i], AmbiguityStatus::fixed_gap);
}

void apply_castelnuovo(HolomorphicAmbiguity& amb, const CastelnuovoSolution& sol) {
  if (sol.g != amb.genus()) throw DomainError("castelnuovo solution is for another genus");
  if (!sol.resolved) throw DomainError("castelnuovo solution is unresolved");
  const int top = top_regularity_index(sol.g);
  for (int k = 0; k <= sol.K; ++k) {
    const int i = sol.g - 1 - k;
    // The last unknown coincides with the top regularity index, already fixed to 0.
    if (i <= top) continue;
    amb.set(i, sol.values[k], AmbiguityStatus::fixed_castelnuovo);
  }
}

LaurentSeries assemble_fg(const HolomorphicAmbiguity& amb, const LaurentSeries& Y) {
  if (!amb.complete()) throw DomainError("assemble_fg: ambiguity has unknown coefficients");
  if (Y.is_zero()) throw DomainError("assemble_fg: Y is zero");
  // The window of Y^{3g-3} bounds every term when Y has a pole.
  const int top = amb.size() - 1;
  const int v = Y.min_exp();
  const int trunc = v >= 0 ? Y.trunc() : Y.trunc() + (top - 1) * v;
  LaurentSeries acc = LaurentSeries::zero(Y.variable(), trunc);
  LaurentSeries pw = LaurentSeries::one(Y.variable(), trunc);
  for (int i = 0; i <= top; ++i) {
    if (i > 0) pw = series_mul(pw, Y);
    if (amb.value(i) != 0) acc = acc + amb.value(i) * pw;
  }
  return acc;
}

nlohmann::json ambiguity_to_json(const HolomorphicAmbiguity& amb) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int i = 0; i < amb.size(); ++i) {
    coeffs.push_back({{"i", i}, {"value", to_string(amb.value(i))}, {"status", std::string(status_name(amb.status(i)))}});
  }
  return {{"g", amb.genus()}, {"complete", amb.complete()}, {"coeffs", std::move(coeffs)}};
}

std::string_view status_name(ResolutionPlan::Status s) {
  switch (s) {
    case ResolutionPlan::Status::closes: return "closes";
    case ResolutionPlan::Status::conditional: return "conditional";
    case ResolutionPlan::Status::fails: return "fails";
  }
  return "?";
}

namespace {

struct GenusCheck {
  bool ok;
  std::optional<Supplement> supplement;
};

// A genus closes on its own when the vanishing range reaches K. It can be
// closed with one extremal value when the single missing degree sits exactly
// on the threshold B(d) = h and is a multiple of 5.
GenusCheck check_genus(int h) {
  const int K = castelnuovo_count(h);
  const int D = max_vanishing_degree(h);
  if (D >= K) return {true, std::nullopt};
  const int d = D + 1;
  if (d == K && d % 5 == 0 && bps_threshold(d) == h) return {true, Supplement{h, d, extremal_gv(d / 5)}};
  return {false, std::nullopt};
}

}  // namespace

ResolutionPlan resolution_plan(int g) {
  require_genus(g);
  ResolutionPlan plan;
  plan.g = g;
  plan.regularity = regularity_indices(g);
  plan.castelnuovo = castelnuovo_indices(g);
  plan.gap = gap_indices(g);
  plan.K = castelnuovo_count(g);
  plan.Dg = max_vanishing_degree(g);
  plan.unresolved = plan.K - std::min(plan.Dg, plan.K);

  // Genus g needs every lower genus through the recursion.
  bool ok = true;
  for (int h = 2; h <= g; ++h) {
    const auto c = check_genus(h);
    if (!c.ok) ok = false;
    if (c.supplement) plan.supplements.push_back(*c.supplement);
  }
  if (!ok) {
    plan.status = ResolutionPlan::Status::fails;
  } else {
    plan.status = plan.supplements.empty() ? ResolutionPlan::Status::closes : ResolutionPlan::Status::conditional;
  }
  int h = 2;
  while (check_genus(h).ok) ++h;
  plan.first_failing_genus = h;
  return plan;
}

nlohmann::json plan_to_json(const ResolutionPlan& plan) {
  nlohmann::json sup = nlohmann::json::array();
  for (const auto& s : plan.supplements) sup.push_back({{"g", s.g}, {"d", s.d}, {"value", s.value}});
  return {{"g", plan.g},
          {"regularity", plan.regularity},
          {"castelnuovo", plan.castelnuovo},
          {"gap", plan.gap},
          {"K", plan.K},
          {"Dg", plan.Dg},
          {"unresolved", plan.unresolved},
          {"supplements", std::move(sup)},
          {"status", std::string(status_name(plan.status))},
          {"first_failing_genus", plan.first_failing_genus}};
}

}  // namespace gvkit
