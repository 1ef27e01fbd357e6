#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gvkit/bcov.hpp"
#include "gvkit/bounds.hpp"
#include "gvkit/error.hpp"

using namespace gvkit;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return make_rational(p, q); }

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  return make_rational(num(rng), den(rng));
}

std::vector<Rational> random_values(std::mt19937& rng, int n) {
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) v.push_back(random_rational(rng));
  return v;
}

// Delta = delta + c_2 delta^2 + ... with random tail.
LaurentSeries random_flat_coordinate(std::mt19937& rng, int trunc) {
  std::vector<Rational> c{1};
  for (int k = 2; k <= trunc; ++k) c.push_back(random_rational(rng));
  return LaurentSeries(Variable::delta, 1, std::move(c), trunc);
}

// (1 - 3125 q)^k expanded by repeated multiplication.
std::vector<Rational> linear_power(int k) {
  std::vector<Rational> p{1};
  for (int e = 0; e < k; ++e) {
    std::vector<Rational> next(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i] += p[i];
      next[i + 1] -= 3125 * p[i];
    }
    p = std::move(next);
  }
  return p;
}

}  // namespace

TEST_CASE("index partition") {
  CHECK(regularity_indices(2) == std::vector<int>{0, 1});
  CHECK(regularity_indices(4) == std::vector<int>{0, 1, 2});
  CHECK(castelnuovo_indices(2).empty());
  CHECK(gap_indices(3) == std::vector<int>{3, 4, 5, 6});
  for (int g = 2; g <= 60; ++g) {
    const auto reg = regularity_indices(g);
    const auto cas = castelnuovo_indices(g);
    const auto gap = gap_indices(g);
    const int top_reg = (3 * g - 3 + 4) / 5;
    CHECK(reg.back() == top_reg);
    CHECK(static_cast<int>(cas.size()) == (2 * g - 2) / 5);
    CHECK((g - 1) - top_reg == (2 * g - 2) / 5);
    CHECK(static_cast<int>(gap.size()) == 2 * g - 2);
    CHECK(reg.size() + cas.size() + gap.size() == static_cast<std::size_t>(3 * g - 2));
    CHECK(HolomorphicAmbiguity(g).size() == 3 * g - 2);
  }
  CHECK_THROWS_AS(HolomorphicAmbiguity(1), DomainError);
}

TEST_CASE("gap target and toy frame") {
  CHECK(gap_target(2) == R(1, 240));                // -B_4 / 8
  CHECK(gap_target(3) == R(1, 1008));               // B_6 / 24 = (1/42) / 24
  CHECK(gap_target(4) == R(1, 1440));               // -B_8 / 48 = (1/30) / 48
  const auto toy = ConifoldFrame::toy(4);
  CHECK_FALSE(toy.physical);
  CHECK(toy.Y_of_Delta == LaurentSeries(Variable::Delta, -1, {1, 1}, 4));
}

TEST_CASE("g = 2 toy gap solve by hand") {
  // a2 Y + a3 Y^2 with Y = 1 + 1/Delta: Delta^-2 gives a3, Delta^-1 gives a2 + 2 a3 = 0.
  const auto a = gap_solve(2, LaurentSeries::zero(Variable::Delta, 0), ConifoldFrame::toy(2));
  REQUIRE(a.size() == 2);
  CHECK(a[1] == R(1, 240));
  CHECK(a[0] == R(-1, 120));
}

TEST_CASE("gap matrix is unit upper triangular") {
  for (int g = 2; g <= 6; ++g) {
    // Toy frame: [Delta^-j] (1 + 1/Delta)^i = C(i, j).
    const auto M = gap_matrix(g, ConifoldFrame::toy(2 * g));
    for (int j = 1; j <= 2 * g - 2; ++j) {
      for (int i = 1; i <= 2 * g - 2; ++i) CHECK(M[j - 1][i - 1] == Rational(i >= j ? binomial(i, j) : 0));
    }
  }
  std::mt19937 rng(31);
  for (int g = 2; g <= 6; ++g) {
    const auto frame = ConifoldFrame::from_series(std::nullopt, random_flat_coordinate(rng, 2 * g + 2));
    const auto M = gap_matrix(g, frame);
    for (int j = 0; j < 2 * g - 2; ++j) {
      CHECK(M[j][j] == 1);
      for (int i = 0; i < j; ++i) CHECK(M[j][i] == 0);
    }
  }
}

TEST_CASE("frame from Delta(delta) satisfies Y = 1 + 1/delta") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto D = random_flat_coordinate(rng, 9);
    const auto frame = ConifoldFrame::from_series(std::nullopt, D);
    CHECK(frame.Y_of_Delta.min_exp() == -1);
    CHECK(frame.Y_of_Delta.coeff(-1) == 1);
    // 1/(Y - 1) written back in delta must be delta itself.
    const auto inv = series_invert(frame.Y_of_Delta - LaurentSeries::one(Variable::Delta, frame.Y_of_Delta.trunc()));
    const auto back = series_compose(
        LaurentSeries(Variable::t, inv.min_exp(), {inv.coeffs().begin(), inv.coeffs().end()}, inv.trunc()), D);
    CHECK(agree_on_common_window(back, LaurentSeries::monomial(Variable::delta, 1, 1, back.trunc())));
    // 1/Y = delta / (1 + delta).
    const auto y_inv = series_invert(frame.Y_of_Delta);
    const auto d_of_D = series_reversion(D, Variable::Delta);
    const auto expected =
        series_mul(d_of_D, series_invert(LaurentSeries::one(Variable::Delta, d_of_D.trunc()) + d_of_D));
    CHECK(agree_on_common_window(y_inv, expected));
  }
  CHECK_THROWS_AS(ConifoldFrame::from_series(std::nullopt, LaurentSeries(Variable::delta, 1, {2, 1}, 4)), DomainError);
  CHECK_THROWS_AS(ConifoldFrame::from_series(std::nullopt, LaurentSeries(Variable::q, 1, {1, 1}, 4)),
                  VariableMismatch);
  CHECK_THROWS_AS(ConifoldFrame::from_Y(LaurentSeries(Variable::Delta, -2, {1}, 3)), DomainError);
}

TEST_CASE("gap solve round trips") {
  for (std::uint32_t seed = 0; seed < 50; ++seed) {
    std::mt19937 rng(seed);
    for (int g = 2; g <= 6; ++g) {
      const auto frame = ConifoldFrame::from_series(std::nullopt, random_flat_coordinate(rng, 2 * g + 1));
      const auto a = random_values(rng, 2 * g - 2);
      const auto pole = gap_combination(g, a, frame.Y_of_Delta);
      // Known terms chosen so the solution must be a.
      const auto target = LaurentSeries::monomial(Variable::Delta, 2 - 2 * g, gap_target(g), -1);
      const auto known = target - series_truncate(pole, -1);
      CHECK(gap_solve(g, known, frame) == a);
      // And any other known terms produce a solution meeting the gap exactly.
      const auto other = LaurentSeries(Variable::Delta, 2 - 2 * g, random_values(rng, 2 * g - 2), -1);
      const auto b = gap_solve(g, other, frame);
      const auto lhs = series_truncate(gap_combination(g, b, frame.Y_of_Delta) + other, -1);
      CHECK(lhs == target);
    }
  }
}

TEST_CASE("gap solve errors") {
  CHECK_THROWS_AS(gap_solve(4, LaurentSeries::zero(Variable::Delta, 0), ConifoldFrame::toy(3)), WindowError);
  CHECK_THROWS_AS(gap_solve(2, LaurentSeries::zero(Variable::Delta, -2), ConifoldFrame::toy(2)), WindowError);
  CHECK_THROWS_AS(gap_solve(2, LaurentSeries::zero(Variable::q, 0), ConifoldFrame::toy(2)), VariableMismatch);
}

TEST_CASE("castelnuovo toy solve") {
  // g = 4: K = 1, two unknowns a3 + a2 (1 - 3125 q) = 3 - 6250 q.
  const auto sol = castelnuovo_solve(4, LaurentSeries::zero(Variable::q, 1), 1, {R(3), R(-6250)});
  CHECK(sol.K == 1);
  CHECK(sol.E == 1);
  CHECK(sol.resolved);
  CHECK(sol.missing == 0);
  CHECK(sol.values == std::vector<Rational>{R(1), R(2)});
  CHECK_FALSE(sol.regularity_consistent);
}

TEST_CASE("castelnuovo matrix against expanded powers") {
  for (int g = 2; g <= 20; ++g) {
    const int K = (2 * g - 2) / 5;
    const auto M = castelnuovo_matrix(g, K);
    for (int k = 0; k <= K; ++k) {
      const auto p = linear_power(k);
      for (int j = 0; j <= K; ++j) CHECK(M[j][k] == (j <= k ? p[j] : Rational(0)));
      CHECK(M[k][k] == power(Rational(-3125), k));
    }
  }
}

TEST_CASE("castelnuovo solve round trips") {
  for (std::uint32_t seed = 0; seed < 50; ++seed) {
    std::mt19937 rng(1000 + seed);
    for (int g = 2; g <= 16; ++g) {
      const int K = (2 * g - 2) / 5;
      const int Dg = K + static_cast<int>(rng() % 3);
      auto values = random_values(rng, K + 1);
      if (seed % 2 == 0) values[K] = 0;
      const auto gw = random_values(rng, Dg + 1);
      std::vector<Rational> mc{1};
      for (int k = 2; k <= std::max(Dg, 1); ++k) mc.push_back(random_rational(rng));
      const LaurentSeries mirror(Variable::q, 1, mc, std::max(Dg, 1));
      const auto F = series_compose(LaurentSeries(Variable::t, 0, gw, Dg), mirror);
      const auto known = F - castelnuovo_combination(values, Dg);
      const auto sol = castelnuovo_solve(g, known, Dg, gw, mirror);
      REQUIRE(sol.resolved);
      CHECK(sol.values == values);
      CHECK(sol.regularity_consistent == (values[K] == 0));
    }
  }
}

TEST_CASE("castelnuovo unresolved at g = 51") {
  CHECK(max_vanishing_degree(51) == 19);
  const auto sol = castelnuovo_solve(51, LaurentSeries::zero(Variable::q, 19), 19, std::vector<Rational>(20, 0));
  CHECK(sol.K == 20);
  CHECK(sol.E == 19);
  CHECK_FALSE(sol.resolved);
  CHECK(sol.missing == 1);
  CHECK(sol.values.empty());
  for (int g = 2; g <= 50; ++g) {
    const int D = max_vanishing_degree(g);
    const auto s = castelnuovo_solve(g, LaurentSeries::zero(Variable::q, D), D, std::vector<Rational>(D + 1, 0));
    CHECK(s.resolved);
  }
  CHECK_THROWS_AS(castelnuovo_solve(4, LaurentSeries::zero(Variable::q, 1), 1, {R(1)}), DomainError);
  CHECK_THROWS_AS(castelnuovo_solve(4, LaurentSeries::zero(Variable::Delta, 1), 1, {R(1), R(1)}), VariableMismatch);
  CHECK_THROWS_AS(castelnuovo_solve(4, LaurentSeries::zero(Variable::q, 0), 1, {R(1), R(1)}), WindowError);
}

TEST_CASE("assemble and full pipeline") {
  const auto toy = ConifoldFrame::toy(8);
  for (int g = 2; g <= 4; ++g) {
    HolomorphicAmbiguity zero(g);
    for (int i = 0; i < zero.size(); ++i) zero.set(i, 0, AmbiguityStatus::supplied);
    CHECK(assemble_fg(zero, toy.Y_of_Delta).is_zero());
    HolomorphicAmbiguity top = zero;
    top.set(3 * g - 3, 1, AmbiguityStatus::supplied);
    const auto got = assemble_fg(top, toy.Y_of_Delta);
    CHECK(agree_on_common_window(got, series_pow(toy.Y_of_Delta, 3 * g - 3)));
  }

  std::mt19937 rng(77);
  for (int g = 2; g <= 6; ++g) {
    auto amb = with_regularity(g);
    CHECK_FALSE(amb.complete());
    CHECK_THROWS_AS(assemble_fg(amb, toy.Y_of_Delta), DomainError);
    const int K = (2 * g - 2) / 5;
    auto values = random_values(rng, K + 1);
    values[K] = 0;
    const auto gw = random_values(rng, K + 1);
    const auto F = series_compose(LaurentSeries(Variable::t, 0, gw, K), LaurentSeries::monomial(Variable::q, 1, 1, std::max(K, 1)));
    const auto sol = castelnuovo_solve(g, F - castelnuovo_combination(values, K), K, gw);
    CHECK(sol.regularity_consistent);
    apply_castelnuovo(amb, sol);
    apply_gap(amb, gap_solve(g, LaurentSeries::zero(Variable::Delta, 0), ConifoldFrame::toy(2 * g)));
    CHECK(amb.complete());
    for (int k = 0; k < K; ++k) CHECK(amb.value(g - 1 - k) == values[k]);
    for (int i : castelnuovo_indices(g)) CHECK(amb.status(i) == AmbiguityStatus::fixed_castelnuovo);
    for (int i : regularity_indices(g)) CHECK(amb.status(i) == AmbiguityStatus::fixed_regularity);
    const auto j = ambiguity_to_json(amb);
    CHECK(j["coeffs"].size() == static_cast<std::size_t>(3 * g - 2));
    CHECK(j["complete"] == true);
  }
}

TEST_CASE("frame json round trip") {
  std::mt19937 rng(4);
  const auto f = ConifoldFrame::from_series(LaurentSeries(Variable::q, 0, {1, R(-3125)}, 3), random_flat_coordinate(rng, 6));
  const auto back = frame_from_json(frame_to_json(f));
  CHECK(back.Y_of_Delta == f.Y_of_Delta);
  CHECK(back.delta_of_q == f.delta_of_q);
  CHECK(back.physical);
  const auto toy = frame_from_json(frame_to_json(ConifoldFrame::toy(3)));
  CHECK_FALSE(toy.physical);
  CHECK_THROWS_AS(frame_from_json(nlohmann::json::object()), ParseError);
}

TEST_CASE("resolution plan") {
  const auto p5 = resolution_plan(5);
  CHECK(p5.status == ResolutionPlan::Status::closes);
  CHECK(p5.castelnuovo.size() == 1);
  CHECK(p5.K == 1);
  CHECK(p5.supplements.empty());

  const auto p51 = resolution_plan(51);
  CHECK(p51.status == ResolutionPlan::Status::conditional);
  CHECK(p51.Dg == 19);
  CHECK(p51.K == 20);
  CHECK(p51.unresolved == 1);
  REQUIRE(p51.supplements.size() == 1);
  CHECK(p51.supplements[0].g == 51);
  CHECK(p51.supplements[0].d == 20);
  CHECK(p51.supplements[0].value == extremal_gv(4));

  const auto p54 = resolution_plan(54);
  CHECK(p54.status == ResolutionPlan::Status::fails);
  CHECK(p54.Dg == 20);
  CHECK(p54.K == 21);
  CHECK(bps_threshold(21) == R(556, 10));

  for (int g = 2; g <= 60; ++g) {
    const auto p = resolution_plan(g);
    const auto expected = g <= 50   ? ResolutionPlan::Status::closes
                          : g <= 53 ? ResolutionPlan::Status::conditional
                                    : ResolutionPlan::Status::fails;
    CHECK(p.status == expected);
    CHECK(p.first_failing_genus == 54);
    CHECK(p.regularity.size() + p.castelnuovo.size() + p.gap.size() == static_cast<std::size_t>(3 * g - 2));
  }
  const auto j = plan_to_json(p51);
  CHECK(j["status"] == "conditional");
  CHECK(j["supplements"][0]["value"] == 175);
}
