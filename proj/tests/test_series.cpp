#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "gvkit/bernoulli.hpp"
#include "gvkit/bivariate.hpp"
#include "gvkit/error.hpp"
#include "gvkit/series.hpp"
#include "gvkit/series_json.hpp"

using namespace gvkit;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return make_rational(p, q); }

LaurentSeries qs(int min_exp, std::vector<Rational> c, int trunc) {
  return LaurentSeries(Variable::q, min_exp, std::move(c), trunc);
}

LaurentSeries random_series(std::mt19937& rng, Variable v, int min_exp, int trunc, bool unit_lead) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c;
  for (int k = min_exp; k <= trunc; ++k) c.push_back(R(num(rng), den(rng)));
  if (unit_lead) c[0] = 1;
  else if (c[0] == 0) c[0] = 2;
  return LaurentSeries(v, min_exp, std::move(c), trunc);
}

// 2 - 2 cos(x) = sum_{k >= 1} 2 (-1)^{k+1} x^{2k} / (2k)!, written out term by term.
LaurentSeries two_minus_two_cos(int trunc) {
  std::vector<Rational> c(static_cast<std::size_t>(trunc + 1));
  Rational fact = 1;
  for (int j = 1; j <= trunc; ++j) {
    fact *= j;
    if (j % 2 == 0) c[static_cast<std::size_t>(j)] = Rational((j / 2) % 2 == 1 ? 2 : -2) / fact;
  }
  return LaurentSeries(Variable::lambda, 0, std::move(c), trunc);
}

// Reversion by solving m(r(y)) = y one coefficient at a time.
std::vector<Rational> brute_force_reversion(const LaurentSeries& m, int n) {
  std::vector<Rational> r(static_cast<std::size_t>(n + 1));
  const Rational m1 = m.coeff(1);
  for (int k = 1; k <= n; ++k) {
    auto eval = [&](const std::vector<Rational>& rr) {
      // [y^k] sum_j m_j r(y)^j
      std::vector<Rational> pw(static_cast<std::size_t>(n + 1));
      pw[0] = 1;
      Rational total = 0;
      for (int j = 1; j <= k; ++j) {
        std::vector<Rational> next(static_cast<std::size_t>(n + 1));
        for (int a = 0; a <= n; ++a)
          for (int b = 1; a + b <= n; ++b) next[static_cast<std::size_t>(a + b)] += pw[static_cast<std::size_t>(a)] * rr[static_cast<std::size_t>(b)];
        pw = next;
        total += m.coeff(j) * pw[static_cast<std::size_t>(k)];
      }
      return total;
    };
    r[static_cast<std::size_t>(k)] = 0;
    const Rational residual = eval(r);
    const Rational target = k == 1 ? Rational(1) : Rational(0);
    r[static_cast<std::size_t>(k)] = (target - residual) / m1;
  }
  return r;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational(" -6/4 ") == R(-3, 2));
  CHECK(to_string(R(6, -4)) == "-3/2");
  CHECK(to_string(R(8, 4)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(floor_of(R(-7, 2)) == -4);
  CHECK(ceil_of(R(-7, 2)) == -3);
  CHECK(binomial(5, 7) == 0);
}

TEST_CASE("product of small polynomials") {
  const auto f = qs(0, {1, 1}, 3);
  const auto g = qs(0, {1, -1}, 3);
  CHECK(f * g == qs(0, {1, 0, -1}, 3));

  const auto inv_q = qs(-1, {1}, 3);
  const auto q = qs(1, {1}, 3);
  const auto p = inv_q * q;
  CHECK(p.coeff(0) == 1);
  CHECK(p.trunc() == 2);  // min(3 + 1, 3 - 1)
}

TEST_CASE("geometric series and residual of its product") {
  const auto f = qs(0, {1, -3125}, 8);
  const auto inv = series_invert(f);
  for (int k = 0; k <= 8; ++k) CHECK(inv.coeff(k) == power(Rational(3125), k));
  const auto prod = inv * f;
  CHECK(prod == LaurentSeries::one(Variable::q, 8));
}

TEST_CASE("variable tags must agree") {
  const auto f = qs(0, {1}, 2);
  const auto g = LaurentSeries::one(Variable::lambda, 2);
  CHECK_THROWS_AS(f * g, VariableMismatch);
  CHECK_THROWS_AS(f + g, VariableMismatch);
}

TEST_CASE("window checks") {
  CHECK_THROWS_AS(qs(0, {1, 2, 3}, 1), DomainError);
  const auto f = qs(0, {1}, 2);
  CHECK_THROWS_AS(f.coeff(3), WindowError);
  CHECK(f.coeff(-5) == 0);
  CHECK(LaurentSeries::zero(Variable::q, 4).min_exp() == 5);
  CHECK_THROWS_AS(series_invert(LaurentSeries::zero(Variable::q, 4)), DomainError);
}

TEST_CASE("inverse of 2 - 2cos") {
  const auto s = two_minus_two_cos(12);
  CHECK(s.min_exp() == 2);
  CHECK(s.coeff(4) == R(-1, 12));
  CHECK(s.coeff(6) == R(1, 360));
  const auto inv = series_invert(s);
  CHECK(inv.min_exp() == -2);
  CHECK(inv.coeff(-2) == 1);
  CHECK(inv.coeff(0) == R(1, 12));
  CHECK(inv.coeff(2) == R(1, 240));
  const auto prod = inv * s;
  CHECK(prod == LaurentSeries::one(Variable::lambda, prod.trunc()));
  CHECK(prod.trunc() == 10);
}

TEST_CASE("ring laws and involutions on random series") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_series(rng, Variable::q, -2, 6, false);
    const auto g = random_series(rng, Variable::q, 0, 5, false);
    const auto h = random_series(rng, Variable::q, 1, 7, false);
    CHECK(f * g == g * f);
    CHECK(agree_on_common_window((f * g) * h, f * (g * h)));
    CHECK(agree_on_common_window(f * (g + h), f * g + f * h));
    CHECK(series_invert(series_invert(f)) == f);

    const auto x = random_series(rng, Variable::q, 1, 7, false);
    CHECK(series_log(series_exp(x)) == x);
    const auto u = random_series(rng, Variable::q, 0, 7, true);
    CHECK(series_exp(series_log(u)) == u);
  }
}

TEST_CASE("log and exp closed forms") {
  const auto l = series_log(qs(0, {1, 1}, 5));
  for (int k = 1; k <= 5; ++k) CHECK(l.coeff(k) == R(k % 2 == 1 ? 1 : -1, k));
  CHECK(series_exp(LaurentSeries::zero(Variable::q, 4)) == LaurentSeries::one(Variable::q, 4));
  CHECK_THROWS_AS(series_log(qs(0, {2, 1}, 3)), DomainError);
  CHECK_THROWS_AS(series_exp(qs(0, {1, 1}, 3)), DomainError);
}

TEST_CASE("bivariate log of 1 + 5 q t") {
  const auto one = LaurentSeries::one(Variable::q, 6);
  const auto pt = BivariateSeries(Variable::q, {one, qs(1, {5}, 6), LaurentSeries::zero(Variable::q, 6)});
  const auto f = series_log(pt);
  CHECK(f.block(0).is_zero());
  CHECK(f.block(1) == qs(1, {5}, 6));
  CHECK(f.block(2).coeff(2) == R(-25, 2));
  CHECK(f.block(2).valuation() == 2);
  CHECK(series_exp(f) == pt);
  CHECK_THROWS_AS(series_log(BivariateSeries(Variable::q, {qs(0, {2}, 3)})), DomainError);
}

TEST_CASE("bivariate exp/log round trip") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<LaurentSeries> blocks{LaurentSeries::zero(Variable::q, 8)};
    for (int d = 1; d <= 4; ++d) blocks.push_back(random_series(rng, Variable::q, -d, 8, false));
    const BivariateSeries x(Variable::q, blocks);
    const auto back = series_log(series_exp(x));
    CHECK(agree_on_common_window(back, x));
  }
}

TEST_CASE("substitution t := m(t)") {
  const auto m = LaurentSeries(Variable::t, 1, {1, 1}, 3);
  const auto c = LaurentSeries::one(Variable::q, 0);
  const auto z = LaurentSeries::zero(Variable::q, 0);

  const auto f1 = series_compose_t(BivariateSeries(Variable::q, {z, c, z, z}), m);
  CHECK(f1.block(1) == c);
  CHECK(f1.block(2) == c);
  CHECK(f1.block(3).is_zero());

  const auto f2 = series_compose_t(BivariateSeries(Variable::q, {z, z, c, z}), m);
  CHECK(f2.block(1).is_zero());
  CHECK(f2.block(2) == c);
  CHECK(f2.block(3) == 2 * c);

  CHECK_THROWS_AS(series_compose_t(f1, LaurentSeries(Variable::t, 0, {1, 1}, 3)), DomainError);
}

TEST_CASE("reversion agrees with coefficient matching and undoes substitution") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = random_series(rng, Variable::t, 1, 7, false);
    const auto r = series_reversion(m, Variable::t);
    const auto oracle = brute_force_reversion(m, 7);
    for (int k = 1; k <= r.trunc(); ++k) CHECK(r.coeff(k) == oracle[static_cast<std::size_t>(k)]);

    const auto id = series_compose(r, m);  // r(m(t)) = t
    CHECK(agree_on_common_window(id, LaurentSeries::monomial(Variable::t, 1, 1, id.trunc())));

    std::vector<LaurentSeries> blocks{LaurentSeries::zero(Variable::q, 4)};
    for (int d = 1; d <= 5; ++d) blocks.push_back(random_series(rng, Variable::q, 0, 4, false));
    const BivariateSeries f(Variable::q, blocks);
    const auto back = series_compose_t(series_compose_t(f, m), r);
    CHECK(back.t_trunc() == 5);
    CHECK(agree_on_common_window(back, f));
  }
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == R(-1, 2));
  CHECK(bernoulli(2) == R(1, 6));
  CHECK(bernoulli(4) == R(-1, 30));
  CHECK(bernoulli(12) == R(-691, 2730));
  for (int k = 1; k <= 30; ++k) {
    if (k >= 3 && k % 2 == 1) CHECK(bernoulli(k) == 0);
    Rational sum = 0;
    for (int j = 0; j <= k; ++j) sum += Rational(binomial(k + 1, j)) * bernoulli(j);
    CHECK(sum == 0);
  }
  CHECK_THROWS_AS(bernoulli(-1), DomainError);
}

TEST_CASE("bernoulli cache under concurrent readers") {
  BernoulliCache cache;
  std::vector<std::thread> pool;
  std::vector<Rational> out(8);
  for (int i = 0; i < 8; ++i) pool.emplace_back([&, i] { out[static_cast<std::size_t>(i)] = cache.get(40 + i % 2 * 2); });
  for (auto& th : pool) th.join();
  for (int i = 0; i < 8; ++i) CHECK(out[static_cast<std::size_t>(i)] == bernoulli(40 + i % 2 * 2));
}

TEST_CASE("series JSON round trip") {
  const auto f = qs(-2, {R(1, 6), 0, R(-3, 5)}, 6);
  const auto j = series_to_json(f);
  CHECK(j["coeffs"][0] == "1/6");
  CHECK(series_from_json(j) == f);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"({"variable":"q"})")), ParseError);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"({"variable":"z","min_exp":0,"trunc":1,"coeffs":[]})")), ParseError);

  const BivariateSeries b(Variable::q, {LaurentSeries::zero(Variable::q, 3), f});
  CHECK(bivariate_from_json(bivariate_to_json(b)) == b);
}
