#include "gvkit/bivariate.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "gvkit/error.hpp"

namespace gvkit {

namespace {

using Blocks = std::vector<std::optional<LaurentSeries>>;

void accumulate(std::optional<LaurentSeries>& slot, const LaurentSeries& term) {
  slot = slot ? *slot + term : term;
}

// Product of two nilpotent parts; absent blocks are exactly zero, so they
// impose no truncation on the result.
Blocks mul_blocks(const Blocks& x, const Blocks& y, int t_trunc) {
  Blocks out(static_cast<std::size_t>(t_trunc + 1));
  for (int a = 0; a <= t_trunc; ++a) {
    if (!x[static_cast<std::size_t>(a)]) continue;
    for (int b = 0; a + b <= t_trunc; ++b) {
      if (!y[static_cast<std::size_t>(b)]) continue;
      accumulate(out[static_cast<std::size_t>(a + b)],
                 series_mul(*x[static_cast<std::size_t>(a)], *y[static_cast<std::size_t>(b)]));
    }
  }
  return out;
}

int min_block_trunc(const BivariateSeries& f) {
  int t = f.block(0).trunc();
  for (const auto& b : f.blocks()) t = std::min(t, b.trunc());
  return t;
}

Blocks nilpotent_part(const BivariateSeries& f) {
  Blocks x(f.blocks().size());
  for (int d = 1; d <= f.t_trunc(); ++d) x[static_cast<std::size_t>(d)] = f.block(d);
  return x;
}

BivariateSeries assemble(Variable secondary, Blocks blocks, LaurentSeries block0, int fallback_trunc) {
  std::vector<LaurentSeries> out;
  out.reserve(blocks.size());
  out.push_back(std::move(block0));
  for (std::size_t d = 1; d < blocks.size(); ++d) {
    out.push_back(blocks[d] ? std::move(*blocks[d]) : LaurentSeries::zero(secondary, fallback_trunc));
  }
  return {secondary, std::move(out)};
}

}  // namespace

BivariateSeries::BivariateSeries(Variable secondary, std::vector<LaurentSeries> blocks)
    : secondary_(secondary), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw DomainError("bivariate series needs at least the t^0 block");
  for (const auto& b : blocks_) {
    if (b.variable() != secondary_) {
      throw VariableMismatch("bivariate block in " + std::string(variable_name(b.variable())) + ", expected " +
                             std::string(variable_name(secondary_)));
    }
  }
}

BivariateSeries BivariateSeries::zero(Variable secondary, int t_trunc, int secondary_trunc) {
  if (t_trunc < 0) throw DomainError("t_trunc must be nonnegative");
  return {secondary, std::vector<LaurentSeries>(static_cast<std::size_t>(t_trunc + 1),
                                                LaurentSeries::zero(secondary, secondary_trunc))};
}

const LaurentSeries& BivariateSeries::block(int d) const {
  if (d < 0 || d > t_trunc()) {
    throw WindowError("t^" + std::to_string(d) + " is outside the t window [0, " + std::to_string(t_trunc()) + "]");
  }
  return blocks_[static_cast<std::size_t>(d)];
}

BivariateSeries operator+(const BivariateSeries& f, const BivariateSeries& g) {
  if (f.secondary() != g.secondary()) throw VariableMismatch("bivariate add: secondary variables differ");
  const int top = std::min(f.t_trunc(), g.t_trunc());
  std::vector<LaurentSeries> out;
  for (int d = 0; d <= top; ++d) out.push_back(f.block(d) + g.block(d));
  return {f.secondary(), std::move(out)};
}

BivariateSeries operator*(const BivariateSeries& f, const BivariateSeries& g) {
  if (f.secondary() != g.secondary()) throw VariableMismatch("bivariate mul: secondary variables differ");
  const int top = std::min(f.t_trunc(), g.t_trunc());
  std::vector<LaurentSeries> out;
  for (int e = 0; e <= top; ++e) {
    std::optional<LaurentSeries> acc;
    for (int d = 0; d <= e; ++d) accumulate(acc, series_mul(f.block(d), g.block(e - d)));
    out.push_back(std::move(*acc));
  }
  return {f.secondary(), std::move(out)};
}

BivariateSeries series_log(const BivariateSeries& f) {
  const LaurentSeries& b0 = f.block(0);
  if (b0.trunc() < 0 || !(b0 == LaurentSeries::one(f.secondary(), b0.trunc()))) {
    throw DomainError("bivariate log: the t^0 block must be the constant series 1");
  }
  const int top = f.t_trunc();
  const Blocks x = nilpotent_part(f);
  Blocks result(x.size());
  Blocks power = x;
  for (int k = 1; k <= top; ++k) {
    const Rational scale = make_rational(k % 2 == 1 ? 1 : -1, k);
    for (int d = 1; d <= top; ++d) {
      if (power[static_cast<std::size_t>(d)]) accumulate(result[static_cast<std::size_t>(d)], scale * *power[static_cast<std::size_t>(d)]);
    }
    if (k < top) power = mul_blocks(power, x, top);
  }
  return assemble(f.secondary(), std::move(result), LaurentSeries::zero(f.secondary(), b0.trunc()),
                  min_block_trunc(f));
}

BivariateSeries series_exp(const BivariateSeries& f) {
  const LaurentSeries& b0 = f.block(0);
  if (!b0.is_zero() || b0.trunc() < 0) {
    throw DomainError("bivariate exp: the t^0 block must be the zero series");
  }
  const int top = f.t_trunc();
  const Blocks x = nilpotent_part(f);
  Blocks result(x.size());
  Blocks power = x;
  Rational factorial = 1;
  for (int k = 1; k <= top; ++k) {
    factorial *= k;
    const Rational scale = Rational(1) / factorial;
    for (int d = 1; d <= top; ++d) {
      if (power[static_cast<std::size_t>(d)]) accumulate(result[static_cast<std::size_t>(d)], scale * *power[static_cast<std::size_t>(d)]);
    }
    if (k < top) power = mul_blocks(power, x, top);
  }
  return assemble(f.secondary(), std::move(result), LaurentSeries::one(f.secondary(), b0.trunc()),
                  min_block_trunc(f));
}

BivariateSeries series_compose_t(const BivariateSeries& f, const LaurentSeries& m) {
  if (m.variable() != Variable::t) throw VariableMismatch("series_compose_t: substitution series must be in t");
  if (m.is_zero() || m.min_exp() < 1) {
    throw DomainError("series_compose_t: substitution series must have zero constant term");
  }
  const int vm = m.min_exp();
  const int top = std::min(m.trunc(), (f.t_trunc() + 1) * vm - 1);
  // coefficient[e][d] = [t^e] m^d for 1 <= d <= top/vm.
  std::vector<std::optional<LaurentSeries>> blocks(static_cast<std::size_t>(top + 1));
  blocks[0] = f.block(0);
  LaurentSeries power = m;
  for (int d = 1; d * vm <= top && d <= f.t_trunc(); ++d) {
    for (int e = d * vm; e <= top; ++e) {
      const Rational c = power.coeff(e);
      if (c != 0) accumulate(blocks[static_cast<std::size_t>(e)], c * f.block(d));
    }
    power = series_mul(power, m);
  }
  std::vector<LaurentSeries> out;
  const int fallback = min_block_trunc(f);
  for (auto& b : blocks) out.push_back(b ? std::move(*b) : LaurentSeries::zero(f.secondary(), fallback));
  return {f.secondary(), std::move(out)};
}

bool agree_on_common_window(const BivariateSeries& f, const BivariateSeries& g) {
  if (f.secondary() != g.secondary()) return false;
  const int top = std::min(f.t_trunc(), g.t_trunc());
  for (int d = 0; d <= top; ++d) {
    if (!agree_on_common_window(f.block(d), g.block(d))) return false;
  }
  return true;
}

}  // namespace gvkit
