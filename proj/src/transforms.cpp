#include "gvkit/transforms.hpp"

#include <algorithm>
#include <string>

#include "gvkit/bounds.hpp"
#include "gvkit/error.hpp"

namespace gvkit {

namespace {

// 2 - 2cos(x) = x^2 - x^4/12 + x^6/360 - ..., known up to x^trunc.
LaurentSeries two_minus_two_cos(int trunc) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(trunc + 1, 0)));
  Rational fact = 1;
  for (int j = 1; j <= trunc; ++j) {
    fact *= j;
    if (j % 2 == 0) c[static_cast<std::size_t>(j)] = Rational((j / 2) % 2 == 1 ? 2 : -2) / fact;
  }
  return {Variable::lambda, 0, std::move(c), trunc};
}

// Multiple-cover weights r^{2g-3} [x^{2g-2}] (2 - 2cos x)^{h-1} for g, h <= g_out.
class CoverKernel {
 public:
  explicit CoverKernel(int g_out) {
    const auto s = two_minus_two_cos(2 * g_out + 2);
    powers_.push_back(series_invert(s));
    for (int h = 1; h <= g_out; ++h) powers_.push_back(series_pow(s, h - 1));
  }

  Rational weight(int g, int h, int r) const {
    if (h > g) return 0;
    return powers_[static_cast<std::size_t>(h)].coeff(2 * g - 2) * power(Rational(r), 2 * g - 3);
  }

 private:
  std::vector<LaurentSeries> powers_;
};

void require_output_window(int g_out, int d_out, int g_max, int d_max, const char* what) {
  if (g_out < 0 || d_out < 0) throw DomainError(std::string(what) + ": output window must be nonnegative");
  if (g_out > g_max || d_out > d_max) {
    throw WindowError(std::string(what) + ": output window (g<=" + std::to_string(g_out) + ", d<=" +
                      std::to_string(d_out) + ") exceeds the input truncation (g<=" + std::to_string(g_max) +
                      ", d<=" + std::to_string(d_max) + ")");
  }
}

Rational sign_pow(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

LaurentSeries degree_block(const PtTable& pt, int d) {
  const auto& w = pt.window(d);
  std::vector<Rational> c(static_cast<std::size_t>(std::max(w.n_max - w.n_min + 1, 0)));
  for (const auto& [key, value] : pt.entries()) {
    if (key.second == d) c[static_cast<std::size_t>(key.first - w.n_min)] = value;
  }
  return {Variable::q, w.n_min, std::move(c), w.n_max};
}

}  // namespace

GwTable gv_to_gw(const GvTable& gv, int g_out, int d_out) {
  require_output_window(g_out, d_out, gv.g_max(), gv.d_max(), "gv_to_gw");
  const CoverKernel kernel(g_out);
  GwTable gw(g_out, d_out);
  for (int d = 1; d <= d_out; ++d) {
    for (int g = 0; g <= g_out; ++g) {
      Rational total = 0;
      for (int r = 1; r <= d; ++r) {
        if (d % r != 0) continue;
        for (int h = 0; h <= g; ++h) {
          const Rational n = gv.get(h, d / r);
          if (n != 0) total += n * kernel.weight(g, h, r);
        }
      }
      gw.set(g, d, total);
    }
  }
  return gw;
}

GvTable gw_to_gv(const GwTable& gw, int g_out, int d_out) {
  require_output_window(g_out, d_out, gw.g_max(), gw.d_max(), "gw_to_gv");
  const CoverKernel kernel(g_out);
  GvTable gv(g_out, d_out);
  for (int d = 1; d <= d_out; ++d) {
    for (int g = 0; g <= g_out; ++g) {
      // The (h, r) = (g, 1) weight is 1, the leading coefficient of (2 - 2cos x)^{g-1}.
      Rational n = gw.get(g, d);
      for (int r = 1; r <= d; ++r) {
        if (d % r != 0) continue;
        for (int h = 0; h <= g; ++h) {
          if (r == 1 && h == g) continue;
          const Rational known = gv.get(h, d / r);
          if (known != 0) n -= known * kernel.weight(g, h, r);
        }
      }
      gv.set(g, d, n);
    }
  }
  return gv;
}

std::vector<TableEntry> integrality_check(const GvTable& gv) {
  std::vector<TableEntry> out;
  for (const auto& [key, value] : gv.entries()) {
    if (!is_integer(value)) out.push_back({key.first, key.second, value});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(a.d, a.index) < std::pair(b.d, b.index);
  });
  return out;
}

BivariateSeries gv_to_pt_connected(const GvTable& gv, int d_out, int n_min, int n_max, GenusTail tail) {
  if (d_out < 0) throw DomainError("gv_to_pt_connected: d_out must be nonnegative");
  if (n_min > n_max) throw DomainError("gv_to_pt_connected: q window needs n_min <= n_max");
  if (d_out > gv.d_max()) {
    throw WindowError("gv_to_pt_connected: d_out " + std::to_string(d_out) + " exceeds the table's d_max " +
                      std::to_string(gv.d_max()));
  }
  if (tail == GenusTail::require_complete && d_out >= 1) {
    const Integer needed = floor_of(bps_threshold(d_out));
    if (!gv.castelnuovo_valid || Integer(gv.g_max()) < needed) {
      throw WindowError("gv_to_pt_connected: every genus contributes; the table must be castelnuovo-valid with g_max >= " +
                        needed.get_str() + " (or pass the assume-zero genus tail)");
    }
  }

  const auto width = static_cast<std::size_t>(n_max - n_min + 1);
  std::vector<LaurentSeries> blocks{LaurentSeries::zero(Variable::q, n_max)};
  for (int d = 1; d <= d_out; ++d) {
    // Accumulated in u = -q; converted to q at the end.
    std::vector<Rational> u(width);
    for (int r = 1; r <= d; ++r) {
      if (d % r != 0) continue;
      const int dp = d / r;
      for (const auto& [key, n] : gv.entries()) {
        if (key.second != dp) continue;
        const int g = key.first;
        const int lead = r * (1 - g);
        if (lead < n_min) {
          throw WindowError("gv_to_pt_connected: term of (g=" + std::to_string(g) + ", d=" + std::to_string(dp) +
                            ", r=" + std::to_string(r) + ") starts at q^" + std::to_string(lead) +
                            ", below the window start q^" + std::to_string(n_min));
        }
        const Rational scale = n * sign_pow(g - 1) / r;
        auto add = [&](int e, const Rational& c) { u[static_cast<std::size_t>(e - n_min)] += scale * c; };
        if (g >= 1) {
          // u^{r(1-g)} (1 - u^r)^{2g-2}
          for (int j = 0; j <= 2 * g - 2; ++j) {
            const int e = lead + r * j;
            if (e > n_max) break;
            add(e, sign_pow(j) * Rational(binomial(2 * g - 2, j)));
          }
        } else {
          // u^r / (1 - u^r)^2 = sum_{k >= 1} k u^{rk}
          for (int k = 1; r * k <= n_max; ++k) add(r * k, Rational(k));
        }
      }
    }
    for (int e = n_min; e <= n_max; ++e) {
      auto& c = u[static_cast<std::size_t>(e - n_min)];
      if (e % 2 != 0) c = -c;
    }
    blocks.emplace_back(Variable::q, n_min, std::move(u), n_max);
  }
  return {Variable::q, std::move(blocks)};
}

PtTable pt_connected_to_table(const BivariateSeries& f, int n_min) {
  if (f.secondary() != Variable::q) throw VariableMismatch("pt_connected_to_table: expected a series in q");
  const auto pt = series_exp(f);
  std::vector<PtTable::Window> windows;
  for (int d = 1; d <= pt.t_trunc(); ++d) {
    const auto& b = pt.block(d);
    if (!b.is_zero() && b.min_exp() < n_min) {
      throw WindowError("pt_connected_to_table: degree " + std::to_string(d) + " has a nonzero coefficient at q^" +
                        std::to_string(b.min_exp()) + ", below n_min = " + std::to_string(n_min));
    }
    windows.push_back({n_min, std::max(b.trunc(), n_min - 1)});
  }
  PtTable table(PtTable::Kind::pt, std::move(windows));
  for (int d = 1; d <= pt.t_trunc(); ++d) {
    const auto& b = pt.block(d);
    for (int n = b.min_exp(); n <= b.trunc(); ++n) table.set(n, d, b.coeff(n));
  }
  return table;
}

BivariateSeries pt_table_to_connected(const PtTable& pt) {
  int top = 0;
  for (int d = 1; d <= pt.d_max(); ++d) top = std::max(top, pt.window(d).n_max);
  std::vector<LaurentSeries> blocks{LaurentSeries::one(Variable::q, top)};
  for (int d = 1; d <= pt.d_max(); ++d) blocks.push_back(degree_block(pt, d));
  return series_log(BivariateSeries(Variable::q, std::move(blocks)));
}

PtTable pt_to_dt(const PtTable& pt, const LaurentSeries& dt0) {
  if (dt0.variable() != Variable::q) throw VariableMismatch("pt_to_dt: DT_0 must be a series in q");
  if (dt0.is_zero() || dt0.min_exp() != 0 || dt0.coeff(0) != 1) {
    throw DomainError("pt_to_dt: DT_0 must have constant term 1 and no negative powers");
  }
  std::vector<LaurentSeries> products;
  std::vector<PtTable::Window> windows;
  for (int d = 1; d <= pt.d_max(); ++d) {
    auto prod = series_mul(degree_block(pt, d), dt0);
    const int n_min = pt.window(d).n_min;
    windows.push_back({n_min, std::max(prod.trunc(), n_min - 1)});
    products.push_back(std::move(prod));
  }
  PtTable dt(PtTable::Kind::dt, std::move(windows));
  dt.castelnuovo_valid = pt.castelnuovo_valid;
  for (int d = 1; d <= pt.d_max(); ++d) {
    const auto& b = products[static_cast<std::size_t>(d - 1)];
    for (int n = b.min_exp(); n <= b.trunc(); ++n) dt.set(n, d, b.coeff(n));
  }
  return dt;
}

LaurentSeries degree_zero_dt(int euler, int trunc) {
  if (trunc < 0) throw DomainError("degree_zero_dt: trunc must be >= 0");
  LaurentSeries m = LaurentSeries::one(Variable::q, trunc);
  for (int k = 1; k <= trunc; ++k) {
    const auto factor = LaurentSeries::one(Variable::q, trunc) - LaurentSeries::monomial(Variable::q, k, 1, trunc);
    m = series_mul(m, series_pow(factor, -k));
  }
  // q -> -q
  std::vector<Rational> c(m.coeffs().begin(), m.coeffs().end());
  for (std::size_t e = 0; e < c.size(); ++e) {
    if ((static_cast<int>(e) + m.min_exp()) % 2 != 0) c[e] = -c[e];
  }
  return series_pow(LaurentSeries(Variable::q, m.min_exp(), std::move(c), trunc), euler);
}

GvTable apply_castelnuovo_vanishing(const GvTable& gv, VanishingReport* report) {
  GvTable out = gv;
  for (const auto& [key, value] : gv.entries()) {
    if (Rational(key.first) > bps_threshold(key.second)) {
      out.set(key.first, key.second, 0);
      if (report) report->zeroed.push_back({key.first, key.second, value});
    }
  }
  out.castelnuovo_valid = true;
  return out;
}

PtTable apply_castelnuovo_vanishing(const PtTable& pt, VanishingReport* report) {
  PtTable out = pt;
  for (const auto& [key, value] : pt.entries()) {
    if (Rational(key.first) < 1 - bps_threshold(key.second)) {
      out.set(key.first, key.second, 0);
      if (report) report->zeroed.push_back({key.first, key.second, value});
    }
  }
  out.castelnuovo_valid = true;
  return out;
}

std::vector<TableEntry> connected_vanishing_check(const BivariateSeries& f) {
  std::vector<TableEntry> out;
  for (int d = 1; d <= f.t_trunc(); ++d) {
    const auto& b = f.block(d);
    const Rational threshold = 1 - bps_threshold(d);
    for (int m = b.min_exp(); m <= b.trunc() && Rational(m) < threshold; ++m) {
      const Rational c = b.coeff(m);
      if (c != 0) out.push_back({m, d, c});
    }
  }
  return out;
}

}  // namespace gvkit
