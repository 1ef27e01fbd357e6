#pragma once

#include <vector>

#include "gvkit/series.hpp"

namespace gvkit {

// Series in t truncated at t^{t_trunc} whose t^d coefficient is a Laurent
// series in a secondary variable (q or lambda):
//
//   F(x, t) = sum_{d = 0}^{t_trunc} F_d(x) t^d + O(t^{t_trunc + 1}).
class BivariateSeries {
 public:
  // blocks[d] is the t^d coefficient; every block must be in `secondary`.
  BivariateSeries(Variable secondary, std::vector<LaurentSeries> blocks);

  // All blocks zero with the given secondary truncation order.
  static BivariateSeries zero(Variable secondary, int t_trunc, int secondary_trunc);

  Variable secondary() const { return secondary_; }
  int t_trunc() const { return static_cast<int>(blocks_.size()) - 1; }
  const LaurentSeries& block(int d) const;
  const std::vector<LaurentSeries>& blocks() const { return blocks_; }

  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  Variable secondary_;
  std::vector<LaurentSeries> blocks_;
};

BivariateSeries operator+(const BivariateSeries& f, const BivariateSeries& g);
BivariateSeries operator*(const BivariateSeries& f, const BivariateSeries& g);

// log(1 + X) = sum_k (-1)^{k-1} X^k / k, X nilpotent to order t_trunc.
// Requires block 0 to be the constant series 1.
BivariateSeries series_log(const BivariateSeries& f);

// exp(X) = sum_k X^k / k!. Requires block 0 to be the zero series.
BivariateSeries series_exp(const BivariateSeries& f);

// Reparametrizes t := m(t) for m = O(t), a LaurentSeries in t. The result
// keeps f's secondary variable and is known up to
// t^{min(trunc_m, (t_trunc_f + 1) val_m - 1)}.
BivariateSeries series_compose_t(const BivariateSeries& f, const LaurentSeries& m);

// Blockwise agreement on the common windows, over the common t range.
bool agree_on_common_window(const BivariateSeries& f, const BivariateSeries& g);

}  // namespace gvkit
