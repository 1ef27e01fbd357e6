#pragma once

#include <shared_mutex>
#include <vector>

#include "gvkit/rational.hpp"

namespace gvkit {

// Memo table of Bernoulli numbers with B_1 = -1/2, filled on demand from
//   sum_{j=0}^{k} C(k+1, j) B_j = 0.
// Safe for concurrent use: reads take a shared lock, extension an exclusive one.
class BernoulliCache {
 public:
  BernoulliCache();

  Rational get(int k);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::vector<Rational> values_;
};

// Process-wide cache.
Rational bernoulli(int k);

}  // namespace gvkit
