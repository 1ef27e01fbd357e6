#include "gvkit/bernoulli.hpp"

#include <mutex>

#include "gvkit/error.hpp"

namespace gvkit {

BernoulliCache::BernoulliCache() : values_{Rational(1)} {}

Rational BernoulliCache::get(int k) {
  if (k < 0) throw DomainError("bernoulli index must be nonnegative");
  const auto idx = static_cast<std::size_t>(k);
  {
    std::shared_lock lock(mutex_);
    if (idx < values_.size()) return values_[idx];
  }
  std::unique_lock lock(mutex_);
  while (values_.size() <= idx) {
    const auto m = static_cast<std::int64_t>(values_.size());
    if (m >= 3 && m % 2 == 1) {
      values_.emplace_back(0);
      continue;
    }
    Rational acc = 0;
    for (std::int64_t j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * values_[static_cast<std::size_t>(j)];
    values_.push_back(-acc / Rational(binomial(m + 1, m)));
  }
  return values_[idx];
}

std::size_t BernoulliCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

Rational bernoulli(int k) {
  static BernoulliCache cache;
  return cache.get(k);
}

}  // namespace gvkit
