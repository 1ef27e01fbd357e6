#include "gvkit/bounds.hpp"

#include <string>

#include "gvkit/error.hpp"

namespace gvkit {

namespace {

BoundReport report(int d, Rational bound, BoundFormula formula) {
  Integer fl = floor_of(bound);
  return {d, std::move(bound), std::move(fl), formula};
}

void require_positive_degree(int d) {
  if (d < 1) throw DomainError("curve degree must be >= 1, got " + std::to_string(d));
}

void require_hypersurface_degree(int n) {
  if (n < 1 || n > 5) throw DomainError("hypersurface degree must lie in 1..5, got " + std::to_string(n));
}

// C(m - 2, 3) with the convention that it vanishes for m - 2 < 3.
Integer lower_binomial(int m) { return m - 2 < 3 ? Integer(0) : binomial(m - 2, 3); }

Integer sections_on_plane_section(int m) { return binomial(m + 3, 3) - lower_binomial(m); }

std::int64_t to_i64(const Integer& z) { return to_int64(Rational(z)); }

}  // namespace

ThreefoldProfile ThreefoldProfile::quintic() { return {5, 0, ThreefoldKind::quintic}; }

ThreefoldProfile ThreefoldProfile::hypersurface(int degree) {
  require_hypersurface_degree(degree);
  return {degree, 5 - degree, ThreefoldKind::hypersurface_in_p4};
}

ThreefoldProfile ThreefoldProfile::general(int degree, int index) {
  if (degree < 1) throw DomainError("3-fold degree must be >= 1");
  return {degree, index, ThreefoldKind::general_bmt};
}

std::string_view formula_name(BoundFormula f) {
  switch (f) {
    case BoundFormula::bps_threshold: return "bps_threshold";
    case BoundFormula::general_bmt: return "general_bmt";
    case BoundFormula::hypersurface: return "hypersurface";
    case BoundFormula::non_hyperplane: return "non_hyperplane";
    case BoundFormula::divisor: return "divisor";
  }
  return "?";
}

Rational bps_threshold(int d) {
  require_positive_degree(d);
  return make_rational(static_cast<std::int64_t>(d) * d + 5 * static_cast<std::int64_t>(d) + 10, 10);
}

BoundReport genus_bound_general(const ThreefoldProfile& profile, int d) {
  require_positive_degree(d);
  const Rational dd(d);
  const Rational n(profile.degree);
  Rational b = dd * dd / (2 * n) + Rational(1 - profile.index) / 2 * dd + 1;
  return report(d, std::move(b), BoundFormula::general_bmt);
}

BoundReport genus_bound_hypersurface(int n, int d) {
  require_hypersurface_degree(n);
  require_positive_degree(d);
  const Rational dd(d);
  Rational b = dd * dd / (2 * Rational(n)) + Rational(n - 4) / 2 * dd + 1;
  return report(d, std::move(b), BoundFormula::hypersurface);
}

BoundReport genus_bound_nonhyperplane(int n, int d) {
  require_hypersurface_degree(n);
  require_positive_degree(d);
  const Rational dd(d);
  const Rational nn(n);
  Rational b = dd * dd / (2 * nn) + (nn / 2 - 1 / nn - 2) * dd + 2 + 1 / nn;
  return report(d, std::move(b), BoundFormula::non_hyperplane);
}

BoundReport genus_bound_divisor(int n, int i, int m, int d) {
  if (m < 1) throw DomainError("divisor degree m must be >= 1");
  if (n < 1) throw DomainError("3-fold degree must be >= 1");
  require_positive_degree(d);
  const Rational dd(d);
  Rational b = dd * dd / (2 * Rational(n) * m) + Rational(m - i) / 2 * dd + 1;
  return report(d, std::move(b), BoundFormula::divisor);
}

std::int64_t extremal_gv(int m) {
  if (m < 1) throw DomainError("extremal_gv needs m >= 1");
  if (m == 1) return 10;
  const Integer h = sections_on_plane_section(m);
  const std::int64_t count = to_i64(h);
  const bool negative = (count + 3) % 2 != 0;
  return negative ? -5 * count : 5 * count;
}

ModuliEuler extremal_moduli_euler(int m) {
  if (m < 2) throw DomainError("extremal_moduli_euler needs m >= 2");
  const std::int64_t h = to_i64(sections_on_plane_section(m));
  // e(P^4) e(P^{h-1}) and dim P^4 + dim P^{h-1}.
  return {5 * h, h + 3};
}

CorollaryReport castelnuovo_corollary_check(int g_max) {
  CorollaryReport out{g_max, {}, true, false};
  for (int g = 0; g <= g_max; ++g) {
    const int d_top = static_cast<int>(to_int64(Rational(floor_of(make_rational(2 * g - 2, 5)))));
    for (int d = 1; d <= d_top; ++d) {
      Rational b = bps_threshold(d);
      if (Rational(g) <= b) {
        if (g == 51 && d == 20 && b == 51) out.boundary_equality_at_51_20 = true;
        out.violations.push_back({g, d, std::move(b)});
      }
    }
  }
  for (const auto& v : out.violations) {
    if (!(v.g == 51 && v.d == 20 && v.threshold == 51)) out.passed = false;
  }
  return out;
}

BoundPropertiesReport bound_function_properties(int d_max, int r_max, int parts_max) {
  BoundPropertiesReport out;
  std::vector<int> parts;
  // Nonincreasing partitions with at most parts_max parts and sum <= d_max.
  auto visit = [&](auto&& self, int remaining, int largest) -> void {
    if (!parts.empty()) {
      ++out.partitions_checked;
      int total = 0;
      Rational rhs = 0;
      for (int p : parts) {
        total += p;
        rhs += bps_threshold(p) - 1;
      }
      if (bps_threshold(total) - 1 < rhs) out.failures.push_back({"superadditivity", parts});
    }
    if (static_cast<int>(parts.size()) == parts_max) return;
    for (int p = std::min(largest, remaining); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  visit(visit, d_max, d_max);

  for (int d = 1; d <= d_max; ++d) {
    for (int r = 1; r <= std::min(d, r_max); ++r) {
      if (d % r != 0) continue;
      ++out.covers_checked;
      const Rational lhs = (bps_threshold(d) - 1) / r + 1;
      const Rational rhs = bps_threshold(d / r);
      if (lhs < rhs) out.failures.push_back({"cover", {d, r}});
      if (r >= 2 && !(lhs > rhs)) out.failures.push_back({"cover-strict", {d, r}});
    }
  }
  return out;
}

int max_vanishing_degree(int g) {
  // B(0) = 1 extends the threshold to d = 0; B is increasing in d.
  auto threshold = [](int d) { return d == 0 ? Rational(1) : bps_threshold(d); };
  int best = 0;
  for (int d = 0; threshold(d) < g; ++d) best = d;
  return best;
}

}  // namespace gvkit
