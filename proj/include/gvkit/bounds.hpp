#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gvkit/rational.hpp"

namespace gvkit {

enum class ThreefoldKind { general_bmt, hypersurface_in_p4, quintic };

// Smooth projective 3-fold of Picard rank one with H^3 = degree and
// K_X = -index H.
struct ThreefoldProfile {
  int degree;
  int index;
  ThreefoldKind kind;

  static ThreefoldProfile quintic();
  static ThreefoldProfile hypersurface(int degree);
  static ThreefoldProfile general(int degree, int index);

  friend bool operator==(const ThreefoldProfile&, const ThreefoldProfile&) = default;
};

enum class BoundFormula { bps_threshold, general_bmt, hypersurface, non_hyperplane, divisor };

std::string_view formula_name(BoundFormula f);

struct BoundReport {
  int d;
  Rational bound;
  Integer bound_floor;
  BoundFormula formula;
};

// B(d) = (d^2 + 5d + 10) / 10, the quintic vanishing threshold.
Rational bps_threshold(int d);

// d^2/(2n) + ((1 - i)/2) d + 1.
BoundReport genus_bound_general(const ThreefoldProfile& profile, int d);

// Hypersurfaces in P^4 of degree n <= 5: d^2/(2n) + ((n - 4)/2) d + 1.
BoundReport genus_bound_hypersurface(int n, int d);

// Curves not in any hyperplane section: d^2/(2n) + (n/2 - 1/n - 2) d + 2 + 1/n.
BoundReport genus_bound_nonhyperplane(int n, int d);

// Curves inside an integral divisor in |O(m)|: d^2/(2nm) + ((m - i)/2) d + 1.
BoundReport genus_bound_divisor(int n, int i, int m, int d);

// Signed count n^{5m}_{B(5m)} on the quintic; m = 1 gives 10.
std::int64_t extremal_gv(int m);

struct ModuliEuler {
  std::int64_t euler;
  std::int64_t dim;
};

// Euler characteristic and dimension of the Hilbert scheme of extremal
// curves of degree 5m (a projective bundle over P^4), m >= 2.
ModuliEuler extremal_moduli_euler(int m);

struct CorollaryViolation {
  int g;
  int d;
  Rational threshold;  // B(d) >= g
};

struct CorollaryReport {
  int g_max;
  // Every (g, d) with 1 <= d <= floor((2g - 2)/5) and g <= B(d).
  std::vector<CorollaryViolation> violations;
  // True iff the only violation is the equality case (51, 20).
  bool passed;
  bool boundary_equality_at_51_20;
};

CorollaryReport castelnuovo_corollary_check(int g_max = 53);

struct PropertyFailure {
  std::string_view property;  // "superadditivity", "cover", "cover-strict"
  std::vector<int> parts;     // partition, or {d, r}
};

struct BoundPropertiesReport {
  std::int64_t partitions_checked = 0;
  std::int64_t covers_checked = 0;
  std::vector<PropertyFailure> failures;
  bool passed() const { return failures.empty(); }
};

// Exhaustive check of
//   B(sum d_i) - 1 >= sum (B(d_i) - 1)      partitions, <= parts_max parts, sum <= d_max
//   (B(d) - 1)/r + 1 >= B(d/r)              r | d <= d_max, r <= r_max
// with the second inequality strict for r >= 2.
BoundPropertiesReport bound_function_properties(int d_max, int r_max, int parts_max);

// D(g) = max{d >= 0 : B(d) < g}, 0 if no such d.
int max_vanishing_degree(int g);

}  // namespace gvkit
