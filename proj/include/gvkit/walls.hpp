#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gvkit/bounds.hpp"
#include "gvkit/surd.hpp"

namespace gvkit {

// H-normalized Chern character ch_{H,i} = H^{3-i} ch_i / H^3 on a Picard
// rank one 3-fold. Binary operations require matching profiles.
struct ChernCharacter {
  ThreefoldProfile profile;
  Rational c0;
  Rational c1;
  Rational c2;
  Rational c3;

  // I_C for a curve of degree d and arithmetic genus g:
  // (1, 0, -d/n, (g - 1 + (i/2) d)/n).
  static ChernCharacter ideal_sheaf(const ThreefoldProfile& profile, int d, const Rational& g);
  // O(-kH).
  static ChernCharacter line_bundle(const ThreefoldProfile& profile, const Rational& k);

  friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;
};

ChernCharacter operator+(const ChernCharacter& v, const ChernCharacter& w);
ChernCharacter operator-(const ChernCharacter& v, const ChernCharacter& w);
ChernCharacter operator*(const Rational& s, const ChernCharacter& v);

// ch^b = exp(-bH) ch.
ChernCharacter twist(const ChernCharacter& ch, const Rational& b);

struct TiltSlope {
  bool infinite;
  Rational value;  // meaningful when !infinite
  friend bool operator==(const TiltSlope&, const TiltSlope&) = default;
};

// mu_{a,b} = (c2^b - a^2 c0 / 2) / c1^b, or +infinity when c1^b <= 0.
// Throws DomainError unless a > 0.
TiltSlope slope_tilt(const ChernCharacter& ch, const Rational& a, const Rational& b);

// c1^2 - 2 c0 c2.
Rational discriminant(const ChernCharacter& ch);

// a^2 (c1^2 - 2 c0 c2) + 4 (c2^b)^2 - 6 c1^b c3^b. Also evaluated at a = 0,
// the boundary of the upper half-plane, where it is used by continuity.
Rational bg_quadratic(const ChernCharacter& ch, const Rational& a, const Rational& b);

// Q_{a,b}(I_C) is affine in g with slope 6b/n, so for b < 0 the condition
// Q >= 0 reads g <= threshold. Throws DomainError for b >= 0.
Rational genus_bound_from_Q(const ThreefoldProfile& profile, int d, const Rational& a, const Rational& b);

// The same threshold at b = b_d = -sqrt(d/n), returned as p + q sqrt(d/n).
QuadraticSurd genus_bound_from_Q_at_bd(const ThreefoldProfile& profile, int d, const Rational& a);

// a^2 >= (b - floor b)(floor b + 1 - b), the closed region on which the
// generalized Bogomolov-Gieseker inequality is known on the quintic.
bool quintic_domain_check(const Rational& a, const Rational& b);

struct VerticalWall {
  Rational b;
  friend bool operator==(const VerticalWall&, const VerticalWall&) = default;
};
struct SemicircleWall {
  Rational center_b;
  Rational radius_sq;  // > 0
  friend bool operator==(const SemicircleWall&, const SemicircleWall&) = default;
};
struct EmptyWall {
  friend bool operator==(const EmptyWall&, const EmptyWall&) = default;
};
struct EverywhereWall {
  friend bool operator==(const EverywhereWall&, const EverywhereWall&) = default;
};

using WallLocus = std::variant<VerticalWall, SemicircleWall, EmptyWall, EverywhereWall>;

std::string describe(const WallLocus& wall);

// {(a, b) : a > 0, mu_{a,b}(v) = mu_{a,b}(w)}. Writing
//   A = v0 w1 - w0 v1,  B = v2 w0 - w2 v0,  C = v2 w1 - w2 v1,
// the locus is C - b B - (A/2)(b^2 + a^2) = 0.
WallLocus numerical_wall(const ChernCharacter& v, const ChernCharacter& w);

// Wall of I_C against I_{C1}(-kH):
//   a^2 + (b + X)^2 = X^2 - 2d/n,  X = (d - d1)/(k n) + k/2.
WallLocus ideal_wall_circle(int n, int d, int k, int d1);

struct DestabilizerCandidate {
  int k;
  int d1;
  WallLocus wall;
  friend bool operator==(const DestabilizerCandidate&, const DestabilizerCandidate&) = default;
};

// Numerically admissible subobjects I_{C1}(-kH) of I_C at b, b_d <= b < 0:
//   ceil(b) <= -k <= -1,
//   1 <= d1 < min{d - k^2 n/2, d + k^2 n/2 - k sqrt(2nd)}.
// These are candidates only; nothing here decides whether a wall is actual.
std::vector<DestabilizerCandidate> enumerate_destabilizers(int n, int d, const Rational& b);

// Maximal rank of a destabilizer of an object with ch_{<=2} = (1, 0, -d/n)
// along `wall`: 1 if the semicircle meets {a > 0, b_d <= b < 0}, otherwise
// no constraint (nullopt).
std::optional<int> rank_bound_check(int n, int d, const WallLocus& wall);

// For a torsion object with ch_{<=2} = (0, m, -d/n - m^2/2) at b: rank 0 if
// b >= -d/(nm), at most 1 if -d/(nm) - m/4 <= b < -d/(nm), else nullopt.
std::optional<int> rank_bound_check_torsion(int n, int d, int m, const Rational& b);

// g(C) = g(C1) + g(C2) + k d1 - 1.
int genus_decomposition(int g1, int g2, int k, int d1);

struct ExtremalWallReport {
  int n;
  int d;
  // Torsion class (0, n, -d - n^2/2) of I_{C/D} for C on a degree n surface in P^3.
  ChernCharacter torsion_class;
  // The wall tangent to b = -d/n.
  Rational center_b;
  Rational radius_sq;
  // numerical_wall(torsion_class, (1, x, y)) reproduces the tangent wall.
  bool wall_matches;
  // The only real point of constraints (i)-(iv).
  Rational x;
  Rational y;
  // Integers x with 0 < x + d/n + n/2 < n satisfying (ii) and (iii).
  std::vector<Integer> integer_solutions;
  bool divisible;  // d in nZ
  Rational extremal_genus;  // d^2/(2n) + ((n - 4)/2) d + 1
  bool genus_integral;
};

ExtremalWallReport extremal_wall_analysis(int n, int d);

// Static SVG of the (b, a) half-plane with the candidates' semicircles.
// Coordinates are decimal approximations for display; the exact data lives
// in the candidate list.
std::string render_walls_svg(int n, int d, const Rational& b, const std::vector<DestabilizerCandidate>& candidates);

}  // namespace gvkit
