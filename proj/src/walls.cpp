#include "gvkit/walls.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "gvkit/error.hpp"

namespace gvkit {

namespace {

void require_same_profile(const ChernCharacter& v, const ChernCharacter& w, const char* what) {
  if (!(v.profile == w.profile)) throw DomainError(std::string(what) + ": Chern characters live on different 3-folds");
}

void require_positive(int value, const char* name) {
  if (value < 1) throw DomainError(std::string(name) + " must be >= 1");
}

}  // namespace

ChernCharacter ChernCharacter::ideal_sheaf(const ThreefoldProfile& profile, int d, const Rational& g) {
  const Rational n(profile.degree);
  return {profile, 1, 0, Rational(-d) / n, (g - 1 + Rational(profile.index) / 2 * d) / n};
}

ChernCharacter ChernCharacter::line_bundle(const ThreefoldProfile& profile, const Rational& k) {
  return twist({profile, 1, 0, 0, 0}, k);
}

ChernCharacter operator+(const ChernCharacter& v, const ChernCharacter& w) {
  require_same_profile(v, w, "ChernCharacter +");
  return {v.profile, v.c0 + w.c0, v.c1 + w.c1, v.c2 + w.c2, v.c3 + w.c3};
}

ChernCharacter operator-(const ChernCharacter& v, const ChernCharacter& w) {
  require_same_profile(v, w, "ChernCharacter -");
  return {v.profile, v.c0 - w.c0, v.c1 - w.c1, v.c2 - w.c2, v.c3 - w.c3};
}

ChernCharacter operator*(const Rational& s, const ChernCharacter& v) {
  return {v.profile, s * v.c0, s * v.c1, s * v.c2, s * v.c3};
}

ChernCharacter twist(const ChernCharacter& ch, const Rational& b) {
  const Rational b2 = b * b;
  const Rational b3 = b2 * b;
  return {ch.profile,
          ch.c0,
          ch.c1 - b * ch.c0,
          ch.c2 - b * ch.c1 + b2 * ch.c0 / 2,
          ch.c3 - b * ch.c2 + b2 * ch.c1 / 2 - b3 * ch.c0 / 6};
}

TiltSlope slope_tilt(const ChernCharacter& ch, const Rational& a, const Rational& b) {
  if (a <= 0) throw DomainError("tilt slope needs a > 0");
  const auto t = twist(ch, b);
  if (t.c1 <= 0) return {true, 0};
  return {false, (t.c2 - a * a * t.c0 / 2) / t.c1};
}

Rational discriminant(const ChernCharacter& ch) { return ch.c1 * ch.c1 - 2 * ch.c0 * ch.c2; }

Rational bg_quadratic(const ChernCharacter& ch, const Rational& a, const Rational& b) {
  if (a < 0) throw DomainError("bg_quadratic needs a >= 0");
  const auto t = twist(ch, b);
  return a * a * discriminant(ch) + 4 * t.c2 * t.c2 - 6 * t.c1 * t.c3;
}

Rational genus_bound_from_Q(const ThreefoldProfile& profile, int d, const Rational& a, const Rational& b) {
  require_positive(d, "curve degree");
  if (b >= 0) throw DomainError("genus_bound_from_Q needs b < 0");
  const Rational q0 = bg_quadratic(ChernCharacter::ideal_sheaf(profile, d, 0), a, b);
  const Rational q1 = bg_quadratic(ChernCharacter::ideal_sheaf(profile, d, 1), a, b);
  return -q0 / (q1 - q0);
}

QuadraticSurd genus_bound_from_Q_at_bd(const ThreefoldProfile& profile, int d, const Rational& a) {
  require_positive(d, "curve degree");
  if (a < 0) throw DomainError("genus_bound_from_Q_at_bd needs a >= 0");
  // Q(I_C) = 2 a^2 d/n + 2 b^2 d/n + 4 d^2/n^2 + 6 b ch3, and b^2 = d/n at b_d.
  const Rational n(profile.degree);
  const Rational dn = Rational(d) / n;
  const Rational numer = 2 * a * a * dn + 6 * dn * dn;
  // g = n ch3 + 1 - (i/2) d with ch3 = numer / (6 sqrt(d/n)).
  return {1 - Rational(profile.index) / 2 * d, n * numer / 6 / dn, dn};
}

bool quintic_domain_check(const Rational& a, const Rational& b) {
  const Rational frac = b - Rational(floor_of(b));
  return a * a >= frac * (1 - frac);
}

std::string describe(const WallLocus& wall) {
  struct Visitor {
    std::string operator()(const VerticalWall& w) const { return "vertical b=" + to_string(w.b); }
    std::string operator()(const SemicircleWall& w) const {
      return "semicircle center_b=" + to_string(w.center_b) + " radius_sq=" + to_string(w.radius_sq);
    }
    std::string operator()(const EmptyWall&) const { return "empty"; }
    std::string operator()(const EverywhereWall&) const { return "everywhere"; }
  };
  return std::visit(Visitor{}, wall);
}

WallLocus numerical_wall(const ChernCharacter& v, const ChernCharacter& w) {
  require_same_profile(v, w, "numerical_wall");
  const Rational A = v.c0 * w.c1 - w.c0 * v.c1;
  const Rational B = v.c2 * w.c0 - w.c2 * v.c0;
  const Rational C = v.c2 * w.c1 - w.c2 * v.c1;
  if (A != 0) {
    const Rational center = -B / A;
    const Rational radius_sq = center * center + 2 * C / A;
    if (radius_sq <= 0) return EmptyWall{};
    return SemicircleWall{center, radius_sq};
  }
  if (B != 0) return VerticalWall{C / B};
  if (C == 0) return EverywhereWall{};
  return EmptyWall{};
}

WallLocus ideal_wall_circle(int n, int d, int k, int d1) {
  require_positive(n, "n");
  require_positive(d, "d");
  require_positive(k, "k");
  const Rational x = Rational(d - d1) / (Rational(k) * n) + Rational(k) / 2;
  const Rational radius_sq = x * x - Rational(2 * d) / n;
  if (radius_sq <= 0) return EmptyWall{};
  return SemicircleWall{-x, radius_sq};
}

std::vector<DestabilizerCandidate> enumerate_destabilizers(int n, int d, const Rational& b) {
  require_positive(n, "n");
  require_positive(d, "d");
  if (b >= 0 || b * b > Rational(d) / n) {
    throw DomainError("enumerate_destabilizers needs -sqrt(d/n) <= b < 0, got b = " + to_string(b));
  }
  std::vector<DestabilizerCandidate> out;
  const std::int64_t k_max = to_int64(Rational(-ceil_of(b)));
  const Integer nn(n), dd(d);
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const Integer kk(static_cast<long>(k));
    for (int d1 = 1;; ++d1) {
      // 2 d1 < 2d - k^2 n
      if (2 * Integer(d1) >= 2 * dd - kk * kk * nn) break;
      // 2 d1 < 2d + k^2 n - 2k sqrt(2nd)  <=>  L > 0 and L^2 > 8 n d k^2
      const Integer L = 2 * dd + kk * kk * nn - 2 * Integer(d1);
      if (L <= 0 || L * L <= 8 * nn * dd * kk * kk) break;
      out.push_back({static_cast<int>(k), d1, ideal_wall_circle(n, d, static_cast<int>(k), d1)});
    }
  }
  return out;
}

std::optional<int> rank_bound_check(int n, int d, const WallLocus& wall) {
  require_positive(n, "n");
  require_positive(d, "d");
  const auto* circle = std::get_if<SemicircleWall>(&wall);
  if (!circle) return std::nullopt;
  const Rational& c = circle->center_b;
  const Rational& r2 = circle->radius_sq;
  // Right end c + r beyond b_d = -sqrt(d/n), left end c - r below 0.
  const bool reaches_bd = sign_surd2(c, 1, r2, 1, Rational(d) / n) > 0;
  const bool left_of_zero = sign_surd(c, -1, r2) < 0;
  if (reaches_bd && left_of_zero) return 1;
  return std::nullopt;
}

std::optional<int> rank_bound_check_torsion(int n, int d, int m, const Rational& b) {
  require_positive(n, "n");
  require_positive(d, "d");
  require_positive(m, "m");
  const Rational edge = Rational(-d) / (Rational(n) * m);
  if (b >= edge) return 0;
  if (b >= edge - Rational(m) / 4) return 1;
  return std::nullopt;
}

int genus_decomposition(int g1, int g2, int k, int d1) { return g1 + g2 + k * d1 - 1; }

ExtremalWallReport extremal_wall_analysis(int n, int d) {
  require_positive(n, "n");
  require_positive(d, "d");
  const auto p3 = ThreefoldProfile::general(1, 4);
  const Rational nn(n);
  const Rational dn = Rational(d) / nn;
  ExtremalWallReport rep{n, d, {p3, 0, nn, -Rational(d) - nn * nn / 2, 0}, 0, 0, false, 0, 0, {}, false, 0, false};
  rep.center_b = -dn - nn / 2;
  rep.radius_sq = nn * nn / 4;
  rep.x = -dn;
  rep.y = dn * dn / 2;
  rep.wall_matches =
      numerical_wall(rep.torsion_class, {p3, 1, rep.x, rep.y, 0}) == WallLocus{SemicircleWall{rep.center_b, rep.radius_sq}};

  // (iv): -n/2 < x + d/n < n/2.
  const Integer lo = floor_of(-nn / 2 - dn) + 1;
  const Integer hi = ceil_of(nn / 2 - dn) - 1;
  for (Integer x = lo; x <= hi; ++x) {
    const Rational xr(x);
    // (i) solved for y.
    const Rational y = -((dn + nn / 2) * xr + dn * dn / 2 + Rational(d) / 2);
    const bool delta_a = xr * xr - 2 * y >= 0;
    const bool delta_b = (nn - xr) * (nn - xr) - 2 * (Rational(d) + nn * nn / 2 + y) >= 0;
    if (delta_a && delta_b) rep.integer_solutions.push_back(x);
  }
  rep.divisible = d % n == 0;
  rep.extremal_genus = Rational(d) * d / (2 * nn) + Rational(n - 4) / 2 * d + 1;
  rep.genus_integral = is_integer(rep.extremal_genus);
  return rep;
}

std::string render_walls_svg(int n, int d, const Rational& b, const std::vector<DestabilizerCandidate>& candidates) {
  const double width = 800, height = 420, margin = 40;
  const double bd = -std::sqrt(static_cast<double>(d) / n);
  double b_lo = std::min(bd, b.get_d()) - 0.5;
  double a_hi = 1.0;
  for (const auto& c : candidates) {
    if (const auto* s = std::get_if<SemicircleWall>(&c.wall)) {
      const double r = std::sqrt(s->radius_sq.get_d());
      b_lo = std::min(b_lo, s->center_b.get_d() - r - 0.5);
      a_hi = std::max(a_hi, r + 0.5);
    }
  }
  const double b_hi = 0.5;
  const double sx = (width - 2 * margin) / (b_hi - b_lo);
  const double sy = (height - 2 * margin) / a_hi;
  const double scale = std::min(sx, sy);
  auto X = [&](double bb) { return margin + (bb - b_lo) * scale; };
  auto Y = [&](double aa) { return height - margin - aa * scale; };

  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return std::string(buf);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  out << "<title>Candidate walls for n=" << n << ", d=" << d << ", b=" << to_string(b) << "</title>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << num(X(b_lo)) << "\" y1=\"" << num(Y(0)) << "\" x2=\"" << num(X(b_hi)) << "\" y2=\""
      << num(Y(0)) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << num(X(0)) << "\" y1=\"" << num(Y(0)) << "\" x2=\"" << num(X(0)) << "\" y2=\""
      << num(Y(a_hi)) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << num(X(bd)) << "\" y1=\"" << num(Y(0)) << "\" x2=\"" << num(X(bd)) << "\" y2=\""
      << num(Y(a_hi)) << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  out << "<line x1=\"" << num(X(b.get_d())) << "\" y1=\"" << num(Y(0)) << "\" x2=\"" << num(X(b.get_d()))
      << "\" y2=\"" << num(Y(a_hi)) << "\" stroke=\"steelblue\"/>\n";
  for (const auto& c : candidates) {
    const auto* s = std::get_if<SemicircleWall>(&c.wall);
    if (!s) continue;
    const double r = std::sqrt(s->radius_sq.get_d());
    const double cb = s->center_b.get_d();
    out << "<path d=\"M " << num(X(cb - r)) << ' ' << num(Y(0)) << " A " << num(r * scale) << ' ' << num(r * scale)
        << " 0 0 1 " << num(X(cb + r)) << ' ' << num(Y(0)) << "\" fill=\"none\" stroke=\""
        << (c.k == 1 ? "firebrick" : "darkgreen") << "\"><title>k=" << c.k << " d1=" << c.d1 << "</title></path>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace gvkit
