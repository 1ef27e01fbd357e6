#pragma once

#include <vector>

#include "gvkit/bivariate.hpp"
#include "gvkit/tables.hpp"

namespace gvkit {

// N_{g,d} = sum_{g', r d' = d} (n_{g'}^{d'} / r) [lambda^{2g-2}] (2 sin(r lambda / 2))^{2g'-2}.
// Needs g_out <= gv.g_max() and d_out <= gv.d_max(); throws WindowError otherwise.
GwTable gv_to_gw(const GvTable& gv, int g_out, int d_out);

// Triangular inverse of gv_to_gw, degree by degree and genus by genus.
GvTable gw_to_gv(const GwTable& gw, int g_out, int d_out);

// Every non-integral entry.
std::vector<TableEntry> integrality_check(const GvTable& gv);

// How to treat GV entries of genus above the table's g_max when building the
// connected PT series, where every genus contributes to every degree.
enum class GenusTail {
  // The table must be castelnuovo-valid with g_max >= floor(B(d_out)), so
  // the missing genera are known to vanish.
  require_complete,
  // Treat them as zero (useful for synthetic single-entry tables).
  assume_zero,
};

// Connected PT series F_P = log PT(q, t) up to t^{d_out}, each block known up
// to q^{n_max}:
//   [t^d] F_P = sum_{g, r d' = d} n_g^{d'} ((-1)^{g-1} / r) ((-q)^r / (1 - (-q)^r)^2)^{1-g}.
// Throws WindowError if a contributing term starts below q^{n_min}.
BivariateSeries gv_to_pt_connected(const GvTable& gv, int d_out, int n_min, int n_max,
                                   GenusTail tail = GenusTail::require_complete);

// PT = exp(F). Entries below n_min must vanish (WindowError otherwise).
PtTable pt_connected_to_table(const BivariateSeries& f, int n_min);

// F = log(PT), the PT series having constant block 1.
BivariateSeries pt_table_to_connected(const PtTable& pt);

// I_{n,d} = sum_{m >= 0} P_{n-m,d} I_{m,0}. dt0 must be a q-series with
// constant term 1 and no negative powers. The convolution reaches below each
// degree's window, where P is taken to vanish; that holds for tables built by
// pt_connected_to_table and for castelnuovo-valid tables with
// n_min <= 1 - B(d).
PtTable pt_to_dt(const PtTable& pt, const LaurentSeries& dt0);

// Degree-zero DT series M(-q)^euler with M(q) = prod_k (1 - q^k)^{-k} the
// MacMahon function, known up to q^trunc.
LaurentSeries degree_zero_dt(int euler, int trunc);

struct VanishingReport {
  // Entries that were nonzero before being zeroed.
  std::vector<TableEntry> zeroed;
};

// Quintic Castelnuovo vanishing: zero every n_g^d with g > B(d).
GvTable apply_castelnuovo_vanishing(const GvTable& gv, VanishingReport* report = nullptr);
// Zero every P_{n,d} with n < 1 - B(d).
PtTable apply_castelnuovo_vanishing(const PtTable& pt, VanishingReport* report = nullptr);

// Nonzero coefficients q^m t^d of a connected series with m < 1 - B(d).
std::vector<TableEntry> connected_vanishing_check(const BivariateSeries& f);

}  // namespace gvkit
