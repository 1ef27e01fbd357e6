#include "gvkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <unistd.h>

#include "gvkit/bcov.hpp"
#include "gvkit/bounds.hpp"
#include "gvkit/error.hpp"
#include "gvkit/series_json.hpp"
#include "gvkit/tables.hpp"
#include "gvkit/transforms.hpp"
#include "gvkit/walls.hpp"

namespace gvkit::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A usage problem found after parsing (missing input, bad window syntax).
struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_json_path(const std::string& path) { return fs::path(path).extension() == ".json"; }

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

struct Window {
  int n_min;
  int n_max;
};

Window parse_window(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument("no colon");
    std::size_t used = 0;
    const int a = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("trailing");
    const std::string rest = text.substr(colon + 1);
    const int b = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing");
    if (a > b) throw UsageFailure("q window " + text + " has n_min > n_max");
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageFailure("q window must look like n_min:n_max, got '" + text + "'");
  }
}

// Everything the subcommands read. Options whose default depends on the
// subcommand are optional and resolved by the handler.
struct Options {
  std::string in, out, report;
  std::optional<int> gmax, dmax, in_gmax, in_dmax;
  std::string qwindow;
  bool apply_castelnuovo = false;
  bool integrality = false;
  bool assume_zero_tail = false;
  std::string emit_connected;
  std::string dt0;
  int euler = -200;
  std::string kind = "gv";
  int n = 5;
  int i = 0;
  int dmin = 1;
  std::optional<int> rmax, parts, mmax;
  std::optional<int> d, k, d1, g, dg;
  std::string b;
  std::string frame, known, mirror, gw, n0 = "0";
  std::string emit_svg;
  std::string gv, pt;
};

// Output files are staged and written only once the command has finished.
struct Context {
  std::ostream& out;
  std::vector<std::pair<std::string, std::string>> files;
  int code = exit_ok;

  // To a file when a path is given, otherwise straight to stdout.
  void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
      out << content;
    } else {
      files.emplace_back(path, content);
    }
  }
  void emit_json(const std::string& path, const json& j) { emit(path, j.dump(2) + "\n"); }
};

template <typename T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageFailure(std::string("missing required option ") + flag);
  return *v;
}

void need(const std::string& v, const char* flag) {
  if (v.empty()) throw UsageFailure(std::string("missing required option ") + flag);
}

int positive(int v, const char* flag) {
  if (v < 1) throw UsageFailure(std::string(flag) + " must be positive");
  return v;
}

GvTable load_gv(const std::string& path, const Options& o) {
  if (is_json_path(path)) return gv_from_json(read_json(path));
  return gv_from_csv(read_file(path), o.in_gmax.value_or(-1), o.in_dmax.value_or(-1));
}

GwTable load_gw(const std::string& path, const Options& o) {
  if (is_json_path(path)) return gw_from_json(read_json(path));
  return gw_from_csv(read_file(path), o.in_gmax.value_or(-1), o.in_dmax.value_or(-1));
}

PtTable load_pt(const std::string& path, PtTable::Kind kind, const Options& o) {
  if (is_json_path(path)) return pt_from_json(read_json(path));
  need(o.qwindow, "--qwindow");
  const Window w = parse_window(o.qwindow);
  const int d_max = positive(need(o.in_dmax ? o.in_dmax : o.dmax, "--in-dmax"), "--in-dmax");
  return pt_from_csv(read_file(path), kind, d_max, w.n_min, w.n_max);
}

template <typename Table>
std::string render(const Table& t, const std::string& path) {
  return is_json_path(path) ? to_json(t).dump(2) + "\n" : to_csv(t);
}

json entries_json(const std::vector<TableEntry>& list, const char* index_name) {
  return entries_to_json(list, index_name);
}

// Reports go to --report when given; otherwise to stdout unless the table already went there.
void emit_report(Context& ctx, const Options& o, const json& report) {
  if (!o.report.empty()) {
    ctx.emit_json(o.report, report);
  } else if (!o.out.empty()) {
    ctx.out << report.dump(2) << "\n";
  }
}

// ---------------------------------------------------------------- transform

void run_gv2gw(Context& ctx, const Options& o) {
  need(o.in, "--in");
  GvTable gv = load_gv(o.in, o);
  VanishingReport vr;
  if (o.apply_castelnuovo) gv = apply_castelnuovo_vanishing(gv, &vr);
  const GwTable gw = gv_to_gw(gv, o.gmax.value_or(gv.g_max()), o.dmax.value_or(gv.d_max()));
  ctx.emit(o.out, render(gw, o.out));
  emit_report(ctx, o, {{"command", "transform gv2gw"}, {"zeroed", entries_json(vr.zeroed, "g")}, {"ok", true}});
}

void run_gw2gv(Context& ctx, const Options& o) {
  need(o.in, "--in");
  const GwTable gw = load_gw(o.in, o);
  GvTable gv = gw_to_gv(gw, o.gmax.value_or(gw.g_max()), o.dmax.value_or(gw.d_max()));
  VanishingReport vr;
  if (o.apply_castelnuovo) gv = apply_castelnuovo_vanishing(gv, &vr);
  std::vector<TableEntry> bad;
  if (o.integrality) bad = integrality_check(gv);
  if (!bad.empty()) ctx.code = exit_validation;
  ctx.emit(o.out, render(gv, o.out));
  json report{{"command", "transform gw2gv"}, {"zeroed", entries_json(vr.zeroed, "g")}, {"ok", bad.empty()}};
  if (o.integrality) report["non_integral"] = entries_json(bad, "g");
  emit_report(ctx, o, report);
}

void run_gv2pt(Context& ctx, const Options& o) {
  need(o.in, "--in");
  need(o.qwindow, "--qwindow");
  const int d_out = positive(need(o.dmax, "--dmax"), "--dmax");
  const Window w = parse_window(o.qwindow);
  GvTable gv = load_gv(o.in, o);
  VanishingReport gv_zeroed;
  if (o.apply_castelnuovo) gv = apply_castelnuovo_vanishing(gv, &gv_zeroed);
  const auto tail = o.assume_zero_tail ? GenusTail::assume_zero : GenusTail::require_complete;
  const BivariateSeries F = gv_to_pt_connected(gv, d_out, w.n_min, w.n_max, tail);
  const auto violations = connected_vanishing_check(F);
  PtTable pt = pt_connected_to_table(F, w.n_min);
  VanishingReport pt_zeroed;
  if (o.apply_castelnuovo) pt = apply_castelnuovo_vanishing(pt, &pt_zeroed);
  if (!violations.empty()) ctx.code = exit_validation;
  ctx.emit(o.out, render(pt, o.out));
  if (!o.emit_connected.empty()) ctx.emit_json(o.emit_connected, bivariate_to_json(F));
  emit_report(ctx, o,
              {{"command", "transform gv2pt"},
               {"gv_zeroed", entries_json(gv_zeroed.zeroed, "g")},
               {"pt_zeroed", entries_json(pt_zeroed.zeroed, "n")},
               {"connected_violations", entries_json(violations, "n")},
               {"ok", violations.empty()}});
}

void run_pt2dt(Context& ctx, const Options& o) {
  need(o.in, "--in");
  const PtTable pt = load_pt(o.in, PtTable::Kind::pt, o);
  LaurentSeries dt0 = LaurentSeries::zero(Variable::q, 0);
  if (!o.dt0.empty()) {
    dt0 = series_from_json(read_json(o.dt0));
  } else {
    const auto w = pt.q_window();
    dt0 = degree_zero_dt(o.euler, std::max(0, w.n_max - w.n_min));
  }
  const PtTable dt = pt_to_dt(pt, dt0);
  ctx.emit(o.out, render(dt, o.out));
  emit_report(ctx, o, {{"command", "transform pt2dt"}, {"dt0", series_to_json(dt0)}, {"ok", true}});
}

void run_castelnuovo(Context& ctx, const Options& o) {
  need(o.in, "--in");
  VanishingReport vr;
  const char* index = "g";
  if (o.kind == "gv") {
    const GvTable gv = apply_castelnuovo_vanishing(load_gv(o.in, o), &vr);
    ctx.emit(o.out, render(gv, o.out));
  } else if (o.kind == "pt" || o.kind == "dt") {
    const auto kind = o.kind == "pt" ? PtTable::Kind::pt : PtTable::Kind::dt;
    const PtTable pt = apply_castelnuovo_vanishing(load_pt(o.in, kind, o), &vr);
    ctx.emit(o.out, render(pt, o.out));
    index = "n";
  } else {
    throw UsageFailure("--kind must be gv, pt or dt");
  }
  emit_report(ctx, o, {{"command", "transform castelnuovo"}, {"zeroed", entries_json(vr.zeroed, index)}, {"ok", true}});
}

// ---------------------------------------------------------------- bounds

void run_bounds_table(Context& ctx, const Options& o) {
  const int d_max = positive(o.dmax.value_or(25), "--dmax");
  if (o.dmin < 1 || o.dmin > d_max) throw UsageFailure("--dmin must lie in 1..dmax");
  const auto profile = ThreefoldProfile::general(o.n, o.i);
  std::string csv = "d,B(d),hyp_bound,nonhyp_bound,floor_B,floor_hyp,floor_nonhyp,general_bound,floor_general\n";
  for (int d = o.dmin; d <= d_max; ++d) {
    const Rational B = bps_threshold(d);
    const auto hyp = genus_bound_hypersurface(o.n, d);
    const auto non = genus_bound_nonhyperplane(o.n, d);
    const auto gen = genus_bound_general(profile, d);
    csv += std::to_string(d) + "," + to_string(B) + "," + to_string(hyp.bound) + "," + to_string(non.bound) + "," +
           floor_of(B).get_str() + "," + hyp.bound_floor.get_str() + "," + non.bound_floor.get_str() + "," +
           to_string(gen.bound) + "," + gen.bound_floor.get_str() + "\n";
  }
  ctx.emit(o.out, csv);
}

void run_bounds_corollary(Context& ctx, const Options& o) {
  const auto r = castelnuovo_corollary_check(o.gmax.value_or(53));
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"g", x.g}, {"d", x.d}, {"threshold", to_string(x.threshold)}});
  if (!r.passed) ctx.code = exit_validation;
  ctx.emit_json(o.out, {{"g_max", r.g_max},
                        {"passed", r.passed},
                        {"boundary_equality_at_51_20", r.boundary_equality_at_51_20},
                        {"violations", std::move(v)}});
}

void run_bounds_properties(Context& ctx, const Options& o) {
  // Partitions and covers have separate ranges.
  const auto parts = bound_function_properties(o.dmax.value_or(30), 0, o.parts.value_or(4));
  const auto covers = bound_function_properties(o.rmax.value_or(100), o.rmax.value_or(100), 0);
  json failures = json::array();
  for (const auto* r : {&parts, &covers}) {
    for (const auto& f : r->failures) failures.push_back({{"property", std::string(f.property)}, {"data", f.parts}});
  }
  const bool ok = failures.empty();
  if (!ok) ctx.code = exit_validation;
  ctx.emit_json(o.out, {{"partitions_checked", parts.partitions_checked},
                        {"covers_checked", covers.covers_checked},
                        {"passed", ok},
                        {"failures", std::move(failures)}});
}

void run_bounds_extremal(Context& ctx, const Options& o) {
  const int m_max = positive(o.mmax.value_or(12), "--mmax");
  json rows = json::array();
  for (int m = 1; m <= m_max; ++m) {
    json row{{"m", m}, {"d", 5 * m}, {"g", to_string(bps_threshold(5 * m))}, {"gv", extremal_gv(m)}};
    if (m >= 2) {
      const auto e = extremal_moduli_euler(m);
      row["moduli_euler"] = e.euler;
      row["moduli_dim"] = e.dim;
    }
    rows.push_back(std::move(row));
  }
  ctx.emit_json(o.out, rows);
}

// ---------------------------------------------------------------- walls

json locus_json(const WallLocus& w) {
  json j{{"locus", describe(w)}};
  if (const auto* s = std::get_if<SemicircleWall>(&w)) {
    j["center_b"] = to_string(s->center_b);
    j["radius_sq"] = to_string(s->radius_sq);
  }
  return j;
}

void run_walls_candidates(Context& ctx, const Options& o) {
  need(o.b, "--b");
  const int d = positive(need(o.d, "--d"), "--d");
  const Rational b = parse_rational(o.b);
  const auto candidates = enumerate_destabilizers(o.n, d, b);
  std::string csv = "k,d1,center_b,radius_sq\n";
  for (const auto& c : candidates) {
    std::string center, radius;
    if (const auto* s = std::get_if<SemicircleWall>(&c.wall)) {
      center = to_string(s->center_b);
      radius = to_string(s->radius_sq);
    }
    csv += std::to_string(c.k) + "," + std::to_string(c.d1) + "," + center + "," + radius + "\n";
  }
  ctx.emit(o.out, csv);
  if (!o.emit_svg.empty()) ctx.emit(o.emit_svg, render_walls_svg(o.n, d, b, candidates));
}

void run_walls_circle(Context& ctx, const Options& o) {
  const int d = positive(need(o.d, "--d"), "--d");
  const int k = need(o.k, "--k");
  const int d1 = need(o.d1, "--d1");
  const WallLocus w = ideal_wall_circle(o.n, d, k, d1);
  json j = locus_json(w);
  j["n"] = o.n;
  j["d"] = d;
  j["k"] = k;
  j["d1"] = d1;
  j["candidate"] = true;
  const auto rank = rank_bound_check(o.n, d, w);
  j["rank_bound"] = rank ? json(*rank) : json(nullptr);
  ctx.emit_json(o.out, j);
}

void run_walls_extremal(Context& ctx, const Options& o) {
  const int d = positive(need(o.d, "--d"), "--d");
  const auto r = extremal_wall_analysis(o.n, d);
  json sols = json::array();
  for (const auto& z : r.integer_solutions) sols.push_back(z.get_str());
  ctx.emit_json(o.out, {{"n", r.n},
                        {"d", r.d},
                        {"torsion_class",
                         {to_string(r.torsion_class.c0), to_string(r.torsion_class.c1), to_string(r.torsion_class.c2),
                          to_string(r.torsion_class.c3)}},
                        {"center_b", to_string(r.center_b)},
                        {"radius_sq", to_string(r.radius_sq)},
                        {"wall_matches", r.wall_matches},
                        {"x", to_string(r.x)},
                        {"y", to_string(r.y)},
                        {"integer_solutions", std::move(sols)},
                        {"divisible", r.divisible},
                        {"extremal_genus", to_string(r.extremal_genus)},
                        {"genus_integral", r.genus_integral}});
}

// ---------------------------------------------------------------- bcov

void run_bcov_plan(Context& ctx, const Options& o) {
  ctx.emit_json(o.out, plan_to_json(resolution_plan(need(o.g, "--g"))));
}

void run_bcov_gap(Context& ctx, const Options& o) {
  const int g = need(o.g, "--g");
  const ConifoldFrame frame = o.frame.empty() ? ConifoldFrame::toy(2 * g) : frame_from_json(read_json(o.frame));
  const LaurentSeries known =
      o.known.empty() ? LaurentSeries::zero(Variable::Delta, 0) : series_from_json(read_json(o.known));
  const auto values = gap_solve(g, known, frame);
  json vals = json::array();
  for (std::size_t j = 0; j < values.size(); ++j) {
    vals.push_back({{"i", g + static_cast<int>(j)}, {"value", to_string(values[j])}});
  }
  ctx.emit_json(o.out,
                {{"g", g}, {"physical_frame", frame.physical}, {"target", to_string(gap_target(g))}, {"values", vals}});
}

void run_bcov_castelnuovo(Context& ctx, const Options& o) {
  const int g = need(o.g, "--g");
  const int Dg = o.dg.value_or(max_vanishing_degree(g));
  std::vector<Rational> gw{parse_rational(o.n0)};
  if (Dg >= 1) {
    need(o.gw, "--gw");
    const GwTable table = load_gw(o.gw, o);
    for (int d = 1; d <= Dg; ++d) gw.push_back(table.get(g, d));
  }
  const LaurentSeries known =
      o.known.empty() ? LaurentSeries::zero(Variable::q, Dg) : series_from_json(read_json(o.known));
  std::optional<LaurentSeries> mirror;
  if (!o.mirror.empty()) mirror = series_from_json(read_json(o.mirror));
  const auto sol = castelnuovo_solve(g, known, Dg, gw, mirror);
  json vals = json::array();
  for (std::size_t k = 0; k < sol.values.size(); ++k) {
    vals.push_back({{"i", g - 1 - static_cast<int>(k)}, {"value", to_string(sol.values[k])}});
  }
  if (!sol.resolved) ctx.code = exit_validation;
  ctx.emit_json(o.out, {{"g", g},
                        {"K", sol.K},
                        {"E", sol.E},
                        {"Dg", Dg},
                        {"resolved", sol.resolved},
                        {"missing", sol.missing},
                        {"values", vals},
                        {"regularity_consistent", sol.regularity_consistent}});
}

// ---------------------------------------------------------------- validate

void run_validate(Context& ctx, const Options& o) {
  if (o.gv.empty() == o.pt.empty()) throw UsageFailure("validate needs exactly one of --gv, --pt");
  json report;
  bool ok = true;
  if (!o.gv.empty()) {
    const GvTable gv = load_gv(o.gv, o);
    const auto bad = integrality_check(gv);
    VanishingReport vr;
    apply_castelnuovo_vanishing(gv, &vr);
    ok = bad.empty() && vr.zeroed.empty();
    report = {{"table", "gv"},
              {"non_integral", entries_json(bad, "g")},
              {"castelnuovo_violations", entries_json(vr.zeroed, "g")}};
  } else {
    const auto kind = o.kind == "dt" ? PtTable::Kind::dt : PtTable::Kind::pt;
    const PtTable pt = load_pt(o.pt, kind, o);
    VanishingReport vr;
    apply_castelnuovo_vanishing(pt, &vr);
    ok = vr.zeroed.empty();
    report = {{"table", o.kind == "dt" ? "dt" : "pt"}, {"castelnuovo_violations", entries_json(vr.zeroed, "n")}};
  }
  report["ok"] = ok;
  if (!ok) ctx.code = exit_validation;
  ctx.emit_json(o.out, report);
}

// ---------------------------------------------------------------- wiring

struct Leaf {
  CLI::App* app;
  std::function<void(Context&, const Options&)> handler;
};

void add_io(CLI::App* a, Options& o) {
  a->add_option("--in", o.in, "input table (.csv or .json)");
  a->add_option("--out", o.out, "output file; stdout when absent");
  a->add_option("--report", o.report, "validation report (JSON)");
  a->add_option("--in-gmax", o.in_gmax, "declared genus window of a CSV input");
  a->add_option("--in-dmax", o.in_dmax, "declared degree window of a CSV input");
}

}  // namespace

void write_file_atomic(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoFailure("cannot write " + tmp.string());
    f << content;
    f.flush();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoFailure("cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoFailure("cannot rename onto " + path.string());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gopakumar-Vafa / PT / tilt-wall / BCOV toolkit"};
  app.name("gvkit");
  app.require_subcommand(1);
  std::string config;
  app.add_option("--config", config, "key = value file; command-line flags win");

  Options o;
  std::vector<Leaf> leaves;
  auto leaf = [&](CLI::App* parent, const char* name, const char* help, auto handler) {
    CLI::App* a = parent->add_subcommand(name, help);
    a->allow_config_extras(CLI::config_extras_mode::error);
    leaves.push_back({a, handler});
    return a;
  };

  CLI::App* transform = app.add_subcommand("transform", "table transforms");
  transform->require_subcommand(1);
  {
    auto* a = leaf(transform, "gv2gw", "GV table to GW table", run_gv2gw);
    add_io(a, o);
    a->add_option("--gmax", o.gmax, "output genus window");
    a->add_option("--dmax", o.dmax, "output degree window");
    a->add_flag("--apply-castelnuovo", o.apply_castelnuovo, "zero input GV above B(d) first");
  }
  {
    auto* a = leaf(transform, "gw2gv", "GW table to GV table", run_gw2gv);
    add_io(a, o);
    a->add_option("--gmax", o.gmax, "output genus window");
    a->add_option("--dmax", o.dmax, "output degree window");
    a->add_flag("--integrality", o.integrality, "fail (exit 2) on non-integral GV output");
    a->add_flag("--apply-castelnuovo", o.apply_castelnuovo, "zero output GV above B(d)");
  }
  {
    auto* a = leaf(transform, "gv2pt", "GV table to PT table via the connected series", run_gv2pt);
    add_io(a, o);
    a->add_option("--dmax", o.dmax, "output curve degree");
    a->add_option("--qwindow", o.qwindow, "n_min:n_max");
    a->add_flag("--apply-castelnuovo", o.apply_castelnuovo, "zero GV above B(d) and PT below 1 - B(d)");
    a->add_flag("--assume-zero-tail", o.assume_zero_tail, "treat genera beyond the table as zero");
    a->add_option("--emit-connected", o.emit_connected, "also write the connected series (JSON)");
  }
  {
    auto* a = leaf(transform, "pt2dt", "PT table to DT table", run_pt2dt);
    add_io(a, o);
    a->add_option("--qwindow", o.qwindow, "n_min:n_max of a CSV input");
    a->add_option("--dt0", o.dt0, "degree-zero DT series (JSON); default M(-q)^euler");
    a->add_option("--euler", o.euler, "topological Euler characteristic for the default DT_0");
  }
  {
    auto* a = leaf(transform, "castelnuovo", "apply Castelnuovo vanishing to a table", run_castelnuovo);
    add_io(a, o);
    a->add_option("--kind", o.kind, "gv, pt or dt");
    a->add_option("--qwindow", o.qwindow, "n_min:n_max of a CSV PT input");
  }

  CLI::App* bounds = app.add_subcommand("bounds", "genus bounds");
  bounds->require_subcommand(1);
  {
    auto* a = leaf(bounds, "table", "bound table as CSV", run_bounds_table);
    a->add_option("--n", o.n, "degree of the 3-fold (hypersurface columns need 1..5)");
    a->add_option("--i", o.i, "index of the 3-fold");
    a->add_option("--dmin", o.dmin, "first curve degree");
    a->add_option("--dmax", o.dmax, "last curve degree (default 25)");
    a->add_option("--out", o.out, "output file; stdout when absent");
  }
  {
    auto* a = leaf(bounds, "corollary", "check g > B(d) below the Castelnuovo range", run_bounds_corollary);
    a->add_option("--gmax", o.gmax, "largest genus (default 53)");
    a->add_option("--out", o.out, "output file; stdout when absent");
  }
  {
    auto* a = leaf(bounds, "properties", "superadditivity and cover inequalities of B", run_bounds_properties);
    a->add_option("--dmax", o.dmax, "partition sum bound (default 30)");
    a->add_option("--parts", o.parts, "maximal number of parts (default 4)");
    a->add_option("--rmax", o.rmax, "cover degree bound (default 100)");
    a->add_option("--out", o.out, "output file; stdout when absent");
  }
  {
    auto* a = leaf(bounds, "extremal", "extremal GV values n^{5m}_{B(5m)}", run_bounds_extremal);
    a->add_option("--mmax", o.mmax, "largest m (default 12)");
    a->add_option("--out", o.out, "output file; stdout when absent");
  }

  CLI::App* walls = app.add_subcommand("walls", "numerical tilt walls (candidates only)");
  walls->require_subcommand(1);
  {
    auto* a = leaf(walls, "candidates", "destabilizer candidates as CSV", run_walls_candidates);
    a->add_option("--n", o.n, "degree of the 3-fold");
    a->add_option("--d", o.d, "curve degree");
    a->add_option("--b", o.b, "tilt parameter b (exact rational)");
    a->add_option("--out", o.out, "output file; stdout when absent");
    a->add_option("--emit-svg", o.emit_svg, "SVG rendering of the semicircles");
  }
  {
    auto* a = leaf(walls, "circle", "wall of I_C against I_C1(-kH)", run_walls_circle);
    a->add_option("--n", o.n, "degree of the 3-fold");
    a->add_option("--d", o.d, "curve degree");
    a->add_option("--k", o.k, "twist");
    a->add_option("--d1", o.d1, "degree of C1");
    a->add_option("--out", o.out, "output file; stdout when absent");
  }
  {
    auto* a = leaf(walls, "extremal", "tangent wall and extremal curve constraints", run_walls_extremal);
    a->add_option("--n", o.n, "degree of the surface");
    a->add_option("--d", o.d, "curve degree");
    a->add_option("--out", o.out, "output file; stdout when absent");
  }

  CLI::App* bcov = app.add_subcommand("bcov", "holomorphic ambiguity solves");
  bcov->require_subcommand(1);
  {
    auto* a = leaf(bcov, "plan", "which conditions fix which coefficients", run_bcov_plan);
    a->add_option("--g", o.g, "genus");
    a->add_option("--out", o.out, "output file; stdout when absent");
  }
  {
    auto* a = leaf(bcov, "gap", "conifold gap solve", run_bcov_gap);
    a->add_option("--g", o.g, "genus");
    a->add_option("--frame", o.frame, "conifold frame (JSON); default toy frame, non-physical");
    a->add_option("--known", o.known, "known terms, a Delta series (JSON)");
    a->add_option("--out", o.out, "output file; stdout when absent");
  }
  {
    auto* a = leaf(bcov, "castelnuovo", "low-degree GW solve", run_bcov_castelnuovo);
    a->add_option("--g", o.g, "genus");
    a->add_option("--gw", o.gw, "GW table supplying N_{g,d}, d <= Dg");
    a->add_option("--in-gmax", o.in_gmax, "declared genus window of a CSV GW table");
    a->add_option("--in-dmax", o.in_dmax, "declared degree window of a CSV GW table");
    a->add_option("--n0", o.n0, "degree-zero invariant N_{g,0}");
    a->add_option("--dg", o.dg, "vanishing degree (default D(g))");
    a->add_option("--known", o.known, "known terms, a q series (JSON)");
    a->add_option("--mirror", o.mirror, "mirror map q + O(q^2) (JSON); default identity");
    a->add_option("--out", o.out, "output file; stdout when absent");
  }

  {
    auto* a = leaf(&app, "validate", "integrality and Castelnuovo vanishing of a table", run_validate);
    a->add_option("--gv", o.gv, "GV table");
    a->add_option("--pt", o.pt, "PT or DT table");
    a->add_option("--kind", o.kind, "pt or dt for --pt");
    a->add_option("--qwindow", o.qwindow, "n_min:n_max of a CSV PT input");
    a->add_option("--in-gmax", o.in_gmax, "declared genus window of a CSV GV table");
    a->add_option("--in-dmax", o.in_dmax, "declared degree window of a CSV input");
    a->add_option("--out", o.out, "output file; stdout when absent");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    const auto it = std::find_if(leaves.begin(), leaves.end(), [](const Leaf& l) { return l.app->parsed(); });
    if (it == leaves.end()) throw UsageFailure("no command given");
    if (!config.empty()) {
      std::istringstream in(read_file(config));
      it->app->parse_from_stream(in);
    }
    Context ctx{out, {}, exit_ok};
    it->handler(ctx, o);
    for (const auto& [path, content] : ctx.files) write_file_atomic(path, content);
    return ctx.code;
  } catch (const CLI::Error& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const UsageFailure& e) {
    err << "usage: " << e.what() << "\n";
    return exit_usage;
  } catch (const IoFailure& e) {
    err << "io: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace gvkit::cli
