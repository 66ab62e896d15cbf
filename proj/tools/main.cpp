// arakelov: heights, local energies, equilibrium measures, Fekete points and
// splitting bounds from the command line.
//
// Exit codes: 0 ok, 1 verify failure, 2 usage/parse/domain error,
// 3 numeric failure, 4 optimizer budget exhausted.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arakelov/bounds.hpp"
#include "arakelov/equilibrium.hpp"
#include "arakelov/errors.hpp"
#include "arakelov/fekete.hpp"
#include "arakelov/heights.hpp"
#include "arakelov/json_io.hpp"
#include "arakelov/padic.hpp"
#include "arakelov/verify.hpp"

using namespace arakelov;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumeric = 3, kBudget = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  std::string format = "text";
  int digits = 10;
  bool bits = false;
  std::uint64_t seed = 0;
  std::string output;
  int threads = 0;
  std::optional<double> tol;

  OutputStyle style() const { return {digits, bits}; }
  std::string num(double x) const { return fixed(x, digits); }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

double parse_real(const std::string& text, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw ParseError(std::string("bad ") + what + " '" + text + "'");
  return v;
}

ProjectivePoint parse_projective(const std::string& text) {
  if (text == "inf" || text == "infinity") return ProjectivePoint::infinity();
  return ProjectivePoint::finite(parse_real(text, "point"));
}

// ---- height ---------------------------------------------------------------

struct HeightArgs {
  std::string poly, point;
};

int cmd_height(const Global& g, const HeightArgs& a, std::string& out) {
  if (a.poly.empty() == a.point.empty()) throw UsageError("height needs exactly one of --poly or --point");
  NormalizationNotes notes;
  AlgebraicPoint point = AlgebraicPoint::infinity();
  if (!a.poly.empty()) {
    ParsedPolynomial parsed = parse_polynomial(a.poly);
    notes = parsed.notes;
    point = AlgebraicPoint(std::move(parsed.poly));
  } else {
    point = AlgebraicPoint::parse(a.point);
  }
  const double tol = g.tol.value_or(kDefaultRootTolerance);
  const HeightReport r = height_report(point, tol);
  const OutputStyle st = g.style();

  if (g.format == "json") {
    Json j = to_json(r, st);
    j["tolerance"] = tol;
    if (!point.is_infinity()) j["polynomial"] = polynomial_json(point.polynomial());
    j["normalization"] = notes.messages();
    out = dump(j);
  } else if (g.format == "csv") {
    out = "quantity,value,method,error_bound\n";
    out += "h_arakelov," + g.num(st.log_value(r.h_arakelov)) + ",numeric-roots," + sci(st.log_value(r.error_bound)) + "\n";
    out += "h_weil," + g.num(st.log_value(r.h_weil)) + ",numeric-roots,\n";
    for (const auto& e : r.locals) {
      out += "D_" + e.place.label() + "," + g.num(st.log_value(e.value)) + "," + method_name(e.method) + "," +
             sci(st.log_value(e.error_bound)) + "\n";
    }
    if (r.crosscheck_residual) out += "crosscheck_residual," + sci(st.log_value(*r.crosscheck_residual)) + ",,\n";
  } else {
    std::ostringstream s;
    if (!point.is_infinity()) s << "polynomial          " << point.polynomial().to_string() << "\n";
    for (const auto& m : notes.messages()) s << "note                " << m << "\n";
    s << "h_arakelov          " << g.num(st.log_value(r.h_arakelov)) << "  (+- " << sci(st.log_value(r.error_bound))
      << ")\n";
    s << "h_weil              " << g.num(st.log_value(r.h_weil)) << "\n";
    for (const auto& e : r.locals) {
      s << "D_" << e.place.label() << std::string(e.place.label().size() < 17 ? 18 - e.place.label().size() : 1, ' ')
        << g.num(st.log_value(e.value)) << "  " << method_name(e.method) << "\n";
    }
    s << "crosscheck_residual " << (r.crosscheck_residual ? sci(st.log_value(*r.crosscheck_residual)) : "n/a")
      << "\n";
    s << "units               " << (g.bits ? "bits" : "nats") << "\n";
    for (const auto& f : r.flags) s << "flag                " << f << "\n";
    out = s.str();
  }
  return kOk;
}

// ---- local ----------------------------------------------------------------

struct LocalArgs {
  std::string poly;
  std::string place = "inf";
  bool newton = false;
  bool root_count = false;
  int precision = kDefaultPadicPrecision;
};

int cmd_local(const Global& g, const LocalArgs& a, std::string& out) {
  const PrimitivePolynomial f = parse_polynomial(a.poly).poly;
  const OutputStyle st = g.style();
  LocalEnergy e;
  std::optional<std::int64_t> prime;
  if (a.place == "inf" || a.place == "infinity") {
    e = arch_energy_sum(f, g.tol.value_or(kDefaultRootTolerance));
  } else {
    BigInt p;
    if (p.set_str(a.place, 10) != 0) throw ParseError("bad place '" + a.place + "'");
    e = nonarch_energy_sum(f, p);
    if (p.fits_slong_p()) prime = p.get_si();
  }
  if ((a.newton || a.root_count) && !prime) throw UsageError("--newton and --root-count need a finite place");

  Json j = to_json(e, st);
  if (a.newton) j["newton_polygon"] = to_json(newton_polygon(f, *prime));
  if (a.root_count) j["root_count"] = to_json(p_adic_root_count(f, *prime, a.precision));

  if (g.format == "json") {
    out = dump(j);
  } else if (g.format == "csv") {
    out = "place,value,method,error_bound\n" + e.place.label() + "," + g.num(st.log_value(e.value)) + "," +
          method_name(e.method) + "," + sci(st.log_value(e.error_bound)) + "\n";
  } else {
    std::ostringstream s;
    s << "D_" << e.place.label() << " = " << g.num(st.log_value(e.value)) << "  (" << method_name(e.method)
      << ", error bound " << sci(st.log_value(e.error_bound)) << ")\n";
    if (a.newton) {
      for (const auto& seg : j["newton_polygon"]["segments"]) {
        s << "valuation " << seg["valuation"].get<std::string>() << " x " << seg["multiplicity"].get<int>() << "\n";
      }
    }
    if (a.root_count) {
      s << "roots in Q_" << *prime << ": " << j["root_count"]["count"].get<int>() << " ("
        << j["root_count"]["status"].get<std::string>() << ")\n";
    }
    out = s.str();
  }
  return kOk;
}

// ---- measure --------------------------------------------------------------

struct SetArgs {
  bool sphere = false, real_line = false;
  std::optional<double> interval;

  TargetSet resolve() const {
    const int chosen = int(sphere) + int(real_line) + int(interval.has_value());
    if (chosen != 1) throw UsageError("choose exactly one of --sphere, --real-line, --interval r");
    if (sphere) return TargetSet::sphere();
    if (real_line) return TargetSet::real_line();
    return TargetSet::interval(*interval);
  }
};

struct MeasureArgs {
  SetArgs set;
  bool energy = false, mass = false, balayage = false;
  std::string potential_at, density_at, harmonic;
  int density_grid = 0, potential_grid = 0;
};

int cmd_measure(const Global& g, const MeasureArgs& a, std::string& out) {
  const TargetSet set = a.set.resolve();
  QuadratureOptions qo;
  if (g.tol) qo.tol = *g.tol;
  const OutputStyle st = g.style();
  const bool interval = set.kind() == TargetSet::Kind::Interval;
  if ((a.balayage || !a.harmonic.empty()) && !interval) throw UsageError("--balayage and --harmonic need --interval");

  std::vector<std::pair<std::string, QuadratureResult>> scalars;
  std::optional<double> density_value;
  if (a.energy) scalars.emplace_back("energy", energy(set, qo));
  if (a.mass) scalars.emplace_back("mass", mass(set, qo));
  if (!a.potential_at.empty()) scalars.emplace_back("potential", potential(set, parse_projective(a.potential_at), qo));
  if (a.balayage) scalars.emplace_back("balayage_energy", energy_via_balayage(set.radius(), qo));
  if (!a.harmonic.empty()) {
    const auto comma = a.harmonic.find(',');
    if (comma == std::string::npos) throw ParseError("--harmonic expects a,b");
    scalars.emplace_back("harmonic_measure",
                         harmonic_measure_interval(set.radius(), parse_real(a.harmonic.substr(0, comma), "a"),
                                                   parse_real(a.harmonic.substr(comma + 1), "b"), qo));
  }
  if (!a.density_at.empty()) density_value = density(set, parse_real(a.density_at, "point"));
  std::vector<std::pair<double, double>> dgrid, pgrid;
  if (a.density_grid > 0) dgrid = density_grid(set, a.density_grid);
  if (a.potential_grid > 0) pgrid = potential_grid(set, a.potential_grid, qo);
  if (scalars.empty() && !density_value && dgrid.empty() && pgrid.empty()) {
    throw UsageError("measure needs an action: --energy, --mass, --potential-at, --density-at, --density-grid, "
                     "--potential-grid, --balayage or --harmonic");
  }

  if (g.format == "json") {
    Json j{{"set", set.name()}};
    if (interval) j["r"] = set.radius();
    j["analytic_energy"] = present(analytic_energy(set), g.digits);
    j["tolerance"] = qo.tol;
    for (const auto& [name, q] : scalars) j[name] = to_json(q, st);
    if (density_value) j["density"] = present(*density_value, g.digits);
    auto grid_json = [&](const auto& grid, const char* key) {
      Json rows = Json::array();
      for (const auto& [x, v] : grid) rows.push_back(Json{{"x", present(x, g.digits)}, {key, present(v, g.digits)}});
      return rows;
    };
    if (!dgrid.empty()) j["density_grid"] = grid_json(dgrid, "density");
    if (!pgrid.empty()) j["potential_grid"] = grid_json(pgrid, "potential");
    out = dump(j);
  } else if (g.format == "csv") {
    if (!scalars.empty() || density_value) {
      out += "quantity,value,est_error,evaluations\n";
      for (const auto& [name, q] : scalars) {
        out += name + "," + g.num(q.value) + "," + sci(q.est_error) + "," + std::to_string(q.evaluations) + "\n";
      }
      if (density_value) out += "density," + g.num(*density_value) + ",0,1\n";
    }
    if (!dgrid.empty()) {
      out += "x,density\n";
      for (const auto& [x, v] : dgrid) out += g.num(x) + "," + g.num(v) + "\n";
    }
    if (!pgrid.empty()) {
      out += "x,potential\n";
      for (const auto& [x, v] : pgrid) out += g.num(x) + "," + g.num(v) + "\n";
    }
  } else {
    std::ostringstream s;
    s << "set " << set.name();
    if (interval) s << " r = " << set.radius();
    s << ", closed-form energy " << g.num(analytic_energy(set)) << "\n";
    for (const auto& [name, q] : scalars) {
      s << name << " = " << g.num(q.value) << "  (est. error " << sci(q.est_error) << ", " << q.evaluations
        << " evaluations)\n";
    }
    if (density_value) s << "density = " << g.num(*density_value) << "\n";
    for (const auto& [x, v] : dgrid) s << "density " << g.num(x) << " " << g.num(v) << "\n";
    for (const auto& [x, v] : pgrid) s << "potential " << g.num(x) << " " << g.num(v) << "\n";
    out = s.str();
  }
  return kOk;
}

// ---- fekete ---------------------------------------------------------------

struct FeketeArgs {
  SetArgs set;
  int n = 0;
  long budget = 20000;
  int restarts = 8;
  std::string table;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(static_cast<int>(parse_real(item, "N")));
  return out;
}

int cmd_fekete(const Global& g, const FeketeArgs& a, std::string& out) {
  const TargetSet set = a.set.resolve();
  DescentOptions opt;
  opt.budget = a.budget;
  opt.restarts = a.restarts;
  const OutputStyle st = g.style();

  if (!a.table.empty()) {
    const std::vector<int> ns = parse_int_list(a.table);
    const auto rows = convergence_table(set, ns, g.seed, opt);
    bool exhausted = false;
    if (g.format == "json") {
      Json j = Json::array();
      for (const auto& r : rows) {
        j.push_back(Json{{"n", r.n},
                         {"energy", present(r.energy, g.digits)},
                         {"limit", present(r.limit, g.digits)},
                         {"gap", present(r.gap, g.digits)},
                         {"status", status_name(r.status)}});
      }
      out = dump(Json{{"set", set.name()}, {"seed", g.seed}, {"rows", j}});
    } else {
      out = "n,energy,limit,gap,status\n";
      for (const auto& r : rows) {
        out += std::to_string(r.n) + "," + g.num(r.energy) + "," + g.num(r.limit) + "," + g.num(r.gap) + "," +
               status_name(r.status) + "\n";
      }
    }
    for (const auto& r : rows) exhausted = exhausted || r.status == DescentStatus::BudgetExhausted;
    return exhausted ? kBudget : kOk;
  }

  if (a.n < 2) throw UsageError("fekete needs --n >= 2 or --table");
  const PointConfiguration c = minimize(set, a.n, g.seed, opt);
  const double limit = analytic_energy(set);
  if (g.format == "json") {
    Json j = to_json(c, st);
    j["seed"] = g.seed;
    j["convergence_row"] = Json{{"n", c.n()},
                                {"energy", present(c.energy, g.digits)},
                                {"limit", present(limit, g.digits)},
                                {"gap", present(limit - c.energy, g.digits)}};
    out = dump(j);
  } else if (g.format == "csv") {
    out = "index,param\n";
    for (std::size_t i = 0; i < c.params.size(); ++i) out += std::to_string(i) + "," + fixed(c.params[i], 15) + "\n";
    out += "n,energy,limit,gap,status\n" + std::to_string(c.n()) + "," + g.num(c.energy) + "," + g.num(limit) + "," +
           g.num(limit - c.energy) + "," + status_name(c.status) + "\n";
  } else {
    std::ostringstream s;
    s << "set " << set.name() << ", N = " << c.n() << ", seed " << g.seed << "\n";
    s << "energy    " << g.num(c.energy) << "\n";
    s << "limit     " << g.num(limit) << "\n";
    s << "gap       " << g.num(limit - c.energy) << "\n";
    s << "status    " << status_name(c.status) << " after " << c.iterations << " iterations, |grad| "
      << sci(c.gradient_norm) << "\n";
    out = s.str();
  }
  return c.budget_exhausted() ? kBudget : kOk;
}

// ---- bounds and pairs -----------------------------------------------------

struct BoundsArgs {
  std::string places;
  std::optional<double> r;
};

int cmd_bounds(const Global& g, const BoundsArgs& a, std::string& out) {
  const PlaceSet s = PlaceSet::parse(a.places);
  const BoundResult b = a.r ? lower_bound_interval(s, *a.r) : lower_bound(s);
  const OutputStyle st = g.style();
  if (g.format == "json") {
    Json j = to_json(b, st);
    j["places"] = s.label();
    out = dump(j);
  } else if (g.format == "csv") {
    out = "term,value,symbolic\n";
    out += "base," + g.num(st.log_value(b.base_value)) + "," + csv_quote(b.base_symbolic) + "\n";
    for (const auto& t : b.terms) {
      out += std::to_string(t.prime) + "," + g.num(st.log_value(t.value)) + "," + csv_quote(t.symbolic) + "\n";
    }
    out += "bound," + g.num(st.log_value(b.value)) + ",\n";
  } else {
    std::ostringstream o;
    o << "S = {" << s.label() << "}";
    if (b.r) o << ", r = " << *b.r;
    o << "\n";
    o << "base " << base_name(b.base) << "  " << g.num(st.log_value(b.base_value)) << "  = " << b.base_symbolic
      << "\n";
    for (const auto& t : b.terms) {
      o << "term " << t.prime << "  " << g.num(st.log_value(t.value)) << "  = " << t.symbolic << "\n";
    }
    o << "bound " << g.num(st.log_value(b.value)) << "\n";
    o << "beats 1/2 log 2: " << (b.beats_elementary ? "yes" : "no") << "\n";
    out = o.str();
  }
  return kOk;
}

int cmd_pairs(const Global& g, std::string& out) {
  const PairCensus c = count_beating_pairs();
  const PlaceSet none;
  auto pair_bound = [&](std::int64_t p, std::int64_t q) { return lower_bound(none.with_prime(p).with_prime(q)).value; };
  std::string list;
  for (auto p : c.always_beat) list += (list.empty() ? "" : ",") + std::to_string(p);

  if (g.format == "json") {
    Json w = Json::array();
    for (const auto& [p, q] : c.witnesses) w.push_back(Json::array({p, q}));
    out = dump(Json{{"count", c.count()}, {"cutoff", c.cutoff}, {"always_beat", c.always_beat}, {"witnesses", w}});
    return kOk;
  }
  std::ostringstream o;
  if (g.format == "text") {
    o << "pairs " << c.count() << "\n";
    o << "cutoff " << c.cutoff << "\n";
    o << "always_beat " << list << "\n";
  }
  o << "p,q,bound\n";
  for (const auto& [p, q] : c.witnesses) o << p << "," << q << "," << g.num(pair_bound(p, q)) << "\n";
  out = o.str();
  return kOk;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const Global& g, const std::string& suite, std::string& out) {
  const auto results = run_verify(suite, g.seed);
  int passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  if (g.format == "json") {
    Json j = Json::array();
    for (const auto& r : results) {
      j.push_back(Json{{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    out = dump(Json{{"suite", suite}, {"seed", g.seed}, {"passed", passed}, {"total", results.size()}, {"checks", j}});
  } else if (g.format == "csv") {
    out = "suite,name,status,detail\n";
    for (const auto& r : results) {
      out += r.suite + "," + r.name + "," + (r.passed ? "pass" : "fail") + "," + csv_quote(r.detail) + "\n";
    }
  } else {
    std::ostringstream o;
    for (const auto& r : results) {
      o << (r.passed ? "PASS  " : "FAIL  ") << r.suite << "/" << r.name << "  " << r.detail << "\n";
    }
    o << passed << "/" << results.size() << " checks passed (seed " << g.seed << ")\n";
    out = o.str();
  }
  return all_passed(results) ? kOk : kVerifyFailed;
}

void add_set_flags(CLI::App* cmd, SetArgs& s) {
  cmd->add_flag("--sphere", s.sphere, "Riemann sphere");
  cmd->add_flag("--real-line", s.real_line, "real projective line");
  cmd->add_option("--interval", s.interval, "interval [-r, r]");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arakelov heights, equilibrium measures and splitting bounds on P^1"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  if (const char* env = std::getenv("ARAKELOV_THREADS")) g.threads = std::atoi(env);
  app.add_option("--format", g.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--digits", g.digits, "decimal places")->check(CLI::Range(1, 17));
  app.add_flag("--bits", g.bits, "log-valued results in bits");
  app.add_option("--seed", g.seed, "master seed");
  app.add_option("--output", g.output, "write to a file instead of stdout");
  app.add_option("--threads", g.threads, "worker threads (default ARAKELOV_THREADS or OpenMP)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--tol", g.tol, "root radius (height, local) or quadrature tolerance (measure)")
      ->check(CLI::PositiveNumber);

  HeightArgs ha;
  auto* height = app.add_subcommand("height", "heights and local energies of an algebraic point");
  height->add_option("--poly", ha.poly, "integer polynomial in x");
  height->add_option("--point", ha.point, "inf, an integer, a/b, or a polynomial");

  LocalArgs la;
  auto* local = app.add_subcommand("local", "one local energy D_v");
  local->add_option("--poly", la.poly, "integer polynomial in x")->required();
  local->add_option("--place", la.place, "inf or a prime");
  local->add_flag("--newton", la.newton, "Newton polygon at the place");
  local->add_flag("--root-count", la.root_count, "number of roots in Q_p");
  local->add_option("--precision", la.precision, "lifting depth for --root-count")->check(CLI::PositiveNumber);

  MeasureArgs ma;
  auto* measure = app.add_subcommand("measure", "equilibrium measures, potentials and energies");
  add_set_flags(measure, ma.set);
  measure->add_flag("--energy", ma.energy, "minimal energy");
  measure->add_flag("--mass", ma.mass, "total mass of the density");
  measure->add_option("--potential-at", ma.potential_at, "potential at a real point or inf");
  measure->add_option("--density-at", ma.density_at, "density at a real point");
  measure->add_option("--density-grid", ma.density_grid, "x,density rows")->check(CLI::Range(2, 1000000));
  measure->add_option("--potential-grid", ma.potential_grid, "x,potential rows")->check(CLI::Range(2, 100000));
  measure->add_flag("--balayage", ma.balayage, "energy via g(i,inf) + balayage integral");
  measure->add_option("--harmonic", ma.harmonic, "harmonic measure of [a,b] seen from i");

  FeketeArgs fa;
  auto* fekete = app.add_subcommand("fekete", "minimize the discrete energy of N points");
  add_set_flags(fekete, fa.set);
  fekete->add_option("--n", fa.n, "number of points");
  fekete->add_option("--budget", fa.budget, "iterations per restart")->check(CLI::PositiveNumber);
  fekete->add_option("--restarts", fa.restarts, "seeded restarts")->check(CLI::PositiveNumber);
  fekete->add_option("--table", fa.table, "convergence table over a list of N");

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "lower bound for totally S-adic points");
  bounds->add_option("--places", ba.places, "comma-separated places, e.g. inf,2");
  bounds->add_option("--r", ba.r, "restrict to the interval [-r, r]");

  auto* pairs = app.add_subcommand("pairs", "prime pairs beating 1/2 log 2");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "reproduce the reference numbers");
  verify->add_option("--suite", suite, "all, heights, measures, bounds or fekete")
      ->check(CLI::IsMember({"all", "heights", "measures", "bounds", "fekete"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  if (g.threads > 0) set_threads(g.threads);

  std::string out;
  int code = kOk;
  try {
    if (*height) code = cmd_height(g, ha, out);
    else if (*local) code = cmd_local(g, la, out);
    else if (*measure) code = cmd_measure(g, ma, out);
    else if (*fekete) code = cmd_fekete(g, fa, out);
    else if (*bounds) code = cmd_bounds(g, ba, out);
    else if (*pairs) code = cmd_pairs(g, out);
    else if (*verify) code = cmd_verify(g, suite, out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kUsage;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kNumeric;
  }

  if (g.output.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(g.output, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << g.output << "\n";
      return kUsage;
    }
    f << out;
  }
  return code;
}
