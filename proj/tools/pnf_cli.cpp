// Command-line front end for the pnf library. Links only the C API.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pnf/pnf.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

[[noreturn]] void die(const std::string& msg, int code = kExitUsage) {
  std::cerr << "error: " << msg << "\n";
  std::exit(code);
}

void check(pnf_status status) {
  if (status != PNF_OK)
    die(std::string(pnf_status_name(status)) + ": " + pnf_last_error());
}

struct Poly {
  pnf_poly* p = nullptr;
  Poly() = default;
  explicit Poly(pnf_poly* raw) : p(raw) {}
  Poly(Poly&& o) noexcept : p(o.p) { o.p = nullptr; }
  Poly& operator=(Poly&& o) noexcept {
    std::swap(p, o.p);
    return *this;
  }
  Poly(const Poly&) = delete;
  ~Poly() { pnf_poly_free(p); }
};

Poly parse_poly(const std::string& text) {
  pnf_poly* p = nullptr;
  check(pnf_poly_parse(text.c_str(), PNF_GENERATOR_AUTO, &p));
  return Poly(p);
}

std::string format_poly(const pnf_poly* p) {
  char* s = nullptr;
  check(pnf_poly_format(p, &s));
  std::string out(s);
  pnf_string_free(s);
  return out;
}

// Optional numeric curvature: --curvature accepts "G" (keep symbolic) or
// a rational value substituted into printed polynomials.
struct Curvature {
  bool symbolic = true;
  long long num = 0, den = 1;
  double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

Curvature parse_curvature(const std::string& text) {
  Curvature c;
  if (text == "G" || text == "symbolic" || text.empty()) return c;
  c.symbolic = false;
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      c.num = std::stoll(text);
    } else {
      c.num = std::stoll(text.substr(0, slash));
      c.den = std::stoll(text.substr(slash + 1));
    }
  } catch (...) {
    die("--curvature expects a rational number or \"G\"");
  }
  if (c.den == 0) die("--curvature has zero denominator");
  return c;
}

std::string render_poly(const pnf_poly* p, const Curvature& g) {
  if (g.symbolic) return format_poly(p);
  pnf_poly* sub = nullptr;
  check(pnf_poly_substitute_g(p, g.num, g.den, &sub));
  std::string out = format_poly(sub);
  pnf_poly_free(sub);
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) die("cannot open output file " + out_path);
    f << text;
  }
}

// Initial-data profiles: sums of terms `c`, `c*sin`, `c*cos`, `sin`,
// `cos`, e.g. "2+cos", "0.5*sin", "1 - 2*cos".
double eval_profile(const std::string& text, double s) {
  double acc = 0.0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) {
      if (first) die("empty profile");
      break;
    }
    double sign = 1.0;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1.0 : 1.0;
      ++i;
    } else if (!first) {
      die("profile: expected + or - at offset " + std::to_string(i));
    }
    skip_ws();
    double coeff = 1.0;
    bool have_coeff = false;
    std::size_t start = i;
    while (i < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.'))
      ++i;
    if (i > start) {
      coeff = std::stod(text.substr(start, i - start));
      have_coeff = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    if (text.compare(i, 3, "sin") == 0) {
      acc += sign * coeff * std::sin(s);
      i += 3;
    } else if (text.compare(i, 3, "cos") == 0) {
      acc += sign * coeff * std::cos(s);
      i += 3;
    } else if (have_coeff) {
      acc += sign * coeff;
    } else {
      die("profile: expected number, sin or cos at offset " + std::to_string(i));
    }
    first = false;
  }
  return acc;
}

std::vector<double> sample_profile(const std::string& profile, std::size_t n,
                                   double s0, double ds) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = eval_profile(profile, s0 + ds * static_cast<double>(i));
  return v;
}

std::vector<double> linspace_times(double t_end, std::size_t count) {
  if (count < 2) count = 2;
  std::vector<double> t(count);
  for (std::size_t i = 0; i < count; ++i)
    t[i] = t_end * static_cast<double>(i) / static_cast<double>(count - 1);
  return t;
}

void write_grid_csv(const fs::path& path, double s0, double ds,
                    const double* values, std::size_t n) {
  std::ofstream f(path, std::ios::binary);
  if (!f) die("cannot open " + path.string());
  f << "s,value\n";
  for (std::size_t i = 0; i < n; ++i)
    f << g17(s0 + ds * static_cast<double>(i)) << "," << g17(values[i]) << "\n";
}

void write_curve_csv(const fs::path& path, double s0, double ds,
                     const double* frames, std::size_t n, int dim) {
  std::ofstream f(path, std::ios::binary);
  if (!f) die("cannot open " + path.string());
  f << "s";
  const char* names[4] = {"gamma", "T", "N", "B"};
  for (int part = 0; part < 4; ++part)
    for (int c = 0; c < dim; ++c) f << "," << names[part] << c;
  f << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    f << g17(s0 + ds * static_cast<double>(i));
    for (int part = 0; part < 4; ++part)
      for (int c = 0; c < dim; ++c) f << "," << g17(frames[i * 16 + part * 4 + c]);
    f << "\n";
  }
}

json run_json(double dt, double ds, double s0, const std::vector<double>& times,
              const std::vector<double>& fields, std::size_t n) {
  json jt = json::array(), jf = json::array();
  for (double t : times) jt.push_back(g17(t));
  for (std::size_t snap = 0; snap < times.size(); ++snap) {
    json row = json::array();
    for (std::size_t i = 0; i < n; ++i) row.push_back(g17(fields[snap * n + i]));
    jf.push_back(std::move(row));
  }
  return json{{"dt", g17(dt)}, {"ds", g17(ds)}, {"s0", g17(s0)},
              {"times", jt},   {"fields", jf}};
}

// ------------------------------------------------------------------
// Subcommand payloads

struct SimulateArgs {
  std::string kind;
  std::string init = "sin";
  std::size_t grid_n = 256;
  double ds = 0.0;  // 0: derive from a 2 pi domain
  double dt = 1e-4;
  double t_end = 0.5;
  std::size_t snapshots = 2;
  std::string curvature = "G";
  std::string out_dir = ".";
  double a = 1.0, b = 4.0;
};

int cmd_simulate(const SimulateArgs& args) {
  double g_curv = 0.0;
  Curvature c = parse_curvature(args.curvature);
  if (!c.symbolic) g_curv = c.value();

  const std::size_t n = args.grid_n;
  const double ds = args.ds > 0.0 ? args.ds : 2.0 * M_PI / static_cast<double>(n);
  const double s0 = 0.0;
  fs::path dir(args.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);

  auto times = linspace_times(args.t_end, args.snapshots);

  if (args.kind == "burgers" || args.kind == "heat") {
    std::vector<double> u0 = sample_profile(args.init, n, s0, ds);
    std::vector<double> out(times.size() * n);
    json report;
    if (args.kind == "burgers") {
      check(pnf_solve_burgers(u0.data(), n, s0, ds, args.dt, times.data(),
                              times.size(), out.data()));
    } else {
      check(pnf_solve_heat(u0.data(), n, s0, ds, g_curv, 0.0, args.dt,
                           times.data(), times.size(), out.data()));
      // Hopf-Cole cross-check: tau from the evolved k against the
      // directly evolved tau.
      std::vector<double> tau0(n), tau_direct(times.size() * n), tau_from_k(n);
      check(pnf_hopf_cole(u0.data(), n, ds, 1, tau0.data()));
      check(pnf_solve_burgers(tau0.data(), n, s0, ds, args.dt, times.data(),
                              times.size(), tau_direct.data()));
      check(pnf_hopf_cole(out.data() + (times.size() - 1) * n, n, ds, 1,
                          tau_from_k.data()));
      double worst = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        worst = std::max(worst, std::fabs(tau_from_k[i] -
                                          tau_direct[(times.size() - 1) * n + i]));
      report["hopf_cole_max_deviation"] = g17(worst);
    }
    for (std::size_t snap = 0; snap < times.size(); ++snap) {
      char name[64];
      std::snprintf(name, sizeof name, "%s_%03zu.csv", args.kind.c_str(), snap);
      write_grid_csv(dir / name, s0, ds, out.data() + snap * n, n);
    }
    report["run"] = run_json(args.dt, ds, s0, times, out, n);
    emit(report.dump(2) + "\n", (dir / (args.kind + "_report.json")).string());
    std::cout << args.kind << ": wrote " << times.size() << " snapshots to "
              << dir.string() << "\n";
    return kExitPass;
  }

  if (args.kind == "filament") {
    std::vector<double> tau0 = sample_profile(args.init, n, s0, ds);
    std::vector<double> taus(times.size() * n), curves(times.size() * n * 16);
    check(pnf_evolve_filament(tau0.data(), n, s0, ds, g_curv, args.dt,
                              times.data(), times.size(), taus.data(),
                              curves.data()));
    int dim = 0;
    double frame[16];
    check(pnf_default_frame(g_curv, &dim, frame));
    for (std::size_t snap = 0; snap < times.size(); ++snap) {
      char name[64];
      std::snprintf(name, sizeof name, "filament_curve_%03zu.csv", snap);
      write_curve_csv(dir / name, s0, ds, curves.data() + snap * n * 16, n, dim);
      std::snprintf(name, sizeof name, "filament_tau_%03zu.csv", snap);
      write_grid_csv(dir / name, s0, ds, taus.data() + snap * n, n);
    }
    // Consistency probe: velocity of the first interval against N.
    double worst = 0.0;
    if (times.size() >= 2) {
      double dt_probe = times[1] - times[0];
      for (std::size_t i = 0; i < n; ++i)
        for (int cmp = 0; cmp < dim; ++cmp) {
          double v = (curves[(n + i) * 16 + cmp] - curves[i * 16 + cmp]) / dt_probe -
                     curves[i * 16 + 8 + cmp];
          worst = std::max(worst, std::fabs(v));
        }
    }
    json report{{"run", run_json(args.dt, ds, s0, times, taus, n)},
                {"velocity_vs_normal_max_deviation", g17(worst)}};
    emit(report.dump(2) + "\n", (dir / "filament_report.json").string());
    std::cout << "filament: wrote " << times.size() << " snapshots to "
              << dir.string() << "\n";
    return kExitPass;
  }

  if (args.kind == "gauge") {
    auto residual_at = [&](std::size_t nn) {
      double dx = 2.0 * M_PI / static_cast<double>(nn);
      std::vector<double> u0 = sample_profile(args.init, nn, 0.0, dx);
      double delta = 0.4 * dx * dx;
      double dt = 0.36 * dx * dx;
      double probes[3] = {args.t_end - delta, args.t_end, args.t_end + delta};
      std::vector<double> out(3 * nn);
      check(pnf_solve_burgers_classic(u0.data(), nn, 0.0, dx, dt, probes, 3,
                                      out.data()));
      double res = 0.0;
      check(pnf_burgers_gauge_check(out.data(), out.data() + nn,
                                    out.data() + 2 * nn, nn, 0.0, dx, 1,
                                    probes[0], probes[2], args.a, args.b, &res));
      return res;
    };
    double coarse = residual_at(n);
    double fine = residual_at(2 * n);
    json report{{"a", g17(args.a)},
                {"b", g17(args.b)},
                {"residual_coarse", g17(coarse)},
                {"residual_fine", g17(fine)},
                {"ratio", g17(coarse / fine)},
                {"grid_n", n}};
    emit(report.dump(2) + "\n", (dir / "gauge_report.json").string());
    std::cout << "gauge: residual ratio " << g17(coarse / fine) << ", report in "
              << dir.string() << "\n";
    return kExitPass;
  }

  die("unknown simulate kind " + args.kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudo-null curve flows: symbolic hierarchies and numerical "
               "verification"};
  app.require_subcommand(1);

  // parse
  auto* parse_cmd = app.add_subcommand("parse", "canonicalize expressions");
  std::vector<std::string> parse_exprs;
  std::string parse_format = "text", parse_out, parse_curv = "G";
  parse_cmd->add_option("exprs", parse_exprs, "expressions")->required();
  parse_cmd->add_option("--format", parse_format, "text|json");
  parse_cmd->add_option("--out", parse_out, "output path");
  parse_cmd->add_option("--curvature", parse_curv, "rational or G");

  // hierarchy
  auto* hier_cmd = app.add_subcommand("hierarchy", "print the flow hierarchy");
  int levels = 5;
  bool hier_check = false;
  std::string hier_format = "table", hier_out, hier_curv = "G";
  hier_cmd->add_option("--levels", levels, "number of levels")
      ->check(CLI::PositiveNumber);
  hier_cmd->add_flag("--check", hier_check,
                     "compare against the built-in transcription");
  hier_cmd->add_option("--format", hier_format, "table|json");
  hier_cmd->add_option("--out", hier_out, "output path");
  hier_cmd->add_option("--curvature", hier_curv, "rational or G");

  // symmetry
  auto* sym_cmd = app.add_subcommand("symmetry", "test a symmetry candidate");
  std::string sym_flow, sym_candidate, sym_format = "json", sym_out;
  sym_cmd->add_option("--flow", sym_flow, "flow expression")->required();
  sym_cmd->add_option("--candidate", sym_candidate, "candidate expression")
      ->required();
  sym_cmd->add_option("--format", sym_format, "json|table");
  sym_cmd->add_option("--out", sym_out, "output path");

  // bracket
  auto* br_cmd = app.add_subcommand("bracket", "lie bracket of two fields");
  std::vector<std::string> br_fields;
  std::string br_format = "json", br_out, br_curv = "G";
  br_cmd->add_option("--field", br_fields, "field as \"f;g;h\" (twice)")
      ->expected(2);
  br_cmd->add_option("--format", br_format, "json|table");
  br_cmd->add_option("--out", br_out, "output path");
  br_cmd->add_option("--curvature", br_curv, "rational or G");

  // variation
  auto* var_cmd = app.add_subcommand("variation", "first variation of a field");
  std::string var_field, var_format = "json", var_out, var_curv = "G";
  var_cmd->add_option("--field", var_field, "field as \"f;g;h\"")->required();
  var_cmd->add_option("--format", var_format, "json|table");
  var_cmd->add_option("--out", var_out, "output path");
  var_cmd->add_option("--curvature", var_curv, "rational or G");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "run a numerical experiment");
  SimulateArgs sim;
  sim_cmd->add_option("kind", sim.kind, "burgers|heat|filament|gauge")->required();
  sim_cmd->add_option("--init", sim.init, "initial profile, e.g. \"2+cos\"");
  sim_cmd->add_option("--grid-n", sim.grid_n, "grid size")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--ds", sim.ds, "grid step (default 2pi/n)");
  sim_cmd->add_option("--dt", sim.dt, "time step")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--t-end", sim.t_end, "end time")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--snapshots", sim.snapshots, "snapshot count");
  sim_cmd->add_option("--curvature", sim.curvature, "rational curvature");
  sim_cmd->add_option("--out", sim.out_dir, "output directory");
  sim_cmd->add_option("--a", sim.a, "gauge parameter a");
  sim_cmd->add_option("--b", sim.b, "gauge parameter b");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "run the verification suites");
  std::string ver_filter = "all", ver_format = "json", ver_out, ver_inject;
  ver_cmd->add_option("--filter", ver_filter, "symbolic|numeric|all");
  ver_cmd->add_option("--format", ver_format, "json|table");
  ver_cmd->add_option("--out", ver_out, "output path");
  ver_cmd->add_option("--inject", ver_inject,
                      "negative-control fixture (eq21-sign-flip)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (parse_cmd->parsed()) {
    Curvature curv = parse_curvature(parse_curv);
    if (parse_format == "json") {
      json arr = json::array();
      for (const auto& text : parse_exprs) {
        Poly p = parse_poly(text);
        arr.push_back({{"input", text},
                       {"canonical", render_poly(p.p, curv)},
                       {"generator", pnf_poly_generator(p.p) == PNF_GENERATOR_KAPPA
                                         ? "kappa"
                                         : "tau"}});
      }
      emit(arr.dump(2) + "\n", parse_out);
    } else {
      std::string lines;
      for (const auto& text : parse_exprs) {
        Poly p = parse_poly(text);
        lines += render_poly(p.p, curv) + "\n";
      }
      emit(lines, parse_out);
    }
    return kExitPass;
  }

  if (hier_cmd->parsed()) {
    Curvature curv = parse_curvature(hier_curv);
    char* text = nullptr;
    if (hier_format == "json")
      check(pnf_hierarchy_json(levels, &text));
    else
      check(pnf_hierarchy_table(levels, &text));
    std::string body(text);
    pnf_string_free(text);
    if (!curv.symbolic) {
      // Re-render through parse with substitution.
      json arr = json::array();
      char* raw = nullptr;
      check(pnf_hierarchy_json(levels, &raw));
      json hier = json::parse(raw);
      pnf_string_free(raw);
      for (auto& row : hier) {
        for (const char* key : {"tau_flow", "k_flow"}) {
          Poly p = parse_poly(row[key].get<std::string>());
          row[key] = render_poly(p.p, curv);
        }
        arr.push_back(row);
      }
      body = hier_format == "json" ? arr.dump(2) + "\n" : body;
    }
    emit(body, hier_out);
    if (hier_check) {
      char* diag = nullptr;
      pnf_status st = pnf_hierarchy_check(&diag);
      if (st != PNF_OK) {
        std::cerr << "hierarchy check failed: " << pnf_last_error() << "\n";
        return kExitFail;
      }
      pnf_string_free(diag);
    }
    return kExitPass;
  }

  if (sym_cmd->parsed()) {
    Poly flow = parse_poly(sym_flow);
    Poly cand = parse_poly(sym_candidate);
    int ok = 0;
    pnf_poly* residual = nullptr;
    check(pnf_is_symmetry(flow.p, cand.p, &ok, &residual));
    Poly res(residual);
    json report{{"flow", format_poly(flow.p)},
                {"candidate", format_poly(cand.p)},
                {"residual", format_poly(res.p)},
                {"status", ok ? "pass" : "fail"}};
    if (sym_format == "table")
      emit((ok ? std::string("[PASS] ") : std::string("[FAIL] ")) +
               "commutator residual: " + format_poly(res.p) + "\n",
           sym_out);
    else
      emit(report.dump(2) + "\n", sym_out);
    return ok ? kExitPass : kExitFail;
  }

  if (br_cmd->parsed()) {
    Curvature curv = parse_curvature(br_curv);
    pnf_field *a = nullptr, *b = nullptr, *out = nullptr;
    check(pnf_field_parse(br_fields[0].c_str(), &a));
    check(pnf_field_parse(br_fields[1].c_str(), &b));
    check(pnf_field_lie_bracket(a, b, &out));
    json report;
    const char* names[3] = {"f", "g", "h"};
    for (int i = 0; i < 3; ++i) {
      pnf_poly* comp = nullptr;
      check(pnf_field_component(out, i, &comp));
      Poly c(comp);
      report[names[i]] = render_poly(c.p, curv);
    }
    pnf_field_free(a);
    pnf_field_free(b);
    pnf_field_free(out);
    if (br_format == "table")
      emit("f: " + report["f"].get<std::string>() +
               "\ng: " + report["g"].get<std::string>() +
               "\nh: " + report["h"].get<std::string>() + "\n",
           br_out);
    else
      emit(report.dump(2) + "\n", br_out);
    return kExitPass;
  }

  if (var_cmd->parsed()) {
    Curvature curv = parse_curvature(var_curv);
    pnf_field* v = nullptr;
    check(pnf_field_parse(var_field.c_str(), &v));
    pnf_poly *rho = nullptr, *phi = nullptr, *psi = nullptr, *alpha = nullptr;
    check(pnf_field_variation(v, &rho, &phi, &psi, &alpha));
    Poly r(rho), ph(phi), ps(psi), al(alpha);
    int pn = 0, arc = 0;
    check(pnf_field_tangency(v, &pn, &arc));
    json report{{"rho", render_poly(r.p, curv)},
                {"phi", render_poly(ph.p, curv)},
                {"psi", render_poly(ps.p, curv)},
                {"alpha", render_poly(al.p, curv)},
                {"pseudo_null_ok", pn != 0},
                {"arclength_ok", arc != 0},
                {"evolution", pnf_field_is_evolution(v) != 0}};
    if (pnf_field_is_evolution(v)) {
      pnf_poly* flow = nullptr;
      check(pnf_field_torsion_variation(v, &flow));
      Poly fl(flow);
      report["torsion_flow"] = render_poly(fl.p, curv);
    }
    pnf_field_free(v);
    emit(report.dump(2) + "\n", var_out);
    return kExitPass;
  }

  if (sim_cmd->parsed()) return cmd_simulate(sim);

  if (ver_cmd->parsed()) {
    unsigned flags = 0;
    if (ver_filter == "symbolic")
      flags |= PNF_VERIFY_SYMBOLIC;
    else if (ver_filter == "numeric")
      flags |= PNF_VERIFY_NUMERIC;
    else if (ver_filter == "all")
      flags |= PNF_VERIFY_ALL;
    else
      die("--filter expects symbolic, numeric or all");
    if (!ver_inject.empty()) {
      if (ver_inject != "eq21-sign-flip") die("unknown --inject fixture");
      flags |= PNF_VERIFY_INJECT_EQ21_SIGN_FLIP;
    }
    char* report = nullptr;
    int all_passed = 0;
    check(pnf_verify(flags, ver_format.c_str(), &report, &all_passed));
    std::string text(report);
    pnf_string_free(report);
    emit(text, ver_out);
    return all_passed ? kExitPass : kExitFail;
  }

  return kExitUsage;
}
