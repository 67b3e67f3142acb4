#include "cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "fusion_gerbe/alcove.hpp"
#include "fusion_gerbe/diffgeo.hpp"
#include "fusion_gerbe/fusion_ring.hpp"
#include "fusion_gerbe/junction.hpp"
#include "fusion_gerbe/obstruction.hpp"
#include "fusion_gerbe/sampling.hpp"
#include "fusion_gerbe/su2.hpp"

namespace fusion_gerbe::cli {

namespace {

using json = nlohmann::ordered_json;

std::string fmt_sci(double x, int digits = 2) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*e", digits, x);
  return buf;
}

std::string region_name(Stratum s) {
  switch (s) {
    case Stratum::Outside: return "outside";
    case Stratum::Corner: return "corner";
    case Stratum::BoundaryNonCorner: return "boundary_non_corner";
    case Stratum::Interior: return "interior";
  }
  return "?";
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (const char c : field) {
    quoted += c;
    if (c == '"') quoted += '"';
  }
  quoted += '"';
  return quoted;
}

double tolerance_or(const RunConfig& cfg, const std::string& name, double fallback) {
  const auto it = cfg.tolerances.find(name);
  return it == cfg.tolerances.end() ? fallback : it->second;
}

/// Evaluates fn(i) for i in [0, n) across cfg.workers threads and returns
/// the elementwise results; sample inputs are pre-generated by the caller,
/// so the outcome does not depend on the thread count.
template <class Fn>
std::vector<double> map_samples(std::size_t n, int workers, Fn&& fn) {
  std::vector<double> out(n, 0.0);
  const int nthreads = std::max(1, std::min<int>(workers, static_cast<int>(n == 0 ? 1 : n)));
  if (nthreads == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int w = 0; w < nthreads; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < n;
           i += static_cast<std::size_t>(nthreads))
        out[i] = fn(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

// ---------------------------------------------------------------- fusion

int cmd_fusion(const RunConfig& cfg, int level, std::int64_t lambda, std::int64_t mu,
               std::ostream& out, std::ostream& err) {
  const Level k(level);
  if (lambda < 0 || lambda > k.value() || mu < 0 || mu > k.value()) {
    err << "fusion: weights must lie in 0.." << k.value() << "\n";
    return kExitUsage;
  }
  const FusionVector prod = fusion_product(lambda, mu, k);

  struct Row {
    std::int64_t nu, n, verlinde;
    bool geometric;
  };
  std::vector<Row> rows;
  for (std::int64_t nu = 0; nu <= k.value(); ++nu) {
    if (prod[nu] == 0) continue;
    const bool geo = fusion_2iso_exists({lambda, mu, nu, k});
    const VerlindeCoeff vc = verlinde_coeff(lambda, mu, nu, k);
    rows.push_back({nu, prod[nu], vc.rounded, geo});
  }

  if (cfg.format == "json") {
    json doc;
    doc["schema_version"] = 1;
    doc["level"] = level;
    doc["lambda"] = lambda;
    doc["mu"] = mu;
    doc["coefficients"] = json::array();
    for (const Row& r : rows)
      doc["coefficients"].push_back(
          {{"nu", r.nu}, {"n", r.n}, {"geometric", r.geometric}, {"verlinde", r.verlinde}});
    out << doc.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "nu,n,geometric,verlinde\n";
    for (const Row& r : rows)
      out << r.nu << "," << r.n << "," << (r.geometric ? "true" : "false") << ","
          << r.verlinde << "\n";
  } else {
    out << "[" << lambda << "] * [" << mu << "] at level " << level << "\n";
    out << "nu  n  geometric  verlinde\n";
    for (const Row& r : rows) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "%2lld  %lld  %-9s  %lld\n",
                    static_cast<long long>(r.nu), static_cast<long long>(r.n),
                    r.geometric ? "yes" : "no", static_cast<long long>(r.verlinde));
      out << buf;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, int max_level, int interior_epsilon,
               std::ostream& out, std::ostream& err) {
  bool all_agree = true;
  json results = json::array();
  std::vector<std::string> lines;
  for (int k = 1; k <= max_level; ++k) {
    const auto start = std::chrono::steady_clock::now();
    const TheoremReport rep = verify_theorem(Level(k), interior_epsilon, cfg.workers);
    const auto stop = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    err << "k=" << k << " done in " << fmt_sci(ms, 3) << " ms\n";

    std::ostringstream line;
    line << "k=" << k << ": |V|=" << rep.v_size << " |V_G|=" << rep.vg_size << " "
         << (rep.verdict ? "agree" : "DISAGREE");
    lines.push_back(line.str());
    if (!rep.verdict) {
      all_agree = false;
      for (const auto& t : rep.v_only)
        lines.push_back("  in V only:   (" + std::to_string(t.lambda) + "," +
                        std::to_string(t.mu) + "," + std::to_string(t.nu) + ")");
      for (const auto& t : rep.vg_only)
        lines.push_back("  in V_G only: (" + std::to_string(t.lambda) + "," +
                        std::to_string(t.mu) + "," + std::to_string(t.nu) + ")");
    }
    results.push_back({{"level", k},
                       {"v_size", rep.v_size},
                       {"vg_size", rep.vg_size},
                       {"verdict", rep.verdict}});
  }

  if (cfg.format == "json") {
    json doc;
    doc["schema_version"] = 1;
    doc["max_level"] = max_level;
    doc["interior_epsilon"] = interior_epsilon;
    doc["results"] = results;
    doc["all_agree"] = all_agree;
    out << doc.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "level,v_size,vg_size,verdict\n";
    for (const auto& r : results)
      out << r["level"] << "," << r["v_size"] << "," << r["vg_size"] << ","
          << (r["verdict"].get<bool>() ? "true" : "false") << "\n";
  } else {
    for (const auto& line : lines) out << line << "\n";
    out << (all_agree ? "V = V_G verified" : "V = V_G FAILED") << " for k = 1.."
        << max_level << "\n";
  }
  return all_agree ? kExitOk : kExitFailure;
}

// --------------------------------------------------------------- polytope

int cmd_polytope(const RunConfig& cfg, int level, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
  const Level k(level);
  const auto integer_points = enumerate_FZ(k);
  const auto fusion_points = compute_V(k);

  json doc;
  doc["schema_version"] = 1;
  doc["level"] = level;
  doc["vertices"] = json::array({{0, 0, 0},
                                 {level, level, 0},
                                 {level, 0, level},
                                 {0, level, level}});
  doc["integer_points"] = json::array();
  for (const auto& t : integer_points) {
    const RegionClass r = classify_region(t);
    const bool fus = std::binary_search(fusion_points.begin(), fusion_points.end(), t);
    doc["integer_points"].push_back({{"point", {t.lambda, t.mu, t.nu}},
                                     {"region", region_name(r.stratum)},
                                     {"in_F_dot", r.in_F_dot},
                                     {"fusion", fus}});
  }
  doc["fusion_points"] = json::array();
  for (const auto& t : fusion_points)
    doc["fusion_points"].push_back({t.lambda, t.mu, t.nu});
  doc["counts"] = {{"integer_points", integer_points.size()},
                   {"fusion_points", fusion_points.size()}};

  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      err << "polytope: cannot write " << out_path << "\n";
      return kExitFailure;
    }
    file << doc.dump(2) << "\n";
    if (!file) {
      err << "polytope: write failed for " << out_path << "\n";
      return kExitFailure;
    }
  }

  if (cfg.format == "json" && out_path.empty()) {
    out << doc.dump(2) << "\n";
  } else {
    out << "level=" << level << " integer_points=" << integer_points.size()
        << " fusion_points=" << fusion_points.size() << "\n";
    if (!out_path.empty()) out << "wrote " << out_path << "\n";
  }
  return kExitOk;
}

// ----------------------------------------------------------- geometry-check

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::string detail;  // offending sample when failing
};

CheckResult check_junction(const RunConfig& cfg, Level k, int samples) {
  CheckResult res{"junction", 0.0, tolerance_or(cfg, "junction", 1e-10)};
  Rng rng(derive_seed(cfg.seed, "junction"));
  std::vector<WeightTriple> triples;
  triples.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) triples.push_back(random_triple_in_Fdot(k, rng));
  for (const auto& t : enumerate_FZ(k)) triples.push_back(t.to_real());

  const auto residuals = map_samples(triples.size(), cfg.workers, [&](std::size_t i) {
    return junction_residual(triples[i]);
  });
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (residuals[i] > res.max_residual) {
      res.max_residual = residuals[i];
      if (residuals[i] > res.tolerance) {
        res.pass = false;
        std::ostringstream os;
        os << "triple (" << triples[i].lambda << ", " << triples[i].mu << ", "
           << triples[i].nu << ")";
        res.detail = os.str();
      }
    }
  }
  return res;
}

CheckResult check_face_signs(const RunConfig& cfg, Level k, int samples) {
  CheckResult res{"face-signs", 0.0, tolerance_or(cfg, "face", 1e-10)};
  Rng rng(derive_seed(cfg.seed, "face-signs"));
  const Mat2 s3 = sigma3();
  const std::array<Face, 4> faces{Face::SumLower, Face::DiffLM, Face::DiffML,
                                  Face::SumUpper};
  const std::array<FaceSigns, 4> expected{FaceSigns{+1, +1, 0}, FaceSigns{-1, +1, 0},
                                          FaceSigns{-1, -1, 0}, FaceSigns{+1, -1, 1}};
  const int per_face = std::max(samples, 50);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (int i = 0; i < per_face; ++i) {
      const bool use_int = (k.value() >= 4) && (i % 2 == 1);
      WeightTriple t =
          use_int ? random_int_face_triple(faces[f], k, rng).to_real()
                  : random_face_triple(faces[f], k, rng);
      const JunctionFrame fr = solve_junction(t);
      const int ea = sign_value(epsilon(fr.a));
      const int eb = sign_value(epsilon(fr.b));
      const double q =
          (t.lambda + ea * t.mu - eb * t.nu) / (2.0 * k.real());
      const double n_defect = std::abs(q - std::round(q));
      const double ad_defect =
          std::max(frobenius_distance(adjoint(fr.a, s3), static_cast<double>(ea) * s3),
                   frobenius_distance(adjoint(fr.b, s3), static_cast<double>(eb) * s3));
      const double residual = std::max(ad_defect, n_defect);
      const bool signs_ok = ea == expected[f].eps_a && eb == expected[f].eps_b &&
                            std::llround(q) == expected[f].n;
      if (residual > res.max_residual) res.max_residual = residual;
      if (!signs_ok || residual > res.tolerance) {
        res.pass = false;
        if (res.detail.empty()) {
          std::ostringstream os;
          os << "face " << f << " triple (" << t.lambda << ", " << t.mu << ", " << t.nu
             << ") signs (" << ea << ", " << eb << ", " << q << ")";
          res.detail = os.str();
        }
      }
    }
  }
  return res;
}

CheckResult check_omega(const RunConfig& cfg, Level k, int samples) {
  CheckResult res{"omega", 0.0, tolerance_or(cfg, "omega", 1e-9)};
  Rng rng(derive_seed(cfg.seed, "omega"));
  struct Sample {
    WeightTriple t;
    SU2Matrix h;
  };
  std::vector<Sample> ss;
  ss.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i)
    ss.push_back({random_triple_in_Fdot(k, rng), haar_su2(rng)});

  const auto residuals = map_samples(ss.size(), cfg.workers, [&](std::size_t i) {
    double worst = 0.0;
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        worst = std::max(worst, std::abs(omega_contract(ss[i].t, ss[i].h, a, b)));
        worst =
            std::max(worst, std::abs(omega_contract_pullback(ss[i].t, ss[i].h, a, b)));
      }
    return worst;
  });
  for (std::size_t i = 0; i < ss.size(); ++i) {
    if (residuals[i] > res.max_residual) {
      res.max_residual = residuals[i];
      if (residuals[i] > res.tolerance) {
        res.pass = false;
        std::ostringstream os;
        os << "triple (" << ss[i].t.lambda << ", " << ss[i].t.mu << ", " << ss[i].t.nu
           << ") sample " << i;
        res.detail = os.str();
      }
    }
  }
  return res;
}

CheckResult check_pw(const RunConfig& cfg, Level k, int samples, double step) {
  CheckResult res{"polyakov-wiegmann", 0.0,
                  tolerance_or(cfg, "pw", 1000.0 * step * step)};
  Rng rng(derive_seed(cfg.seed, "polyakov-wiegmann"));
  struct Sample {
    SU2Matrix g1, g2;
    std::array<ProductSpace::Direction, 3> dirs;
  };
  std::vector<Sample> ss;
  ss.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    Sample s{haar_su2(rng), haar_su2(rng), {}};
    for (auto& d : s.dirs) d = {random_algebra(rng), random_algebra(rng)};
    ss.push_back(std::move(s));
  }
  const auto residuals = map_samples(ss.size(), cfg.workers, [&](std::size_t i) {
    return pw_residual(ss[i].g1, ss[i].g2, ss[i].dirs, k, step);
  });
  for (std::size_t i = 0; i < ss.size(); ++i) {
    if (residuals[i] > res.max_residual) {
      res.max_residual = residuals[i];
      if (residuals[i] > res.tolerance) {
        res.pass = false;
        res.detail = "sample " + std::to_string(i);
      }
    }
  }
  return res;
}

CheckResult check_period(const RunConfig& cfg, Level k, std::ostream&) {
  CheckResult res{"period", 0.0, tolerance_or(cfg, "period", 1e-6)};
  const std::array<double, 4> lambdas{0.5, 1.0, 1.5, 2.7};
  for (const double lambda : lambdas) {
    if (lambda > k.real()) continue;
    for (int l = 0; l <= 1; ++l) {
      const double expected =
          2.0 * std::numbers::pi * (vertex_weight(l, k) - lambda);
      const double p = period_integral(lambda, l, k, 400, 200);
      const double defect = std::abs(p - expected);
      if (defect > res.max_residual) res.max_residual = defect;
      if (defect > res.tolerance && res.pass) {
        res.pass = false;
        res.detail = "lambda=" + fmt_sci(lambda) + " l=" + std::to_string(l);
      }
      // integrality of p / 2pi iff the weight is integral
      const double ratio = p / (2.0 * std::numbers::pi);
      const bool is_integer_value = std::abs(ratio - std::round(ratio)) < 1e-6;
      const bool is_integer_weight = std::abs(lambda - std::round(lambda)) == 0.0;
      if (is_integer_value != is_integer_weight && res.pass) {
        res.pass = false;
        res.detail = "integrality mismatch at lambda=" + fmt_sci(lambda);
      }
    }
  }
  return res;
}

CheckResult check_connection(const RunConfig& cfg, Level k, int samples) {
  CheckResult res{"connection", 0.0, tolerance_or(cfg, "connection", 1e-10)};
  Rng rng(derive_seed(cfg.seed, "connection"));

  std::vector<IntWeightTriple> boundary;
  for (const auto& t : enumerate_FZ(k))
    if (classify_region(t).stratum != Stratum::Interior) boundary.push_back(t);

  const Mat2 lam = fundamental_weight();
  std::uniform_int_distribution<std::size_t> pick(0, boundary.size() - 1);
  for (int i = 0; i < samples; ++i) {
    const IntWeightTriple t = boundary[pick(rng)];
    const SU2Matrix h = haar_su2(rng);
    const AlgebraElement x = random_algebra(rng);
    const Mat2 theta_l = adjoint(h.inverse(), x.matrix());
    for (const ChartTriple& c : valid_chart_triples(t)) {
      const double lhs = eval_A_connection(t, c, h, x);
      const std::int64_t xi = boundary_char_index(t, c).xi;
      const double rhs =
          (Complex(0.0, 1.0) * static_cast<double>(xi) * trace(lam * theta_l)).real();
      const double defect = std::abs(lhs - rhs);
      if (defect > res.max_residual) res.max_residual = defect;
      if (defect > res.tolerance && res.pass) {
        res.pass = false;
        std::ostringstream os;
        os << "triple (" << t.lambda << ", " << t.mu << ", " << t.nu << ") charts ("
           << c.l1() << ", " << c.m2() << ", " << c.nu_chart() << ")";
        res.detail = os.str();
      }
    }
  }
  return res;
}

int cmd_geometry(const RunConfig& cfg, int level, int samples, double step,
                 std::ostream& out, std::ostream& err) {
  const Level k(level);
  std::vector<CheckResult> checks;
  checks.push_back(check_junction(cfg, k, samples));
  checks.push_back(check_face_signs(cfg, k, std::max(50, samples / 2)));
  checks.push_back(check_omega(cfg, k, samples));
  checks.push_back(check_pw(cfg, k, std::min(samples, 50), step));
  checks.push_back(check_period(cfg, k, err));
  checks.push_back(check_connection(cfg, k, samples));

  bool all_pass = true;
  for (const CheckResult& c : checks) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-18s max residual %s  tol %s  %s\n",
                  c.name.c_str(), fmt_sci(c.max_residual).c_str(),
                  fmt_sci(c.tolerance).c_str(), c.pass ? "pass" : "FAIL");
    out << buf;
    if (!c.pass) {
      all_pass = false;
      out << "  offending sample: " << c.detail << " (seed " << cfg.seed << ")\n";
    }
  }
  out << "geometry-check " << (all_pass ? "passed" : "FAILED") << " (level " << level
      << ", samples " << samples << ", seed " << cfg.seed << ", step "
      << fmt_sci(step, 1) << ")\n";
  return all_pass ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"affine su(2)_k fusion rules from gerbe 2-isomorphisms"};
  app.name("fusion-gerbe");
  app.fallthrough();  // global flags may follow the subcommand

  RunConfig cfg;
  if (const char* env = std::getenv("FUSION_GERBE_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) cfg.workers = w;
  }
  std::vector<std::string> tolerance_specs;
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "master seed for all sampling")
      ->capture_default_str();
  app.add_option("--workers", cfg.workers, "worker thread count")
      ->check(CLI::PositiveNumber);
  app.add_option("--tolerance", tolerance_specs,
                 "override a check tolerance, e.g. --tolerance pw=1e-4");

  auto* fusion = app.add_subcommand("fusion", "fusion product of two weights");
  int f_level = 0;
  std::int64_t f_lambda = 0, f_mu = 0;
  fusion->add_option("--level,-k", f_level, "level k")->required()->check(CLI::PositiveNumber);
  fusion->add_option("--lambda", f_lambda, "first weight")->required();
  fusion->add_option("--mu", f_mu, "second weight")->required();

  auto* verify = app.add_subcommand("verify", "verify V = V_G for k = 1..max");
  int v_max = 12;
  int v_eps = 0;
  verify->add_option("--max-level", v_max, "largest level to check")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--interior-epsilon", v_eps,
                     "interior character branch (0 established, 1 rejected)")
      ->check(CLI::Range(0, 1));

  auto* polytope = app.add_subcommand("polytope", "export the fusion polytope data");
  int p_level = 0;
  std::string p_out;
  polytope->add_option("--level,-k", p_level, "level k")->required()->check(CLI::PositiveNumber);
  polytope->add_option("--out", p_out, "path of the JSON export");

  auto* geometry =
      app.add_subcommand("geometry-check", "run the differential-geometry check suite");
  int g_level = 4, g_samples = 100;
  double g_step = 1e-4;
  geometry->add_option("--level,-k", g_level, "level k")->check(CLI::PositiveNumber);
  geometry->add_option("--samples", g_samples, "samples per check")
      ->check(CLI::PositiveNumber);
  geometry->add_option("--step", g_step, "finite-difference step")
      ->check(CLI::PositiveNumber);

  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("fusion-gerbe");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fusion-gerbe: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kExitUsage;
  }

  for (const std::string& spec : tolerance_specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) {
      err << "fusion-gerbe: --tolerance expects <name>=<value>\n";
      return kExitUsage;
    }
    try {
      cfg.tolerances[spec.substr(0, eq)] = std::stod(spec.substr(eq + 1));
    } catch (const std::exception&) {
      err << "fusion-gerbe: bad tolerance value in '" << spec << "'\n";
      return kExitUsage;
    }
  }

  try {
    if (fusion->parsed()) return cmd_fusion(cfg, f_level, f_lambda, f_mu, out, err);
    if (verify->parsed()) return cmd_verify(cfg, v_max, v_eps, out, err);
    if (polytope->parsed()) return cmd_polytope(cfg, p_level, p_out, out, err);
    if (geometry->parsed()) return cmd_geometry(cfg, g_level, g_samples, g_step, out, err);
  } catch (const std::exception& e) {
    err << "fusion-gerbe: " << e.what() << "\n";
    return kExitFailure;
  }
  err << "fusion-gerbe: no subcommand\n";
  return kExitUsage;
}

}  // namespace fusion_gerbe::cli
