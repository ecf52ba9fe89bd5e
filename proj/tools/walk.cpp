// walk.cpp
// Command line front end: run walks and write distributions, emit the
// numeric verification report, and compare distribution files.
//
// Exit codes: 0 success, 1 verify/compare check failed, 2 invalid
// configuration or arguments, 3 internal invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qwalk/qwalk.hpp"

using json = nlohmann::json;
using namespace qwalk;

namespace {

const double kPi = std::acos(-1.0);

struct RunOptions {
  std::string lattice;
  int steps = 0;
  std::vector<std::string> thetas;
  std::string initial = "down";
  std::string origin_type;
  std::string ordering;
  std::string out;
  std::string format = "csv";
};

struct VerifyOptions {
  std::vector<std::string> checks;
  bool oracle_flag = false;
  bool hamiltonian_flag = false;
  double degenerate_tolerance = degeneracy_guard;
  int grid = 5;
  std::string out;
};

struct CompareOptions {
  std::string file_a;
  std::string file_b;
  std::optional<double> tolerance;
};

LatticeKind parse_lattice(const std::string& name) {
  if (name == "line") return LatticeKind::Line;
  if (name == "square") return LatticeKind::Square;
  if (name == "cubic") return LatticeKind::Cubic;
  if (name == "triangular") return LatticeKind::Triangular;
  if (name == "kagome") return LatticeKind::Kagome;
  throw std::invalid_argument("unknown lattice: " + name);
}

PauliAxis parse_axis(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'x': return PauliAxis::X;
    case 'y': return PauliAxis::Y;
    case 'z': return PauliAxis::Z;
  }
  throw std::invalid_argument(std::string("unknown axis: ") + c);
}

Spinor2 parse_initial(const std::string& s) {
  if (s == "down") return spin_down();
  if (s == "up") return spin_up();
  if (s == "plus-i") return spin_plus_i();
  const std::string prefix = "delta-eta:";
  if (s.rfind(prefix, 0) == 0) {
    const std::string rest = s.substr(prefix.size());
    const auto sep = rest.find(':');
    if (sep == std::string::npos)
      throw std::invalid_argument("expected delta-eta:<delta>:<eta>");
    return spin_delta_eta(std::stod(rest.substr(0, sep)),
                          std::stod(rest.substr(sep + 1)));
  }
  throw std::invalid_argument("unknown initial state preset: " + s);
}

std::vector<PauliAxis> parse_ordering(const std::string& s) {
  std::vector<PauliAxis> order;
  for (char c : s) {
    if (c == ',' || c == ' ') continue;
    order.push_back(parse_axis(c));
  }
  return order;
}

KagomeSiteType parse_origin_type(const std::string& s) {
  if (s == "o") return KagomeSiteType::O;
  if (s == "p") return KagomeSiteType::P;
  if (s == "q") return KagomeSiteType::Q;
  throw std::invalid_argument("origin type must be one of o, p, q");
}

// "--theta v" applies v everywhere, "--theta axis=v" overrides one axis.
std::array<double, 3> parse_thetas(const std::vector<std::string>& specs) {
  std::array<double, 3> thetas{0.0, 0.0, 0.0};
  std::array<bool, 3> pinned{false, false, false};
  for (const auto& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      const double v = std::stod(s);
      for (int i = 0; i < 3; ++i)
        if (!pinned[i]) thetas[i] = v;
    } else {
      if (eq != 1) throw std::invalid_argument("expected axis=value: " + s);
      const PauliAxis axis = parse_axis(s[0]);
      thetas[static_cast<int>(axis)] = std::stod(s.substr(eq + 1));
      pinned[static_cast<int>(axis)] = true;
    }
  }
  return thetas;
}

std::string ordering_string(const std::vector<PauliAxis>& order) {
  std::string s;
  for (auto a : order) s += axis_name(a);
  return s;
}

json distribution_rows(const Distribution& d) {
  json rows = json::array();
  for (const auto& [pos, prob] : d.sorted_entries()) {
    json row = json::array();
    for (int i = 0; i < d.dim; ++i) row.push_back(pos.c[i]);
    row.push_back(prob);
    rows.push_back(row);
  }
  return rows;
}

int do_run(const RunOptions& opt) {
  if (opt.steps < 0) throw std::invalid_argument("steps must be non-negative");
  if (opt.format != "csv" && opt.format != "json")
    throw std::invalid_argument("format must be csv or json");

  Distribution dist;
  json config_echo;
  config_echo["lattice"] = opt.lattice;
  config_echo["steps"] = opt.steps;

  if (opt.lattice == "grover-square") {
    if (!opt.thetas.empty() || !opt.ordering.empty() ||
        !opt.origin_type.empty() || opt.initial != "down")
      throw std::invalid_argument(
          "grover-square has a fixed coin, initial state and ordering");
    const GroverField f = grover_evolve_field(opt.steps);
    if (std::abs(f.norm2() - 1.0) > 1e-9) {
      std::cerr << "internal invariant violation: normalization breach\n";
      return 3;
    }
    dist = distribution(f);
    config_echo["initial"] = "grover";
  } else {
    WalkConfig cfg;
    cfg.lattice = lattice_spec(parse_lattice(opt.lattice));
    cfg.steps = opt.steps;
    cfg.thetas = parse_thetas(opt.thetas);
    cfg.initial_spin = parse_initial(opt.initial);
    if (!opt.origin_type.empty()) {
      if (cfg.lattice.kind != LatticeKind::Kagome)
        throw std::invalid_argument("--origin-type applies to kagome only");
      cfg.origin_type = parse_origin_type(opt.origin_type);
    }
    if (!opt.ordering.empty())
      cfg.ordering_override = parse_ordering(opt.ordering);
    validate(cfg);

    const SpinorField f = evolve(cfg);
    if (std::abs(f.norm2() - 1.0) > 1e-9) {
      std::cerr << "internal invariant violation: normalization breach\n";
      return 3;
    }
    dist = distribution(f, cfg.lattice.dim);

    json thetas_echo;
    for (auto a : cfg.lattice.ordering)
      thetas_echo[std::string(1, axis_name(a))] = cfg.theta(a);
    config_echo["thetas"] = thetas_echo;
    config_echo["initial"] = opt.initial;
    config_echo["ordering"] = ordering_string(cfg.effective_ordering());
    if (cfg.lattice.kind == LatticeKind::Kagome)
      config_echo["origin_type"] =
          std::string(1, kagome_type_name(cfg.origin_type));
  }

  config_echo["format"] = opt.format;
  json manifest;
  manifest["config"] = config_echo;
  manifest["library_version"] = version;

  if (opt.format == "csv") {
    const std::string body = distribution_csv(dist);
    manifest["checksum_fnv1a64"] = to_hex(fnv1a64(body));
    if (opt.out.empty()) {
      std::cout << body;
    } else {
      write_file(opt.out, body);
      manifest["output"] = opt.out;
      write_file(opt.out + ".manifest.json", manifest.dump(2) + "\n");
    }
  } else {
    json doc;
    const json rows = distribution_rows(dist);
    manifest["checksum_fnv1a64"] = to_hex(fnv1a64(rows.dump()));
    doc["manifest"] = manifest;
    doc["columns"] = coordinate_names(dist.dim);
    doc["columns"].push_back("p");
    doc["rows"] = rows;
    const std::string body = doc.dump(2) + "\n";
    if (opt.out.empty())
      std::cout << body;
    else
      write_file(opt.out, body);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
  bool passed = true;
  std::vector<std::string> failed_names;

  void require(bool ok, const std::string& name) {
    if (!ok) {
      passed = false;
      failed_names.push_back(name);
    }
  }
};

json verify_oracles(CheckResult& result) {
  json j;

  // Two-component recurrence vs the coinless square engine.
  {
    const Spinor2 spin = spin_plus_i();
    const auto table = two_state_recursion(10, spin.down, spin.up);
    WalkConfig cfg;
    cfg.lattice = lattice_spec(LatticeKind::Square);
    cfg.initial_spin = spin;
    SpinorField f = initial_state(cfg);
    const SpinorField f1 = step(f, cfg);
    const auto map = determine_correspondence(table.layer(1), f1);
    json sub;
    sub["correspondence_found"] = map.has_value();
    double maxdiff = 0.0;
    if (map) {
      sub["coordinate_map"] = map->name();
      for (int t = 0; t <= 10; ++t) {
        maxdiff = std::max(
            maxdiff, max_abs_diff(distribution(f, 2),
                                  layer_distribution(table.layer(t), *map)));
        if (t < 10) f = step(f, cfg);
      }
      sub["max_abs_diff"] = maxdiff;
    }
    const bool ok = map.has_value() && maxdiff < 1e-10;
    sub["passed"] = ok;
    result.require(ok, "oracle.two_state_recursion");
    j["two_state"] = sub;
  }

  // Four-component recurrence vs the grover engine; the verbatim source
  // layout is tried first, the index-consistent one only on failure.
  {
    json sub;
    bool ok = false;
    for (auto variant : {GroverRecursionVariant::Verbatim,
                         GroverRecursionVariant::IndexConsistent}) {
      const auto table = grover_recursion(10, variant);
      const auto f1 = grover_evolve_field(1);
      const auto map = determine_correspondence(table.layer(1), f1);
      if (!map) continue;
      double maxdiff = 0.0;
      GroverField f = grover_evolve_field(0);
      for (int t = 0; t <= 10; ++t) {
        maxdiff = std::max(
            maxdiff, max_abs_diff(distribution(f),
                                  layer_distribution(table.layer(t), *map)));
        if (t < 10) f = grover_step(f);
      }
      if (maxdiff < 1e-10) {
        sub["variant"] = variant == GroverRecursionVariant::Verbatim
                             ? "verbatim"
                             : "index-consistent";
        sub["coordinate_map"] = map->name();
        sub["max_abs_diff"] = maxdiff;
        ok = true;
        break;
      }
    }
    sub["passed"] = ok;
    result.require(ok, "oracle.grover_recursion");
    j["grover"] = sub;
  }

  return j;
}

json verify_hamiltonians(CheckResult& result, double degenerate_tolerance,
                         int grid) {
  json j;

  {
    std::mt19937 rng(20260808);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    double max_roundtrip = 0.0, max_recon = 0.0, max_product = 0.0,
           max_modulus = 0.0, max_hermiticity = 0.0;
    int samples = 0;
    while (samples < 100) {
      const double th = u(rng), k = u(rng);
      if (degeneracy_margin(th, k) <= 1e-6) continue;
      ++samples;
      for (auto axis : all_axes) {
        const Matrix2 h = hamiltonian_matrix(axis, th, k);
        const Matrix2 w = walk_momentum_matrix(axis, th, k);
        max_roundtrip = std::max(
            max_roundtrip,
            (expm(Complex{0.0, -1.0} * h) - w).frobenius_norm());
        max_hermiticity =
            std::max(max_hermiticity, (h - h.adjoint()).frobenius_norm());
      }
      const EigenSystem e = eigensystem(th, k);
      const Matrix2 diag = mat2(e.lambda_minus, Complex{}, Complex{},
                             e.lambda_plus);
      max_recon = std::max(
          max_recon, (e.v * diag * e.v_inv -
                      walk_momentum_matrix(PauliAxis::Z, th, k))
                         .frobenius_norm());
      max_product = std::max(
          max_product, std::abs(e.lambda_minus * e.lambda_plus - Complex{1.0}));
      max_modulus =
          std::max({max_modulus, std::abs(std::abs(e.lambda_minus) - 1.0),
                    std::abs(std::abs(e.lambda_plus) - 1.0)});
    }

    double theta0_residual = 0.0;
    for (auto axis : all_axes)
      for (int i = 1; i <= 6; ++i) {
        const double k = -kPi + 2.0 * kPi * i / 7.0;
        theta0_residual = std::max(
            theta0_residual,
            (hamiltonian_matrix(axis, 0.0, k) - theta0_hamiltonian(axis, k))
                .frobenius_norm());
        theta0_residual = std::max(
            theta0_residual,
            (expm(Complex{0.0, -1.0} * theta0_hamiltonian(axis, k)) -
             walk_momentum_matrix(axis, 0.0, k))
                .frobenius_norm());
      }

    json sub;
    sub["samples"] = samples;
    sub["max_exp_roundtrip_residual"] = max_roundtrip;
    sub["max_reconstruction_residual"] = max_recon;
    sub["max_eigenvalue_product_residual"] = max_product;
    sub["max_eigenvalue_modulus_residual"] = max_modulus;
    sub["max_hermiticity_residual"] = max_hermiticity;
    sub["theta0_max_residual"] = theta0_residual;
    const bool ok = max_roundtrip < 1e-8 && max_recon < 1e-10 &&
                    max_product < 1e-12 && max_modulus < 1e-12 &&
                    max_hermiticity < 1e-10 && theta0_residual < 1e-12;
    sub["passed"] = ok;
    result.require(ok, "hamiltonian.spectral");
    j["spectral"] = sub;
  }

  {
    json reports = json::array();
    int skipped_total = 0;
    bool complete = true;
    for (double theta : {0.0, kPi / 12.0}) {
      const auto rep =
          triangular_commutator_report(theta, grid, degenerate_tolerance);
      json r;
      r["theta"] = rep.theta;
      r["grid_points_per_axis"] = rep.grid_points_per_axis;
      r["total_points"] = rep.total_points;
      r["evaluated"] = rep.evaluated;
      r["skipped_degenerate"] = rep.skipped_degenerate;
      r["max_commutator_norm"] = rep.max_commutator_norm;
      r["mean_commutator_norm"] = rep.mean_commutator_norm;
      r["max_exp_residual"] = rep.max_exp_residual;
      r["mean_exp_residual"] = rep.mean_exp_residual;
      reports.push_back(r);
      skipped_total += rep.skipped_degenerate;
      complete &= (rep.evaluated + rep.skipped_degenerate == rep.total_points);
    }
    json sub;
    sub["reports"] = reports;
    sub["skipped_degenerate_total"] = skipped_total;
    sub["passed"] = complete;
    result.require(complete, "hamiltonian.triangular_commutators");
    j["triangular_commutators"] = sub;
  }

  return j;
}

int do_verify(const VerifyOptions& opt) {
  std::set<std::string> selected;
  for (const auto& c : opt.checks) {
    if (c != "oracle" && c != "hamiltonian")
      throw std::invalid_argument("unknown check name: " + c);
    selected.insert(c);
  }
  if (opt.oracle_flag) selected.insert("oracle");
  if (opt.hamiltonian_flag) selected.insert("hamiltonian");
  if (selected.empty()) selected = {"oracle", "hamiltonian"};

  CheckResult result;
  json report;
  report["library_version"] = version;
  if (selected.count("oracle")) report["oracle"] = verify_oracles(result);
  if (selected.count("hamiltonian"))
    report["hamiltonian"] =
        verify_hamiltonians(result, opt.degenerate_tolerance, opt.grid);
  report["passed"] = result.passed;

  const std::string body = report.dump(2) + "\n";
  if (opt.out.empty())
    std::cout << body;
  else
    write_file(opt.out, body);

  if (!result.passed) {
    for (const auto& name : result.failed_names)
      std::cerr << "check failed: " << name << "\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// compare

Distribution load_distribution(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const json doc = json::parse(text);
    const json& rows = doc.contains("rows") ? doc.at("rows")
                                            : doc.at("distribution");
    Distribution d;
    d.dim = 0;
    for (const auto& row : rows) {
      if (d.dim == 0) d.dim = static_cast<int>(row.size()) - 1;
      Position pos{};
      for (int i = 0; i < d.dim; ++i) pos.c[i] = row.at(i).get<std::int32_t>();
      d.p[pos] += row.at(d.dim).get<double>();
    }
    return d;
  }
  return parse_distribution_csv(text);
}

int do_compare(const CompareOptions& opt) {
  const Distribution a = load_distribution(opt.file_a);
  const Distribution b = load_distribution(opt.file_b);
  if (a.dim != b.dim)
    throw std::invalid_argument("distributions have different dimensions");
  const double diff = max_abs_diff(a, b);
  std::printf("max_abs_diff %.17g\n", diff);
  if (opt.tolerance && diff > *opt.tolerance) {
    std::cerr << "difference exceeds tolerance " << *opt.tolerance << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-state quantum walk simulator"};
  app.require_subcommand(1);

  RunOptions run_opt;
  auto* run = app.add_subcommand("run", "evolve a walk and write the "
                                        "probability distribution");
  run->add_option("--lattice", run_opt.lattice,
                  "line, square, cubic, triangular, kagome or grover-square")
      ->required();
  run->add_option("--steps", run_opt.steps, "number of full steps")
      ->required();
  run->add_option("--theta", run_opt.thetas,
                  "coin angle in radians: value, or axis=value per axis");
  run->add_option("--initial", run_opt.initial,
                  "down, up, plus-i or delta-eta:<delta>:<eta>");
  run->add_option("--origin-type", run_opt.origin_type,
                  "kagome origin site type: o, p or q");
  run->add_option("--ordering", run_opt.ordering,
                  "sub-step ordering override, e.g. zxy");
  run->add_option("--out", run_opt.out, "output file (stdout when omitted)");
  run->add_option("--format", run_opt.format, "csv or json");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand(
      "verify", "run the numeric verification suites and emit a JSON report");
  verify->add_option("--check", verify_opt.checks,
                     "check group to run: oracle or hamiltonian");
  verify->add_flag("--oracle-check", verify_opt.oracle_flag,
                   "run the recurrence oracle checks");
  verify->add_flag("--hamiltonian-check", verify_opt.hamiltonian_flag,
                   "run the momentum-space checks");
  verify->add_option("--degenerate-tolerance",
                     verify_opt.degenerate_tolerance,
                     "margin below which grid points are skipped");
  verify->add_option("--grid", verify_opt.grid,
                     "points per axis of the commutator momentum grid");
  verify->add_option("--out", verify_opt.out, "report file (default stdout)");

  CompareOptions cmp_opt;
  auto* compare = app.add_subcommand(
      "compare", "compare two distribution files by max abs difference");
  compare->add_option("fileA", cmp_opt.file_a)->required();
  compare->add_option("fileB", cmp_opt.file_b)->required();
  double tol = 0.0;
  auto* tol_opt = compare->add_option("--tolerance", tol,
                                      "fail when the difference exceeds this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*run) return do_run(run_opt);
    if (*verify) return do_verify(verify_opt);
    if (*compare) {
      if (*tol_opt) cmp_opt.tolerance = tol;
      return do_compare(cmp_opt);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
