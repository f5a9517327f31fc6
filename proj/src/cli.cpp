#include "skewent/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "skewent/criteria.hpp"
#include "skewent/format.hpp"
#include "skewent/scan.hpp"
#include "skewent/selftest.hpp"
#include "skewent/state_spec.hpp"

namespace skewent {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : Error {
  using Error::Error;
};

struct Common {
  std::string s = "-inf";
  std::optional<int> k;
  std::string mode = "separable";
  std::string criterion = "prop1";
  std::string out;
  std::string format = "json";
  std::string weights = "0,0,1";
  double tol = 0.0;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string pretty(const std::string& compact) { return Json::parse(compact).dump(2); }

std::string pretty_array(const std::vector<std::string>& items) {
  Json arr = Json::array();
  for (const auto& i : items) arr.push_back(Json::parse(i));
  return arr.dump(2);
}

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string q = "\"";
  for (char c : v) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

WeightedObservableSpec parse_weights(const std::string& text, const QuantumState& state) {
  std::vector<double> c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      c.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw UsageError("--weights: '" + tok + "' is not a number");
    }
  }
  if (c.size() != 3) throw UsageError("--weights expects three values cx,cy,cz");
  for (auto d : state.dims())
    if (d != 2) throw UsageError("prop2 with --weights needs qubit sites");
  return pauli_spec(state.num_sites(), c[0], c[1], c[2]);
}

void warn_uncertified(OrderParam s) {
  if (s.is_neg_infinity() || s.value() < -1.0)
    std::cerr << "warning: s = " << s.to_string()
              << " is below -1; skew information is not convex there and the bounds can be exceeded by "
                 "separable mixed states\n";
}

Mode parse_mode(const Common& c) {
  if (!c.k) throw UsageError("--k is required");
  return Mode{parse_mode_kind(c.mode), *c.k};
}

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (auto a : allowed)
    if (f == a) return;
  throw UsageError("unsupported --format '" + f + "'");
}

std::vector<Mode> modes_for(const Common& c, std::size_t n) {
  const ModeKind kind = parse_mode_kind(c.mode);
  if (c.k) {
    Mode m{kind, *c.k};
    m.validate(n);
    return {m};
  }
  std::vector<Mode> all;
  const int sites = static_cast<int>(n);
  if (kind == ModeKind::separable)
    for (int k = 2; k <= sites; ++k) all.push_back(Mode::separable(k));
  else
    for (int k = 1; k <= sites - 1; ++k) all.push_back(Mode::producible(k));
  return all;
}

// ---------------------------------------------------------------- detect

int run_detect(const Common& c, const std::string& state_text, bool expect) {
  require_format(c.format, {"json", "csv"});
  const StateSpec spec = parse_state_spec(state_text);
  const QuantumState state = evaluate(spec);
  const OrderParam s = OrderParam::parse(c.s);
  warn_uncertified(s);
  const Mode mode = parse_mode(c);
  const Criterion crit = parse_criterion(c.criterion);
  const CriterionReport r = crit == Criterion::prop1
                                ? prop1_evaluate(state, s, mode, spec.to_string())
                                : prop2_evaluate(state, parse_weights(c.weights, state), s, mode, spec.to_string());
  if (c.format == "json") {
    emit(pretty(to_json(r)), c.out);
  } else {
    std::ostringstream os;
    os << "criterion,k,mode,s,lhs,bound,margin,violated,interpretation,state_spec\n"
       << to_string(r.criterion) << ',' << r.mode.k << ',' << r.mode.name() << ',' << r.s.to_string() << ','
       << format_sig(r.lhs) << ',' << format_sig(r.bound) << ',' << format_sig(r.margin) << ','
       << (r.violated ? 1 : 0) << ',' << csv_field(r.interpretation) << ',' << csv_field(r.state_spec) << '\n';
    emit(os.str(), c.out);
  }
  return expect && !r.violated ? kExitNotViolated : kExitOk;
}

// ---------------------------------------------------------------- scan

int run_scan(const Common& c, const std::string& target_text, double step, double p_lo, double p_hi) {
  require_format(c.format, {"json", "csv"});
  const StateSpec spec = parse_state_spec(target_text);
  NoiseFamily family{evaluate(spec), "p*" + spec.to_string() + "+(1-p)*white"};
  const OrderParam s = OrderParam::parse(c.s);
  warn_uncertified(s);
  const Criterion crit = parse_criterion(c.criterion);
  std::vector<CriterionConfig> configs;
  for (const auto& m : modes_for(c, family.target.num_sites())) {
    CriterionConfig cfg{crit, m, s, std::nullopt};
    if (crit == Criterion::prop2) cfg.observable = parse_weights(c.weights, family.target);
    configs.push_back(std::move(cfg));
  }
  ThresholdOptions opt;
  opt.coarse_step = step;
  opt.p_lo = p_lo;
  opt.p_hi = p_hi;
  if (c.tol > 0.0) opt.tol = c.tol;
  const auto results = threshold_scan(family, configs, opt);

  if (c.format == "json") {
    std::vector<std::string> items;
    for (const auto& r : results) items.push_back(to_json(r));
    emit(pretty_array(items), c.out);
  } else {
    std::ostringstream os;
    os << "id,bound,p_star,bracket_lo,bracket_hi,residual,crossings\n";
    for (const auto& r : results) {
      os << r.config.id() << ',' << format_sig(r.bound) << ',';
      if (r.p_star)
        os << format_sig(*r.p_star) << ',' << format_sig(r.brackets.front().lo) << ','
           << format_sig(r.brackets.front().hi) << ',' << format_sig(r.residual);
      else
        os << ",,,";
      os << ',' << r.brackets.size() << '\n';
    }
    emit(os.str(), c.out);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- region

int run_region(const Common& c, double step, bool with_prop1) {
  require_format(c.format, {"csv", "json"});
  const auto family = ghz_family(6);
  const OrderParam s = OrderParam::parse(c.s);
  const auto sz = pauli_spec(6, 0, 0, 1);
  std::vector<CriterionConfig> configs;
  for (int k = 2; k <= 6; ++k) configs.push_back({Criterion::prop2, Mode::separable(k), s, sz});
  for (int k = 1; k <= 5; ++k) configs.push_back({Criterion::prop2, Mode::producible(k), s, sz});
  if (with_prop1) {
    for (int k = 2; k <= 6; ++k) configs.push_back({Criterion::prop1, Mode::separable(k), s, std::nullopt});
    for (int k = 1; k <= 5; ++k) configs.push_back({Criterion::prop1, Mode::producible(k), s, std::nullopt});
  }
  const auto grid = region_scan(family, configs, step);
  if (c.format == "csv") {
    emit(grid.to_csv(), c.out);
  } else {
    Json j;
    j["family"] = family.description;
    j["step"] = round_sig(grid.step);
    j["columns"] = grid.columns;
    Json cells = Json::array();
    for (const auto& cell : grid.cells) {
      Json row = Json::array();
      row.push_back(round_sig(cell.p));
      row.push_back(round_sig(cell.q));
      for (bool v : cell.violated) row.push_back(v ? 1 : 0);
      cells.push_back(std::move(row));
    }
    j["cells"] = std::move(cells);
    emit(j.dump(), c.out);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- tables

int run_table(const std::string& name, const Common& c) {
  require_format(c.format, {"json", "csv"});
  const double tol = c.tol > 0.0 ? c.tol : 5e-4;
  const auto report = reproduce_table(name, tol);
  emit(c.format == "json" ? pretty(report.to_json()) : report.to_csv(), c.out);
  for (const auto& row : report.rows)
    if (!row.note.empty()) std::cerr << name << " k=" << row.k << ": " << row.note << '\n';
  return report.passed() ? kExitOk : kExitValidation;
}

// ---------------------------------------------------------------- bases

Json operator_json(const Operator& op) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < op.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < op.cols(); ++j) row.push_back({round_sig(op(i, j).real()), round_sig(op(i, j).imag())});
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_bases(const Common& c, std::size_t dim, std::size_t site_dim, const std::string& order_text, bool check) {
  if (dim < 2) throw UsageError("--dim must be at least 2");
  if (site_dim == 0) site_dim = dim;
  if (site_dim < 2 || site_dim > dim) throw UsageError("--site-dim must lie in [2, --dim]");
  BasisOrder order;
  if (order_text == "padded")
    order = BasisOrder::padded;
  else if (order_text == "h")
    order = BasisOrder::slotted;
  else
    throw UsageError("--order must be 'padded' or 'h'");

  const LocalBasis basis = local_basis(order, site_dim, dim);
  Json j;
  j["site_dim"] = site_dim;
  j["max_dim"] = dim;
  j["order"] = order_text;
  Json ops = Json::array();
  for (const auto& op : basis.operators) ops.push_back(operator_json(op));
  j["operators"] = std::move(ops);

  bool ok = true;
  if (check) {
    SelftestOptions opt;
    Json checks = Json::array();
    for (const char* name : {"observables.orthonormality", "observables.slotted_identities"}) {
      const auto r = run_check(name, opt);
      ok = ok && r.passed;
      Json e;
      e["name"] = r.name;
      e["passed"] = r.passed;
      e["worst"] = round_sig(r.worst);
      e["tol"] = r.tol;
      checks.push_back(std::move(e));
    }
    // Gram matrix and hermiticity of the basis just printed.
    double gram = 0.0;
    for (std::size_t u = 0; u < basis.operators.size(); ++u) {
      gram = std::max(gram, hermiticity_defect(basis.operators[u]));
      for (std::size_t v = 0; v < basis.operators.size(); ++v) {
        const bool zero_u = basis.operators[u].isZero(0.0);
        const double expected = u == v && !zero_u ? 1.0 : 0.0;
        gram = std::max(gram, std::abs((basis.operators[u] * basis.operators[v]).trace() - expected));
      }
    }
    Json e;
    e["name"] = "requested_basis_gram";
    e["passed"] = gram <= 1e-12;
    e["worst"] = round_sig(gram);
    e["tol"] = 1e-12;
    ok = ok && gram <= 1e-12;
    checks.push_back(std::move(e));
    j["checks"] = std::move(checks);
  }
  emit(c.format == "json" ? j.dump() : j.dump(2), c.out);
  return ok ? kExitOk : kExitValidation;
}

// ---------------------------------------------------------------- selftest

int run_selftest_cmd(const Common& c, std::uint64_t seed, std::size_t fuzz, bool skip_tables,
                     const std::vector<std::string>& only) {
  require_format(c.format, {"text", "json"});
  SelftestOptions opt;
  opt.seed = seed;
  if (fuzz > 0) opt.fuzz_states = fuzz;
  opt.include_tables = !skip_tables;

  std::vector<CheckResult> results;
  auto report = [&](const CheckResult& r) {
    if (c.format == "text")
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  instances=" << r.instances
                << " worst=" << format_sig(r.worst) << " tol=" << format_sig(r.tol) << " time="
                << format_sig(r.seconds) << "s" << (r.detail.empty() ? "" : "  " + r.detail) << std::endl;
  };
  if (only.empty()) {
    results = run_selftest(opt, report);
  } else {
    for (const auto& name : only) {
      results.push_back(run_check(name, opt));
      report(results.back());
    }
  }

  bool ok = true;
  Json arr = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    Json e;
    e["name"] = r.name;
    e["passed"] = r.passed;
    e["instances"] = r.instances;
    e["worst"] = round_sig(r.worst);
    e["tol"] = r.tol;
    e["seconds"] = round_sig(r.seconds);
    e["detail"] = r.detail;
    arr.push_back(std::move(e));
  }
  if (c.format == "json")
    emit(arr.dump(2), c.out);
  else if (!c.out.empty())
    emit(arr.dump(2), c.out);
  if (c.format == "text") std::cout << (ok ? "selftest passed" : "selftest FAILED") << std::endl;
  return ok ? kExitOk : kExitValidation;
}

void add_common(CLI::App* app, Common& c, bool criterion_flags) {
  app->add_option("--out", c.out, "Output path (default stdout)");
  app->add_option("--format", c.format, "json or csv");
  app->add_option("--tol", c.tol, "Tolerance");
  if (!criterion_flags) return;
  app->add_option("--s", c.s, "Order parameter, a value <= 0 or -inf");
  app->add_option("--k", c.k, "Partition parameter k");
  app->add_option("--mode", c.mode, "separable or producible");
  app->add_option("--criterion", c.criterion, "prop1 or prop2");
  app->add_option("--weights", c.weights, "Pauli weights cx,cy,cz for prop2");
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"k-nonseparability and k-partite entanglement detection via generalized skew information",
               "skewent"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "skewent 1.0.0");

  Common c;
  std::string state_text, target_text = "dicke(N=6,m=3)", order_text = "padded";
  std::vector<std::string> only;
  bool expect = false, with_prop1 = false, check = false, skip_tables = false;
  double scan_step = 1e-3, region_step = 0.01, p_lo = 0.0, p_hi = 1.0;
  std::size_t dim = 0, site_dim = 0, fuzz = 0;
  std::uint64_t seed = SelftestOptions{}.seed;

  auto* detect = app.add_subcommand("detect", "Evaluate one criterion on a state");
  add_common(detect, c, true);
  detect->add_option("--state", state_text, "State expression")->required();
  detect->add_flag("--expect-violation", expect, "Exit 1 when the criterion is not violated");

  auto* scan = app.add_subcommand("scan", "Noise threshold of p*target + (1-p)*white");
  add_common(scan, c, true);
  scan->add_option("--target", target_text, "Target state expression");
  scan->add_option("--step", scan_step, "Coarse grid step");
  scan->add_option("--p-lo", p_lo, "Lower end of the p range");
  scan->add_option("--p-hi", p_hi, "Upper end of the p range");

  auto* region = app.add_subcommand("region", "Verdict grid over the GHZ / phased GHZ / white noise simplex");
  add_common(region, c, false);
  region->add_option("--s", c.s, "Order parameter");
  region->add_option("--step", region_step, "Grid step");
  region->add_flag("--with-prop1", with_prop1, "Add collective-basis criterion columns");

  auto* table1 = app.add_subcommand("table1", "Separable thresholds of the Dicke family");
  add_common(table1, c, false);
  auto* table2 = app.add_subcommand("table2", "Producible thresholds of the Dicke family");
  add_common(table2, c, false);

  auto* bases = app.add_subcommand("bases", "Print a local observable basis");
  add_common(bases, c, false);
  bases->add_option("--dim", dim, "Largest site dimension d")->required();
  bases->add_option("--site-dim", site_dim, "Site dimension (default d)");
  bases->add_option("--order", order_text, "padded or h");
  bases->add_flag("--check", check, "Run the basis identity checks");

  auto* self = app.add_subcommand("selftest", "Run the invariant suite");
  add_common(self, c, false);
  self->add_option("--seed", seed, "Base seed");
  self->add_option("--fuzz", fuzz, "Random states per soundness check");
  self->add_option("--only", only, "Run only the named checks");
  self->add_flag("--skip-tables", skip_tables, "Skip the table reproductions");
  self->callback([&] {
    if (self->count("--format") == 0) c.format = "text";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*detect) return run_detect(c, state_text, expect);
    if (*scan) return run_scan(c, target_text, scan_step, p_lo, p_hi);
    if (*region) {
      if (region->count("--format") == 0) c.format = "csv";
      return run_region(c, region_step, with_prop1);
    }
    if (*table1) return run_table("table1", c);
    if (*table2) return run_table("table2", c);
    if (*bases) return run_bases(c, dim, site_dim, order_text, check);
    if (*self) return run_selftest_cmd(c, seed, fuzz, skip_tables, only);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace skewent
