#include "skewent/scan.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <sstream>

#include <json.hpp>

#include "skewent/format.hpp"
#include "skewent/reference.hpp"
#include "skewent/states.hpp"

namespace skewent {

namespace {

Sites all_sites(std::size_t n) {
  Sites s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i;
  return s;
}

// Criteria that share this key have identical left-hand sides.
std::string lhs_key(const CriterionConfig& c) {
  std::string key = to_string(c.criterion) + "|" + c.s.to_string();
  if (c.criterion == Criterion::prop2 && c.observable) {
    const Operator x = build_weighted(*c.observable).op;
    std::ostringstream os;
    os.precision(17);
    for (Eigen::Index i = 0; i < x.size(); ++i) os << x(i).real() << ',' << x(i).imag() << ';';
    key += "|" + os.str();
  }
  return key;
}

nlohmann::ordered_json config_json(const CriterionConfig& c) {
  nlohmann::ordered_json j;
  j["criterion"] = to_string(c.criterion);
  j["mode"] = c.mode.name();
  j["k"] = c.mode.k;
  if (c.s.is_neg_infinity())
    j["s"] = "-inf";
  else
    j["s"] = round_sig(c.s.value());
  return j;
}

std::vector<double> grid_points(const ThresholdOptions& o) {
  if (!(o.coarse_step > 0.0)) throw DomainError("threshold_scan: coarse step must be positive");
  if (!(o.tol > 0.0)) throw DomainError("threshold_scan: tolerance must be positive");
  if (!(o.p_hi > o.p_lo) || o.p_lo < 0.0 || o.p_hi > 1.0)
    throw DomainError("threshold_scan: need 0 <= p_lo < p_hi <= 1");
  const auto n = static_cast<std::size_t>(std::ceil((o.p_hi - o.p_lo) / o.coarse_step - 1e-9));
  std::vector<double> p(n + 1);
  for (std::size_t i = 0; i <= n; ++i) p[i] = std::min(o.p_lo + static_cast<double>(i) * o.coarse_step, o.p_hi);
  p.back() = o.p_hi;
  return p;
}

template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

Operator mix_with_noise(std::initializer_list<std::pair<double, const Operator*>> parts, double noise,
                        std::size_t dim) {
  Operator rho = Operator::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& [w, op] : parts)
    if (w != 0.0) rho += w * *op;
  if (noise != 0.0) rho.diagonal().array() += noise / static_cast<double>(dim);
  return rho;
}

void check_weight(double w, const char* what) {
  if (w < -1e-12 || w > 1.0 + 1e-12) throw DomainError(std::string(what) + ": weight outside [0, 1]");
}

}  // namespace

std::string CriterionConfig::id() const {
  std::string out = to_string(criterion) + "_" + mode.name() + "_k" + std::to_string(mode.k);
  if (!s.is_neg_infinity()) out += "_s" + s.to_string();
  return out;
}

CriterionEvaluator::CriterionEvaluator(const Dims& dims, CriterionConfig config)
    : dims_(dims), config_(std::move(config)) {
  config_.mode.validate(dims_.size());
  const int n = static_cast<int>(dims_.size());
  const int d = static_cast<int>(*std::max_element(dims_.begin(), dims_.end()));
  if (config_.criterion == Criterion::prop1) {
    operators_ = operators_of(collective_set(dims_, all_sites(dims_.size())));
    bound_ = config_.mode.kind == ModeKind::separable ? bound_S(n, config_.mode.k, d)
                                                     : bound_P(n, config_.mode.k, d);
  } else {
    if (!config_.observable) throw DomainError("prop2 criterion needs an observable spec");
    if (config_.observable->dims() != dims_)
      throw DimensionError("prop2: observable site dimensions do not match the state");
    operators_.push_back(build_weighted(*config_.observable).op);
    bound_ = prop2_bound(n, config_.mode, *config_.observable);
  }
}

double CriterionEvaluator::lhs(const QuantumState& state) const {
  if (state.dims() != dims_) throw DimensionError("criterion: state dims differ from evaluator dims");
  return skew_information_sum(state, operators_, config_.s);
}

CriterionReport CriterionEvaluator::evaluate(const QuantumState& state, std::string state_spec) const {
  return make_report(config_.criterion, config_.mode, config_.s, lhs(state), bound_, dims_.size(),
                     std::move(state_spec));
}

QuantumState NoiseFamily::at(double p) const {
  check_weight(p, "noise family");
  return QuantumState::from_density(target.dims(),
                                    mix_with_noise({{p, &target.rho()}}, 1.0 - p, target.dim()));
}

QuantumState NoiseFamily2D::at(double p, double q) const {
  check_weight(p, "noise family");
  check_weight(q, "noise family");
  check_weight(p + q, "noise family");
  if (a.dims() != b.dims()) throw DimensionError("noise family: components have different dims");
  const double noise = std::max(0.0, 1.0 - p - q);
  return QuantumState::from_density(a.dims(), mix_with_noise({{p, &a.rho()}, {q, &b.rho()}}, noise, a.dim()));
}

std::vector<ThresholdResult> threshold_scan(const NoiseFamily& family,
                                            const std::vector<CriterionConfig>& configs,
                                            const ThresholdOptions& options) {
  const auto grid = grid_points(options);
  const Dims& dims = family.target.dims();

  std::vector<CriterionEvaluator> evaluators;
  for (const auto& c : configs) evaluators.emplace_back(dims, c);

  // Coarse-grid lhs values, computed once per distinct left-hand side.
  std::map<std::string, std::vector<double>> lhs_grids;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    const std::string key = lhs_key(configs[c]);
    if (lhs_grids.count(key)) continue;
    std::vector<double> values(grid.size());
    const auto& ev = evaluators[c];
    parallel_for(grid.size(), [&](std::size_t i) { values[i] = ev.lhs(family.at(grid[i])); });
    lhs_grids.emplace(key, std::move(values));
  }

  std::vector<ThresholdResult> out;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    const auto& ev = evaluators[c];
    const auto& values = lhs_grids.at(lhs_key(configs[c]));
    const double bound = ev.bound();
    ThresholdResult r{configs[c], family.description, bound, std::nullopt, {}, 0.0,
                      options.coarse_step, options.tol};
    auto above = [&](double lhs) { return lhs - bound > 0.0; };

    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      const bool left = above(values[i]);
      if (left == above(values[i + 1])) continue;
      double lo = grid[i];
      double hi = grid[i + 1];
      while (hi - lo > options.tol) {
        const double mid = 0.5 * (lo + hi);
        if (above(ev.lhs(family.at(mid))) == left)
          lo = mid;
        else
          hi = mid;
      }
      r.brackets.push_back({lo, hi, !left});
    }
    if (!r.brackets.empty()) {
      const auto& b = r.brackets.front();
      r.p_star = 0.5 * (b.lo + b.hi);
      r.residual = std::abs(ev.lhs(family.at(*r.p_star)) - bound);
    }
    out.push_back(std::move(r));
  }
  return out;
}

ThresholdResult threshold_scan(const NoiseFamily& family, const CriterionConfig& config,
                               const ThresholdOptions& options) {
  return threshold_scan(family, std::vector<CriterionConfig>{config}, options).front();
}

std::string to_json(const ThresholdResult& r) {
  nlohmann::ordered_json j = config_json(r.config);
  j["family"] = r.family;
  j["bound"] = round_sig(r.bound);
  if (r.p_star) {
    j["p_star"] = round_sig(*r.p_star);
    j["p_lo"] = round_sig(r.brackets.front().lo);
    j["p_hi"] = round_sig(r.brackets.front().hi);
    j["residual"] = round_sig(r.residual);
  } else {
    j["p_star"] = nullptr;
    j["status"] = "no threshold in range";
  }
  j["multiple_crossings"] = r.multiple_crossings();
  auto brackets = nlohmann::ordered_json::array();
  for (const auto& b : r.brackets)
    brackets.push_back({{"p_lo", round_sig(b.lo)}, {"p_hi", round_sig(b.hi)},
                        {"direction", b.rising ? "enters" : "leaves"}});
  j["brackets"] = brackets;
  j["coarse_step"] = round_sig(r.coarse_step);
  j["tol"] = round_sig(r.tol);
  return j.dump();
}

const RegionCell* RegionGrid::find(std::size_t i, std::size_t j) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), std::pair{i, j}, [](const RegionCell& c, const auto& key) {
    return std::pair{c.i, c.j} < key;
  });
  if (it == cells.end() || it->i != i || it->j != j) return nullptr;
  return &*it;
}

std::size_t RegionGrid::column(const std::string& id) const {
  const auto it = std::find(columns.begin(), columns.end(), id);
  if (it == columns.end()) throw DomainError("region grid has no column '" + id + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

std::string RegionGrid::to_csv() const {
  std::string out = "p,q";
  for (const auto& c : columns) out += "," + c;
  out += "\n";
  for (const auto& cell : cells) {
    out += format_sig(cell.p) + "," + format_sig(cell.q);
    for (bool v : cell.violated) out += v ? ",1" : ",0";
    out += "\n";
  }
  return out;
}

RegionGrid region_scan(const NoiseFamily2D& family, const std::vector<CriterionConfig>& configs,
                       double step) {
  if (!(step > 0.0) || step > 1.0) throw DomainError("region_scan: step must lie in (0, 1]");
  const Dims& dims = family.a.dims();

  RegionGrid grid;
  grid.step = step;
  // Index arithmetic keeps the simplex mask exact when 1/step is an integer.
  const double inv = 1.0 / step;
  const auto rounded = static_cast<std::size_t>(std::llround(inv));
  const bool exact = std::abs(inv - static_cast<double>(rounded)) < 1e-9;
  const std::size_t n = exact ? rounded : static_cast<std::size_t>(std::floor(inv + 1e-12));
  grid.points_per_axis = n + 1;
  for (const auto& c : configs) grid.columns.push_back(c.id());

  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      const double p = exact && i == n ? 1.0 : static_cast<double>(i) * step;
      const double q = exact && j == n ? 1.0 : static_cast<double>(j) * step;
      const bool inside = exact ? i + j <= n : p + q <= 1.0 + 1e-12;
      if (inside) grid.cells.push_back({i, j, p, q, {}});
    }

  std::vector<CriterionEvaluator> evaluators;
  std::vector<std::size_t> lhs_slot;  // evaluator index whose lhs each config reuses
  std::map<std::string, std::size_t> first_with_key;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    evaluators.emplace_back(dims, configs[c]);
    lhs_slot.push_back(first_with_key.emplace(lhs_key(configs[c]), c).first->second);
  }

  parallel_for(grid.cells.size(), [&](std::size_t idx) {
    auto& cell = grid.cells[idx];
    const QuantumState state = family.at(cell.p, cell.q);
    std::vector<double> lhs(configs.size(), 0.0);
    cell.violated.assign(configs.size(), false);
    for (std::size_t c = 0; c < configs.size(); ++c) {
      lhs[c] = lhs_slot[c] == c ? evaluators[c].lhs(state) : lhs[lhs_slot[c]];
      cell.violated[c] = lhs[c] - evaluators[c].bound() > kVerdictTol;
    }
  });
  return grid;
}

NoiseFamily2D ghz_family(std::size_t n) {
  return {ghz(n), ghz_phase(n),
          "rho(p,q) = p |G><G| + q |G~><G~| + (1-p-q) I/" + std::to_string(std::size_t{1} << n)};
}

NoiseFamily dicke_family(std::size_t n) {
  return {dicke(n, n / 2), "rho(p) = p |D" + std::to_string(n) + "><D" + std::to_string(n) + "| + (1-p) I/" +
                               std::to_string(std::size_t{1} << n)};
}

bool TableReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return !r.asserted || r.agrees; });
}

std::string TableReport::to_json() const {
  nlohmann::ordered_json j;
  j["table"] = name;
  j["mode"] = mode == ModeKind::separable ? "separable" : "producible";
  j["tol"] = round_sig(tol);
  auto rows_json = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["k"] = r.k;
    if (r.computed)
      row["computed"] = round_sig(*r.computed);
    else
      row["computed"] = nullptr;
    row["published"] = round_sig(r.published);
    row["comparison_method"] = round_sig(r.comparison);
    row["deviation"] = round_sig(r.deviation);
    row["asserted"] = r.asserted;
    row["agrees"] = r.agrees;
    if (!r.note.empty()) row["note"] = r.note;
    rows_json.push_back(row);
  }
  j["rows"] = rows_json;
  j["passed"] = passed();
  return j.dump(2);
}

std::string TableReport::to_csv() const {
  std::string out = "k,computed,published,comparison_method,deviation,asserted,agrees,note\n";
  for (const auto& r : rows) {
    out += std::to_string(r.k) + "," + (r.computed ? format_sig(*r.computed) : std::string("none")) + "," +
           format_sig(r.published) + "," + format_sig(r.comparison) + "," + format_sig(r.deviation) + "," +
           (r.asserted ? "1" : "0") + "," + (r.agrees ? "1" : "0") + ",\"" + r.note + "\"\n";
  }
  return out;
}

TableReport reproduce_table(const std::string& name, double tol, const ThresholdOptions& options) {
  const auto& ref = reference_data().table(name);
  const ModeKind kind = parse_mode_kind(ref.mode);
  const auto family = dicke_family(6);

  std::vector<CriterionConfig> configs;
  for (const auto& row : ref.rows)
    configs.push_back({Criterion::prop1, {kind, row.k}, OrderParam::neg_infinity(), std::nullopt});

  TableReport report{name, kind, tol, {}, threshold_scan(family, configs, options)};
  for (std::size_t i = 0; i < ref.rows.size(); ++i) {
    const auto& row = ref.rows[i];
    TableRow out;
    out.k = row.k;
    out.computed = report.thresholds[i].p_star;
    out.published = row.p_k;
    out.comparison = row.p_prime_k;
    out.asserted = row.asserted;
    out.note = row.note;
    if (out.computed) {
      out.deviation = std::abs(*out.computed - row.p_k);
      out.agrees = out.deviation <= tol;
    }
    if (!out.agrees && !out.asserted)
      out.note = "discrepancy flagged: " + (out.note.empty() ? std::string("not asserted") : out.note);
    report.rows.push_back(std::move(out));
  }
  return report;
}

}  // namespace skewent
