#include "skewent/criteria.hpp"

#include <cmath>

#include <json.hpp>

#include "skewent/format.hpp"

namespace skewent {

void Mode::validate(std::size_t n_sites) const {
  const int n = static_cast<int>(n_sites);
  if (kind == ModeKind::separable && (k < 2 || k > n))
    throw DomainError("separable mode requires 2 <= k <= N (k=" + std::to_string(k) +
                      ", N=" + std::to_string(n) + ")");
  if (kind == ModeKind::producible && (k < 1 || k > n - 1))
    throw DomainError("producible mode requires 1 <= k <= N-1 (k=" + std::to_string(k) +
                      ", N=" + std::to_string(n) + ")");
}

std::string Mode::name() const { return kind == ModeKind::separable ? "separable" : "producible"; }

ModeKind parse_mode_kind(const std::string& text) {
  if (text == "separable") return ModeKind::separable;
  if (text == "producible") return ModeKind::producible;
  throw DomainError("unknown mode '" + text + "' (expected separable|producible)");
}

std::string to_string(Criterion c) { return c == Criterion::prop1 ? "prop1" : "prop2"; }

Criterion parse_criterion(const std::string& text) {
  if (text == "prop1") return Criterion::prop1;
  if (text == "prop2") return Criterion::prop2;
  throw DomainError("unknown criterion '" + text + "' (expected prop1|prop2)");
}

double bound_gamma(int n_gamma, int d) {
  if (n_gamma < 1) throw DomainError("bound_gamma: block needs at least one site");
  if (d < 2) throw DomainError("bound_gamma: dimension must be >= 2");
  const double dd = d;
  if (n_gamma == 1) return dd - 1.0;
  const double n = n_gamma;
  return n * n * (1.0 - 1.0 / dd) + n * (dd - 1.0);
}

double bound_S(int n, int k, int d) {
  if (k < 2 || k > n) throw DomainError("bound_S: requires 2 <= k <= N");
  if (d < 2) throw DomainError("bound_S: dimension must be >= 2");
  const double dd = d;
  const double base = n * (dd - 1.0);
  if (k == n) return base;
  const double big = n - k + 1;
  return big * big * (1.0 - 1.0 / dd) + base;
}

double bound_P(int n, int k, int d) {
  if (k < 1 || k > n - 1) throw DomainError("bound_P: requires 1 <= k <= N-1");
  if (d < 2) throw DomainError("bound_P: dimension must be >= 2");
  const double dd = d;
  const double base = n * (dd - 1.0);
  if (k == 1) return base;
  const int q = n / k;
  const int t = n - q * k;
  const double kk = k;
  double quadratic = 0.0;
  if (t == 0)
    quadratic = static_cast<double>(n) * kk;
  else if (t == 1)
    quadratic = q * kk * kk;  // the lone remaining site contributes no quadratic term
  else
    quadratic = q * kk * kk + static_cast<double>(t) * t;
  return quadratic * (1.0 - 1.0 / dd) + base;
}

double prop2_coefficient(int n, Mode mode) {
  mode.validate(static_cast<std::size_t>(n));
  const double k = mode.k;
  if (mode.kind == ModeKind::separable) {
    const double big = n - mode.k + 1;
    return (big * big + k - 1.0) / 4.0;
  }
  const int q = n / mode.k;
  const int t = n - q * mode.k;
  return (q * k * k + static_cast<double>(t) * t) / 4.0;
}

double prop1_lhs(const QuantumState& state, OrderParam s) {
  Sites all(state.num_sites());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const auto ops = operators_of(collective_set(state.dims(), all));
  return skew_information_sum(state, ops, s);
}

std::string interpret(Mode mode, std::size_t n_sites) {
  const int n = static_cast<int>(n_sites);
  std::string text;
  bool genuine = false;
  if (mode.kind == ModeKind::separable) {
    text = std::to_string(mode.k) + "-nonseparable";
    genuine = mode.k == 2;
  } else {
    text = "contains " + std::to_string(mode.k + 1) + "-partite entanglement";
    genuine = mode.k == n - 1;
  }
  if (genuine) text += "; genuinely multipartite entangled";
  return text;
}

CriterionReport make_report(Criterion criterion, Mode mode, OrderParam s, double lhs, double bound,
                            std::size_t n_sites, std::string state_spec) {
  CriterionReport r{criterion, mode, s, lhs, bound, lhs - bound, false, {}, std::move(state_spec)};
  r.violated = r.margin > kVerdictTol;
  r.interpretation = r.violated ? interpret(mode, n_sites) : "not detected";
  return r;
}

CriterionReport prop1_evaluate(const QuantumState& state, OrderParam s, Mode mode,
                               std::string state_spec) {
  mode.validate(state.num_sites());
  const int n = static_cast<int>(state.num_sites());
  const int d = static_cast<int>(state.max_site_dim());
  const double bound = mode.kind == ModeKind::separable ? bound_S(n, mode.k, d) : bound_P(n, mode.k, d);
  return make_report(Criterion::prop1, mode, s, prop1_lhs(state, s), bound, state.num_sites(),
                     std::move(state_spec));
}

double prop2_lhs(const QuantumState& state, const WeightedObservableSpec& spec, OrderParam s) {
  if (spec.dims() != state.dims())
    throw DimensionError("prop2: observable site dimensions do not match the state");
  return skew_information(state, build_weighted(spec).op, s);
}

double prop2_bound(int n, Mode mode, const WeightedObservableSpec& spec) {
  if (spec.sites.size() != static_cast<std::size_t>(n))
    throw DimensionError("prop2: observable spec has the wrong number of sites");
  const auto range = site_operator_range(spec);
  const double width = range.hi - range.lo;
  return prop2_coefficient(n, mode) * width * width;
}

CriterionReport prop2_evaluate(const QuantumState& state, const WeightedObservableSpec& spec,
                               OrderParam s, Mode mode, std::string state_spec) {
  mode.validate(state.num_sites());
  const int n = static_cast<int>(state.num_sites());
  const double bound = prop2_bound(n, mode, spec);
  return make_report(Criterion::prop2, mode, s, prop2_lhs(state, spec, s), bound, state.num_sites(),
                     std::move(state_spec));
}

std::string to_json(const CriterionReport& r) {
  nlohmann::ordered_json j;
  j["criterion"] = to_string(r.criterion);
  j["k"] = r.mode.k;
  j["mode"] = r.mode.name();
  if (r.s.is_neg_infinity())
    j["s"] = "-inf";
  else
    j["s"] = round_sig(r.s.value());
  j["lhs"] = round_sig(r.lhs);
  j["bound"] = round_sig(r.bound);
  j["margin"] = round_sig(r.margin);
  j["violated"] = r.violated;
  j["interpretation"] = r.interpretation;
  j["state_spec"] = r.state_spec;
  return j.dump();
}

}  // namespace skewent
