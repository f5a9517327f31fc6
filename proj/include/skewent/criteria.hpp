#pragma once

#include <string>
#include <vector>

#include "skewent/observables.hpp"
#include "skewent/skew_info.hpp"

namespace skewent {

/// Reports with margin at or below this are not counted as detections.
inline constexpr double kVerdictTol = 1e-9;

enum class ModeKind { separable, producible };

/// "k-separable test" (2 <= k <= N) or "k-producible test" (1 <= k <= N-1).
struct Mode {
  ModeKind kind;
  int k;

  static Mode separable(int k) { return {ModeKind::separable, k}; }
  static Mode producible(int k) { return {ModeKind::producible, k}; }

  void validate(std::size_t n_sites) const;
  std::string name() const;  // "separable" / "producible"

  friend bool operator==(const Mode&, const Mode&) = default;
};

ModeKind parse_mode_kind(const std::string& text);

enum class Criterion { prop1, prop2 };

std::string to_string(Criterion c);
Criterion parse_criterion(const std::string& text);

struct CriterionReport {
  Criterion criterion;
  Mode mode;
  OrderParam s = OrderParam::neg_infinity();
  double lhs = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  bool violated = false;
  std::string interpretation;
  std::string state_spec;
};

/// Upper bound on sum_u I^s(rho_gamma, M_gamma^(u)) for a block of n_gamma sites.
double bound_gamma(int n_gamma, int d);

/// Bound for k-separable states (requires 2 <= k <= N).
double bound_S(int n, int k, int d);

/// Bound for k-producible states (requires 1 <= k <= N-1).
double bound_P(int n, int k, int d);

/// Coefficient multiplying (hi - lo)^2 in the weighted-observable bound.
double prop2_coefficient(int n, Mode mode);

/// sum_u I^s(rho, M^(u)) over the d^2 collective operators of all sites.
double prop1_lhs(const QuantumState& state, OrderParam s);

CriterionReport prop1_evaluate(const QuantumState& state, OrderParam s, Mode mode,
                               std::string state_spec = {});

double prop2_lhs(const QuantumState& state, const WeightedObservableSpec& spec, OrderParam s);
double prop2_bound(int n, Mode mode, const WeightedObservableSpec& spec);

CriterionReport prop2_evaluate(const QuantumState& state, const WeightedObservableSpec& spec,
                               OrderParam s, Mode mode, std::string state_spec = {});

/// Builds the report from an already evaluated lhs and bound (verdict, margin, interpretation).
CriterionReport make_report(Criterion criterion, Mode mode, OrderParam s, double lhs, double bound,
                            std::size_t n_sites, std::string state_spec);

/// Text for a violated mode, e.g. "2-nonseparable; genuinely multipartite entangled".
std::string interpret(Mode mode, std::size_t n_sites);

/// Flat JSON object; numbers rounded to 12 significant digits.
std::string to_json(const CriterionReport& report);

}  // namespace skewent
