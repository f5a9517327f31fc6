#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewent/criteria.hpp"

namespace skewent {

/// One (criterion, mode, s) query. Prop 2 queries carry their observable spec.
struct CriterionConfig {
  Criterion criterion = Criterion::prop1;
  Mode mode = Mode::separable(2);
  OrderParam s = OrderParam::neg_infinity();
  std::optional<WeightedObservableSpec> observable;

  /// Column id, e.g. "prop2_separable_k3".
  std::string id() const;
};

/// Evaluates one criterion repeatedly on states with fixed dims. The collective
/// operators (or X(c)) and the bound are built once.
class CriterionEvaluator {
 public:
  CriterionEvaluator(const Dims& dims, CriterionConfig config);

  double lhs(const QuantumState& state) const;
  double bound() const noexcept { return bound_; }
  const CriterionConfig& config() const noexcept { return config_; }
  CriterionReport evaluate(const QuantumState& state, std::string state_spec = {}) const;

 private:
  Dims dims_;
  CriterionConfig config_;
  std::vector<Operator> operators_;
  double bound_ = 0.0;
};

/// rho(p) = p * target + (1 - p) * I / D.
struct NoiseFamily {
  QuantumState target;
  std::string description;

  QuantumState at(double p) const;
};

/// rho(p, q) = p * a + q * b + (1 - p - q) * I / D.
struct NoiseFamily2D {
  QuantumState a;
  QuantumState b;
  std::string description;

  QuantumState at(double p, double q) const;
};

struct Bracket {
  double lo;
  double hi;
  /// True when lhs - bound goes from <= 0 at lo to > 0 at hi.
  bool rising = true;
};

struct ThresholdOptions {
  double p_lo = 0.0;
  double p_hi = 1.0;
  double coarse_step = 1e-3;
  double tol = 1e-6;
};

struct ThresholdResult {
  CriterionConfig config;
  std::string family;
  double bound = 0.0;
  /// Midpoint of the lowest bracket; empty when lhs - bound never changes sign.
  std::optional<double> p_star;
  /// Every refined sign change, lowest first.
  std::vector<Bracket> brackets;
  /// |lhs(p_star) - bound|.
  double residual = 0.0;
  double coarse_step = 0.0;
  double tol = 0.0;

  bool multiple_crossings() const noexcept { return brackets.size() > 1; }
};

/// Coarse grid over [p_lo, p_hi] locates every sign change of lhs(p) - bound;
/// each is bisected until the bracket is no wider than tol.
ThresholdResult threshold_scan(const NoiseFamily& family, const CriterionConfig& config,
                               const ThresholdOptions& options = {});

/// Several criteria on the same family; lhs values are shared between configs that
/// differ only in mode.
std::vector<ThresholdResult> threshold_scan(const NoiseFamily& family,
                                            const std::vector<CriterionConfig>& configs,
                                            const ThresholdOptions& options = {});

std::string to_json(const ThresholdResult& result);

struct RegionCell {
  std::size_t i;  // p = i * step
  std::size_t j;  // q = j * step
  double p;
  double q;
  std::vector<bool> violated;  // one per column
};

/// Verdict bits over the simplex p, q >= 0, p + q <= 1. Cells outside are never evaluated.
struct RegionGrid {
  double step = 0.0;
  std::size_t points_per_axis = 0;
  std::vector<std::string> columns;
  std::vector<RegionCell> cells;  // sorted by (i, j)

  const RegionCell* find(std::size_t i, std::size_t j) const;
  std::size_t column(const std::string& id) const;
  /// Header "p,q,<ids>", one row per evaluated cell, verdicts 0/1.
  std::string to_csv() const;
};

RegionGrid region_scan(const NoiseFamily2D& family, const std::vector<CriterionConfig>& configs,
                       double step);

/// The six-qubit GHZ / phased-GHZ mixture with white noise.
NoiseFamily2D ghz_family(std::size_t n = 6);

/// rho(p) with the six-qubit Dicke state |D_6^(3)>.
NoiseFamily dicke_family(std::size_t n = 6);

struct TableRow {
  int k = 0;
  std::optional<double> computed;
  double published = 0.0;
  double comparison = 0.0;  // other-method column, annotation only
  bool asserted = true;
  double deviation = 0.0;
  bool agrees = false;
  std::string note;
};

struct TableReport {
  std::string name;
  ModeKind mode;
  double tol = 0.0;
  std::vector<TableRow> rows;
  std::vector<ThresholdResult> thresholds;

  /// Every asserted row agrees within tol.
  bool passed() const;
  std::string to_json() const;
  std::string to_csv() const;
};

/// Recomputes the Dicke-family thresholds at s = -inf for table "table1"
/// (separable modes) or "table2" (producible modes) and compares with the stored values.
TableReport reproduce_table(const std::string& name, double tol, const ThresholdOptions& options = {});

}  // namespace skewent
