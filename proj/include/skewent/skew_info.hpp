#pragma once

#include <string>

#include "skewent/matrix.hpp"

namespace skewent {

/// Order of the power mean: a finite real s <= 0, or the distinguished value -infinity.
class OrderParam {
 public:
  static OrderParam finite(double s);
  static constexpr OrderParam neg_infinity() noexcept { return OrderParam(0.0, true); }
  /// Accepts "-inf" (any case, also "-infinity") or a decimal.
  static OrderParam parse(const std::string& text);

  bool is_neg_infinity() const noexcept { return neg_inf_; }
  /// Finite value; -infinity reports -HUGE_VAL.
  double value() const noexcept;
  std::string to_string() const;

  friend bool operator==(const OrderParam&, const OrderParam&) = default;

 private:
  constexpr OrderParam(double s, bool neg_inf) noexcept : s_(s), neg_inf_(neg_inf) {}
  double s_;
  bool neg_inf_;
};

/// f_s(a, b): ((a^s + b^s)/2)^(1/s); sqrt(ab) at s = 0; min(a, b) at s = -inf; 0 if a or b is 0.
double power_mean(OrderParam s, double a, double b);

/// Generalised Wigner-Yanase skew information
///   I^s(rho, X) = sum_{l != l'} [lambda_l - f_s(lambda_l, lambda_l')] |<psi_l|X|psi_l'>|^2
/// evaluated in the state's cached eigenbasis.
double skew_information(const QuantumState& state, const Operator& x, OrderParam s);

/// Sum of I^s(rho, X) over several observables; the spectral weights are computed once.
double skew_information_sum(const QuantumState& state, std::span<const Operator> xs, OrderParam s);

/// Tr(rho X^2) - Tr(rho X)^2.
double variance(const QuantumState& state, const Operator& x);

}  // namespace skewent
