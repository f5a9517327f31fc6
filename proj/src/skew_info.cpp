#include "skewent/skew_info.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

namespace skewent {

namespace {

// Matrix elements below this squared modulus are eigenvector round-off.
constexpr double kElementFloor = 1e-24;

void check_operator(const QuantumState& state, const Operator& x, const char* what) {
  if (x.rows() != x.cols() || static_cast<std::size_t>(x.rows()) != state.dim())
    throw DimensionError(std::string(what) + ": observable dimension does not match state");
  require_hermitian(x, what);
}

}  // namespace

OrderParam OrderParam::finite(double s) {
  if (!std::isfinite(s)) throw DomainError("order parameter must be finite; use neg_infinity()");
  if (s > 0.0) throw DomainError("order parameter s must be <= 0");
  return OrderParam(s, false);
}

OrderParam OrderParam::parse(const std::string& text) {
  std::string lower;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "-inf" || lower == "-infinity" || lower == "neg_infinity") return neg_infinity();
  double v = 0.0;
  const auto* end = lower.data() + lower.size();
  auto [ptr, ec] = std::from_chars(lower.data(), end, v);
  if (ec != std::errc{} || ptr != end || lower.empty())
    throw DomainError("cannot parse order parameter '" + text + "'");
  return finite(v);
}

double OrderParam::value() const noexcept {
  return neg_inf_ ? -std::numeric_limits<double>::infinity() : s_;
}

std::string OrderParam::to_string() const {
  if (neg_inf_) return "-inf";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, s_);
  (void)ec;
  return std::string(buf, ptr);
}

double power_mean(OrderParam s, double a, double b) {
  if (a < 0.0 || b < 0.0 || std::isnan(a) || std::isnan(b))
    throw DomainError("power_mean: arguments must be non-negative");
  if (a == 0.0 || b == 0.0) return 0.0;
  if (s.is_neg_infinity()) return std::min(a, b);
  const double p = s.value();
  if (p == 0.0) return std::sqrt(a * b);
  // Factor out the smaller argument m: f = m * ((1 + (M/m)^s) / 2)^(1/s).
  // With s < 0 the ratio power lies in (0, 1], so nothing overflows.
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  const double r = std::exp(p * std::log(hi / lo));
  return lo * std::exp(std::log(0.5 * (1.0 + r)) / p);
}

namespace {

// K(l, m) = lambda_l - f_s(lambda_l, lambda_m) for l != m, zero on the diagonal.
Eigen::MatrixXd spectral_weights(const QuantumState& state, OrderParam s) {
  const auto& lambda = state.eigenvalues();
  const Eigen::Index n = lambda.size();
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index l = 0; l < n; ++l)
    for (Eigen::Index m = 0; m < n; ++m)
      if (l != m) k(l, m) = lambda(l) - power_mean(s, lambda(l), lambda(m));
  return k;
}

double weighted_sum(const QuantumState& state, const Eigen::MatrixXd& k, const Operator& x) {
  const auto& v = state.eigenvectors();
  const Operator y = v.adjoint() * x * v;
  double total = 0.0;
  for (Eigen::Index m = 0; m < y.cols(); ++m)
    for (Eigen::Index l = 0; l < y.rows(); ++l) {
      if (l == m) continue;
      const double w = std::norm(y(l, m));
      if (w < kElementFloor) continue;
      total += k(l, m) * w;
    }
  return total;
}

}  // namespace

double skew_information(const QuantumState& state, const Operator& x, OrderParam s) {
  check_operator(state, x, "skew_information");
  return weighted_sum(state, spectral_weights(state, s), x);
}

double skew_information_sum(const QuantumState& state, std::span<const Operator> xs, OrderParam s) {
  for (const auto& x : xs) check_operator(state, x, "skew_information");
  const Eigen::MatrixXd k = spectral_weights(state, s);
  double total = 0.0;
  for (const auto& x : xs) total += weighted_sum(state, k, x);
  return total;
}

double variance(const QuantumState& state, const Operator& x) {
  check_operator(state, x, "variance");
  const Operator rx = state.rho() * x;
  const double mean = rx.trace().real();
  const double second = (rx * x).trace().real();
  return second - mean * mean;
}

}  // namespace skewent
