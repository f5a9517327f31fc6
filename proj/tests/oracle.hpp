#pragma once

// Slow reference implementations used as oracles in the tests. They share no
// code with the library beyond the Eigen types.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline Mat kron_all(const std::vector<Mat>& ops) {
  Mat out = Mat::Ones(1, 1);
  for (const auto& o : ops) out = kron(out, o);
  return out;
}

inline Mat eye(Eigen::Index d) { return Mat::Identity(d, d); }

inline Mat sx() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline Mat sy() {
  Mat m(2, 2);
  m << 0, C(0, -1), C(0, 1), 0;
  return m;
}
inline Mat sz() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

// op placed on qubit `site` of an n-qubit register.
inline Mat on_qubit(const Mat& op, int site, int n) {
  std::vector<Mat> f(static_cast<std::size_t>(n), eye(2));
  f[static_cast<std::size_t>(site)] = op;
  return kron_all(f);
}

inline Mat collective(const Mat& op, int n) {
  Mat out = Mat::Zero(1 << n, 1 << n);
  for (int i = 0; i < n; ++i) out += on_qubit(op, i, n);
  return out;
}

// Reduced matrix on `keep` by explicit index sums over the traced digits.
inline Mat ptrace(const Mat& rho, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& keep) {
  const std::size_t n = dims.size();
  std::size_t dk = 1;
  for (auto k : keep) dk *= dims[k];
  Mat out = Mat::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  auto digits = [&](std::size_t idx) {
    std::vector<std::size_t> d(n);
    for (std::size_t i = n; i-- > 0;) {
      d[i] = idx % dims[i];
      idx /= dims[i];
    }
    return d;
  };
  auto kept_index = [&](const std::vector<std::size_t>& d) {
    std::size_t idx = 0;
    for (auto k : keep) idx = idx * dims[k] + d[k];
    return idx;
  };
  for (Eigen::Index r = 0; r < rho.rows(); ++r)
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      const auto dr = digits(static_cast<std::size_t>(r));
      const auto dc = digits(static_cast<std::size_t>(c));
      bool match = true;
      for (std::size_t i = 0; i < n && match; ++i) {
        bool kept = false;
        for (auto k : keep) kept = kept || k == i;
        if (!kept && dr[i] != dc[i]) match = false;
      }
      if (match)
        out(static_cast<Eigen::Index>(kept_index(dr)), static_cast<Eigen::Index>(kept_index(dc))) += rho(r, c);
    }
  return out;
}

inline double variance(const Mat& rho, const Mat& x) {
  const double m1 = (rho * x).trace().real();
  return (rho * x * x).trace().real() - m1 * m1;
}

// Wigner-Yanase form Tr(rho X^2) - Tr(sqrt(rho) X sqrt(rho) X).
inline double wigner_yanase(const Mat& rho, const Mat& x) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho);
  Eigen::VectorXd v = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Mat root = es.eigenvectors() * v.cast<C>().asDiagonal() * es.eigenvectors().adjoint();
  return (rho * x * x).trace().real() - (root * x * root * x).trace().real();
}

inline Mat projector(const Vec& v) { return v * v.adjoint(); }

}  // namespace oracle
