/*
 * Copyright 2026 The cpshrink Authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "cpshrink/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace cpshrink {

bool all_finite(const ComplexMatrix &m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        return false;
  return true;
}

void require_finite(const ComplexMatrix &m) {
  if (!all_finite(m))
    throw Error(ErrorKind::NonFinite, "matrix contains NaN or Inf entries");
}

//-------------------------------------------------------------------------
// HermitianOperator
//-------------------------------------------------------------------------

HermitianOperator::HermitianOperator(const ComplexMatrix &m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    std::ostringstream ss;
    ss << "Hermitian operator must be square and nonempty, got " << m.rows()
       << "x" << m.cols();
    throw Error(ErrorKind::DimensionMismatch, ss.str());
  }
  require_finite(m);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (defect > kHermiticityTol * scale) {
    std::ostringstream ss;
    ss << "max |m - m^dagger| = " << defect << " exceeds tolerance";
    throw Error(ErrorKind::NotHermitian, ss.str());
  }
  m_ = (m + m.adjoint()) * 0.5;
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return HermitianOperator(ComplexMatrix::Identity(n, n), Trusted{});
}

HermitianOperator HermitianOperator::zero(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return HermitianOperator(ComplexMatrix::Zero(n, n), Trusted{});
}

HermitianOperator HermitianOperator::projector(const Eigen::VectorXcd &u) {
  const double n = u.norm();
  if (!(n > 0.0))
    throw Error(ErrorKind::DimensionMismatch, "projector onto zero vector");
  const Eigen::VectorXcd v = u / n;
  ComplexMatrix p = v * v.adjoint();
  return HermitianOperator((p + p.adjoint()) * 0.5, Trusted{});
}

HermitianOperator
HermitianOperator::operator+(const HermitianOperator &o) const {
  if (o.dim() != dim())
    throw Error(ErrorKind::DimensionMismatch, "operator sum of unequal dims");
  return HermitianOperator(m_ + o.m_, Trusted{});
}

HermitianOperator
HermitianOperator::operator-(const HermitianOperator &o) const {
  if (o.dim() != dim())
    throw Error(ErrorKind::DimensionMismatch,
                "operator difference of unequal dims");
  return HermitianOperator(m_ - o.m_, Trusted{});
}

HermitianOperator HermitianOperator::operator*(double c) const {
  return HermitianOperator(m_ * c, Trusted{});
}

//-------------------------------------------------------------------------
// Spectra
//-------------------------------------------------------------------------

SingularSpectrum SingularSpectrum::from_values(std::vector<double> values,
                                               std::size_t padded_dim) {
  if (padded_dim == 0)
    throw Error(ErrorKind::PadTooSmall, "padded_dim must be positive");
  if (values.size() > padded_dim) {
    std::ostringstream ss;
    ss << "padded_dim " << padded_dim << " is smaller than the "
       << values.size() << " singular values";
    throw Error(ErrorKind::PadTooSmall, ss.str());
  }
  for (double v : values)
    if (!std::isfinite(v) || v < 0.0)
      throw Error(ErrorKind::NonFinite,
                  "singular values must be finite and nonnegative");
  std::sort(values.begin(), values.end(), std::greater<>());
  values.resize(padded_dim, 0.0);
  return SingularSpectrum(std::move(values));
}

SingularSpectrum singular_values(const ComplexMatrix &m,
                                 std::size_t padded_dim) {
  require_finite(m);
  const auto count = static_cast<std::size_t>(std::min(m.rows(), m.cols()));
  if (padded_dim < count || padded_dim == 0) {
    std::ostringstream ss;
    ss << "padded_dim " << padded_dim << " is smaller than the " << count
       << " singular values of a " << m.rows() << "x" << m.cols()
       << " matrix";
    throw Error(ErrorKind::PadTooSmall, ss.str());
  }
  std::vector<double> values;
  if (count > 0) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const Eigen::VectorXd &s = svd.singularValues();
    values.assign(s.data(), s.data() + s.size());
  }
  return SingularSpectrum::from_values(std::move(values), padded_dim);
}

EigenSystem hermitian_eigensystem(const HermitianOperator &x) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(x.matrix());
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::ConvergenceFailure,
                "self-adjoint eigensolver did not converge");
  // Eigen returns ascending order; reverse both values and vectors.
  const Eigen::Index n = solver.eigenvalues().size();
  EigenSystem es;
  es.eigenvalues.resize(static_cast<std::size_t>(n));
  es.eigenvectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    es.eigenvalues[static_cast<std::size_t>(i)] =
        solver.eigenvalues()(n - 1 - i);
    es.eigenvectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return es;
}

namespace {

HermitianOperator assemble(const EigenSystem &es,
                           const std::function<double(double)> &f) {
  const Eigen::Index n = es.eigenvectors.rows();
  Eigen::VectorXd weights(n);
  for (Eigen::Index i = 0; i < n; ++i)
    weights(i) = f(es.eigenvalues[static_cast<std::size_t>(i)]);
  const ComplexMatrix &u = es.eigenvectors;
  ComplexMatrix out = u * weights.cast<complex_t>().asDiagonal() * u.adjoint();
  return HermitianOperator((out + out.adjoint()) * 0.5);
}

} // namespace

JordanParts jordan_decomposition(const HermitianOperator &x) {
  const EigenSystem es = hermitian_eigensystem(x);
  return JordanParts{
      assemble(es, [](double l) { return l > 0.0 ? l : 0.0; }),
      assemble(es, [](double l) { return l < 0.0 ? -l : 0.0; }),
  };
}

HermitianOperator absolute_value(const HermitianOperator &x) {
  return assemble(hermitian_eigensystem(x),
                  [](double l) { return std::abs(l); });
}

bool is_psd(const HermitianOperator &x) {
  const EigenSystem es = hermitian_eigensystem(x);
  const double top = es.eigenvalues.front();
  const double bottom = es.eigenvalues.back();
  return bottom >= -kPsdTol * std::max(1.0, top);
}

double spectral_norm(const ComplexMatrix &m) {
  const auto n = static_cast<std::size_t>(std::max<Eigen::Index>(
      1, std::min(m.rows(), m.cols())));
  return singular_values(m, n)[0];
}

double trace_norm(const ComplexMatrix &m) {
  const auto n = static_cast<std::size_t>(std::max<Eigen::Index>(
      1, std::min(m.rows(), m.cols())));
  const SingularSpectrum spectrum = singular_values(m, n);
  double s = 0.0;
  for (double v : spectrum.values())
    s += v;
  return s;
}

} // namespace cpshrink
