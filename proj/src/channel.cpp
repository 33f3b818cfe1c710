/*
 * Copyright 2026 The cpshrink Authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "cpshrink/channel.hpp"

#include <cmath>
#include <sstream>

#include "cpshrink/sampling.hpp"

namespace cpshrink {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

HermitianOperator hermitian_part(const ComplexMatrix &m) {
  return HermitianOperator((m + m.adjoint()) * 0.5);
}

} // namespace

KrausChannel::KrausChannel(std::size_t d_in, std::size_t d_out,
                           std::vector<ComplexMatrix> kraus)
    : d_in_(d_in), d_out_(d_out), kraus_(std::move(kraus)) {
  if (d_in_ == 0 || d_out_ == 0)
    throw Error(ErrorKind::InvalidChannel, "channel dimensions must be >= 1");
  if (kraus_.empty())
    throw Error(ErrorKind::InvalidChannel, "channel needs a Kraus operator");
  bool any_nonzero = false;
  for (std::size_t n = 0; n < kraus_.size(); ++n) {
    const ComplexMatrix &e = kraus_[n];
    if (e.rows() != idx(d_out_) || e.cols() != idx(d_in_)) {
      std::ostringstream ss;
      ss << "kraus[" << n << "] has shape " << e.rows() << "x" << e.cols()
         << ", expected " << d_out_ << "x" << d_in_;
      throw Error(ErrorKind::DimensionMismatch, ss.str());
    }
    require_finite(e);
    any_nonzero = any_nonzero || !e.isZero(0.0);
  }
  if (!any_nonzero)
    throw Error(ErrorKind::InvalidChannel, "all Kraus operators are zero");
}

KrausChannel KrausChannel::scaled(double c) const {
  std::vector<ComplexMatrix> out;
  out.reserve(kraus_.size());
  for (const auto &e : kraus_)
    out.push_back(e * c);
  return KrausChannel(d_in_, d_out_, std::move(out));
}

ComplexMatrix apply(const KrausChannel &phi, const ComplexMatrix &x) {
  if (x.rows() != idx(phi.d_in()) || x.cols() != idx(phi.d_in())) {
    std::ostringstream ss;
    ss << "channel input must be " << phi.d_in() << "x" << phi.d_in()
       << ", got " << x.rows() << "x" << x.cols();
    throw Error(ErrorKind::DimensionMismatch, ss.str());
  }
  ComplexMatrix out = ComplexMatrix::Zero(idx(phi.d_out()), idx(phi.d_out()));
  for (const auto &e : phi.kraus())
    out.noalias() += e * x * e.adjoint();
  return out;
}

HermitianOperator apply(const KrausChannel &phi, const HermitianOperator &x) {
  return hermitian_part(apply(phi, x.matrix()));
}

ChannelInvariants invariants_of(const KrausChannel &phi) {
  ComplexMatrix m = ComplexMatrix::Zero(idx(phi.d_out()), idx(phi.d_out()));
  ComplexMatrix w = ComplexMatrix::Zero(idx(phi.d_in()), idx(phi.d_in()));
  for (const auto &e : phi.kraus()) {
    m.noalias() += e * e.adjoint();
    w.noalias() += e.adjoint() * e;
  }
  return ChannelInvariants{hermitian_part(m), hermitian_part(w)};
}

KrausChannel remix(const KrausChannel &phi, const ComplexMatrix &v) {
  const auto n = idx(phi.size());
  if (v.cols() != n || v.rows() < n) {
    std::ostringstream ss;
    ss << "remix matrix must be m x " << n << " with m >= " << n << ", got "
       << v.rows() << "x" << v.cols();
    throw Error(ErrorKind::NotIsometry, ss.str());
  }
  require_finite(v);
  const double defect =
      (v.adjoint() * v - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (defect > 1e-9) {
    std::ostringstream ss;
    ss << "max |v^dagger v - I| = " << defect << " exceeds 1e-9";
    throw Error(ErrorKind::NotIsometry, ss.str());
  }
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(v.rows()));
  for (Eigen::Index m = 0; m < v.rows(); ++m) {
    ComplexMatrix g = ComplexMatrix::Zero(idx(phi.d_out()), idx(phi.d_in()));
    for (Eigen::Index k = 0; k < n; ++k)
      g += v(m, k) * phi.kraus()[static_cast<std::size_t>(k)];
    out.push_back(std::move(g));
  }
  return KrausChannel(phi.d_in(), phi.d_out(), std::move(out));
}

HermitianOperator choi_matrix(const KrausChannel &phi) {
  // Block (i, j) is Phi(e_i e_j^dagger) = sum_n E_n[:, i] E_n[:, j]^dagger,
  // so Choi = sum_n vec(E_n) vec(E_n)^dagger with columns stacked.
  const auto d_in = idx(phi.d_in());
  const auto d_out = idx(phi.d_out());
  ComplexMatrix choi = ComplexMatrix::Zero(d_in * d_out, d_in * d_out);
  for (const auto &e : phi.kraus()) {
    const Eigen::VectorXcd vec =
        Eigen::Map<const Eigen::VectorXcd>(e.data(), d_in * d_out);
    choi.noalias() += vec * vec.adjoint();
  }
  return hermitian_part(choi);
}

KrausChannel identity_channel(std::size_t d) {
  return KrausChannel(d, d, {ComplexMatrix::Identity(idx(d), idx(d))});
}

KrausChannel partial_trace_channel(std::size_t d_b, std::size_t d_c) {
  if (d_b == 0 || d_c == 0)
    throw Error(ErrorKind::InvalidChannel,
                "partial trace dimensions must be >= 1");
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(d_c);
  for (std::size_t c = 0; c < d_c; ++c) {
    ComplexMatrix e = ComplexMatrix::Zero(idx(d_b), idx(d_b * d_c));
    for (std::size_t b = 0; b < d_b; ++b)
      e(idx(b), idx(b * d_c + c)) = 1.0;
    kraus.push_back(std::move(e));
  }
  return KrausChannel(d_b * d_c, d_b, std::move(kraus));
}

KrausChannel random_channel(std::size_t d_in, std::size_t d_out,
                            std::size_t n_kraus, double scale,
                            std::uint64_t seed) {
  if (d_in == 0 || d_out == 0 || n_kraus == 0)
    throw Error(ErrorKind::InvalidChannel,
                "random channel dimensions and Kraus count must be >= 1");
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw Error(ErrorKind::InvalidChannel, "scale must be finite and positive");
  Rng rng = make_rng(seed);
  for (;;) {
    std::vector<ComplexMatrix> kraus;
    bool any_nonzero = false;
    for (std::size_t n = 0; n < n_kraus; ++n) {
      kraus.push_back(random_gaussian(d_out, d_in, rng) * scale);
      any_nonzero = any_nonzero || !kraus.back().isZero(0.0);
    }
    if (any_nonzero)
      return KrausChannel(d_in, d_out, std::move(kraus));
  }
}

KrausChannel random_cptp_channel(std::size_t d_in, std::size_t d_out,
                                 std::size_t n_kraus, std::uint64_t seed) {
  if (d_in == 0 || d_out == 0 || n_kraus == 0)
    throw Error(ErrorKind::InvalidChannel,
                "random channel dimensions and Kraus count must be >= 1");
  if (n_kraus * d_out < d_in) {
    std::ostringstream ss;
    ss << "no isometry from dimension " << d_in << " into " << n_kraus
       << " x " << d_out;
    throw Error(ErrorKind::InfeasibleShape, ss.str());
  }
  Rng rng = make_rng(seed);
  const ComplexMatrix v = random_isometry(n_kraus * d_out, d_in, rng);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(n_kraus);
  for (std::size_t n = 0; n < n_kraus; ++n)
    kraus.push_back(v.middleRows(idx(n * d_out), idx(d_out)));
  return KrausChannel(d_in, d_out, std::move(kraus));
}

} // namespace cpshrink
