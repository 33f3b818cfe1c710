/*
 * Copyright 2026 The cpshrink Authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "cpshrink/shrink.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>

#include "cpshrink/sampling.hpp"

namespace cpshrink {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

HermitianOperator projector_onto(const ComplexMatrix &vecs,
                                 const std::vector<Eigen::Index> &cols) {
  const Eigen::Index n = vecs.rows();
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (Eigen::Index c : cols)
    p.noalias() += vecs.col(c) * vecs.col(c).adjoint();
  return HermitianOperator((p + p.adjoint()) * 0.5);
}

} // namespace

double top_k_eigensum(const HermitianOperator &x, std::size_t k) {
  const EigenSystem es = hermitian_eigensystem(x);
  const std::size_t n = std::min(k, es.eigenvalues.size());
  return std::accumulate(es.eigenvalues.begin(),
                         es.eigenvalues.begin() + static_cast<long>(n), 0.0);
}

HermitianOperator top_k_eigenprojector(const HermitianOperator &x,
                                       std::size_t k) {
  const EigenSystem es = hermitian_eigensystem(x);
  std::vector<Eigen::Index> cols(std::min(k, es.eigenvalues.size()));
  std::iota(cols.begin(), cols.end(), Eigen::Index{0});
  return projector_onto(es.eigenvectors, cols);
}

FanProjectors fan_projectors(const HermitianOperator &x, std::size_t k) {
  if (k < 1)
    throw Error(ErrorKind::InvalidNorm, "Ky Fan index k must be >= 1");
  const EigenSystem es = hermitian_eigensystem(x);
  const std::size_t d = es.eigenvalues.size();
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return std::abs(es.eigenvalues[a]) >
                            std::abs(es.eigenvalues[b]);
                   });
  const double zero_tol =
      1e-12 * std::max(1.0, std::abs(es.eigenvalues[order.front()]));
  std::vector<Eigen::Index> pos, neg;
  for (std::size_t i = 0; i < std::min(k, d); ++i) {
    const double l = es.eigenvalues[order[i]];
    if (l > zero_tol)
      pos.push_back(idx(order[i]));
    else if (l < -zero_tol)
      neg.push_back(idx(order[i]));
  }
  return FanProjectors{projector_onto(es.eigenvectors, pos),
                       projector_onto(es.eigenvectors, neg), k};
}

double eta_upper(const KrausChannel &phi) {
  const ChannelInvariants inv = invariants_of(phi);
  return std::max(spectral_norm(inv.m_op.matrix()),
                  spectral_norm(inv.w_op.matrix()));
}

ExactFactor eta_spectral(const KrausChannel &phi) {
  const ChannelInvariants inv = invariants_of(phi);
  return ExactFactor{spectral_norm(inv.m_op.matrix()),
                     HermitianOperator::identity(phi.d_in())};
}

ExactFactor eta_trace(const KrausChannel &phi) {
  const ChannelInvariants inv = invariants_of(phi);
  const EigenSystem es = hermitian_eigensystem(inv.w_op);
  return ExactFactor{spectral_norm(inv.w_op.matrix()),
                     HermitianOperator::projector(es.eigenvectors.col(0))};
}

//-------------------------------------------------------------------------
// Empirical search
//-------------------------------------------------------------------------

namespace {

// Coordinates of a Hermitian d x d matrix in an orthonormal (Frobenius)
// real basis: d diagonal entries, then sqrt(2) Re and sqrt(2) Im of each
// strictly upper entry.
class HermitianChart {
public:
  explicit HermitianChart(std::size_t d) : d_(idx(d)) {}

  std::size_t size() const { return static_cast<std::size_t>(d_ * d_); }

  Eigen::VectorXd to_params(const ComplexMatrix &x) const {
    Eigen::VectorXd p(d_ * d_);
    Eigen::Index at = 0;
    for (Eigen::Index i = 0; i < d_; ++i)
      p(at++) = x(i, i).real();
    for (Eigen::Index i = 0; i < d_; ++i)
      for (Eigen::Index j = i + 1; j < d_; ++j) {
        p(at++) = std::sqrt(2.0) * x(i, j).real();
        p(at++) = std::sqrt(2.0) * x(i, j).imag();
      }
    return p;
  }

  ComplexMatrix to_matrix(const Eigen::VectorXd &p) const {
    ComplexMatrix x(d_, d_);
    Eigen::Index at = 0;
    for (Eigen::Index i = 0; i < d_; ++i)
      x(i, i) = p(at++);
    const double s = 1.0 / std::sqrt(2.0);
    for (Eigen::Index i = 0; i < d_; ++i)
      for (Eigen::Index j = i + 1; j < d_; ++j) {
        const complex_t z(s * p(at), s * p(at + 1));
        at += 2;
        x(i, j) = z;
        x(j, i) = std::conj(z);
      }
    return x;
  }

private:
  Eigen::Index d_;
};

class Ascent {
public:
  Ascent(const KrausChannel &phi, const GaugeNorm &norm)
      : phi_(phi), norm_(norm), chart_(phi.d_in()), pad_(padded_dim(phi)) {}

  double input_norm(const ComplexMatrix &x) const {
    return norm_of(norm_, x, pad_);
  }

  // |||Phi(X)||| / |||X|||, zero at X = 0.
  double ratio(const Eigen::VectorXd &p) const {
    const ComplexMatrix x = chart_.to_matrix(p);
    const double nx = input_norm(x);
    if (!(nx > 0.0))
      return 0.0;
    return norm_of(norm_, apply(phi_, x), pad_) / nx;
  }

  std::optional<Eigen::VectorXd> normalized(const Eigen::VectorXd &p) const {
    const double nx = input_norm(chart_.to_matrix(p));
    if (!(nx > 0.0) || !std::isfinite(nx))
      return std::nullopt;
    return Eigen::VectorXd(p / nx);
  }

  // Best unit-norm iterate reached from start, and its ratio.
  std::pair<Eigen::VectorXd, double> run(Eigen::VectorXd p,
                                         std::size_t steps) const {
    constexpr double fd_eps = 1e-5;
    Eigen::VectorXd best = p;
    double best_val = ratio(p);
    const auto n = static_cast<Eigen::Index>(chart_.size());
    Eigen::VectorXd grad(n);
    double step = 0.1;
    for (std::size_t t = 0; t < steps; ++t, step *= 0.9) {
      for (Eigen::Index j = 0; j < n; ++j) {
        Eigen::VectorXd hi = p, lo = p;
        hi(j) += fd_eps;
        lo(j) -= fd_eps;
        grad(j) = (ratio(hi) - ratio(lo)) / (2.0 * fd_eps);
      }
      // The ratio is scale invariant; drop the radial component.
      const double pp = p.squaredNorm();
      grad -= (grad.dot(p) / pp) * p;
      const double gn = grad.norm();
      if (!(gn > 0.0) || !std::isfinite(gn))
        break;
      const Eigen::VectorXd moved = p + (step * std::sqrt(pp) / gn) * grad;
      auto next = normalized(moved);
      if (!next)
        break;
      p = std::move(*next);
      const double v = ratio(p);
      if (v > best_val) {
        best_val = v;
        best = p;
      }
    }
    return {best, best_val};
  }

  const HermitianChart &chart() const { return chart_; }

private:
  const KrausChannel &phi_;
  const GaugeNorm &norm_;
  HermitianChart chart_;
  std::size_t pad_;
};

} // namespace

EmpiricalFactor eta_empirical(const KrausChannel &phi, const GaugeNorm &norm,
                              const SearchOptions &opts) {
  const Ascent ascent(phi, norm);
  const HermitianChart &chart = ascent.chart();

  std::optional<Eigen::VectorXd> best;
  double best_val = -1.0;
  auto consider = [&](const ComplexMatrix &start) {
    auto p = ascent.normalized(chart.to_params(start));
    if (!p)
      return; // zero start, not part of the population
    auto [q, v] = ascent.run(std::move(*p), opts.steps);
    if (v > best_val) {
      best_val = v;
      best = std::move(q);
    }
  };

  consider(ComplexMatrix::Identity(idx(phi.d_in()), idx(phi.d_in())));
  consider(eta_trace(phi).witness.matrix());
  for (std::size_t r = 0; r < opts.restarts; ++r) {
    Rng rng = make_rng(opts.seed, r + 1);
    consider(random_hermitian(phi.d_in(), rng).matrix());
  }

  const ComplexMatrix x = chart.to_matrix(*best);
  HermitianOperator witness(x * (1.0 / ascent.input_norm(x)));
  const double lower = norm_of(norm, apply(phi, witness).matrix(),
                               padded_dim(phi));
  return EmpiricalFactor{lower, std::move(witness)};
}

//-------------------------------------------------------------------------
// Inequality checks
//-------------------------------------------------------------------------

std::vector<KyFanCheck> verify_ky_fan_bound(const KrausChannel &phi,
                                            const HermitianOperator &x) {
  if (x.dim() != phi.d_in()) {
    std::ostringstream ss;
    ss << "input has dimension " << x.dim() << ", channel expects "
       << phi.d_in();
    throw Error(ErrorKind::DimensionMismatch, ss.str());
  }
  const std::size_t pad = padded_dim(phi);
  const double eta = eta_upper(phi);
  const SingularSpectrum out = singular_values(apply(phi, x).matrix(), pad);
  const SingularSpectrum in = singular_values(x.matrix(), pad);
  std::vector<KyFanCheck> rows;
  rows.reserve(pad);
  for (std::size_t k = 1; k <= pad; ++k) {
    const double lhs = top_k_sum(out.values(), k);
    const double rhs = eta * top_k_sum(in.values(), k);
    rows.push_back({k, lhs, rhs, lhs <= rhs + 1e-9 * std::max(1.0, rhs)});
  }
  return rows;
}

NormCheck check_norm_bound(const KrausChannel &phi, const GaugeNorm &norm,
                           const HermitianOperator &x, double eta) {
  const std::size_t pad = padded_dim(phi);
  const double lhs = norm_of(norm, apply(phi, x).matrix(), pad);
  const double rhs = eta * norm_of(norm, x.matrix(), pad);
  return NormCheck{lhs, rhs, lhs <= rhs + 1e-9 * std::max(1.0, rhs)};
}

ShrinkReport analyze(const KrausChannel &phi,
                     const std::vector<GaugeNorm> &norms,
                     const SearchOptions &opts) {
  ShrinkReport report{0.0, eta_spectral(phi).value, eta_trace(phi).value, {},
                      padded_dim(phi)};
  report.eta_upper = std::max(report.eta_spectral, report.eta_trace);
  for (const auto &norm : norms) {
    EmpiricalFactor f = eta_empirical(phi, norm, opts);
    report.per_norm.push_back({norm, f.lower, std::move(f.witness)});
  }
  return report;
}

} // namespace cpshrink
