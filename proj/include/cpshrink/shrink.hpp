/*
 * Copyright 2026 The cpshrink Authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef CPSHRINK_SHRINK_HPP
#define CPSHRINK_SHRINK_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cpshrink/channel.hpp"
#include "cpshrink/gauge.hpp"
#include "cpshrink/spectral.hpp"

namespace cpshrink {

//=========================================================================
// Shrinking factors of a CP map restricted to Hermitian operators
//=========================================================================
//
// For a unitarily invariant norm |||.||| the shrinking factor is
//
//   eta_g = sup { |||Phi(X)||| : X Hermitian, |||X||| = 1 },
//
// with both spectra padded to max(d_in, d_out). It is known exactly for the
// spectral norm (||M||_inf) and the trace norm (||W||_inf), and bounded
// above by eta = max(||M||_inf, ||W||_inf) for every norm.

// Sum of the k largest eigenvalues; k > dim counts every eigenvalue. This
// equals max tr(P x) over 0 <= P <= I with tr P = min(k, dim).
double top_k_eigensum(const HermitianOperator &x, std::size_t k);

// Projector onto the eigenvectors of the k largest eigenvalues (first
// min(k, dim) in the eigensystem order).
HermitianOperator top_k_eigenprojector(const HermitianOperator &x,
                                       std::size_t k);

// Mutually orthogonal projectors with tr[(p_q - p_r) x] = ||x||_(k).
struct FanProjectors {
  HermitianOperator p_q; // onto positive-part eigenvectors
  HermitianOperator p_r; // onto negative-part eigenvectors
  std::size_t k;
};

// Picks the eigenvectors carrying the k largest |eigenvalues| (stable by
// index on ties) and sorts them by sign. Zero eigenvalues are left out, so
// rank(p_q + p_r) <= min(k, rank |x|).
FanProjectors fan_projectors(const HermitianOperator &x, std::size_t k);

// max(||M||_inf, ||W||_inf).
double eta_upper(const KrausChannel &phi);

struct ExactFactor {
  double value;
  HermitianOperator witness;
};

// ||M||_inf, attained at the identity since Phi(I) = M.
ExactFactor eta_spectral(const KrausChannel &phi);

// ||W||_inf, attained at the projector onto the first listed top eigenvector
// of W.
ExactFactor eta_trace(const KrausChannel &phi);

struct SearchOptions {
  std::size_t restarts = 20; // random starts on top of the analytic seeds
  std::size_t steps = 60;
  std::uint64_t seed = 0;
};

struct EmpiricalFactor {
  double lower;              // |||Phi(witness)|||
  HermitianOperator witness; // unit norm
};

// Multi-start ascent of |||Phi(X)||| / |||X||| over Hermitian X. Starts from
// the identity and the trace-norm witness, then from `restarts` random
// Hermitian matrices (restart r draws from its own stream of `seed`, so
// adding restarts never lowers the result). Each start runs `steps`
// central-difference gradient steps of length 0.1 * 0.9^t in the tangent
// direction, renormalizing to unit norm after each step. The best iterate
// wins; ties go to the earliest start.
EmpiricalFactor eta_empirical(const KrausChannel &phi, const GaugeNorm &norm,
                              const SearchOptions &opts);

struct KyFanCheck {
  std::size_t k;
  double lhs; // ||Phi(x)||_(k)
  double rhs; // eta * ||x||_(k)
  bool ok;
};

// One row per k = 1..max(d_in, d_out); ok when lhs <= rhs + 1e-9 max(1, rhs).
std::vector<KyFanCheck> verify_ky_fan_bound(const KrausChannel &phi,
                                            const HermitianOperator &x);

// |||Phi(x)||| <= eta |||x||| + 1e-9 max(1, eta |||x|||), padded.
struct NormCheck {
  double lhs;
  double rhs;
  bool ok;
};
NormCheck check_norm_bound(const KrausChannel &phi, const GaugeNorm &norm,
                           const HermitianOperator &x, double eta);

struct NormBracket {
  GaugeNorm norm;
  double empirical_lower;
  HermitianOperator witness;
};

struct ShrinkReport {
  double eta_upper;
  double eta_spectral;
  double eta_trace;
  std::vector<NormBracket> per_norm;
  std::size_t padded_dim;
};

ShrinkReport analyze(const KrausChannel &phi,
                     const std::vector<GaugeNorm> &norms,
                     const SearchOptions &opts);

inline std::size_t padded_dim(const KrausChannel &phi) {
  return phi.d_in() > phi.d_out() ? phi.d_in() : phi.d_out();
}

} // namespace cpshrink

#endif // CPSHRINK_SHRINK_HPP
