/*
 * Copyright 2026 The cpshrink Authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef CPSHRINK_CHANNEL_HPP
#define CPSHRINK_CHANNEL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cpshrink/spectral.hpp"

namespace cpshrink {

//=========================================================================
// KrausChannel
//=========================================================================

// A completely positive map Phi(X) = sum_n E_n X E_n^dagger given by its
// Kraus operators E_n : C^d_in -> C^d_out. The map need not be trace
// preserving or unital. Zero Kraus operators are allowed as long as at least
// one is nonzero.
class KrausChannel {
public:
  KrausChannel(std::size_t d_in, std::size_t d_out,
               std::vector<ComplexMatrix> kraus);

  std::size_t d_in() const { return d_in_; }
  std::size_t d_out() const { return d_out_; }
  const std::vector<ComplexMatrix> &kraus() const { return kraus_; }
  std::size_t size() const { return kraus_.size(); }

  // The same channel with every Kraus operator multiplied by c.
  KrausChannel scaled(double c) const;

private:
  std::size_t d_in_;
  std::size_t d_out_;
  std::vector<ComplexMatrix> kraus_;
};

// M = sum E E^dagger on the output space, W = sum E^dagger E on the input
// space. Both are independent of the Kraus representation.
struct ChannelInvariants {
  HermitianOperator m_op;
  HermitianOperator w_op;
};

// Throws DimensionMismatch unless x.dim() == d_in.
HermitianOperator apply(const KrausChannel &phi, const HermitianOperator &x);

// General (not necessarily Hermitian) input.
ComplexMatrix apply(const KrausChannel &phi, const ComplexMatrix &x);

ChannelInvariants invariants_of(const KrausChannel &phi);

// G_m = sum_n v(m, n) E_n for an isometry v (v^dagger v = I within 1e-9).
// v may have more rows than there are Kraus operators.
KrausChannel remix(const KrausChannel &phi, const ComplexMatrix &v);

// Choi = sum_ij (e_i e_j^dagger) (x) Phi(e_i e_j^dagger); the row-block index
// is the input basis index i, each block is d_out x d_out.
HermitianOperator choi_matrix(const KrausChannel &phi);

KrausChannel identity_channel(std::size_t d);

// Tr_C on C^{d_B} (x) C^{d_C}, input index a = b * d_C + c. Kraus operators
// are I_B (x) <c| for c = 0..d_C-1.
KrausChannel partial_trace_channel(std::size_t d_b, std::size_t d_c);

// Kraus entries i.i.d. standard complex Gaussian times scale. Deterministic
// in (dims, n_kraus, scale, seed).
KrausChannel random_channel(std::size_t d_in, std::size_t d_out,
                            std::size_t n_kraus, double scale,
                            std::uint64_t seed);

// Trace-preserving channel sliced from a random (n_kraus * d_out) x d_in
// isometry. Throws InfeasibleShape when n_kraus * d_out < d_in.
KrausChannel random_cptp_channel(std::size_t d_in, std::size_t d_out,
                                 std::size_t n_kraus, std::uint64_t seed);

} // namespace cpshrink

#endif // CPSHRINK_CHANNEL_HPP
