/*
 * Copyright 2026 The cpshrink Authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef CPSHRINK_SAMPLING_HPP
#define CPSHRINK_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "cpshrink/spectral.hpp"

namespace cpshrink {

using Rng = std::mt19937_64;

// Seeds an engine from a (seed, stream) pair so that independent streams
// derived from one user seed do not overlap in practice.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

// Entries i.i.d. complex Gaussian with E|z|^2 = 1.
ComplexMatrix random_gaussian(std::size_t rows, std::size_t cols, Rng &rng);

// GUE-like Hermitian matrix (G + G^dagger) / 2.
HermitianOperator random_hermitian(std::size_t dim, Rng &rng);

// Columns orthonormal; rows >= cols. Haar-distributed when rows == cols.
ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, Rng &rng);

inline ComplexMatrix random_unitary(std::size_t dim, Rng &rng) {
  return random_isometry(dim, dim, rng);
}

} // namespace cpshrink

#endif // CPSHRINK_SAMPLING_HPP
