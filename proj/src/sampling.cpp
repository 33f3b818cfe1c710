/*
 * Copyright 2026 The cpshrink Authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "cpshrink/sampling.hpp"

#include <cmath>

namespace cpshrink {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

ComplexMatrix random_gaussian(std::size_t rows, std::size_t cols, Rng &rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix g(static_cast<Eigen::Index>(rows),
                  static_cast<Eigen::Index>(cols));
  // Fill row-major so the draw order matches the channel JSON layout.
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = complex_t(re, im);
    }
  return g;
}

HermitianOperator random_hermitian(std::size_t dim, Rng &rng) {
  const ComplexMatrix g = random_gaussian(dim, dim, rng);
  return HermitianOperator((g + g.adjoint()) * 0.5);
}

ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, Rng &rng) {
  if (rows < cols)
    throw Error(ErrorKind::InfeasibleShape,
                "an isometry needs at least as many rows as columns");
  const ComplexMatrix g = random_gaussian(rows, cols, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  const auto r = static_cast<Eigen::Index>(rows);
  const auto c = static_cast<Eigen::Index>(cols);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(r, c);
  // Fix the phases against R's diagonal so the distribution is Haar.
  const ComplexMatrix &packed = qr.matrixQR();
  for (Eigen::Index j = 0; j < c; ++j) {
    const complex_t d = packed(j, j);
    const double a = std::abs(d);
    if (a > 0.0)
      q.col(j) *= d / a;
  }
  return q;
}

} // namespace cpshrink
