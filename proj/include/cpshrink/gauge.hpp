/*
 * Copyright 2026 The cpshrink Authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef CPSHRINK_GAUGE_HPP
#define CPSHRINK_GAUGE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cpshrink/spectral.hpp"

namespace cpshrink {

//=========================================================================
// Symmetric gauge functions
//=========================================================================
//
// Every norm here is a symmetric gauge function of the singular values
// that is unchanged when zeros are appended to its argument, so the same
// norm is meaningful on spaces of different dimension once both spectra are
// padded to a common length.

struct KyFan {
  std::size_t k;
};

struct Schatten {
  double p; // +inf for the spectral norm
};

struct GaugeTerm;

struct Combination {
  std::vector<GaugeTerm> terms;
};

class GaugeNorm {
public:
  using Variant = std::variant<KyFan, Schatten, Combination>;

  static GaugeNorm ky_fan(std::size_t k);
  static GaugeNorm schatten(double p);
  static GaugeNorm spectral();
  static GaugeNorm trace();
  static GaugeNorm frobenius();
  // Positive combination of base (KyFan or Schatten) norms.
  static GaugeNorm combination(std::vector<GaugeTerm> terms);

  // Text syntax: kyfan:<k>, schatten:<p>, schatten:inf,
  // combo:<c1>*<norm1>+<c2>*<norm2>...
  static GaugeNorm parse(std::string_view text);
  std::string name() const;

  const Variant &variant() const { return v_; }

private:
  explicit GaugeNorm(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

struct GaugeTerm {
  double coefficient;
  GaugeNorm norm;
};

// Nonnegative vector with an explicit length, in no particular order.
class PaddedVector {
public:
  PaddedVector(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t dim() const { return values_.size(); }

private:
  std::vector<double> values_;
};

double gauge_eval(const GaugeNorm &norm, const SingularSpectrum &spectrum);
double gauge_eval(const GaugeNorm &norm, const PaddedVector &v);

// The unitarily invariant norm of m, with singular values padded to
// padded_dim.
double norm_of(const GaugeNorm &norm, const ComplexMatrix &m,
               std::size_t padded_dim);

// Sum of the k largest entries, k clamped to the length.
double top_k_sum(std::span<const double> descending, std::size_t k);

// True iff for every k the k largest entries of u sum to no more than those
// of v (up to 1e-12). Throws DimensionMismatch on unequal lengths.
bool fan_dominance(const PaddedVector &u, const PaddedVector &v);

// KyFan 1..max_k, Schatten {1, 1.5, 2, 3, inf} and two fixed combinations.
std::vector<GaugeNorm> norm_battery(std::size_t max_k);

} // namespace cpshrink

#endif // CPSHRINK_GAUGE_HPP
