/*
 * Copyright 2026 The cpshrink Authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "cpshrink/gauge.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

namespace cpshrink {

namespace {

bool is_base(const GaugeNorm &n) {
  return !std::holds_alternative<Combination>(n.variant());
}

std::string format_real(double x) {
  if (std::isinf(x))
    return "inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

double parse_real(std::string_view s, std::string_view what) {
  if (s == "inf" || s == "Inf" || s == "infinity")
    return std::numeric_limits<double>::infinity();
  double x = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorKind::Parse,
                "cannot parse " + std::string(what) + " '" + std::string(s) +
                    "'");
  return x;
}

// Splits on '+' separators, skipping the '+' of an exponent like 1e+3.
std::vector<std::string_view> split_terms(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '+')
      continue;
    if (i > 0 && (s[i - 1] == 'e' || s[i - 1] == 'E') && i >= 2 &&
        std::isdigit(static_cast<unsigned char>(s[i - 2])))
      continue;
    out.push_back(s.substr(start, i - start));
    start = i + 1;
  }
  out.push_back(s.substr(start));
  return out;
}

} // namespace

GaugeNorm GaugeNorm::ky_fan(std::size_t k) {
  if (k < 1)
    throw Error(ErrorKind::InvalidNorm, "Ky Fan index k must be >= 1");
  return GaugeNorm(KyFan{k});
}

GaugeNorm GaugeNorm::schatten(double p) {
  if (std::isnan(p) || p < 1.0)
    throw Error(ErrorKind::InvalidNorm,
                "Schatten exponent must satisfy p >= 1 (or inf)");
  return GaugeNorm(Schatten{p});
}

GaugeNorm GaugeNorm::spectral() {
  return schatten(std::numeric_limits<double>::infinity());
}

GaugeNorm GaugeNorm::trace() { return schatten(1.0); }

GaugeNorm GaugeNorm::frobenius() { return schatten(2.0); }

GaugeNorm GaugeNorm::combination(std::vector<GaugeTerm> terms) {
  if (terms.empty())
    throw Error(ErrorKind::InvalidNorm, "combination needs at least one term");
  for (const auto &t : terms) {
    if (!(t.coefficient > 0.0) || !std::isfinite(t.coefficient))
      throw Error(ErrorKind::InvalidNorm,
                  "combination coefficients must be finite and positive");
    if (!is_base(t.norm))
      throw Error(ErrorKind::InvalidNorm,
                  "combination terms must be Ky Fan or Schatten norms");
  }
  return GaugeNorm(Combination{std::move(terms)});
}

GaugeNorm GaugeNorm::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::Parse,
                "norm '" + std::string(text) + "' lacks a '<kind>:' prefix");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);
  if (kind == "kyfan") {
    std::size_t k = 0;
    auto res = std::from_chars(arg.data(), arg.data() + arg.size(), k);
    if (res.ec != std::errc() || res.ptr != arg.data() + arg.size() ||
        arg.empty())
      throw Error(ErrorKind::Parse,
                  "cannot parse Ky Fan index '" + std::string(arg) + "'");
    return ky_fan(k);
  }
  if (kind == "schatten")
    return schatten(parse_real(arg, "Schatten exponent"));
  if (kind == "combo") {
    std::vector<GaugeTerm> terms;
    for (std::string_view term : split_terms(arg)) {
      const auto star = term.find('*');
      if (star == std::string_view::npos)
        throw Error(ErrorKind::Parse, "combination term '" +
                                          std::string(term) +
                                          "' must look like <c>*<norm>");
      const double c = parse_real(term.substr(0, star), "coefficient");
      terms.push_back({c, parse(term.substr(star + 1))});
    }
    return combination(std::move(terms));
  }
  throw Error(ErrorKind::Parse, "unknown norm kind '" + std::string(kind) +
                                    "' (expected kyfan, schatten or combo)");
}

std::string GaugeNorm::name() const {
  return std::visit(
      [](const auto &v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, KyFan>) {
          return "kyfan:" + std::to_string(v.k);
        } else if constexpr (std::is_same_v<T, Schatten>) {
          return "schatten:" + format_real(v.p);
        } else {
          std::string s = "combo:";
          for (std::size_t i = 0; i < v.terms.size(); ++i) {
            if (i)
              s += '+';
            s += format_real(v.terms[i].coefficient) + "*" +
                 v.terms[i].norm.name();
          }
          return s;
        }
      },
      v_);
}

//-------------------------------------------------------------------------

PaddedVector::PaddedVector(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty())
    throw Error(ErrorKind::DimensionMismatch, "padded vector must be nonempty");
  for (double v : values_)
    if (!std::isfinite(v) || v < 0.0)
      throw Error(ErrorKind::NonFinite,
                  "padded vector entries must be finite and nonnegative");
}

double top_k_sum(std::span<const double> descending, std::size_t k) {
  const std::size_t n = std::min(k, descending.size());
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += descending[i];
  return s;
}

namespace {

double eval_sorted(const GaugeNorm &norm, std::span<const double> sigma) {
  return std::visit(
      [&](const auto &v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, KyFan>) {
          // k beyond the length is the trace norm.
          return top_k_sum(sigma, v.k);
        } else if constexpr (std::is_same_v<T, Schatten>) {
          if (std::isinf(v.p))
            return sigma.empty() ? 0.0 : sigma[0];
          if (v.p == 1.0)
            return top_k_sum(sigma, sigma.size());
          const double top = sigma.empty() ? 0.0 : sigma[0];
          if (top == 0.0)
            return 0.0;
          // Scale by the largest value to keep the powers in range.
          double s = 0.0;
          for (double x : sigma)
            s += std::pow(x / top, v.p);
          return top * std::pow(s, 1.0 / v.p);
        } else {
          double s = 0.0;
          for (const auto &t : v.terms)
            s += t.coefficient * eval_sorted(t.norm, sigma);
          return s;
        }
      },
      norm.variant());
}

} // namespace

double gauge_eval(const GaugeNorm &norm, const SingularSpectrum &spectrum) {
  return eval_sorted(norm, spectrum.values());
}

double gauge_eval(const GaugeNorm &norm, const PaddedVector &v) {
  std::vector<double> sorted(v.values().begin(), v.values().end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return eval_sorted(norm, sorted);
}

double norm_of(const GaugeNorm &norm, const ComplexMatrix &m,
               std::size_t padded_dim) {
  return gauge_eval(norm, singular_values(m, padded_dim));
}

bool fan_dominance(const PaddedVector &u, const PaddedVector &v) {
  if (u.dim() != v.dim()) {
    std::ostringstream ss;
    ss << "fan dominance of vectors of length " << u.dim() << " and "
       << v.dim();
    throw Error(ErrorKind::DimensionMismatch, ss.str());
  }
  std::vector<double> a(u.values().begin(), u.values().end());
  std::vector<double> b(v.values().begin(), v.values().end());
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  double sa = 0.0, sb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sa += a[k];
    sb += b[k];
    if (sa > sb + 1e-12)
      return false;
  }
  return true;
}

std::vector<GaugeNorm> norm_battery(std::size_t max_k) {
  std::vector<GaugeNorm> out;
  for (double p : {1.0, 1.5, 2.0, 3.0})
    out.push_back(GaugeNorm::schatten(p));
  out.push_back(GaugeNorm::spectral());
  for (std::size_t k = 1; k <= max_k; ++k)
    out.push_back(GaugeNorm::ky_fan(k));
  out.push_back(GaugeNorm::combination(
      {{0.5, GaugeNorm::ky_fan(2)}, {1.5, GaugeNorm::frobenius()}}));
  out.push_back(GaugeNorm::combination({{0.25, GaugeNorm::trace()},
                                        {1.0, GaugeNorm::schatten(3.0)},
                                        {2.0, GaugeNorm::spectral()}}));
  return out;
}

} // namespace cpshrink
