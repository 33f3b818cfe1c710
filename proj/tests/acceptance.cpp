/*
 * Copyright 2026 The cpshrink Authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances and runtime budgets are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cpshrink/channel.hpp"
#include "cpshrink/gauge.hpp"
#include "cpshrink/sampling.hpp"
#include "cpshrink/shrink.hpp"
#include "feasible.hpp"
#include "oracles.hpp"

using namespace cpshrink;

namespace {

double max_abs(const ComplexMatrix &m) { return m.cwiseAbs().maxCoeff(); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string &why) {
    if (ok)
      detail = why;
    ok = false;
  }
};

// Norms of the battery: Schatten {1, 1.5, 2, 3, inf}, Ky Fan 1..6, two
// positive combinations.
std::vector<GaugeNorm> battery() { return norm_battery(6); }

// Random (channel, input) pairs with d_A, d_B <= 6, fixed by seed.
struct Pair {
  KrausChannel phi;
  HermitianOperator x;
};

std::vector<Pair> fuzz_pairs(std::size_t count, std::uint64_t seed) {
  std::vector<Pair> out;
  out.reserve(count);
  Rng rng = make_rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, 6), kraus(1, 4);
  std::uniform_real_distribution<double> log_scale(-1.0, 1.0);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t d_in = dim(rng), d_out = dim(rng), n = kraus(rng);
    const double scale = std::pow(10.0, log_scale(rng));
    // Mix general CP maps with trace-preserving ones.
    KrausChannel phi = (i % 4 == 3 && n * d_out >= d_in)
                           ? random_cptp_channel(d_in, d_out, n, rng())
                           : random_channel(d_in, d_out, n, scale, rng());
    HermitianOperator x = random_hermitian(d_in, rng);
    out.push_back({std::move(phi), std::move(x)});
  }
  return out;
}

Outcome criterion_partial_trace() {
  Outcome o;
  const auto norms = battery();
  for (auto [d_b, d_c] : std::vector<std::pair<std::size_t, std::size_t>>{
           {2, 2}, {2, 3}, {3, 2}, {4, 2}}) {
    const auto psi = partial_trace_channel(d_b, d_c);
    const double dc = static_cast<double>(d_c);
    if (std::abs(eta_upper(psi) - dc) > 1e-12)
      o.fail("eta_upper != d_C");
    if (std::abs(eta_spectral(psi).value - dc) > 1e-12)
      o.fail("eta_spectral != d_C");
    if (std::abs(eta_trace(psi).value - 1.0) > 1e-12)
      o.fail("eta_trace != 1");
    Rng rng = make_rng(100 + d_b * 10 + d_c);
    const std::size_t pad = d_b * d_c;
    for (int t = 0; t < 200; ++t) {
      const auto x = random_hermitian(pad, rng);
      const ComplexMatrix y = apply(psi, x).matrix();
      for (const auto &norm : norms) {
        const double lhs = norm_of(norm, y, pad);
        const double rhs = dc * norm_of(norm, x.matrix(), pad);
        if (lhs > rhs + 1e-9) {
          std::ostringstream ss;
          ss << norm.name() << " violated for ptrace " << d_b << "x" << d_c;
          o.fail(ss.str());
        }
      }
    }
  }
  return o;
}

Outcome criterion_saturation() {
  Outcome o;
  Rng rng = make_rng(200);
  std::uniform_int_distribution<std::size_t> dim(1, 5), kraus(1, 4);
  for (int i = 0; i < 100; ++i) {
    const auto phi = random_channel(dim(rng), dim(rng), kraus(rng), 1.0, rng());
    const auto inv = invariants_of(phi);
    const double m_norm = spectral_norm(inv.m_op.matrix());
    const double w_norm = spectral_norm(inv.w_op.matrix());
    const auto id = HermitianOperator::identity(phi.d_in());
    if (std::abs(spectral_norm(apply(phi, id).matrix()) - m_norm) > 1e-10)
      o.fail("||Phi(I)||_inf != ||M||_inf");
    const auto y = eta_trace(phi).witness;
    if (std::abs(trace_norm(apply(phi, y).matrix()) - w_norm) > 1e-9)
      o.fail("||Phi(Y)||_tr != ||W||_inf");
  }
  return o;
}

Outcome criterion_kyfan_fuzz(const std::vector<Pair> &pairs) {
  Outcome o;
  std::size_t checks = 0;
  for (const auto &p : pairs) {
    const auto rows = verify_ky_fan_bound(p.phi, p.x);
    if (rows.size() != std::max(p.phi.d_in(), p.phi.d_out()))
      o.fail("wrong number of k rows");
    for (const auto &row : rows) {
      ++checks;
      if (!(row.lhs <= row.rhs + 1e-9 * std::max(1.0, row.rhs))) {
        std::ostringstream ss;
        ss << "k=" << row.k << " lhs=" << row.lhs << " rhs=" << row.rhs;
        o.fail(ss.str());
      }
    }
  }
  if (o.ok)
    o.detail = std::to_string(checks) + " checks";
  return o;
}

Outcome criterion_norm_battery(const std::vector<Pair> &pairs) {
  Outcome o;
  const auto norms = battery();
  std::size_t checks = 0;
  for (const auto &p : pairs) {
    const double eta = eta_upper(p.phi);
    for (const auto &norm : norms) {
      const NormCheck c = check_norm_bound(p.phi, norm, p.x, eta);
      ++checks;
      if (!(c.lhs <= c.rhs + 1e-9 * std::max(1.0, c.rhs)))
        o.fail(norm.name() + " violated");
    }
  }
  if (o.ok)
    o.detail = std::to_string(checks) + " checks";
  return o;
}

Outcome criterion_fan_projectors() {
  Outcome o;
  Rng rng = make_rng(500);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = 2 + static_cast<std::size_t>(i) % 5;
    const auto x = random_hermitian(d, rng);
    for (std::size_t k = 1; k <= d + 2; ++k) {
      const auto fp = fan_projectors(x, k);
      const ComplexMatrix &q = fp.p_q.matrix(), &r = fp.p_r.matrix();
      if (max_abs(q * q - q) > 1e-9 || max_abs(r * r - r) > 1e-9)
        o.fail("projector not idempotent");
      if (max_abs(q * r) > 1e-9)
        o.fail("projectors not orthogonal");
      const double rank = fp.p_q.trace() + fp.p_r.trace();
      if (rank > static_cast<double>(k) + 1e-9)
        o.fail("rank(P_Q + P_R) > k");
      const double lhs = ((q - r) * x.matrix()).trace().real();
      if (std::abs(lhs - norm_of(GaugeNorm::ky_fan(k), x.matrix(), d)) > 1e-9)
        o.fail("tr[(P_Q - P_R) X] != ||X||_(k)");
    }
  }
  return o;
}

Outcome criterion_maximum_principle() {
  Outcome o;
  Rng rng = make_rng(600);
  for (int op = 0; op < 20; ++op) {
    const std::size_t d = 2 + static_cast<std::size_t>(op) % 5;
    const auto x = random_hermitian(d, rng);
    for (std::size_t k = 1; k <= d; ++k) {
      const double top = top_k_eigensum(x, k);
      const auto pstar = top_k_eigenprojector(x, k);
      if (std::abs((pstar.matrix() * x.matrix()).trace().real() - top) > 1e-10)
        o.fail("top-k eigenprojector does not achieve the sum");
      for (int s = 0; s < 1000; ++s) {
        const ComplexMatrix p =
            feasible::random_feasible(d, static_cast<double>(k), rng);
        if ((p * x.matrix()).trace().real() > top + 1e-9)
          o.fail("feasible P exceeds top-k eigensum");
      }
    }
  }
  return o;
}

Outcome criterion_remix() {
  Outcome o;
  Rng rng = make_rng(700);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = (i % 2 == 0) ? 2 : 1 + static_cast<std::size_t>(i) % 4;
    const auto phi = random_channel(dim(rng), dim(rng), n, 1.0, rng());
    // Count-preserving and count-increasing (n -> 2n) remixes.
    for (std::size_t rows : {n, 2 * n}) {
      const auto mixed = remix(phi, random_isometry(rows, n, rng));
      const auto a = invariants_of(phi), b = invariants_of(mixed);
      if (max_abs(a.m_op.matrix() - b.m_op.matrix()) > 1e-9)
        o.fail("M changed under remix");
      if (max_abs(a.w_op.matrix() - b.w_op.matrix()) > 1e-9)
        o.fail("W changed under remix");
      if (max_abs(choi_matrix(phi).matrix() - choi_matrix(mixed).matrix()) >
          1e-9)
        o.fail("Choi matrix changed under remix");
    }
  }
  return o;
}

Outcome criterion_empirical_bracket() {
  Outcome o;
  double worst = 0.0;
  for (std::uint64_t c = 0; c < 50; ++c) {
    const auto phi = random_channel(2, 2, 2, 1.0, 800 + c);
    const auto found = eta_empirical(phi, GaugeNorm::frobenius(),
                                     SearchOptions{200, 60, c});
    const double grid = oracle::grid_max_frobenius_2x2(phi.kraus(), 50);
    worst = std::max(worst, std::abs(found.lower - grid));
    if (std::abs(found.lower - grid) > 1e-3) {
      std::ostringstream ss;
      ss << "channel " << c << ": search " << found.lower << " vs grid "
         << grid;
      o.fail(ss.str());
    }
    if (found.lower > eta_upper(phi) + 1e-7)
      o.fail("empirical lower bound exceeds eta_upper");
  }
  if (o.ok) {
    std::ostringstream ss;
    ss << "max |search - grid| = " << worst;
    o.detail = ss.str();
  }
  return o;
}

Outcome criterion_cptp() {
  Outcome o;
  Rng rng = make_rng(900);
  std::uniform_int_distribution<std::size_t> dim(1, 5), kraus(1, 4);
  int made = 0;
  while (made < 100) {
    const std::size_t d_in = dim(rng), d_out = dim(rng), n = kraus(rng);
    const std::uint64_t seed = rng();
    if (n * d_out < d_in)
      continue;
    ++made;
    const auto phi = random_cptp_channel(d_in, d_out, n, seed);
    if (std::abs(eta_trace(phi).value - 1.0) > 1e-10)
      o.fail("eta_trace != 1 for a trace-preserving channel");
    const double m_norm = spectral_norm(invariants_of(phi).m_op.matrix());
    if (std::abs(eta_upper(phi) - std::max(m_norm, 1.0)) > 1e-10)
      o.fail("eta_upper != max(||M||_inf, 1)");
  }
  return o;
}

} // namespace

int main() {
  using clock = std::chrono::steady_clock;
  int failures = 0;
  auto run = [&](int id, const char *name, double budget_s,
                 const std::function<Outcome()> &body) {
    const auto t0 = clock::now();
    Outcome o = body();
    const double secs =
        std::chrono::duration<double>(clock::now() - t0).count();
    if (budget_s > 0 && secs > budget_s)
      o.fail("runtime " + std::to_string(secs) + " s over budget");
    std::printf("[%s] %d. %-34s %7.2f s%s%s\n", o.ok ? "PASS" : "FAIL", id,
                name, secs, o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
    failures += o.ok ? 0 : 1;
  };

  const auto pairs = fuzz_pairs(1000, 3000);

  run(1, "partial-trace bound", 30.0, criterion_partial_trace);
  run(2, "saturation witnesses", 10.0, criterion_saturation);
  run(3, "ky fan inequality fuzz", 60.0,
      [&] { return criterion_kyfan_fuzz(pairs); });
  run(4, "norm battery fuzz", 0.0,
      [&] { return criterion_norm_battery(pairs); });
  run(5, "fan projector construction", 0.0, criterion_fan_projectors);
  run(6, "maximum principle oracle", 0.0, criterion_maximum_principle);
  run(7, "kraus remix invariance", 0.0, criterion_remix);
  run(8, "empirical bracket vs grid", 120.0, criterion_empirical_bracket);
  run(9, "trace-preserving sanity", 0.0, criterion_cptp);

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
