/*
 * Copyright 2026 The cpshrink Authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cpshrink/channel.hpp"
#include "cpshrink/gauge.hpp"
#include "cpshrink/io.hpp"
#include "cpshrink/sampling.hpp"
#include "cpshrink/shrink.hpp"

namespace cpshrink::cli {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

struct ReportArgs {
  std::string channel;
  std::vector<std::string> norms;
  std::size_t restarts = 20;
  std::size_t steps = 60;
  std::uint64_t seed = 0;
  std::size_t verify_trials = 20;
  std::string format = "text";
};

struct VerifyArgs {
  std::string channel;
  std::size_t random = 0;
  std::string dims = "2..4";
  std::size_t trials = 10;
  std::uint64_t seed = 0;
};

struct Tally {
  std::size_t checks = 0;
  std::size_t failed = 0;
};

//-------------------------------------------------------------------------
// report
//-------------------------------------------------------------------------

Tally kyfan_fuzz(const KrausChannel &phi, std::size_t trials,
                 std::uint64_t seed) {
  Tally t;
  Rng rng = make_rng(seed, 0x7665726966ULL);
  for (std::size_t i = 0; i < trials; ++i) {
    const HermitianOperator x = random_hermitian(phi.d_in(), rng);
    for (const auto &row : verify_ky_fan_bound(phi, x)) {
      ++t.checks;
      t.failed += row.ok ? 0 : 1;
    }
  }
  return t;
}

int cmd_report(const ReportArgs &a, std::ostream &out) {
  const KrausChannel phi = load_channel(a.channel);
  std::vector<GaugeNorm> norms;
  for (const auto &s : a.norms)
    norms.push_back(GaugeNorm::parse(s));
  if (norms.empty())
    norms = {GaugeNorm::spectral(), GaugeNorm::trace(),
             GaugeNorm::frobenius()};

  const SearchOptions opts{a.restarts, a.steps, a.seed};
  const ShrinkReport report = analyze(phi, norms, opts);
  const Tally fuzz = kyfan_fuzz(phi, a.verify_trials, a.seed);

  if (a.format == "json") {
    Json doc = Json::object();
    doc["channel"] = {{"source", a.channel},
                      {"d_in", phi.d_in()},
                      {"d_out", phi.d_out()},
                      {"n_kraus", phi.size()}};
    doc["invariants"] = {{"m_spectral_norm", report.eta_spectral},
                         {"w_spectral_norm", report.eta_trace}};
    doc["padded_dim"] = report.padded_dim;
    doc["eta_upper"] = report.eta_upper;
    doc["eta_spectral"] = report.eta_spectral;
    doc["eta_trace"] = report.eta_trace;
    Json table = Json::array();
    for (const auto &b : report.per_norm)
      table.push_back({{"norm", b.norm.name()},
                       {"empirical_lower", b.empirical_lower},
                       {"eta_upper", report.eta_upper},
                       {"gap", report.eta_upper - b.empirical_lower}});
    doc["norms"] = std::move(table);
    doc["verification"] = {{"kyfan_checks", fuzz.checks},
                           {"passed", fuzz.checks - fuzz.failed},
                           {"failed", fuzz.failed}};
    doc["parameters"] = {{"restarts", a.restarts},
                         {"steps", a.steps},
                         {"seed", a.seed},
                         {"verify_trials", a.verify_trials}};
    write_json(out, doc);
    return kOk;
  }

  out << "channel        " << a.channel << "  (d_in " << phi.d_in()
      << ", d_out " << phi.d_out() << ", " << phi.size() << " Kraus)\n"
      << "||M||_inf      " << fmt(report.eta_spectral)
      << "   exact factor, spectral norm\n"
      << "||W||_inf      " << fmt(report.eta_trace)
      << "   exact factor, trace norm\n"
      << "eta            " << fmt(report.eta_upper)
      << "   upper bound, every unitarily invariant norm\n"
      << "padded dim     " << report.padded_dim << "\n\n";
  out << std::left << std::setw(36) << "norm" << std::setw(20)
      << "empirical_lower" << std::setw(16) << "eta_upper"
      << "gap\n";
  for (const auto &b : report.per_norm)
    out << std::setw(36) << b.norm.name() << std::setw(20)
        << fmt(b.empirical_lower) << std::setw(16) << fmt(report.eta_upper)
        << fmt(report.eta_upper - b.empirical_lower) << "\n";
  out << "\nky fan fuzz    " << fuzz.checks << " checks, "
      << fuzz.checks - fuzz.failed << " passed, " << fuzz.failed
      << " failed\n"
      << "parameters     seed " << a.seed << ", restarts " << a.restarts
      << ", steps " << a.steps << ", verify trials " << a.verify_trials
      << "\n";
  return kOk;
}

//-------------------------------------------------------------------------
// verify
//-------------------------------------------------------------------------

std::pair<std::size_t, std::size_t> parse_range(const std::string &s) {
  auto to_dim = [&](const std::string &tok) {
    std::size_t v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || res.ec != std::errc() ||
        res.ptr != tok.data() + tok.size() || v == 0)
      throw Error(ErrorKind::Parse,
                  "field '--dims': expected <lo>..<hi> or <d>, got '" + s +
                      "'");
    return v;
  };
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const std::size_t d = to_dim(s);
    return {d, d};
  }
  const std::size_t lo = to_dim(s.substr(0, dots));
  const std::size_t hi = to_dim(s.substr(dots + 2));
  if (lo > hi)
    throw Error(ErrorKind::Parse, "field '--dims': empty range '" + s + "'");
  return {lo, hi};
}

double max_abs(const ComplexMatrix &m) { return m.cwiseAbs().maxCoeff(); }

class Verifier {
public:
  explicit Verifier(std::ostream &out) : out_(out) {}

  // Returns false on the first violation, after printing a reproducer.
  bool check_channel(const KrausChannel &phi, std::size_t trials, Rng &rng) {
    const double eta = eta_upper(phi);
    const auto battery = norm_battery(padded_dim(phi));
    for (std::size_t t = 0; t < trials; ++t) {
      const HermitianOperator x = random_hermitian(phi.d_in(), rng);
      for (const auto &row : verify_ky_fan_bound(phi, x)) {
        ++kyfan_.checks;
        if (!row.ok) {
          ++kyfan_.failed;
          return fail(phi, &x, "kyfan-bound",
                      "k=" + std::to_string(row.k) + " lhs=" + fmt(row.lhs) +
                          " rhs=" + fmt(row.rhs));
        }
      }
      for (const auto &norm : battery) {
        const NormCheck c = check_norm_bound(phi, norm, x, eta);
        ++battery_.checks;
        if (!c.ok) {
          ++battery_.failed;
          return fail(phi, &x, "norm-battery",
                      norm.name() + " lhs=" + fmt(c.lhs) +
                          " rhs=" + fmt(c.rhs));
        }
      }
    }
    // Remix through a random isometry, doubling the Kraus count every
    // other time.
    const std::size_t n = phi.size();
    const std::size_t rows = (remix_.checks % 2 == 0) ? n : 2 * n;
    const KrausChannel mixed = remix(phi, random_isometry(rows, n, rng));
    const ChannelInvariants a = invariants_of(phi);
    const ChannelInvariants b = invariants_of(mixed);
    const double scale = std::max(1.0, max_abs(a.m_op.matrix()));
    const double defect = std::max(
        {max_abs(a.m_op.matrix() - b.m_op.matrix()),
         max_abs(a.w_op.matrix() - b.w_op.matrix()),
         max_abs(choi_matrix(phi).matrix() - choi_matrix(mixed).matrix())});
    ++remix_.checks;
    if (defect > 1e-9 * scale) {
      ++remix_.failed;
      return fail(phi, nullptr, "remix-invariance",
                  "max deviation " + fmt(defect));
    }
    return true;
  }

  void print_table() const {
    out_ << std::left << std::setw(20) << "suite" << std::setw(10)
         << "checks" << std::setw(10) << "passed"
         << "failed\n";
    for (const auto &[name, t] :
         {std::pair{"kyfan-bound", kyfan_}, std::pair{"norm-battery", battery_},
          std::pair{"remix-invariance", remix_}})
      out_ << std::setw(20) << name << std::setw(10) << t.checks
           << std::setw(10) << t.checks - t.failed << t.failed << "\n";
  }

private:
  bool fail(const KrausChannel &phi, const HermitianOperator *x,
            const std::string &suite, const std::string &detail) {
    print_table();
    out_ << "FAIL " << suite << ": " << detail << "\n";
    Json repro = Json::object();
    repro["suite"] = suite;
    repro["detail"] = detail;
    repro["channel"] = channel_to_json(phi);
    if (x)
      repro["input"] = matrix_to_json(x->matrix());
    write_json(out_, repro);
    return false;
  }

  std::ostream &out_;
  Tally kyfan_, battery_, remix_;
};

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
  Verifier v(out);
  if (!a.channel.empty()) {
    const KrausChannel phi = load_channel(a.channel);
    Rng rng = make_rng(a.seed, 1);
    out << "channel " << a.channel << ": eta_upper = " << fmt(eta_upper(phi))
        << "\n";
    if (!v.check_channel(phi, a.trials, rng))
      return kVerificationFailed;
  } else {
    const auto [lo, hi] = parse_range(a.dims);
    Rng master = make_rng(a.seed, 0);
    std::uniform_int_distribution<std::size_t> dim(lo, hi);
    std::uniform_int_distribution<std::size_t> count(1, 3);
    for (std::size_t i = 0; i < a.random; ++i) {
      const std::size_t d_in = dim(master);
      const std::size_t d_out = dim(master);
      const std::size_t n = count(master);
      const std::uint64_t s = master();
      const KrausChannel phi = random_channel(d_in, d_out, n, 1.0, s);
      Rng rng = make_rng(s, 1);
      if (!v.check_channel(phi, a.trials, rng))
        return kVerificationFailed;
    }
    out << a.random << " random channels, dims " << lo << ".." << hi
        << ", " << a.trials << " inputs each\n";
  }
  v.print_table();
  out << "all checks passed\n";
  return kOk;
}

//-------------------------------------------------------------------------
// channel
//-------------------------------------------------------------------------

int cmd_channel(const std::string &source, std::ostream &out) {
  write_json(out, channel_to_json(load_channel(source)));
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Shrinking factors of completely positive maps under "
               "unitarily invariant norms",
               "cpshrink"};
  app.require_subcommand(1);

  ReportArgs report;
  auto *rep = app.add_subcommand(
      "report", "Exact shrinking factors and empirical brackets per norm");
  rep->add_option("--channel", report.channel,
                  "Channel JSON path or identity:<d>, ptrace:<dB>x<dC>, "
                  "random:<dIn>x<dOut>x<n>:<seed>, cptp:<dIn>x<dOut>x<n>:<seed>")
      ->required();
  rep->add_option("--norm", report.norms,
                  "kyfan:<k>, schatten:<p>, schatten:inf or "
                  "combo:<c>*<norm>+... (repeatable)");
  rep->add_option("--restarts", report.restarts, "Random restarts per norm")
      ->capture_default_str();
  rep->add_option("--steps", report.steps, "Ascent steps per start")
      ->capture_default_str();
  rep->add_option("--seed", report.seed, "Seed for all randomness")
      ->capture_default_str();
  rep->add_option("--verify-trials", report.verify_trials,
                  "Random inputs for the Ky Fan inequality fuzz")
      ->capture_default_str();
  rep->add_option("--format", report.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  VerifyArgs verify;
  auto *ver = app.add_subcommand(
      "verify", "Fuzz the norm inequalities and Kraus-remix invariance");
  auto *ver_channel =
      ver->add_option("--channel", verify.channel, "Channel to verify");
  auto *ver_random = ver->add_option("--random", verify.random,
                                     "Number of random channels to verify");
  ver_channel->excludes(ver_random);
  ver->add_option("--dims", verify.dims, "Dimension range <lo>..<hi>")
      ->capture_default_str();
  ver->add_option("--trials", verify.trials,
                  "Random Hermitian inputs per channel")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ver->add_option("--seed", verify.seed, "Seed for all randomness")
      ->capture_default_str();

  std::string emit_source;
  auto *emit = app.add_subcommand("channel", "Print a channel as JSON");
  emit->add_option("--channel", emit_source, "Channel source")->required();

  std::vector<const char *> argv;
  for (const auto &s : args)
    argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*rep)
      return cmd_report(report, out);
    if (*ver) {
      if (verify.channel.empty() && verify.random == 0) {
        err << "verify: one of --channel or --random is required\n";
        return kInputError;
      }
      return cmd_verify(verify, out);
    }
    return cmd_channel(emit_source, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

} // namespace cpshrink::cli
