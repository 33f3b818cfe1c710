/*
 * Copyright 2026 The cpshrink Authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "cpshrink/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

namespace cpshrink {

namespace {

[[noreturn]] void field_error(const std::string &field,
                              const std::string &what) {
  throw Error(ErrorKind::Parse, "field '" + field + "': " + what);
}

std::size_t read_dim(const Json &j, const char *key) {
  if (!j.contains(key))
    field_error(key, "missing");
  const Json &v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    field_error(key, "expected a positive integer");
  return v.get<std::size_t>();
}

std::vector<std::size_t> split_dims(std::string_view s, std::string_view spec) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  for (;;) {
    const auto x = s.find('x', start);
    const std::string_view tok = s.substr(start, x - start);
    std::size_t v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || res.ec != std::errc() ||
        res.ptr != tok.data() + tok.size() || v == 0)
      throw Error(ErrorKind::Parse, "bad dimension '" + std::string(tok) +
                                        "' in channel spec '" +
                                        std::string(spec) + "'");
    out.push_back(v);
    if (x == std::string_view::npos)
      return out;
    start = x + 1;
  }
}

std::uint64_t parse_seed(std::string_view tok, std::string_view spec) {
  std::uint64_t v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || res.ec != std::errc() ||
      res.ptr != tok.data() + tok.size())
    throw Error(ErrorKind::Parse, "bad seed '" + std::string(tok) +
                                      "' in channel spec '" +
                                      std::string(spec) + "'");
  return v;
}

bool is_named(std::string_view s) {
  for (std::string_view prefix : {"identity:", "ptrace:", "random:", "cptp:"})
    if (s.substr(0, prefix.size()) == prefix)
      return true;
  return false;
}

void write_indent(std::ostream &os, int indent, int depth) {
  os << '\n' << std::string(static_cast<std::size_t>(indent * depth), ' ');
}

void write_value(std::ostream &os, const Json &j, int indent, int depth) {
  switch (j.type()) {
  case Json::value_t::number_float: {
    const double x = j.get<double>();
    if (!std::isfinite(x)) {
      os << "null";
    } else {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", x);
      os << buf;
    }
    break;
  }
  case Json::value_t::array: {
    if (j.empty()) {
      os << "[]";
      break;
    }
    os << '[';
    bool first = true;
    for (const auto &v : j) {
      if (!first)
        os << ',';
      first = false;
      write_indent(os, indent, depth + 1);
      write_value(os, v, indent, depth + 1);
    }
    write_indent(os, indent, depth);
    os << ']';
    break;
  }
  case Json::value_t::object: {
    if (j.empty()) {
      os << "{}";
      break;
    }
    os << '{';
    bool first = true;
    for (const auto &[key, v] : j.items()) {
      if (!first)
        os << ',';
      first = false;
      write_indent(os, indent, depth + 1);
      os << Json(key).dump() << ": ";
      write_value(os, v, indent, depth + 1);
    }
    write_indent(os, indent, depth);
    os << '}';
    break;
  }
  default:
    os << j.dump();
  }
}

} // namespace

Json matrix_to_json(const ComplexMatrix &m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json &j, const std::string &field) {
  if (!j.is_array() || j.empty())
    field_error(field, "expected a nonempty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rf = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].empty())
      field_error(rf, "expected a nonempty array of [re, im] pairs");
    if (i == 0)
      cols = j[i].size();
    else if (j[i].size() != cols)
      field_error(rf, "row has " + std::to_string(j[i].size()) +
                          " entries, expected " + std::to_string(cols));
  }
  ComplexMatrix m(static_cast<Eigen::Index>(rows),
                  static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c) {
      const Json &z = j[i][c];
      const std::string ef =
          field + "[" + std::to_string(i) + "][" + std::to_string(c) + "]";
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() ||
          !z[1].is_number())
        field_error(ef, "expected a [re, im] pair of numbers");
      const double re = z[0].get<double>();
      const double im = z[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im))
        field_error(ef, "entry is not finite");
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
          complex_t(re, im);
    }
  return m;
}

Json channel_to_json(const KrausChannel &phi) {
  Json j = Json::object();
  j["d_in"] = phi.d_in();
  j["d_out"] = phi.d_out();
  Json kraus = Json::array();
  for (const auto &e : phi.kraus())
    kraus.push_back(matrix_to_json(e));
  j["kraus"] = std::move(kraus);
  return j;
}

KrausChannel channel_from_json(const Json &j) {
  if (!j.is_object())
    field_error("<root>", "expected a JSON object");
  const std::size_t d_in = read_dim(j, "d_in");
  const std::size_t d_out = read_dim(j, "d_out");
  if (!j.contains("kraus"))
    field_error("kraus", "missing");
  const Json &list = j.at("kraus");
  if (!list.is_array() || list.empty())
    field_error("kraus", "expected a nonempty array of Kraus operators");
  std::vector<ComplexMatrix> kraus;
  for (std::size_t n = 0; n < list.size(); ++n) {
    const std::string field = "kraus[" + std::to_string(n) + "]";
    ComplexMatrix e = matrix_from_json(list[n], field);
    if (e.rows() != static_cast<Eigen::Index>(d_out) ||
        e.cols() != static_cast<Eigen::Index>(d_in)) {
      std::ostringstream ss;
      ss << "shape " << e.rows() << "x" << e.cols() << " does not match d_out x d_in = "
         << d_out << "x" << d_in;
      field_error(field, ss.str());
    }
    kraus.push_back(std::move(e));
  }
  try {
    return KrausChannel(d_in, d_out, std::move(kraus));
  } catch (const Error &e) {
    field_error("kraus", e.what());
  }
}

KrausChannel named_channel(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos || !is_named(spec))
    throw Error(ErrorKind::Parse,
                "unknown channel spec '" + std::string(spec) + "'");
  const std::string_view kind = spec.substr(0, colon);
  std::string_view rest = spec.substr(colon + 1);

  if (kind == "identity") {
    const auto d = split_dims(rest, spec);
    if (d.size() != 1)
      throw Error(ErrorKind::Parse, "expected identity:<d>");
    return identity_channel(d[0]);
  }
  if (kind == "ptrace") {
    const auto d = split_dims(rest, spec);
    if (d.size() != 2)
      throw Error(ErrorKind::Parse, "expected ptrace:<dB>x<dC>");
    return partial_trace_channel(d[0], d[1]);
  }
  const auto seed_colon = rest.find(':');
  if (seed_colon == std::string_view::npos)
    throw Error(ErrorKind::Parse, "expected " + std::string(kind) +
                                      ":<dIn>x<dOut>x<n>:<seed>");
  const auto d = split_dims(rest.substr(0, seed_colon), spec);
  const std::uint64_t seed = parse_seed(rest.substr(seed_colon + 1), spec);
  if (d.size() != 3)
    throw Error(ErrorKind::Parse, "expected " + std::string(kind) +
                                      ":<dIn>x<dOut>x<n>:<seed>");
  if (kind == "random")
    return random_channel(d[0], d[1], d[2], 1.0, seed);
  return random_cptp_channel(d[0], d[1], d[2], seed);
}

KrausChannel load_channel(std::string_view source) {
  if (is_named(source))
    return named_channel(source);
  const std::string path(source);
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::Parse, "cannot open channel file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorKind::Parse,
                "malformed JSON in '" + path + "': " + e.what());
  }
  return channel_from_json(j);
}

void write_json(std::ostream &os, const Json &j, int indent) {
  write_value(os, j, indent, 0);
  os << '\n';
}

} // namespace cpshrink
