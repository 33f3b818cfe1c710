/*
 * Copyright 2026 The cpshrink Authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef CPSHRINK_IO_HPP
#define CPSHRINK_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cpshrink/channel.hpp"

namespace cpshrink {

using Json = nlohmann::ordered_json;

// Channel interchange format:
//   {"d_in": int, "d_out": int,
//    "kraus": [ <d_out rows of d_in [re, im] pairs>, ... ]}
Json channel_to_json(const KrausChannel &phi);

// Throws Error(Parse) naming the offending field, e.g. "kraus[1][0][2]".
KrausChannel channel_from_json(const Json &j);

// Row-major array of [re, im] pairs, the same layout as a Kraus operator.
Json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const Json &j,
                               const std::string &field);

// identity:<d>, ptrace:<dB>x<dC>, random:<dIn>x<dOut>x<n>:<seed>,
// cptp:<dIn>x<dOut>x<n>:<seed>; anything else is read as a JSON file path.
KrausChannel load_channel(std::string_view source);

// Named constructors only; throws Parse for anything else.
KrausChannel named_channel(std::string_view spec);

// Serializes with every floating-point value printed to 17 significant
// digits so that output is byte-reproducible. Object keys keep insertion
// order.
void write_json(std::ostream &os, const Json &j,
                int indent = 2);

} // namespace cpshrink

#endif // CPSHRINK_IO_HPP
