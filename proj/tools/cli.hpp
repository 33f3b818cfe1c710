/*
 * Copyright 2026 The cpshrink Authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef CPSHRINK_TOOLS_CLI_HPP
#define CPSHRINK_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cpshrink::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
};

// Runs the command line `args` (args[0] is the program name) writing to out
// and err. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace cpshrink::cli

#endif // CPSHRINK_TOOLS_CLI_HPP
