/*
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <iosfwd>

#include "frod/worked_example.hpp"

namespace frod::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDataError = 2,
  kDegenerateLabels = 3,
  kExampleMismatch = 4,
};

/// Entry point behind the `frod` binary: subcommands detect, eval, example.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Prints every recomputed quantity of the built-in example beside `ref`;
/// kOk when all agree within 1e-3, kExampleMismatch otherwise.
int cmd_example(const example::Reference& ref, std::ostream& out, std::ostream& err);

}  // namespace frod::cli
