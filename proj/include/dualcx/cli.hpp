// Copyright 2026 The dualcx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <iosfwd>
#include <string>

#include "dualcx/tolerances.hpp"

namespace dualcx::cli {

/// Exit statuses.
enum Status : int { Ok = 0, Negative = 1, InputError = 2, NumericalFailure = 3 };

struct Command {
  std::string verb;    ///< eig, jordan, diag, invert, verify or hermitian
  std::string input;   ///< path to a JSON file
  std::string format = "text";
  std::string out;     ///< report destination; empty for `out` stream
  Tolerances tol;
};

/// Runs one command. The report goes to `out` (or to cmd.out), error text to `err`.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// Parses argv and runs the command.
int main_entry(int argc, char** argv);

}  // namespace dualcx::cli
