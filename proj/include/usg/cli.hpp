// Copyright 2026 The usg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace usg {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,   // invalid certificate, failed check or disagreement
  kExitUsage = 2,
  kExitCapacity = 3,  // capacity, oracle cap or search budget exceeded
  kExitOmitted = 4,   // case not realizable at the requested (n,k)
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace usg
