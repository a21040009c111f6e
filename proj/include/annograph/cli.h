// Copyright 2026 The Annograph Authors.
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

#ifndef ANNOGRAPH_CLI_H_
#define ANNOGRAPH_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace annograph {

// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,      // input parsed but failed validation
  kExitParseError = 2,   // unreadable input, malformed document or bad flags
  kExitUnsupported = 3,  // conversion or format combination not offered
};

// Runs one invocation: `args` excludes the program name. Data goes to
// `out`, diagnostics to `err`; a path of "-" reads `in` or writes `out`.
//
//   validate [--from F] [--strict] INPUT...
//   convert  --from F --to G [-o OUT] [--strict] INPUT...
//   query    [--from F] [--type T]... [--feature N=V]... [--signal-group G]... INPUT...
//   stats    [--from F] INPUT...
//
// Formats are aif, timit-columns and lexicon (report-text is accepted as a
// name but no conversion produces it). Column tiers are given as TYPE=PATH.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace annograph

#endif  // ANNOGRAPH_CLI_H_
