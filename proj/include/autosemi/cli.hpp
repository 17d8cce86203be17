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

#ifndef AUTOSEMI_CLI_HPP_
#define AUTOSEMI_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace autosemi {

/// Runs one command line.  Exit code 0 means YES or success, 1 means NO,
/// 2 means error or inconclusive.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace autosemi

#endif  // AUTOSEMI_CLI_HPP_
