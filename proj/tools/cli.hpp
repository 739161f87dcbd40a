/*
Copyright 2026 The bwac Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef BWAC_CLI_HPP
#define BWAC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bwac::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_io = 2,
    exit_corrupt = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bwac::cli

#endif
