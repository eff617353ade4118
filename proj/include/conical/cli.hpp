// Copyright 2026 The conical-lab developers
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

#ifndef CONICAL_CLI_HPP
#define CONICAL_CLI_HPP

namespace conical {

// Exit codes: 0 all checks passed / construction ok, 1 a check failed,
// 2 usage or input validation error.
int run_cli(int argc, const char* const* argv);

}  // namespace conical

#endif
