// Copyright 2026 The bulletlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>

namespace bullet {

/// Exit codes: 0 success or passed check, 1 failed check or verification,
/// 2 usage or validation error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

/// Relative paths are resolved against $BULLET_OUTPUT_DIR when it is set.
std::string resolve_output_path(const std::string& path);

}  // namespace bullet
