// Copyright 2026 The qramsim Authors
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

#include <ostream>
#include <string>
#include <vector>

namespace qram {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCapacity = 1;
inline constexpr int kExitInvalid = 2;

// Default size caps for quantum runs; --max-n raises them.
inline constexpr int kDefaultQuantumCap = 12;
inline constexpr int kDefaultQuantumMemoryCap = 4;

/// Runs the command line `args` (without the program name). Reports go to
/// the --out file, to QRAM_OUTPUT_DIR, or to `out`; diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qram
