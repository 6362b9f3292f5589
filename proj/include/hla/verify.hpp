/*
   Copyright 2026 The halfline authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HLA_VERIFY_HPP
#define HLA_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hla {

// One certified invariant: pass/fail plus the measured slack (tolerance
// minus worst observed residual; positive means margin to spare).
struct CheckResult {
    std::string name;
    bool pass = false;
    double slack = 0.0;
    std::string detail;
};

// The full certification suite over the seeded corpus. Deterministic for
// a fixed seed. Tolerances are pinned inside; they are part of the
// contract, not knobs.
std::vector<CheckResult> run_acceptance(std::uint64_t seed);

}  // namespace hla

#endif
