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

#include "hla/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace hla::kernels {

#if !(defined(__x86_64__) || defined(_M_X64))
const Impl* avx2() { return nullptr; }
#endif

namespace {

const Impl* pick_default() {
    if (const char* env = std::getenv("HLA_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return &scalar();
        if (std::strcmp(env, "avx2") == 0 && avx2()) return avx2();
    }
    if (const Impl* v = avx2()) return v;
    return &scalar();
}

const Impl*& active_slot() {
    static const Impl* impl = pick_default();
    return impl;
}

}  // namespace

const Impl& active() { return *active_slot(); }

bool set_active(const std::string& name) {
    if (name == "scalar") {
        active_slot() = &scalar();
        return true;
    }
    if (name == "avx2" && avx2()) {
        active_slot() = avx2();
        return true;
    }
    return false;
}

}  // namespace hla::kernels
