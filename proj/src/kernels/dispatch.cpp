// Copyright 2026 The shapeservo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <string_view>
#include <vector>

#include "shapeservo/kernels.hpp"

namespace shapeservo::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(SHAPESERVO_HAS_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

std::vector<const KernelTable*> detect() {
  std::vector<const KernelTable*> tables{&scalar_kernels()};
#if defined(SHAPESERVO_HAS_AVX2)
  if (cpu_has_avx2()) tables.push_back(&avx2_kernels());
#endif
  return tables;
}

const std::vector<const KernelTable*>& tables() {
  static const std::vector<const KernelTable*> t = detect();
  return t;
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable* chosen = [] {
    const char* env = std::getenv("SHAPESERVO_ISA");
    if (env != nullptr && std::string_view(env) == "scalar") return &scalar_kernels();
    return tables().back();
  }();
  return *chosen;
}

std::span<const KernelTable* const> available_kernels() { return tables(); }

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace shapeservo::kernels
