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

#pragma once

#include <array>
#include <span>

namespace shapeservo::kernels {

// Power sums S_ij = Σ (u_k - cu)^i (v_k - cv)^j w_k for i + j ≤ 3, stored in
// the order 00, 10, 01, 20, 11, 02, 30, 21, 12, 03.
using PowerSums = std::array<double, 10>;

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;
  // out[k] = |p_k - p_{k-1}| with p_{-1} := p_{n-1}.
  void (*segment_lengths)(std::span<const double> u, std::span<const double> v,
                          std::span<double> out);
  PowerSums (*power_sums)(std::span<const double> u, std::span<const double> v,
                          std::span<const double> w, double cu, double cv);
};

const KernelTable& scalar_kernels();
#if defined(SHAPESERVO_HAS_AVX2)
const KernelTable& avx2_kernels();
#endif

// Best table for this CPU. SHAPESERVO_ISA=scalar in the environment forces
// the reference kernels.
const KernelTable& active_kernels();

// Every table usable on this CPU, reference kernels first.
std::span<const KernelTable* const> available_kernels();

const char* isa_name(Isa isa);

}  // namespace shapeservo::kernels
