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

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "shapeservo/kernels.hpp"

namespace shapeservo::kernels {
namespace {

inline double hsum(__m256d x) {
  const __m128d lo = _mm256_castpd256_pd128(x);
  const __m128d hi = _mm256_extractf128_pd(x, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

void segment_lengths_avx2(std::span<const double> u, std::span<const double> v,
                          std::span<double> out) {
  const std::size_t n = u.size();
  if (n == 0) return;
  {
    const double du = u[0] - u[n - 1];
    const double dv = v[0] - v[n - 1];
    out[0] = std::sqrt(du * du + dv * dv);
  }
  std::size_t k = 1;
  for (; k + 4 <= n; k += 4) {
    const __m256d du = _mm256_sub_pd(_mm256_loadu_pd(&u[k]), _mm256_loadu_pd(&u[k - 1]));
    const __m256d dv = _mm256_sub_pd(_mm256_loadu_pd(&v[k]), _mm256_loadu_pd(&v[k - 1]));
    const __m256d sq = _mm256_add_pd(_mm256_mul_pd(du, du), _mm256_mul_pd(dv, dv));
    _mm256_storeu_pd(&out[k], _mm256_sqrt_pd(sq));
  }
  for (; k < n; ++k) {
    const double du = u[k] - u[k - 1];
    const double dv = v[k] - v[k - 1];
    out[k] = std::sqrt(du * du + dv * dv);
  }
}

PowerSums power_sums_avx2(std::span<const double> u, std::span<const double> v,
                          std::span<const double> w, double cu, double cv) {
  const std::size_t n = u.size();
  const __m256d vcu = _mm256_set1_pd(cu);
  const __m256d vcv = _mm256_set1_pd(cv);
  __m256d acc[10];
  for (auto& a : acc) a = _mm256_setzero_pd();

  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d x = _mm256_sub_pd(_mm256_loadu_pd(&u[k]), vcu);
    const __m256d y = _mm256_sub_pd(_mm256_loadu_pd(&v[k]), vcv);
    const __m256d wk = _mm256_loadu_pd(&w[k]);
    const __m256d xw = _mm256_mul_pd(x, wk);
    const __m256d yw = _mm256_mul_pd(y, wk);
    const __m256d xxw = _mm256_mul_pd(x, xw);
    const __m256d xyw = _mm256_mul_pd(x, yw);
    const __m256d yyw = _mm256_mul_pd(y, yw);
    acc[0] = _mm256_add_pd(acc[0], wk);
    acc[1] = _mm256_add_pd(acc[1], xw);
    acc[2] = _mm256_add_pd(acc[2], yw);
    acc[3] = _mm256_add_pd(acc[3], xxw);
    acc[4] = _mm256_add_pd(acc[4], xyw);
    acc[5] = _mm256_add_pd(acc[5], yyw);
    acc[6] = _mm256_add_pd(acc[6], _mm256_mul_pd(x, xxw));
    acc[7] = _mm256_add_pd(acc[7], _mm256_mul_pd(y, xxw));
    acc[8] = _mm256_add_pd(acc[8], _mm256_mul_pd(x, yyw));
    acc[9] = _mm256_add_pd(acc[9], _mm256_mul_pd(y, yyw));
  }

  PowerSums s;
  for (int i = 0; i < 10; ++i) s[i] = hsum(acc[i]);
  for (; k < n; ++k) {
    const double x = u[k] - cu;
    const double y = v[k] - cv;
    const double wk = w[k];
    const double xw = x * wk;
    const double yw = y * wk;
    const double xxw = x * xw;
    const double xyw = x * yw;
    const double yyw = y * yw;
    s[0] += wk;
    s[1] += xw;
    s[2] += yw;
    s[3] += xxw;
    s[4] += xyw;
    s[5] += yyw;
    s[6] += x * xxw;
    s[7] += y * xxw;
    s[8] += x * yyw;
    s[9] += y * yyw;
  }
  return s;
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table{Isa::kAvx2, &segment_lengths_avx2, &power_sums_avx2};
  return table;
}

}  // namespace shapeservo::kernels
