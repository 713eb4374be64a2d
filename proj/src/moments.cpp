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

#include "shapeservo/moments.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <numeric>

#include "shapeservo/errors.hpp"
#include "shapeservo/kernels.hpp"

namespace shapeservo {

int moment_index(int i, int j) {
  assert(i >= 0 && j >= 0 && i + j <= 3);
  const int order = i + j;
  // Orders 0..3 start at 0, 1, 3, 6; within an order i decreases.
  static constexpr int kOrderStart[] = {0, 1, 3, 6};
  return kOrderStart[order] + j;
}

double RawMoments::ordinary(int i, int j) const { return h[moment_index(i, j)]; }
double RawMoments::central(int i, int j) const { return eta[moment_index(i, j)]; }

RawMoments raw_moments(const Contour& c) {
  const auto dm = arc_lengths(c);
  const auto& k = kernels::active_kernels();
  RawMoments m;
  m.h = k.power_sums(c.u(), c.v(), dm, 0.0, 0.0);
  if (!(m.h[0] > 0.0)) throw DegenerateContour();
  m.u_bar = m.h[1] / m.h[0];
  m.v_bar = m.h[2] / m.h[0];
  m.eta = k.power_sums(c.u(), c.v(), dm, m.u_bar, m.v_bar);
  return m;
}

HuInvariants hu_invariants(const RawMoments& m) {
  const double n20 = m.central(2, 0);
  const double n02 = m.central(0, 2);
  const double n11 = m.central(1, 1);
  const double n30 = m.central(3, 0);
  const double n03 = m.central(0, 3);
  const double n21 = m.central(2, 1);
  const double n12 = m.central(1, 2);

  const double a = n30 - 3.0 * n12;   // η30 - 3η12
  const double b = 3.0 * n21 - n03;   // 3η21 - η03
  const double c = n30 + n12;
  const double d = n21 + n03;
  const double c2 = c * c;
  const double d2 = d * d;

  HuInvariants phi;
  phi[0] = n20 + n02;
  phi[1] = (n20 - n02) * (n20 - n02) + 4.0 * n11 * n11;
  phi[2] = a * a + b * b;
  phi[3] = c2 + d2;
  phi[4] = a * c * (c2 - 3.0 * d2) + b * d * (3.0 * c2 - d2);
  phi[5] = (n20 - n02) * (c2 - d2) + 4.0 * n11 * c * d;
  phi[6] = b * c * (c2 - 3.0 * d2) - a * d * (3.0 * c2 - d2);

  // Round-off on symmetric shapes: compare each invariant with the size its
  // terms would have for a generic shape of the same extent.
  const double s2 = std::abs(phi[0]);
  const double s3 = m.h[0] > 0.0 ? std::sqrt(s2 * s2 * s2 / m.h[0]) : 0.0;
  const std::array<double, 7> scale{s2,           s2 * s2,      s3 * s3,          s3 * s3,
                                    s3 * s3 * s3 * s3, s2 * s3 * s3, s3 * s3 * s3 * s3};
  for (std::size_t k = 0; k < 7; ++k) {
    if (std::abs(phi[k]) <= kPhiRelativeNoise * scale[k]) phi[k] = 0.0;
  }
  return phi;
}

std::array<double, 7> log_compress(const HuInvariants& phi) {
  std::array<double, 7> out;
  for (std::size_t k = 0; k < 7; ++k) {
    out[k] = std::abs(std::log(std::max(std::abs(phi[k]), kPhiFloor)));
  }
  return out;
}

std::array<double, 3> pose_features(const RawMoments& m) {
  const double y = 2.0 * m.central(1, 1);
  const double x = m.central(2, 0) - m.central(0, 2);
  const double tol = kAngleDegeneracy * std::max(1.0, m.central(2, 0) + m.central(0, 2));
  double angle = 0.0;
  if (std::abs(y) > tol || std::abs(x) > tol) {
    constexpr double kQuarter = std::numbers::pi / 4.0;
    angle = 0.5 * std::atan2(y, x);  // (-pi/2, pi/2]
    if (angle > kQuarter) {
      angle -= 2.0 * kQuarter;
    } else if (angle <= -kQuarter) {
      angle += 2.0 * kQuarter;
    }
  }
  return {m.u_bar, m.v_bar, angle};
}

double FeatureNormalizer::range(const std::array<double, 7>& s_bar) {
  const auto [lo_it, hi_it] = std::minmax_element(s_bar.begin(), s_bar.end());
  if (mode_ == Normalization::kPerFrame) return *hi_it - *lo_it;
  lo_ = lo_ ? std::min(*lo_, *lo_it) : *lo_it;
  hi_ = hi_ ? std::max(*hi_, *hi_it) : *hi_it;
  return *hi_ - *lo_;
}

FeatureBreakdown extract_features_detailed(const Contour& c, const CameraSpec& cam,
                                           FeatureNormalizer& normalizer) {
  FeatureBreakdown f;
  f.moments = raw_moments(c);
  f.phi = hu_invariants(f.moments);
  const auto logs = log_compress(f.phi);
  const auto pose = pose_features(f.moments);
  std::copy(logs.begin(), logs.end(), f.s_bar.begin());
  std::copy(pose.begin(), pose.end(), f.s_bar.begin() + 7);

  const double mean = std::accumulate(logs.begin(), logs.end(), 0.0) / 7.0;
  const double range = normalizer.range(logs);
  for (int i = 0; i < 7; ++i) f.s[i] = range > 0.0 ? (logs[i] - mean) / range : 0.0;
  f.s[7] = (2.0 * pose[0] - cam.width) / cam.width;
  f.s[8] = (2.0 * pose[1] - cam.height) / cam.height;
  f.s[9] = pose[2] / std::numbers::pi;
  return f;
}

FeatureBreakdown extract_features_detailed(const Contour& c, const CameraSpec& cam) {
  FeatureNormalizer per_frame;
  return extract_features_detailed(c, cam, per_frame);
}

Vec10 extract_features(const Contour& c, const CameraSpec& cam) {
  return extract_features_detailed(c, cam).s;
}

}  // namespace shapeservo
