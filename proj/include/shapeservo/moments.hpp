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
#include <optional>

#include "shapeservo/geometry.hpp"
#include "shapeservo/types.hpp"

namespace shapeservo {

// Arc-weighted moments of a closed contour through order 3.
struct RawMoments {
  // Storage order 00, 10, 01, 20, 11, 02, 30, 21, 12, 03.
  std::array<double, 10> h{};
  std::array<double, 10> eta{};
  double u_bar = 0.0;
  double v_bar = 0.0;

  double ordinary(int i, int j) const;
  double central(int i, int j) const;
};

struct CameraSpec {
  double width = 640.0;
  double height = 480.0;
};

inline constexpr double kPhiFloor = 1e-12;
inline constexpr double kAngleDegeneracy = 1e-12;
// Invariants below this fraction of their generic magnitude are round-off
// and are reported as exactly zero.
inline constexpr double kPhiRelativeNoise = 1e-12;

using HuInvariants = std::array<double, 7>;

// Index of moment (i, j) in RawMoments storage; i + j ≤ 3.
int moment_index(int i, int j);

// Throws DegenerateContour for a zero-perimeter contour.
RawMoments raw_moments(const Contour& c);

// The seven rotation/translation invariant polynomial combinations of the
// central moments, with round-off level values snapped to zero.
HuInvariants hu_invariants(const RawMoments& m);

// |log |phi_k||, with |phi_k| floored at kPhiFloor.
std::array<double, 7> log_compress(const HuInvariants& phi);

// Centroid (u, v) and principal-axis angle on the half-arctan branch
// (-pi/4, pi/4]. Isotropic second moments give angle 0.
std::array<double, 3> pose_features(const RawMoments& m);

enum class Normalization {
  kPerFrame,  // range over the seven components of the current frame
  kRunning,   // range over every component value seen so far
};

// Tracks the running range for Normalization::kRunning. Unused in per-frame
// mode.
class FeatureNormalizer {
 public:
  explicit FeatureNormalizer(Normalization mode = Normalization::kPerFrame) : mode_(mode) {}

  Normalization mode() const { return mode_; }
  // Returns max - min for this frame's log invariants, widening the running
  // range first when in running mode.
  double range(const std::array<double, 7>& s_bar);

 private:
  Normalization mode_;
  std::optional<double> lo_;
  std::optional<double> hi_;
};

// Every intermediate of the feature pipeline, for logging and the CLI.
struct FeatureBreakdown {
  RawMoments moments;
  HuInvariants phi{};
  std::array<double, 10> s_bar{};
  Vec10 s = Vec10::Zero();
};

FeatureBreakdown extract_features_detailed(const Contour& c, const CameraSpec& cam,
                                           FeatureNormalizer& normalizer);
FeatureBreakdown extract_features_detailed(const Contour& c, const CameraSpec& cam);

// Normalized 10-vector: seven log invariants, centroid, principal angle.
Vec10 extract_features(const Contour& c, const CameraSpec& cam);

}  // namespace shapeservo
