// sepcs/ref.hpp

// Copyright 2026 the sepcs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABILITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "sepcs/estimator.hpp"
#include "sepcs/types.hpp"

// Straight-line serial implementations of the hot kernels, kept as the
// reference the OpenMP variants are tested and benchmarked against.
// stft/istft/forward match the parallel kernels bit for bit (identical
// per-frame primitives and summation order); plain left-to-right reductions
// (sum/dot/backward) agree with the blocked parallel ones to rounding.

namespace sepcs::ref {

Spectrogram stft(const Waveform& x, const StftConfig& cfg);

Waveform istft(const Spectrogram& s);

Mat forward_raw(const estimator::EstimatorModel& model, const Mat& features);

void backward(const estimator::EstimatorModel& model, const Mat& features,
              const Mat& upstream_mask_grad, estimator::ParamGrads& out);

double sum(const std::vector<double>& v);

double dot(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace sepcs::ref
