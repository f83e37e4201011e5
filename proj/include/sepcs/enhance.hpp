// sepcs/enhance.hpp

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

#include "sepcs/estimator.hpp"
#include "sepcs/masking.hpp"
#include "sepcs/types.hpp"

namespace sepcs::masking {

/// Full inference chain: stft -> compress -> features -> predict mask ->
/// apply in the model's mask domain -> reconstruct with the noisy phase.
/// `ext` supplies external per-frame features when the model expects them.
Waveform enhance(const Waveform& noisy, const estimator::EstimatorModel& model,
                 const StftConfig& cfg, const Mat* ext = nullptr);

}  // namespace sepcs::masking
