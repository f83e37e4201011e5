// sepcs/masking.hpp

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

#include "sepcs/types.hpp"

namespace sepcs::masking {

/// Denominator floor for the ideal ratio mask.
inline constexpr double kIrmEpsilon = 1e-8;

/// Per-bin clean/noisy magnitude ratio, floored denominator, clipped to [0,1].
MaskEstimate irm_oracle(const MagnitudeSpectrum& clean_mag,
                        const MagnitudeSpectrum& noisy_mag);

/// Element-wise product of the noisy magnitude and a valid mask.
MagnitudeSpectrum apply_mask(const MagnitudeSpectrum& noisy_mag,
                             const MaskEstimate& mask);

/// iSTFT of (enhanced magnitude, noisy phase), trimmed to `length`.
Waveform reconstruct(const MagnitudeSpectrum& enhanced_mag,
                     const PhaseSpectrum& noisy_phase, const StftConfig& cfg,
                     std::size_t length, int sample_rate);

}  // namespace sepcs::masking
