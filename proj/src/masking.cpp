// src/masking.cpp

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

#include "sepcs/masking.hpp"

#include <algorithm>

#include "sepcs/dsp.hpp"
#include "sepcs/parallel.hpp"

namespace sepcs::masking {

MaskEstimate irm_oracle(const MagnitudeSpectrum& clean_mag,
                        const MagnitudeSpectrum& noisy_mag) {
  if (!clean_mag.values.same_shape(noisy_mag.values))
    throw Error("irm_oracle: shape mismatch");
  MaskEstimate m;
  m.values = Mat(clean_mag.values.rows, clean_mag.values.cols);
  par::parallel_for(m.values.size(), [&](std::size_t i) {
    const double c = clean_mag.values.v[i];
    const double n = std::max(noisy_mag.values.v[i], kIrmEpsilon);
    m.values.v[i] = std::clamp(c / n, 0.0, 1.0);
  });
  return m;
}

MagnitudeSpectrum apply_mask(const MagnitudeSpectrum& noisy_mag,
                             const MaskEstimate& mask) {
  if (!noisy_mag.values.same_shape(mask.values))
    throw Error("apply_mask: shape mismatch");
  for (double v : mask.values.v)
    if (!(v >= 0.0 && v <= 1.0))
      throw Error("apply_mask: mask value outside [0, 1]");
  MagnitudeSpectrum out;
  out.values = Mat(noisy_mag.values.rows, noisy_mag.values.cols);
  par::parallel_for(out.values.size(), [&](std::size_t i) {
    out.values.v[i] = noisy_mag.values.v[i] * mask.values.v[i];
  });
  return out;
}

Waveform reconstruct(const MagnitudeSpectrum& enhanced_mag,
                     const PhaseSpectrum& noisy_phase, const StftConfig& cfg,
                     std::size_t length, int sample_rate) {
  return dsp::istft(
      dsp::recompose(enhanced_mag, noisy_phase, cfg, length, sample_rate));
}

}  // namespace sepcs::masking
