// sepcs/losses.hpp

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

#include "sepcs/types.hpp"

// The three training objectives and their weighted combination. wSDR compares
// waveforms through bounded cosine terms; mag-L1 is the mean absolute
// difference of log-compressed magnitudes; the consistency-preserving variant
// first projects both spectrograms through iSTFT/STFT so the loss sees what
// reconstruction actually produces. `loss_gradient` backpropagates the total
// analytically to the mask entries.

namespace sepcs::losses {

struct LossWeights {
  double wsdr = 1.0;
  double mag_l1 = 1.0;
  double cs_mag_l1 = 1.0;

  void validate() const;
};

struct LossBreakdown {
  double wsdr = 0.0;
  double mag_l1 = 0.0;
  double cs_mag_l1 = 0.0;
  double total = 0.0;
  LossWeights weights;
};

/// Bounded waveform loss in [-1, 1]; -1 iff the estimate matches the clean
/// reference (and the noise residual estimate matches the residual).
double wsdr_loss(const Waveform& noisy, const Waveform& clean,
                 const Waveform& enhanced);

/// Mean absolute difference of two compressed-domain magnitude spectra.
double mag_l1_loss(const MagnitudeSpectrum& enhanced_mag_c,
                   const MagnitudeSpectrum& clean_mag_c);

/// mag-L1 between the compressed magnitudes of the consistency projections of
/// both spectrograms.
double cs_mag_l1_loss(const Spectrogram& enhanced_spec,
                      const Spectrogram& clean_spec);

/// Per-utterance constants reused across optimization steps.
struct LossContext {
  Waveform noisy;
  Waveform clean;
  Spectrogram noisy_spec;               // S
  MagnitudeSpectrum noisy_mag;          // |S|
  MagnitudeSpectrum noisy_mag_c;        // log(1 + |S|), also the feature base
  MagnitudeSpectrum clean_mag_c;        // log(1 + |stft(clean)|)
  MagnitudeSpectrum clean_proj_mag_c;   // same after consistency projection

  static LossContext build(const Waveform& noisy, const Waveform& clean,
                           const StftConfig& cfg);
};

LossBreakdown combined_loss(const LossContext& ctx, const MaskEstimate& mask,
                            const LossWeights& weights,
                            MaskDomain domain = MaskDomain::linear);

/// Operation-level entry point; builds the context internally.
LossBreakdown combined_loss(const Waveform& noisy, const Waveform& clean,
                            const MaskEstimate& mask, const LossWeights& weights,
                            const StftConfig& cfg,
                            MaskDomain domain = MaskDomain::linear);

/// d(total)/d(mask). When `value_out` is non-null the loss computed along the
/// way is stored there.
Mat loss_gradient(const LossContext& ctx, const MaskEstimate& mask,
                  const LossWeights& weights,
                  MaskDomain domain = MaskDomain::linear,
                  LossBreakdown* value_out = nullptr);

Mat loss_gradient(const Waveform& noisy, const Waveform& clean,
                  const MaskEstimate& mask, const LossWeights& weights,
                  const StftConfig& cfg, MaskDomain domain = MaskDomain::linear,
                  LossBreakdown* value_out = nullptr);

}  // namespace sepcs::losses
