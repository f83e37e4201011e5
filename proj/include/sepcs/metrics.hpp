// sepcs/metrics.hpp

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

#include <optional>
#include <string>
#include <vector>

#include "sepcs/audio_io.hpp"
#include "sepcs/estimator.hpp"
#include "sepcs/pcs.hpp"
#include "sepcs/types.hpp"

// Objective evaluation. STOI follows the published short-time intelligibility
// algorithm: both signals are resampled to 10 kHz with a fixed windowed-sinc
// polyphase resampler, silent frames (40 dB below the loudest clean frame)
// are removed, band envelopes over 15 one-third-octave bands are correlated
// over 384 ms segments after normalization and clipping at -15 dB SDR.
// SI-SDR and segmental SNR are the usual waveform-fidelity measures.

namespace sepcs::metrics {

inline constexpr double kSiSdrCapDb = 100.0;

/// Short-time objective intelligibility in [0, 1].
double stoi(const Waveform& clean, const Waveform& processed);

/// Scale-invariant SDR in dB, clamped to +-kSiSdrCapDb.
double si_sdr(const Waveform& clean, const Waveform& processed);

/// Frame-wise SNR in dB, each frame clamped to [-10, 35], silent clean
/// frames excluded.
double seg_snr(const Waveform& clean, const Waveform& processed);

/// Fixed-tap polyphase resampler (rational rate change), used by STOI.
Waveform resample(const Waveform& x, int target_rate);

struct EvalRow {
  std::string id;
  double stoi = 0.0;
  double si_sdr_db = 0.0;
  double seg_snr_db = 0.0;
};

struct EvalReport {
  std::vector<EvalRow> rows;
  double mean_stoi = 0.0;
  double mean_si_sdr_db = 0.0;
  double mean_seg_snr_db = 0.0;
  std::vector<std::string> errors;  // one message per failed utterance
};

enum class EnhanceMode { identity, oracle, model };

struct EvalSpec {
  EnhanceMode mode = EnhanceMode::identity;
  const estimator::EstimatorModel* model = nullptr;   // required for `model`
  const pcs::BandImportanceWeights* input_pcs = nullptr;  // test-time stretch
};

/// One row per manifest pair (errors collected, run continues). `identity`
/// scores the noisy input itself; `oracle` applies the ideal ratio mask.
EvalReport evaluate_manifest(const io::Manifest& manifest, const EvalSpec& spec,
                             const StftConfig& cfg);

/// CSV with a header row and a trailing commented means line.
void write_report_csv(const EvalReport& report, const std::string& path);

}  // namespace sepcs::metrics
