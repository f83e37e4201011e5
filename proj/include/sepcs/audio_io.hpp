// sepcs/audio_io.hpp

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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepcs/types.hpp"

// WAV file I/O (mono PCM16 / IEEE float32, fixed expected rate), JSON-lines
// dataset manifests with a provenance line, and the seeded synthetic-mixture
// generator used by tests and acceptance runs.

namespace sepcs::io {

enum class WavFormat { pcm16, float32 };

/// Read a mono RIFF/WAVE file. PCM16 samples are scaled by 1/32768; a rate
/// other than `expected_rate` (when positive) is rejected.
Waveform read_wav(const std::string& path, int expected_rate = 16000);

/// Write a mono WAV. pcm16 clamps to [-1, 1 - 2^-15] and rounds half away
/// from zero; float32 is lossless for float-valued samples.
void write_wav(const Waveform& x, const std::string& path, WavFormat format);

struct ManifestEntry {
  std::string id;
  std::string noisy_path;
  std::string clean_path;
  std::optional<std::string> ext_features_path;
};

struct Provenance {
  std::string schema = "sepcs-manifest-v1";
  std::string pcs_mode = "none";
  std::string bif_hash;    // empty when no PCS was applied
  std::string generator;   // free-form description of how the audio was made
};

struct Manifest {
  Provenance provenance;
  std::vector<ManifestEntry> entries;
};

/// Load and validate: unique ids, every referenced file present. Relative
/// paths are resolved against the manifest's directory.
Manifest load_manifest(const std::string& path);

void save_manifest(const Manifest& m, const std::string& path);

/// External per-frame feature matrix container (frame count in the header).
void write_features(const Mat& features, const std::string& path);
Mat read_features(const std::string& path);

enum class NoiseKind { white, pink };

NoiseKind noise_kind_from_string(const std::string& s);
std::string to_string(NoiseKind k);

struct SynthSpec {
  int n_items = 50;
  double clip_seconds = 1.0;
  int sample_rate = 16000;
  double tone_low_hz = 200.0;
  double tone_high_hz = 3800.0;
  NoiseKind noise = NoiseKind::white;
  std::vector<double> snr_db = {0.0, 5.0, 10.0, 15.0};  // assigned round-robin
  std::uint64_t seed = 1234;
  WavFormat format = WavFormat::float32;

  void validate() const;
};

/// Deterministic corpus of tone-burst "speech" plus noise at exact SNRs;
/// writes clean/ and noisy/ under out_dir plus a manifest, re-measuring each
/// written pair to guarantee the requested SNR within 0.01 dB.
Manifest generate_synthetic(const SynthSpec& spec, const std::string& out_dir);

}  // namespace sepcs::io
