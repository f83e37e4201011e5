// sepcs/pcs.hpp

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

#include <string>
#include <vector>

#include "sepcs/types.hpp"

// Perceptual contrast stretching: the log-compressed magnitude spectrum is
// multiplied per frequency bin by band-importance weights, decompressed, and
// resynthesized with the original phase. Weights come from a plain-text band
// table; the shipped default follows the published band-importance values and
// is treated purely as data.

namespace sepcs::pcs {

struct Band {
  double low_hz = 0.0;
  double high_hz = 0.0;
  double gain = 1.0;
};

struct BandImportanceWeights {
  std::vector<double> weights;  // one per FFT bin, all > 0
  std::vector<Band> source_bands;
};

/// Which signals of a training pair get stretched. At test time only the
/// noisy input is ever stretched.
struct PcsMode {
  bool apply_to_input = false;
  bool apply_to_target = false;
};

PcsMode pcs_mode_from_string(const std::string& s);  // none|input|target|both
std::string to_string(const PcsMode& m);

/// Log-compress the spectrogram magnitude: log(1 + |bins|).
MagnitudeSpectrum pcs_compress(const Spectrogram& s);

/// Multiply each bin column by its weight, broadcast across frames.
MagnitudeSpectrum pcs_stretch(const MagnitudeSpectrum& compressed,
                              const BandImportanceWeights& w);

/// Full chain: stft -> compress -> stretch -> decompress -> original phase ->
/// istft. Output has exactly the input's length.
Waveform apply_pcs(const Waveform& x, const BandImportanceWeights& w,
                   const StftConfig& cfg);

/// Expand (low_hz, high_hz, gain) bands to per-bin weights using bin center
/// frequencies and half-open [low, high) intervals; the bands must tile
/// [0, sample_rate/2] with no gaps or overlaps.
BandImportanceWeights expand_bands(const std::vector<Band>& bands,
                                   const StftConfig& cfg, int sample_rate);

/// Parse a band table: one `low_hz high_hz gain` triple per line, '#'
/// comments allowed.
std::vector<Band> load_band_file(const std::string& path);

/// CRC32 of the band file bytes, recorded in manifest provenance.
std::string band_file_hash(const std::string& path);

}  // namespace sepcs::pcs
