// sepcs/dsp.hpp

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
#include <utility>
#include <vector>

#include "sepcs/types.hpp"

// Analysis/synthesis core. Centered STFT with reflect padding of n_fft/2 on
// both ends; synthesis divides by the squared-window overlap-add sum, which
// gives exact reconstruction for any window/hop with a positive sum. All
// arithmetic is in doubles; all functions are pure and thread-safe.

namespace sepcs::dsp {

inline constexpr double kDecompressCap = 80.0;

/// Number of frames a centered STFT produces: 1 + floor(len / hop).
std::size_t frame_count(std::size_t length, const StftConfig& cfg);

/// Analysis window embedded centered in an n_fft-long frame.
std::vector<double> analysis_window(const StftConfig& cfg);

/// Squared-window overlap-add sum over the padded support of n_frames frames.
std::vector<double> ola_weight(const StftConfig& cfg, std::size_t n_frames,
                               std::size_t padded_length);

Spectrogram stft(const Waveform& x, const StftConfig& cfg);

Waveform istft(const Spectrogram& s);

std::pair<MagnitudeSpectrum, PhaseSpectrum> decompose(const Spectrogram& s);

Spectrogram recompose(const MagnitudeSpectrum& mag, const PhaseSpectrum& phase,
                      const StftConfig& cfg, std::size_t original_length,
                      int sample_rate);

/// Convenience overload taking shape context from an existing spectrogram.
Spectrogram recompose(const MagnitudeSpectrum& mag, const PhaseSpectrum& phase,
                      const Spectrogram& like);

/// Element-wise log(1 + x). Input must be nonnegative.
MagnitudeSpectrum compress(const MagnitudeSpectrum& mag);

/// Element-wise e^x - 1. Inputs above `cap` are treated as corrupt and throw.
MagnitudeSpectrum decompress(const MagnitudeSpectrum& mag,
                             double cap = kDecompressCap);

/// STFT(iSTFT(s)): projection onto the subspace of consistent spectrograms.
Spectrogram consistency_project(const Spectrogram& s);

// Real-linear adjoints of the synthesis and analysis maps, for backpropagation
// through waveform-domain losses. Conventions: a complex gradient matrix G
// packs dL/dRe and dL/dIm of the corresponding spectrogram entry.

/// Adjoint of `istft` for a spectrogram of n_frames frames whose inverse was
/// cropped to `length` samples.
CMat istft_adjoint(const std::vector<double>& g_wave, const StftConfig& cfg,
                   std::size_t n_frames, std::size_t length);

/// Adjoint of `stft` for a waveform of `length` samples.
std::vector<double> stft_adjoint(const CMat& g_spec, const StftConfig& cfg,
                                 std::size_t length);

namespace detail {
// Per-frame primitives shared by the OpenMP kernels and the serial reference,
// so both paths produce bit-identical frames.
void stft_frame(const double* padded, std::size_t frame, const StftConfig& cfg,
                const double* window, cplx* out);
void istft_frame(const cplx* bins, const StftConfig& cfg, const double* window,
                 double* time_out);
std::vector<double> reflect_pad(const std::vector<double>& x, std::size_t pad);
}  // namespace detail

}  // namespace sepcs::dsp
