// sepcs/types.hpp

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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sepcs {

/// Data or runtime failure (bad file, degenerate input, numeric blow-up).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid or internally inconsistent configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

using cplx = std::complex<double>;

/// Dense row-major real matrix.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> v;

  Mat() = default;
  Mat(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), v(r * c, fill) {}

  double& operator()(std::size_t r, std::size_t c) { return v[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return v[r * cols + c]; }
  double* row(std::size_t r) { return v.data() + r * cols; }
  const double* row(std::size_t r) const { return v.data() + r * cols; }
  std::size_t size() const { return v.size(); }
  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
};

/// Dense row-major complex matrix.
struct CMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cplx> v;

  CMat() = default;
  CMat(std::size_t r, std::size_t c, cplx fill = {0.0, 0.0})
      : rows(r), cols(c), v(r * c, fill) {}

  cplx& operator()(std::size_t r, std::size_t c) { return v[r * cols + c]; }
  cplx operator()(std::size_t r, std::size_t c) const { return v[r * cols + c]; }
  cplx* row(std::size_t r) { return v.data() + r * cols; }
  const cplx* row(std::size_t r) const { return v.data() + r * cols; }
  std::size_t size() const { return v.size(); }
  bool same_shape(const CMat& o) const { return rows == o.rows && cols == o.cols; }
};

/// Mono time-domain signal, nominally in [-1, 1].
struct Waveform {
  std::vector<double> samples;
  int sample_rate = 16000;

  std::size_t size() const { return samples.size(); }
};

enum class WindowKind { hann_periodic, rect };

WindowKind window_kind_from_string(const std::string& s);
std::string to_string(WindowKind w);

/// Domain in which the mask multiplies the noisy magnitude. `linear` is the
/// default; `compressed` applies the mask to log(1 + |S|) and decompresses
/// the product, kept behind a switch for experimentation.
enum class MaskDomain { linear, compressed };

MaskDomain mask_domain_from_string(const std::string& s);
std::string to_string(MaskDomain d);

/// Frame/window parameters of the analysis-synthesis pair.
struct StftConfig {
  int n_fft = 400;
  int hop = 160;
  int win_length = 400;
  WindowKind window = WindowKind::hann_periodic;

  int n_bins() const { return n_fft / 2 + 1; }
  int pad() const { return n_fft / 2; }

  // Throws ConfigError when sizes are inconsistent or the squared-window
  // overlap-add sum vanishes somewhere in steady state.
  void validate() const;
};

/// Complex time-frequency matrix, one row per frame.
struct Spectrogram {
  CMat bins;  // n_frames x n_bins
  StftConfig config;
  std::size_t original_length = 0;
  int sample_rate = 16000;

  std::size_t n_frames() const { return bins.rows; }
  std::size_t n_bins() const { return bins.cols; }
};

struct MagnitudeSpectrum {
  Mat values;  // nonnegative
};

struct PhaseSpectrum {
  Mat values;  // radians in (-pi, pi]
};

/// Per-bin gain estimate in [0, 1].
struct MaskEstimate {
  Mat values;
};

}  // namespace sepcs
