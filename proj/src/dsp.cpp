// src/dsp.cpp

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

#include "sepcs/dsp.hpp"

#include <cmath>
#include <numbers>

#include "sepcs/fft.hpp"
#include "sepcs/parallel.hpp"

namespace sepcs {

WindowKind window_kind_from_string(const std::string& s) {
  if (s == "hann") return WindowKind::hann_periodic;
  if (s == "rect") return WindowKind::rect;
  throw ConfigError("unknown window kind: " + s);
}

std::string to_string(WindowKind w) {
  return w == WindowKind::hann_periodic ? "hann" : "rect";
}

void StftConfig::validate() const {
  if (n_fft <= 0 || n_fft % 2 != 0)
    throw ConfigError("stft config: n_fft must be a positive even integer");
  if (win_length <= 0 || win_length > n_fft)
    throw ConfigError("stft config: require 0 < win_length <= n_fft");
  if (hop <= 0 || hop > win_length)
    throw ConfigError("stft config: require 0 < hop <= win_length");

  // Steady-state squared-window overlap-add sum must stay positive.
  const std::size_t n_frames = 8 + 3 * static_cast<std::size_t>(n_fft) /
                                       static_cast<std::size_t>(hop);
  const std::size_t padded =
      (n_frames - 1) * static_cast<std::size_t>(hop) +
      static_cast<std::size_t>(n_fft);
  const std::vector<double> w2 = dsp::ola_weight(*this, n_frames, padded);
  for (std::size_t n = static_cast<std::size_t>(n_fft);
       n + static_cast<std::size_t>(n_fft) < padded; ++n) {
    if (w2[n] <= 1e-12)
      throw ConfigError(
          "stft config: squared-window overlap-add sum vanishes at hop " +
          std::to_string(hop) + " (window not invertible)");
  }
}

namespace dsp {

std::size_t frame_count(std::size_t length, const StftConfig& cfg) {
  return 1 + length / static_cast<std::size_t>(cfg.hop);
}

std::vector<double> analysis_window(const StftConfig& cfg) {
  std::vector<double> w(static_cast<std::size_t>(cfg.n_fft), 0.0);
  const std::size_t offset =
      static_cast<std::size_t>(cfg.n_fft - cfg.win_length) / 2;
  for (int i = 0; i < cfg.win_length; ++i) {
    double v = 1.0;
    if (cfg.window == WindowKind::hann_periodic) {
      v = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i /
                               static_cast<double>(cfg.win_length));
    }
    w[offset + static_cast<std::size_t>(i)] = v;
  }
  return w;
}

std::vector<double> ola_weight(const StftConfig& cfg, std::size_t n_frames,
                               std::size_t padded_length) {
  const std::vector<double> w = analysis_window(cfg);
  std::vector<double> w2(padded_length, 0.0);
  const std::size_t n = static_cast<std::size_t>(cfg.n_fft);
  const std::size_t hop = static_cast<std::size_t>(cfg.hop);
  for (std::size_t f = 0; f < n_frames; ++f) {
    const std::size_t base = f * hop;
    for (std::size_t i = 0; i < n && base + i < padded_length; ++i)
      w2[base + i] += w[i] * w[i];
  }
  return w2;
}

namespace detail {

std::vector<double> reflect_pad(const std::vector<double>& x, std::size_t pad) {
  const std::size_t len = x.size();
  if (len < pad + 1)
    throw Error("stft: waveform of " + std::to_string(len) +
                " samples is too short for reflect padding of " +
                std::to_string(pad));
  std::vector<double> p(len + 2 * pad);
  for (std::size_t q = 0; q < pad; ++q) p[q] = x[pad - q];
  for (std::size_t i = 0; i < len; ++i) p[pad + i] = x[i];
  for (std::size_t q = 0; q < pad; ++q) p[pad + len + q] = x[len - 2 - q];
  return p;
}

void stft_frame(const double* padded, std::size_t frame, const StftConfig& cfg,
                const double* window, cplx* out) {
  const std::size_t n = static_cast<std::size_t>(cfg.n_fft);
  const double* seg = padded + frame * static_cast<std::size_t>(cfg.hop);
  std::vector<double> buf(n);
  for (std::size_t i = 0; i < n; ++i) buf[i] = window[i] * seg[i];
  fft::rfft(cfg.n_fft, buf.data(), out);
}

void istft_frame(const cplx* bins, const StftConfig& cfg, const double* window,
                 double* time_out) {
  fft::irfft(cfg.n_fft, bins, time_out);
  const std::size_t n = static_cast<std::size_t>(cfg.n_fft);
  for (std::size_t i = 0; i < n; ++i) time_out[i] *= window[i];
}

}  // namespace detail

namespace {

constexpr std::size_t kOlaChunk = 4096;

// Overlap-add of precomputed windowed synthesis frames. Each output chunk is
// owned by one task and gathers frame contributions in ascending frame order,
// so the result is race-free and independent of the thread count, and matches
// the textbook frame-by-frame accumulation bit for bit.
std::vector<double> overlap_add_gather(const Mat& frames_td,
                                       const StftConfig& cfg,
                                       std::size_t padded_length) {
  const std::size_t n = static_cast<std::size_t>(cfg.n_fft);
  const std::size_t hop = static_cast<std::size_t>(cfg.hop);
  const std::size_t n_frames = frames_td.rows;
  std::vector<double> acc(padded_length, 0.0);
  const std::size_t n_chunks = (padded_length + kOlaChunk - 1) / kOlaChunk;
  par::parallel_for(
      n_chunks,
      [&](std::size_t c) {
        const std::size_t lo = c * kOlaChunk;
        const std::size_t hi =
            lo + kOlaChunk < padded_length ? lo + kOlaChunk : padded_length;
        std::size_t f0 = lo >= n - 1 ? (lo - (n - 1) + hop - 1) / hop : 0;
        for (std::size_t f = f0; f < n_frames && f * hop < hi; ++f) {
          const double* t = frames_td.row(f);
          const std::size_t base = f * hop;
          const std::size_t a = base > lo ? base : lo;
          const std::size_t b = base + n < hi ? base + n : hi;
          for (std::size_t q = a; q < b; ++q) acc[q] += t[q - base];
        }
      },
      2);
  return acc;
}

void check_waveform(const Waveform& x, const char* who) {
  if (x.samples.empty()) throw Error(std::string(who) + ": empty waveform");
  if (x.sample_rate <= 0) throw Error(std::string(who) + ": bad sample rate");
  for (double v : x.samples)
    if (!std::isfinite(v))
      throw Error(std::string(who) + ": non-finite sample");
}

}  // namespace

Spectrogram stft(const Waveform& x, const StftConfig& cfg) {
  cfg.validate();
  check_waveform(x, "stft");
  const std::size_t pad = static_cast<std::size_t>(cfg.pad());
  const std::vector<double> padded = detail::reflect_pad(x.samples, pad);
  const std::vector<double> window = analysis_window(cfg);
  const std::size_t n_frames = frame_count(x.samples.size(), cfg);

  Spectrogram s;
  s.bins = CMat(n_frames, static_cast<std::size_t>(cfg.n_bins()));
  s.config = cfg;
  s.original_length = x.samples.size();
  s.sample_rate = x.sample_rate;
  par::parallel_for(
      n_frames,
      [&](std::size_t f) {
        detail::stft_frame(padded.data(), f, cfg, window.data(), s.bins.row(f));
      },
      2);
  return s;
}

Waveform istft(const Spectrogram& s) {
  s.config.validate();
  const StftConfig& cfg = s.config;
  if (s.bins.cols != static_cast<std::size_t>(cfg.n_bins()))
    throw Error("istft: bin count disagrees with config");
  if (s.bins.rows == 0 || s.original_length == 0)
    throw Error("istft: empty spectrogram");

  const std::size_t pad = static_cast<std::size_t>(cfg.pad());
  const std::size_t len = s.original_length;
  const std::size_t padded_length = len + 2 * pad;
  const std::size_t n = static_cast<std::size_t>(cfg.n_fft);
  const std::size_t hop = static_cast<std::size_t>(cfg.hop);
  if ((s.bins.rows - 1) * hop + n < pad + len)
    throw Error("istft: too few frames for original_length");

  const std::vector<double> window = analysis_window(cfg);
  Mat frames_td(s.bins.rows, n);
  par::parallel_for(
      s.bins.rows,
      [&](std::size_t f) {
        detail::istft_frame(s.bins.row(f), cfg, window.data(), frames_td.row(f));
      },
      2);

  const std::vector<double> acc = overlap_add_gather(frames_td, cfg, padded_length);
  const std::vector<double> w2 = ola_weight(cfg, s.bins.rows, padded_length);

  Waveform out;
  out.sample_rate = s.sample_rate;
  out.samples.resize(len);
  par::parallel_for(len, [&](std::size_t i) {
    const double d = w2[pad + i];
    out.samples[i] = d > 1e-12 ? acc[pad + i] / d : 0.0;
  });
  return out;
}

std::pair<MagnitudeSpectrum, PhaseSpectrum> decompose(const Spectrogram& s) {
  MagnitudeSpectrum mag;
  PhaseSpectrum phase;
  mag.values = Mat(s.bins.rows, s.bins.cols);
  phase.values = Mat(s.bins.rows, s.bins.cols);
  par::parallel_for(s.bins.size(), [&](std::size_t i) {
    const cplx z = s.bins.v[i];
    const double m = std::abs(z);
    mag.values.v[i] = m;
    phase.values.v[i] = m == 0.0 ? 0.0 : std::atan2(z.imag(), z.real());
  });
  return {std::move(mag), std::move(phase)};
}

Spectrogram recompose(const MagnitudeSpectrum& mag, const PhaseSpectrum& phase,
                      const StftConfig& cfg, std::size_t original_length,
                      int sample_rate) {
  if (!mag.values.same_shape(phase.values))
    throw Error("recompose: magnitude/phase shape mismatch");
  Spectrogram s;
  s.bins = CMat(mag.values.rows, mag.values.cols);
  s.config = cfg;
  s.original_length = original_length;
  s.sample_rate = sample_rate;
  par::parallel_for(s.bins.size(), [&](std::size_t i) {
    s.bins.v[i] = std::polar(mag.values.v[i], phase.values.v[i]);
  });
  return s;
}

Spectrogram recompose(const MagnitudeSpectrum& mag, const PhaseSpectrum& phase,
                      const Spectrogram& like) {
  return recompose(mag, phase, like.config, like.original_length,
                   like.sample_rate);
}

MagnitudeSpectrum compress(const MagnitudeSpectrum& mag) {
  MagnitudeSpectrum out;
  out.values = Mat(mag.values.rows, mag.values.cols);
  for (double v : mag.values.v)
    if (!(v >= 0.0)) throw Error("compress: negative or non-finite magnitude");
  par::parallel_for(mag.values.size(), [&](std::size_t i) {
    out.values.v[i] = std::log1p(mag.values.v[i]);
  });
  return out;
}

MagnitudeSpectrum decompress(const MagnitudeSpectrum& mag, double cap) {
  MagnitudeSpectrum out;
  out.values = Mat(mag.values.rows, mag.values.cols);
  for (double v : mag.values.v) {
    if (!std::isfinite(v)) throw Error("decompress: non-finite input");
    if (v > cap)
      throw Error("decompress: input " + std::to_string(v) +
                  " exceeds overflow cap " + std::to_string(cap));
  }
  par::parallel_for(mag.values.size(), [&](std::size_t i) {
    out.values.v[i] = std::expm1(mag.values.v[i]);
  });
  return out;
}

Spectrogram consistency_project(const Spectrogram& s) {
  if (s.bins.rows != frame_count(s.original_length, s.config))
    throw Error("consistency_project: frame count disagrees with length");
  return stft(istft(s), s.config);
}

CMat istft_adjoint(const std::vector<double>& g_wave, const StftConfig& cfg,
                   std::size_t n_frames, std::size_t length) {
  cfg.validate();
  if (g_wave.size() != length) throw Error("istft_adjoint: length mismatch");
  const std::size_t pad = static_cast<std::size_t>(cfg.pad());
  const std::size_t padded_length = length + 2 * pad;
  const std::size_t n = static_cast<std::size_t>(cfg.n_fft);
  const std::size_t hop = static_cast<std::size_t>(cfg.hop);
  const std::size_t k = static_cast<std::size_t>(cfg.n_bins());

  const std::vector<double> w2 = ola_weight(cfg, n_frames, padded_length);
  std::vector<double> g_pad(padded_length, 0.0);
  par::parallel_for(length, [&](std::size_t i) {
    const double d = w2[pad + i];
    g_pad[pad + i] = d > 1e-12 ? g_wave[i] / d : 0.0;
  });

  const std::vector<double> window = analysis_window(cfg);
  const double inv_n = 1.0 / static_cast<double>(cfg.n_fft);
  CMat g(n_frames, k);
  par::parallel_for(
      n_frames,
      [&](std::size_t f) {
        std::vector<double> buf(n, 0.0);
        const std::size_t base = f * hop;
        const std::size_t hi = base + n < padded_length ? base + n : padded_length;
        for (std::size_t q = base; q < hi; ++q)
          buf[q - base] = window[q - base] * g_pad[q];
        std::vector<cplx> spec(k);
        fft::rfft(cfg.n_fft, buf.data(), spec.data());
        cplx* row = g.row(f);
        // Adjoint of the normalized inverse real FFT: interior bins carry the
        // Hermitian double weight; DC/Nyquist are real-only.
        row[0] = cplx(spec[0].real() * inv_n, 0.0);
        for (std::size_t b = 1; b + 1 < k; ++b) row[b] = 2.0 * inv_n * spec[b];
        row[k - 1] = cplx(spec[k - 1].real() * inv_n, 0.0);
      },
      1);
  return g;
}

std::vector<double> stft_adjoint(const CMat& g_spec, const StftConfig& cfg,
                                 std::size_t length) {
  cfg.validate();
  if (g_spec.cols != static_cast<std::size_t>(cfg.n_bins()))
    throw Error("stft_adjoint: bin count disagrees with config");
  const std::size_t pad = static_cast<std::size_t>(cfg.pad());
  const std::size_t padded_length = length + 2 * pad;
  const std::size_t n = static_cast<std::size_t>(cfg.n_fft);
  const std::size_t k = static_cast<std::size_t>(cfg.n_bins());
  const std::vector<double> window = analysis_window(cfg);
  const double nd = static_cast<double>(cfg.n_fft);

  Mat frames_td(g_spec.rows, n);
  par::parallel_for(
      g_spec.rows,
      [&](std::size_t f) {
        // dL/dx(n) = w(n) * Re( sum_{b=0..N/2} G_b e^{2πi b n/N} ), computed
        // through the c2r transform with interior bins halved.
        std::vector<cplx> h(k);
        const cplx* row = g_spec.row(f);
        h[0] = cplx(row[0].real(), 0.0);
        for (std::size_t b = 1; b + 1 < k; ++b) h[b] = 0.5 * row[b];
        h[k - 1] = cplx(row[k - 1].real(), 0.0);
        double* t = frames_td.row(f);
        fft::irfft(cfg.n_fft, h.data(), t);
        for (std::size_t i = 0; i < n; ++i) t[i] *= nd * window[i];
      },
      1);

  const std::vector<double> g_pad = overlap_add_gather(frames_td, cfg, padded_length);

  // Fold the reflect padding back onto the source samples.
  std::vector<double> g(length, 0.0);
  for (std::size_t i = 0; i < length; ++i) g[i] = g_pad[pad + i];
  for (std::size_t q = 0; q < pad; ++q) g[pad - q] += g_pad[q];
  for (std::size_t q = 0; q < pad; ++q) g[length - 2 - q] += g_pad[pad + length + q];
  return g;
}

}  // namespace dsp
}  // namespace sepcs
