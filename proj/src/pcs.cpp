// src/pcs.cpp

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

#include "sepcs/pcs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sepcs/dsp.hpp"
#include "sepcs/parallel.hpp"

namespace sepcs::pcs {

PcsMode pcs_mode_from_string(const std::string& s) {
  if (s == "none") return {false, false};
  if (s == "input") return {true, false};
  if (s == "target") return {false, true};
  if (s == "both") return {true, true};
  throw ConfigError("unknown pcs mode: " + s + " (none|input|target|both)");
}

std::string to_string(const PcsMode& m) {
  if (m.apply_to_input && m.apply_to_target) return "both";
  if (m.apply_to_input) return "input";
  if (m.apply_to_target) return "target";
  return "none";
}

MagnitudeSpectrum pcs_compress(const Spectrogram& s) {
  MagnitudeSpectrum out;
  out.values = Mat(s.bins.rows, s.bins.cols);
  par::parallel_for(s.bins.size(), [&](std::size_t i) {
    out.values.v[i] = std::log1p(std::abs(s.bins.v[i]));
  });
  return out;
}

MagnitudeSpectrum pcs_stretch(const MagnitudeSpectrum& compressed,
                              const BandImportanceWeights& w) {
  if (w.weights.size() != compressed.values.cols)
    throw Error("pcs_stretch: weight length " + std::to_string(w.weights.size()) +
                " does not match bin count " +
                std::to_string(compressed.values.cols));
  MagnitudeSpectrum out;
  out.values = Mat(compressed.values.rows, compressed.values.cols);
  const std::size_t cols = compressed.values.cols;
  par::parallel_for(compressed.values.rows, [&](std::size_t f) {
    const double* in = compressed.values.row(f);
    double* o = out.values.row(f);
    for (std::size_t b = 0; b < cols; ++b) o[b] = in[b] * w.weights[b];
  });
  return out;
}

Waveform apply_pcs(const Waveform& x, const BandImportanceWeights& w,
                   const StftConfig& cfg) {
  const Spectrogram spec = dsp::stft(x, cfg);
  auto [mag, phase] = dsp::decompose(spec);
  (void)mag;
  const MagnitudeSpectrum stretched = pcs_stretch(pcs_compress(spec), w);
  const MagnitudeSpectrum restored = dsp::decompress(stretched);
  return dsp::istft(dsp::recompose(restored, phase, spec));
}

BandImportanceWeights expand_bands(const std::vector<Band>& bands,
                                   const StftConfig& cfg, int sample_rate) {
  if (bands.empty()) throw ConfigError("band table: no bands");
  if (sample_rate <= 0) throw ConfigError("band table: bad sample rate");
  const double nyquist = sample_rate / 2.0;

  std::vector<Band> sorted = bands;
  std::sort(sorted.begin(), sorted.end(),
            [](const Band& a, const Band& b) { return a.low_hz < b.low_hz; });
  double edge = 0.0;
  for (const Band& b : sorted) {
    if (b.gain <= 0.0)
      throw ConfigError("band table: gain must be positive, got " +
                        std::to_string(b.gain));
    if (b.high_hz <= b.low_hz)
      throw ConfigError("band table: empty band [" + std::to_string(b.low_hz) +
                        ", " + std::to_string(b.high_hz) + ")");
    if (b.low_hz > edge + 1e-9)
      throw ConfigError("band table: coverage gap at " + std::to_string(edge) +
                        " Hz");
    if (b.low_hz < edge - 1e-9)
      throw ConfigError("band table: overlapping bands at " +
                        std::to_string(b.low_hz) + " Hz");
    edge = b.high_hz;
  }
  if (edge < nyquist - 1e-9)
    throw ConfigError("band table: coverage ends at " + std::to_string(edge) +
                      " Hz, below Nyquist " + std::to_string(nyquist));

  BandImportanceWeights w;
  w.source_bands = sorted;
  w.weights.resize(static_cast<std::size_t>(cfg.n_bins()));
  const double bin_hz = static_cast<double>(sample_rate) / cfg.n_fft;
  for (std::size_t k = 0; k < w.weights.size(); ++k) {
    const double f = bin_hz * static_cast<double>(k);
    double gain = 0.0;
    for (const Band& b : sorted) {
      // Half-open [low, high); the bin exactly at Nyquist joins the top band.
      if ((f >= b.low_hz && f < b.high_hz) ||
          (f >= nyquist - 1e-9 && &b == &sorted.back())) {
        gain = b.gain;
        break;
      }
    }
    if (gain <= 0.0)
      throw ConfigError("band table: bin at " + std::to_string(f) +
                        " Hz not covered");
    w.weights[k] = gain;
  }
  return w;
}

std::vector<Band> load_band_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("band file: cannot open " + path);
  std::vector<Band> bands;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    Band b;
    if (!(ls >> b.low_hz)) continue;  // blank or comment-only line
    if (!(ls >> b.high_hz >> b.gain))
      throw Error("band file: " + path + ":" + std::to_string(line_no) +
                  ": expected `low_hz high_hz gain`");
    double extra;
    if (ls >> extra)
      throw Error("band file: " + path + ":" + std::to_string(line_no) +
                  ": trailing fields");
    bands.push_back(b);
  }
  if (bands.empty()) throw Error("band file: " + path + ": no bands");
  return bands;
}

namespace {

std::uint32_t crc32_update(std::uint32_t crc, const unsigned char* data,
                           std::size_t n) {
  static std::uint32_t table[256];
  static bool init = false;
  if (!init) {
    for (std::uint32_t i = 0; i < 256; ++i) {
      std::uint32_t c = i;
      for (int j = 0; j < 8; ++j) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
      table[i] = c;
    }
    init = true;
  }
  crc ^= 0xFFFFFFFFu;
  for (std::size_t i = 0; i < n; ++i)
    crc = table[(crc ^ data[i]) & 0xFFu] ^ (crc >> 8);
  return crc ^ 0xFFFFFFFFu;
}

}  // namespace

std::string band_file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("band file: cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  const std::uint32_t crc = crc32_update(
      0, reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size());
  char buf[16];
  std::snprintf(buf, sizeof(buf), "crc32:%08x", crc);
  return buf;
}

}  // namespace sepcs::pcs
