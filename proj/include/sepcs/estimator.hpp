// sepcs/estimator.hpp

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
#include <iosfwd>
#include <string>
#include <vector>

#include "sepcs/types.hpp"

// The trainable mask head: per-frame feature assembly (compressed noisy
// magnitude plus an optional external feature slot, stacked with neighbor
// context), a small feedforward network with a sigmoid output per frequency
// bin, exact reverse-mode gradients, and Adam. Forward/backward are pure
// given a model snapshot and deterministic for any thread count.

namespace sepcs::estimator {

struct EstimatorArch {
  int n_bins = 201;               // output width, must match the STFT
  int context = 1;                // neighbor frames stacked on each side
  int ext_dim = 0;                // external per-frame feature width
  std::vector<int> hidden = {256, 256};

  int input_dim() const { return (n_bins + ext_dim) * (2 * context + 1); }
  void validate() const;
};

struct Layer {
  Mat weights;                    // out x in, row-major
  std::vector<double> bias;       // out
};

struct EstimatorModel {
  EstimatorArch arch;
  MaskDomain mask_domain = MaskDomain::linear;
  std::uint64_t rng_seed = 0;
  std::vector<Layer> layers;      // hidden layers then the output layer

  void validate() const;
};

/// Xavier-uniform initialization from the given seed.
EstimatorModel init_model(const EstimatorArch& arch, MaskDomain domain,
                          std::uint64_t seed);

/// One feature row per spectral frame; edge frames replicate the boundary row.
/// `ext`, when present, must have one row per frame.
Mat assemble_features(const MagnitudeSpectrum& noisy_mag_c, const Mat* ext,
                      int context);

/// Per-frame MLP with sigmoid output; every entry strictly inside (0, 1).
MaskEstimate forward(const EstimatorModel& model, const Mat& features);

struct ParamGrads {
  std::vector<Layer> layers;

  void zero();
  void add_scaled(const ParamGrads& other, double scale);
  void scale(double s);
};

ParamGrads make_grads(const EstimatorModel& model);

struct GradScratch {
  std::vector<ParamGrads> partials;
};

/// Exact reverse-mode gradients of all parameters given dL/dmask.
void backward(const EstimatorModel& model, const Mat& features,
              const Mat& upstream_mask_grad, ParamGrads& out,
              GradScratch* scratch = nullptr);

struct AdamState {
  std::int64_t step = 0;
  std::vector<Layer> m;
  std::vector<Layer> v;
};

AdamState make_adam_state(const EstimatorModel& model);

struct TrainConfig {
  int epochs = 50;
  double learning_rate = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_epsilon = 1e-8;
  int batch_size = 1;             // utterances per optimizer step
  double max_seconds = 10.0;      // longer inputs are cropped
  std::uint64_t seed = 17;

  void validate() const;
};

void adam_step(EstimatorModel& model, const ParamGrads& grads, AdamState& state,
               const TrainConfig& cfg);

// Versioned binary model container: magic, version, architecture block,
// little-endian float64 parameter blob, trailing CRC32.
void save_model(const EstimatorModel& model, const std::string& path);
EstimatorModel load_model(const std::string& path);
void write_model(const EstimatorModel& model, std::ostream& os);
EstimatorModel read_model(std::istream& is);

}  // namespace sepcs::estimator
