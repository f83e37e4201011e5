// sepcs/run_config.hpp

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

#include <map>
#include <string>

#include "sepcs/estimator.hpp"
#include "sepcs/losses.hpp"
#include "sepcs/types.hpp"

// The run configuration aggregates every pipeline parameter in one flat
// key-value file with [section] headers. A bare default file reproduces the
// reference setup (n_fft 400, hop 160, win 400, lr 1e-4, 50 epochs, 10 s max
// input). CLI flags override file values; the effective config is echoed to
// the log before a command runs.

namespace sepcs::cli {

struct RunConfig {
  // [stft]
  StftConfig stft;
  int sample_rate = 16000;

  // [pcs]
  std::string bif_path;
  std::string pcs_mode = "none";  // none|input|target|both

  // [loss]
  losses::LossWeights weights;
  MaskDomain mask_domain = MaskDomain::linear;

  // [train]
  estimator::TrainConfig train;

  // [estimator]
  estimator::EstimatorArch arch;

  // [paths]
  std::string train_manifest;
  std::string val_manifest;
  std::string eval_manifest;
  std::string model_path = "model.sepcs";
  std::string out_dir = ".";
  std::string log_path;

  void validate() const;          // throws ConfigError naming the field
  std::string to_text() const;    // effective config in file syntax
};

/// Parse a config file. Unknown sections or keys throw ConfigError naming
/// them; values are validated on read.
RunConfig load_run_config(const std::string& path);

/// Apply `section.key=value` overrides (same validation as the file parser).
void apply_override(RunConfig& cfg, const std::string& key,
                    const std::string& value);

}  // namespace sepcs::cli
