// sepcs/trainer.hpp

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

#include "sepcs/audio_io.hpp"
#include "sepcs/estimator.hpp"
#include "sepcs/losses.hpp"
#include "sepcs/types.hpp"

// The optimization loop: deterministic given the seed, per-step loss rows
// streamed to a CSV log, epoch checkpoints with full optimizer and shuffle
// state so a resumed run continues bit-identically, and best-by-validation
// model retention.

namespace sepcs::trainer {

struct TrainOptions {
  estimator::TrainConfig config;
  losses::LossWeights weights;
  StftConfig stft;
  std::string log_path;          // CSV; empty disables logging
  std::string checkpoint_path;   // written each epoch; empty disables
  std::string resume_from;       // checkpoint to continue from; empty = fresh
};

struct TrainResult {
  estimator::EstimatorModel model;       // best-by-validation (or final)
  estimator::EstimatorModel final_model; // after the last epoch
  double final_train_loss = 0.0;
  double best_val_loss = 0.0;
  int best_epoch = -1;                   // -1 when no validation set given
};

TrainResult train(const estimator::EstimatorModel& init,
                  const io::Manifest& train_set,
                  const io::Manifest* val_set,
                  const TrainOptions& opts);

// Checkpoint container: model + Adam state + shuffle RNG + epoch counters.
struct Checkpoint {
  estimator::EstimatorModel model;
  estimator::AdamState adam;
  std::string rng_state;
  int next_epoch = 0;
  double best_val_loss = 0.0;
  int best_epoch = -1;
  bool has_best_model = false;
  estimator::EstimatorModel best_model;
};

void save_checkpoint(const Checkpoint& c, const std::string& path);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace sepcs::trainer
