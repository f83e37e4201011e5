// sepcs/commands.hpp

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

#include "sepcs/audio_io.hpp"
#include "sepcs/run_config.hpp"

// Command implementations behind the CLI entry point. Each returns the
// process exit code contract: 0 success, 1 data/runtime failure, 2 config
// error. The thin main() in tools/ parses flags and dispatches here.

namespace sepcs::cli {

/// Apply PCS preprocessing to a corpus per mode; writes rewritten audio and a
/// new manifest with provenance into out_dir.
int cmd_pcs(const RunConfig& cfg, const std::string& in_manifest,
            const std::string& out_dir, std::string* out_manifest_path = nullptr);

/// Generate a synthetic corpus.
int cmd_synth(const io::SynthSpec& spec, const std::string& out_dir);

/// Train per the run config; writes model, checkpoint, and CSV log.
int cmd_train(const RunConfig& cfg, const std::string& resume_from = "");

/// Enhance one WAV or every entry of a manifest.
int cmd_enhance(const RunConfig& cfg, const std::string& model_path,
                const std::string& input, const std::string& output);

/// Evaluate a manifest with a model file, "oracle", or "identity".
int cmd_eval(const RunConfig& cfg, const std::string& manifest_path,
             const std::string& enhancer, const std::string& out_csv);

struct AblationRow {
  std::string mode;
  double stoi = 0.0;
  double si_sdr_db = 0.0;
  double seg_snr_db = 0.0;
};

/// Run the PCS-mode grid {both, input, target, none}: preprocess, train, and
/// evaluate each configuration; writes one CSV row per mode.
int cmd_ablate(const RunConfig& cfg, const std::string& out_csv,
               std::vector<AblationRow>* rows_out = nullptr);

/// Finite-difference verification of the analytic gradients; prints a report.
int cmd_gradcheck(const RunConfig& cfg);

}  // namespace sepcs::cli
