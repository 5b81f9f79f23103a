// Copyright 2026 The cbamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>

#include "cbamp/config.hpp"

namespace cbamp {

// Each command writes its CSV to `csv` and a short human summary to `info`.
// The return value is the process exit status.

int cmd_design(const RunConfig& c, std::ostream& csv, std::ostream& info);

/// Columns epsilon,P,F,G,SNR_dB,G_dB. G is the high-loss limit 2P.
int cmd_sweep_epsilon(const RunConfig& c, std::ostream& csv, std::ostream& info);

/// Grid over <cos^2 theta> with <cos theta> = 0 (mirror) or
/// <cos theta>^2 = <cos^2 theta> (pc).
int cmd_sweep_distribution(const RunConfig& c, std::ostream& csv, std::ostream& info);

/// Both comparison tables with 2-decimal values and match flags.
int cmd_tables(const RunConfig& c, std::ostream& csv, std::ostream& info);

/// Nonzero when any oracle exceeds its tolerance.
int cmd_verify(const RunConfig& c, std::ostream& csv, std::ostream& info);

int cmd_simulate_optics(const RunConfig& c, std::ostream& csv, std::ostream& info);

int run_command(const RunConfig& c, std::ostream& csv, std::ostream& info);

}  // namespace cbamp
