// Copyright 2026 The quftisim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUFTISIM_RESULTS_IO_HPP
#define QUFTISIM_RESULTS_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "quftisim/experiments.hpp"

namespace qufti {

enum class OutputFormat { kCsv, kJsonl };

/// The pinned column set, in order:
///   method,M,N,d,r,phi,noise_sigma,realizations,L1,L2,seed,
///   Q_mean,Q_stderr,Q_imag,wall_time_s
/// The header row is always present (an empty row set yields a header-only
/// file) and floating-point values carry 17 significant digits, enough to
/// round-trip a double exactly.
extern const char kCsvHeader[];

void write_csv(const std::vector<ScanRow>& rows, std::ostream& out);

/// One JSON object per row on its own line, same field names as the CSV
/// columns.
void write_jsonl(const std::vector<ScanRow>& rows, std::ostream& out);

/// Writes rows to a file in the chosen format. I/O failures (unwritable
/// path, disk errors) surface as std::runtime_error.
void write_results(const std::vector<ScanRow>& rows, OutputFormat format, const std::string& path);

/// Parses a CSV stream produced by write_csv, validating the header.
/// Round-trips every field exactly. Malformed input throws
/// std::runtime_error.
std::vector<ScanRow> read_csv(std::istream& in);

} // namespace qufti

#endif
