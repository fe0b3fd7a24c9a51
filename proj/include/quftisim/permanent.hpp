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

#ifndef QUFTISIM_PERMANENT_HPP
#define QUFTISIM_PERMANENT_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qufti {

/// Largest matrix the Ryser oracle will attempt (2^n subsets).
inline constexpr int kMaxRyserSize = 30;

/// Largest matrix the definition oracle will attempt (n! terms).
inline constexpr int kMaxDefinitionSize = 9;

/// Permanent via Ryser's inclusion-exclusion formula with Gray-code
/// row-sum updates, O(2^n n). Requires a square n x n matrix with n >= 1
/// (std::invalid_argument otherwise); throws SizeLimitError beyond
/// kMaxRyserSize.
std::complex<double> permanent_ryser(const Eigen::MatrixXcd& m);

/// Permanent straight from the definition, summing over all n! column
/// permutations. Independent cross-check for the Ryser path; throws
/// SizeLimitError beyond kMaxDefinitionSize.
std::complex<double> permanent_by_definition(const Eigen::MatrixXcd& m);

/// Extracts the square submatrix with the given row and column indices
/// (0-based, need not be sorted or distinct) and returns it for use with
/// the permanent oracles.
Eigen::MatrixXcd submatrix(const Eigen::MatrixXcd& m,
                           const std::vector<int>& rows,
                           const std::vector<int>& cols);

} // namespace qufti

#endif
