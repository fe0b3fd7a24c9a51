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

#ifndef QUFTISIM_FOCK_HPP
#define QUFTISIM_FOCK_HPP

#include <vector>

#include <Eigen/Dense>

#include "quftisim/unitary.hpp"

namespace qufti {

/// Largest photon number the brute-force Fock oracle will attempt
/// (the state space has binom(n + M - 1, n) configurations).
inline constexpr int kMaxFockPhotons = 6;

/// One output configuration with its exact probability.
struct FockOutcome {
    std::vector<int> occupation;   // photons per mode, sums to n
    double probability = 0.0;
};

/// Exact single-photon-input output distribution: photons enter the modes
/// listed in `inputs` (0-based, one photon each) and the probability of
/// every output occupation pattern is |perm(U_{S,T})|^2 / prod(t_k!),
/// evaluated with the Ryser oracle. Probabilities sum to 1 up to roundoff.
/// Throws SizeLimitError when inputs.size() > kMaxFockPhotons.
std::vector<FockOutcome> fock_output_distribution(const UnitaryMatrix& u,
                                                  const std::vector<int>& inputs);

/// Exact normally ordered output correlation <prod_{k in outputs} n_k>
/// for one photon in each mode of `inputs`, evaluated as
/// sum_n p_n prod_{k in outputs} n_k over the full distribution. When
/// |outputs| = |inputs| = M this equals |perm U(outputs, inputs)|^2.
double fock_correlation(const UnitaryMatrix& u,
                        const std::vector<int>& inputs,
                        const std::vector<int>& outputs);

} // namespace qufti

#endif
