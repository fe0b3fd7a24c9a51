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

#include "quftisim/fock.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "quftisim/errors.hpp"
#include "quftisim/permanent.hpp"

namespace qufti {

namespace {

// Output configurations for n photons over m modes: C(m + n - 1, n).
// Bounding it keeps the enumeration honest about its cost at large M.
constexpr std::uint64_t kMaxConfigurations = 1ULL << 24;

void check_input_modes(const UnitaryMatrix& u, const std::vector<int>& inputs) {
    if (inputs.empty()) {
        throw std::invalid_argument("fock oracle: input mode set must be non-empty");
    }
    std::vector<int> sorted = inputs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("fock oracle: input modes must be distinct");
    }
    if (sorted.front() < 0 || sorted.back() >= u.modes()) {
        throw std::invalid_argument("fock oracle: input mode index out of range");
    }
}

std::uint64_t configuration_count(int modes, int photons) {
    // C(modes + photons - 1, photons) with early saturation at the guard.
    std::uint64_t c = 1;
    for (int i = 1; i <= photons; ++i) {
        c = c * static_cast<std::uint64_t>(modes - 1 + i) / static_cast<std::uint64_t>(i);
        if (c > kMaxConfigurations) {
            return kMaxConfigurations + 1;
        }
    }
    return c;
}

} // namespace

std::vector<FockOutcome> fock_output_distribution(const UnitaryMatrix& u,
                                                  const std::vector<int>& inputs) {
    check_input_modes(u, inputs);
    const int n = static_cast<int>(inputs.size());
    const int m = u.modes();
    if (n > kMaxFockPhotons) {
        throw SizeLimitError("fock_output_distribution: " + std::to_string(n) +
                             " photons exceed the limit of " + std::to_string(kMaxFockPhotons));
    }
    if (configuration_count(m, n) > kMaxConfigurations) {
        throw SizeLimitError("fock_output_distribution: more than " +
                             std::to_string(kMaxConfigurations) + " output configurations");
    }

    const double factorial[] = {1.0, 1.0, 2.0, 6.0, 24.0, 120.0, 720.0};

    std::vector<FockOutcome> dist;
    std::vector<int> occ(static_cast<std::size_t>(m), 0);
    occ[0] = n;
    std::vector<int> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (;;) {
        // p(occ) = |perm of U rows repeated occ_k times, columns = inputs|^2
        // divided by prod_k occ_k!.
        rows.clear();
        double norm = 1.0;
        for (int k = 0; k < m; ++k) {
            for (int t = 0; t < occ[static_cast<std::size_t>(k)]; ++t) {
                rows.push_back(k);
            }
            norm *= factorial[occ[static_cast<std::size_t>(k)]];
        }
        FockOutcome outcome;
        outcome.occupation = occ;
        outcome.probability = std::norm(permanent_ryser(submatrix(u.matrix(), rows, inputs))) /
                              norm;
        dist.push_back(std::move(outcome));

        // Lexicographic successor of the occupation vector: move one photon
        // off the rightmost non-terminal mode and park the remainder just
        // after it.
        if (occ[static_cast<std::size_t>(m - 1)] == n) {
            break;
        }
        int k = m - 2;
        while (occ[static_cast<std::size_t>(k)] == 0) {
            --k;
        }
        int remainder = occ[static_cast<std::size_t>(m - 1)];
        occ[static_cast<std::size_t>(m - 1)] = 0;
        occ[static_cast<std::size_t>(k)] -= 1;
        occ[static_cast<std::size_t>(k + 1)] = remainder + 1;
    }
    return dist;
}

double fock_correlation(const UnitaryMatrix& u,
                        const std::vector<int>& inputs,
                        const std::vector<int>& outputs) {
    check_input_modes(u, inputs);
    if (outputs.empty()) {
        throw std::invalid_argument("fock_correlation: output mode set must be non-empty");
    }
    std::vector<int> sorted = outputs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("fock_correlation: output modes must be distinct");
    }
    if (sorted.front() < 0 || sorted.back() >= u.modes()) {
        throw std::invalid_argument("fock_correlation: output mode index out of range");
    }

    const auto dist = fock_output_distribution(u, inputs);
    double total = 0.0;
    for (const auto& outcome : dist) {
        double w = 1.0;
        for (int k : outputs) {
            w *= static_cast<double>(outcome.occupation[static_cast<std::size_t>(k)]);
        }
        total += w * outcome.probability;
    }
    return total;
}

} // namespace qufti
