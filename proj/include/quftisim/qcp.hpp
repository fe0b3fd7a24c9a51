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

#ifndef QUFTISIM_QCP_HPP
#define QUFTISIM_QCP_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "quftisim/estimate.hpp"
#include "quftisim/rng.hpp"
#include "quftisim/unitary.hpp"

namespace qufti {

/// Full-enumeration guard: d^N phase vectors.
inline constexpr std::uint64_t kMaxEnumerationDraws = 1ULL << 24;

/// Discrete qudit sampler configuration: phase-circle cardinality d and
/// the input/output mode subsets (0-based, distinct, equal size N) whose
/// sub-matrix permanent is estimated. The sampler is specific to
/// correlations of maximum order (|outputs| = |inputs|), where the
/// contour-radius factors cancel exactly.
struct QcpConfig {
    int d = 2;
    std::vector<int> inputs;   // sigma
    std::vector<int> outputs;  // sigma-prime

    static QcpConfig max_order(int modes, int d = 2);

    int order() const { return static_cast<int>(inputs.size()); }
};

/// Mean of a complex sample set with a scalar spread:
/// std_error = sqrt((<|p|^2> - |<p>|^2) / L), the total scatter of both
/// quadratures.
struct PermanentEstimate {
    std::complex<double> value;
    double std_error = 0.0;
    std::int64_t samples = 0;
};

/// One discrete phase sample of the sub-matrix permanent:
///   p(q) = prod_{i in inputs} z^(-q_i)
///        * prod_{k in outputs} sum_{j in inputs} U_{kj} z^(q_j),
/// with z = exp(2 pi i / d). Entries of q must lie in {0..d-1}
/// (std::invalid_argument otherwise).
std::complex<double> sample_p(const UnitaryMatrix& u,
                              const QcpConfig& cfg,
                              const std::vector<int>& q);

/// Mean of sample_p over `l` i.i.d. uniform q-draws: an unbiased estimate
/// of perm U(outputs, inputs).
PermanentEstimate estimate_permanent(const UnitaryMatrix& u,
                                     const QcpConfig& cfg,
                                     std::int64_t l,
                                     std::uint64_t seed);

/// Unbiased estimate of |perm U(outputs, inputs)|^2. Each subensemble i
/// draws two independent batches of l2 phase vectors (streams derived from
/// (seed, kTagSubensemble, i, 0) and (..., 1)) and forms
/// Q_i = Re[<p(q)> conj(<p(q~))>]; the result is reduced over subensembles
/// as in EstimateResult, with the imaginary part of the product kept as
/// the diagnostic. Bit-identical for a given seed at any worker count.
EstimateResult estimate_perm_squared(const UnitaryMatrix& u,
                                     const QcpConfig& cfg,
                                     std::int64_t l1,
                                     std::int64_t l2,
                                     std::uint64_t seed,
                                     int workers = 1);

/// Exact permanent of the sub-matrix by full summation of sample_p over
/// all d^N phase vectors divided by d^N. For single-photon inputs the sum
/// over each q_j kills every term in which input j is not used exactly
/// once (multiplicities agreeing with 1 only mod d cannot sum to N), so
/// only the permutation terms survive and the result equals the permanent
/// up to rounding for every d >= 2. Throws SizeLimitError when d^N
/// exceeds kMaxEnumerationDraws.
std::complex<double> enumerate_perm_exact(const UnitaryMatrix& u, const QcpConfig& cfg);

} // namespace qufti

#endif
