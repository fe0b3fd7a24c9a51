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

#ifndef QUFTISIM_VCP_HPP
#define QUFTISIM_VCP_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "quftisim/estimate.hpp"
#include "quftisim/rng.hpp"
#include "quftisim/unitary.hpp"

namespace qufti {

/// Continuous phase-space sampler configuration: contour radius and the
/// single-photon input pattern (one entry per mode, each 0 or 1).
struct VcpConfig {
    double radius = 0.1;
    std::vector<int> occupancy;

    /// Occupancy with one photon in each mode of `inputs` (0-based).
    static VcpConfig single_photons(int modes, const std::vector<int>& inputs, double radius);
    /// Occupancy with one photon in every mode.
    static VcpConfig all_modes(int modes, double radius);

    int modes() const { return static_cast<int>(occupancy.size()); }
};

/// One weighted phase-space sample. For an occupied mode k,
///   alpha_k = r exp(i (phi_k + theta_k / 2)),
///   beta_k  = r exp(-i (phi_k - theta_k / 2)),
/// where beta is the conjugate-line amplitude (it propagates through
/// conj(U)), so the classical output number is (U alpha)_k (conj(U) beta)_k.
/// Empty modes carry alpha = beta = 0 and a unit weight factor.
///
/// The total weight Omega = prod_k Omega_k has a constant magnitude
/// [I0(r^2)/r^2]^(occupied count) that overflows double for large mode
/// counts, so it is stored split into log-magnitude and phase.
struct VcpSample {
    std::vector<double> phi;    // classical phases, occupied modes hold draws
    std::vector<double> theta;  // nonclassical phases
    Eigen::VectorXcd alpha;
    Eigen::VectorXcd beta;
    double weight_log_mag = 0.0;
    double weight_phase = 0.0;

    /// Omega as a complex number; may overflow to inf at large mode counts
    /// (the estimator never forms it, see estimate_correlation).
    std::complex<double> weight() const;
};

/// Per-mode weight factor Omega_k for a mode with `photons` (0 or 1)
/// input photons: (n!)^2 I0(r^2) r^(-2n) exp(i (r^2 sin(theta) - n theta)).
std::complex<double> mode_weight(double radius, int photons, double theta);

/// One draw from the von Mises distribution VM(0, kappa), density
/// proportional to exp(kappa cos(theta)) on [-pi, pi), via the
/// Best-Fisher rejection algorithm (exact for every kappa >= 0;
/// kappa = 0 falls back to a single uniform draw).
double sample_von_mises(double kappa, RngStream& rng);

/// Draws one weighted sample: phi_k ~ U(-pi, pi), theta_k ~ VM(0, r^2)
/// for occupied modes, amplitudes and weight as in VcpSample.
VcpSample draw_sample(const VcpConfig& cfg, RngStream& rng);

/// Monte Carlo estimate of the output correlation <prod_{k in outputs} n_k>
/// for single photons in the configured input modes: the weighted average
/// of Omega * prod_k (U alpha)_k (conj(U) beta)_k over l1 subensembles of
/// l2 samples. Subensemble i uses the stream derived from
/// (seed, kTagSubensemble, i); the reduction is fixed-order, so results
/// are bit-identical for a given seed at any worker count.
///
/// The constant weight magnitude is folded with the r^2 factors of the
/// output moments and applied once per sample from the log domain; a
/// NumericError is thrown if that constant itself cannot be represented.
EstimateResult estimate_correlation(const UnitaryMatrix& u,
                                    const VcpConfig& cfg,
                                    const std::vector<int>& outputs,
                                    std::int64_t l1,
                                    std::int64_t l2,
                                    std::uint64_t seed,
                                    int workers = 1);

} // namespace qufti

#endif
