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

#ifndef QUFTISIM_UNITARY_HPP
#define QUFTISIM_UNITARY_HPP

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "quftisim/rng.hpp"

namespace qufti {

/// Construction-time unitarity gate: max-norm of U^dag U - I.
inline constexpr double kUnitarityTol = 1e-12;

/// Max-norm of (m^dag m - I); the unitarity defect.
double unitarity_defect(const Eigen::MatrixXcd& m);

/// An M x M transfer matrix of a lossless linear network. Instances are
/// immutable and validated at construction, so they can be shared freely
/// across estimator workers.
class UnitaryMatrix {
  public:
    /// Validates squareness, finiteness and unitarity (kUnitarityTol).
    static UnitaryMatrix from_matrix(Eigen::MatrixXcd m);

    int modes() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return m_; }
    std::complex<double> entry(int row, int col) const { return m_(row, col); }

  private:
    explicit UnitaryMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {}
    Eigen::MatrixXcd m_;
};

/// Per-mode phase pattern of the interferometer arm: a linear gradient
/// plus one realization of additive Gaussian offsets.
struct PhaseProfile {
    double gradient = 0.0;            // radians per mode index
    double noise_sigma = 0.0;         // std. dev. of the offsets, radians
    std::vector<double> offsets;      // xi_1..xi_M, one realization

    static PhaseProfile noiseless(int modes, double gradient);
};

/// Discrete Fourier network: F[j][k] = exp(2 pi i j k / M) / sqrt(M),
/// j,k = 0..M-1.
UnitaryMatrix build_fourier(int modes);

/// Phase-gradient interferometer V = F^dag Phi F with
/// Phi = diag(exp(i (j * gradient + xi_j))), j = 1..M. The mode phases are
/// indexed from 1; this fixes an overall phase and makes matrices
/// bit-reproducible without affecting |perm V|^2.
UnitaryMatrix build_qufti(int modes, const PhaseProfile& profile);

/// Draws one noise realization: offsets xi_j i.i.d. Normal(0, sigma^2).
/// sigma = 0 yields exact zeros and consumes no stream values.
PhaseProfile sample_noise(int modes, double gradient, double noise_sigma, RngStream& rng);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the
/// diagonal of R phase-normalized.
UnitaryMatrix random_unitary(int modes, RngStream& rng);

/// Propagates a phase-space amplitude pair through the network:
/// returns (U alpha, conj(U) beta).
std::pair<Eigen::VectorXcd, Eigen::VectorXcd> apply_network(const UnitaryMatrix& u,
                                                            const Eigen::VectorXcd& alpha,
                                                            const Eigen::VectorXcd& beta);

} // namespace qufti

#endif
