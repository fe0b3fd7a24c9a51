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

#include "quftisim/unitary.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qufti {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_modes(int modes) {
    if (modes < 1) {
        throw std::invalid_argument("mode count must be at least 1, got " +
                                    std::to_string(modes));
    }
}

} // namespace

double unitarity_defect(const Eigen::MatrixXcd& m) {
    const Eigen::MatrixXcd gram = m.adjoint() * m;
    return (gram - Eigen::MatrixXcd::Identity(m.cols(), m.cols())).cwiseAbs().maxCoeff();
}

UnitaryMatrix UnitaryMatrix::from_matrix(Eigen::MatrixXcd m) {
    if (m.rows() < 1 || m.rows() != m.cols()) {
        throw std::invalid_argument("UnitaryMatrix: matrix must be square and non-empty");
    }
    if (!m.allFinite()) {
        throw std::invalid_argument("UnitaryMatrix: matrix entries must be finite");
    }
    const double defect = unitarity_defect(m);
    if (!(defect < kUnitarityTol)) {
        throw std::invalid_argument("UnitaryMatrix: unitarity defect " + std::to_string(defect) +
                                    " is not below " + std::to_string(kUnitarityTol));
    }
    return UnitaryMatrix(std::move(m));
}

PhaseProfile PhaseProfile::noiseless(int modes, double gradient) {
    check_modes(modes);
    PhaseProfile p;
    p.gradient = gradient;
    p.noise_sigma = 0.0;
    p.offsets.assign(static_cast<std::size_t>(modes), 0.0);
    return p;
}

UnitaryMatrix build_fourier(int modes) {
    check_modes(modes);
    const int m = modes;
    // All entries are M-th roots of unity over sqrt(M); tabulating the
    // roots once keeps entries bit-identical across the matrix.
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(m));
    for (int t = 0; t < m; ++t) {
        roots[static_cast<std::size_t>(t)] = std::polar(1.0, 2.0 * kPi * t / m);
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    Eigen::MatrixXcd f(m, m);
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) {
            f(j, k) = scale * roots[static_cast<std::size_t>(
                                  (static_cast<long long>(j) * k) % m)];
        }
    }
    return UnitaryMatrix::from_matrix(std::move(f));
}

UnitaryMatrix build_qufti(int modes, const PhaseProfile& profile) {
    check_modes(modes);
    if (static_cast<int>(profile.offsets.size()) != modes) {
        throw std::invalid_argument("build_qufti: profile has " +
                                    std::to_string(profile.offsets.size()) + " offsets for " +
                                    std::to_string(modes) + " modes");
    }
    const Eigen::MatrixXcd f = build_fourier(modes).matrix();
    // Phase on arm j (1-based): j * gradient + xi_j. Starting the index at
    // 1 is an overall-phase convention that does not change |perm|^2.
    Eigen::VectorXcd arm_phase(modes);
    for (int j = 0; j < modes; ++j) {
        arm_phase(j) = std::polar(1.0, (j + 1) * profile.gradient +
                                           profile.offsets[static_cast<std::size_t>(j)]);
    }
    Eigen::MatrixXcd v = f.adjoint() * (arm_phase.asDiagonal() * f);
    return UnitaryMatrix::from_matrix(std::move(v));
}

PhaseProfile sample_noise(int modes, double gradient, double noise_sigma, RngStream& rng) {
    check_modes(modes);
    if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) {
        throw std::invalid_argument("sample_noise: noise_sigma must be finite and >= 0");
    }
    PhaseProfile p;
    p.gradient = gradient;
    p.noise_sigma = noise_sigma;
    p.offsets.assign(static_cast<std::size_t>(modes), 0.0);
    if (noise_sigma > 0.0) {
        for (int j = 0; j < modes; ++j) {
            p.offsets[static_cast<std::size_t>(j)] = noise_sigma * rng.normal();
        }
    }
    return p;
}

UnitaryMatrix random_unitary(int modes, RngStream& rng) {
    check_modes(modes);
    // QR of a complex Ginibre matrix; normalizing the phases of diag(R)
    // removes the sign ambiguity of the factorization and makes the map
    // Haar-distributed.
    Eigen::MatrixXcd g(modes, modes);
    for (int j = 0; j < modes; ++j) {
        for (int k = 0; k < modes; ++k) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(j, k) = std::complex<double>(re, im) * M_SQRT1_2;
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd& r = qr.matrixQR();
    for (int j = 0; j < modes; ++j) {
        const std::complex<double> rjj = r(j, j);
        const double mag = std::abs(rjj);
        q.col(j) *= (mag > 0.0) ? (rjj / mag) : std::complex<double>(1.0, 0.0);
    }
    return UnitaryMatrix::from_matrix(std::move(q));
}

std::pair<Eigen::VectorXcd, Eigen::VectorXcd> apply_network(const UnitaryMatrix& u,
                                                            const Eigen::VectorXcd& alpha,
                                                            const Eigen::VectorXcd& beta) {
    if (alpha.size() != u.modes() || beta.size() != u.modes()) {
        throw std::invalid_argument("apply_network: vector length does not match mode count");
    }
    return {u.matrix() * alpha, u.matrix().conjugate() * beta};
}

} // namespace qufti
