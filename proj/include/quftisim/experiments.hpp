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

#ifndef QUFTISIM_EXPERIMENTS_HPP
#define QUFTISIM_EXPERIMENTS_HPP

#include <cstdint>
#include <vector>

#include "quftisim/estimate.hpp"
#include "quftisim/rng.hpp"

namespace qufti {

/// One experiment definition: a phase-gradient interferometer scanned over
/// a phi grid with a chosen estimation method and ensemble shape. The
/// input is always one photon per mode; `order` selects how many output
/// modes are measured in coincidence.
struct ScanSpec {
    int modes = 2;                        // M
    std::vector<double> phi_grid;         // gradient values, radians
    Method method = Method::kConjecture;
    int order = 0;                        // N = |outputs|; 0 means max order (M)
    double radius = 0.1;                  // VCP contour radius
    int d = 2;                            // QCP phase-circle cardinality
    std::int64_t l1 = 200;                // subensembles
    std::int64_t l2 = 10000;              // samples per subensemble
    double noise_sigma = 0.0;             // phase-noise std. dev., radians
    int realizations = 1;                 // noise draws averaged per point (R)
    std::uint64_t seed = kDefaultSeed;    // master seed
    std::vector<int> outputs;             // empty: first `order` modes
    int workers = 1;
    bool timing = false;                  // fill wall_time_s (off keeps output bytes seed-only)

    /// Order after resolving the max-order default.
    int resolved_order() const { return order > 0 ? order : modes; }
    /// Output subset after resolving the first-N default.
    std::vector<int> resolved_outputs() const;
};

/// One result row; mirrors the output schema column-for-column so a row
/// carries everything needed to rerun that point exactly.
struct ScanRow {
    Method method = Method::kConjecture;
    int modes = 0;                 // M
    int order = 0;                 // N
    int d = 0;
    double radius = 0.0;           // r
    double phi = 0.0;
    double noise_sigma = 0.0;
    int realizations = 0;
    std::int64_t l1 = 0;
    std::int64_t l2 = 0;
    std::uint64_t seed = 0;        // master seed of the scan
    double q_mean = 0.0;
    double q_stderr = 0.0;
    double q_imag = 0.0;
    double wall_time_s = 0.0;
};

struct ScanResult {
    ScanSpec spec;
    std::vector<ScanRow> rows;     // one per (grid point), realization-averaged
};

/// Runs the fringe experiment: for every phi in the grid, averages Q over
/// `realizations` noise draws (each rebuilds the interferometer with fresh
/// offsets, then runs the chosen estimator). For a single realization the
/// row reports the estimator's own subensemble error; for R > 1 it reports
/// the spread of the realization means, sqrt((<Q^2> - <Q>^2) / R).
///
/// Streams are keyed on values, not grid indices: the run stream for a
/// point is derived from (seed, kTagRun, bits(phi), bits(sigma), rho), so
/// any single row can be reproduced in isolation.
ScanResult fringe_scan(const ScanSpec& spec);

/// One fringe scan per noise level over an identical grid and shared
/// master seed. The sigma = 0 entry is byte-identical to a plain
/// fringe_scan of the same spec.
std::vector<ScanResult> noise_sweep(const ScanSpec& spec, const std::vector<double>& sigmas);

/// Sampling-error dependence on the contour radius: one VCP estimate per
/// radius at fixed phi (spec.phi_grid must hold exactly one value) and
/// fixed seed — every radius reuses the same streams, isolating the
/// radius dependence. Returns one row per radius.
ScanResult r_sweep(const ScanSpec& spec, const std::vector<double>& radii);

/// Counting-statistics error of an ideal experiment with the same number
/// of events: sqrt(q_conjecture(M, phi) / (l1 l2)).
double shot_noise_baseline(int modes, double phi, std::int64_t l1, std::int64_t l2);

} // namespace qufti

#endif
