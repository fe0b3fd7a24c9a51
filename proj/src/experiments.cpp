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

#include "quftisim/experiments.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "quftisim/conjecture.hpp"
#include "quftisim/fock.hpp"
#include "quftisim/permanent.hpp"
#include "quftisim/qcp.hpp"
#include "quftisim/unitary.hpp"
#include "quftisim/vcp.hpp"

namespace qufti {

namespace {

std::vector<int> all_modes_list(int modes) {
    std::vector<int> v(static_cast<std::size_t>(modes));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

void check_spec(const ScanSpec& spec) {
    if (spec.modes < 1) {
        throw std::invalid_argument("ScanSpec: mode count must be at least 1");
    }
    if (spec.phi_grid.empty()) {
        throw std::invalid_argument("ScanSpec: phi grid must be non-empty");
    }
    const int order = spec.resolved_order();
    if (order < 1 || order > spec.modes) {
        throw std::invalid_argument("ScanSpec: order must lie in [1, modes]");
    }
    if (!spec.outputs.empty()) {
        if (spec.order > 0 && static_cast<int>(spec.outputs.size()) != spec.order) {
            throw std::invalid_argument("ScanSpec: outputs list disagrees with order");
        }
    }
    if (!(spec.radius > 0.0) || !std::isfinite(spec.radius)) {
        throw std::invalid_argument("ScanSpec: radius must be finite and > 0");
    }
    if (spec.d < 2) {
        throw std::invalid_argument("ScanSpec: d must be >= 2");
    }
    if (spec.l1 < 2 || spec.l2 < 1) {
        throw std::invalid_argument("ScanSpec: need l1 >= 2 and l2 >= 1");
    }
    if (!(spec.noise_sigma >= 0.0) || !std::isfinite(spec.noise_sigma)) {
        throw std::invalid_argument("ScanSpec: noise_sigma must be finite and >= 0");
    }
    if (spec.realizations < 1) {
        throw std::invalid_argument("ScanSpec: realizations must be at least 1");
    }

    const int n_out = spec.outputs.empty() ? order : static_cast<int>(spec.outputs.size());
    if (spec.method == Method::kQcp && n_out != spec.modes) {
        throw std::invalid_argument(
            "ScanSpec: the discrete sampler only handles the maximum-order correlation "
            "(order = modes); requested order " + std::to_string(n_out));
    }
    if (spec.method == Method::kConjecture) {
        if (n_out != spec.modes) {
            throw std::invalid_argument(
                "ScanSpec: the closed-form fringe covers only the maximum-order correlation");
        }
        if (spec.modes < 2) {
            throw std::invalid_argument("ScanSpec: the closed-form fringe needs modes >= 2");
        }
        if (spec.noise_sigma != 0.0) {
            throw std::invalid_argument(
                "ScanSpec: the closed-form fringe has no phase-noise model; use the exact or "
                "sampled methods for noise_sigma > 0");
        }
    }
}

// The estimator outcome of a single (phi, sigma, realization) run.
struct RunOutcome {
    double value = 0.0;
    double std_error = 0.0;
    double imag = 0.0;
    double wall_s = 0.0;
};

// Streams are keyed on parameter values rather than grid indices, so a
// run is reproducible from its result row alone and a sigma = 0 sweep
// level coincides bit-for-bit with the plain scan.
std::uint64_t run_seed_for(const ScanSpec& spec, double phi, int realization) {
    return derive_seed(spec.seed, {kTagRun, std::bit_cast<std::uint64_t>(phi),
                                   std::bit_cast<std::uint64_t>(spec.noise_sigma),
                                   static_cast<std::uint64_t>(realization)});
}

RunOutcome run_point(const ScanSpec& spec, double phi, int realization, int est_workers) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t run_seed = run_seed_for(spec, phi, realization);
    RunOutcome out;

    if (spec.method == Method::kConjecture) {
        out.value = q_conjecture(spec.modes, phi);
        out.wall_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return out;
    }

    RngStream noise_rng(derive_seed(run_seed, {kTagNoise}));
    const PhaseProfile profile =
        sample_noise(spec.modes, phi, spec.noise_sigma, noise_rng);
    const UnitaryMatrix network = build_qufti(spec.modes, profile);
    const std::vector<int> outputs = spec.resolved_outputs();
    const std::uint64_t est_seed = derive_seed(run_seed, {kTagEstimator});

    switch (spec.method) {
        case Method::kExact: {
            if (static_cast<int>(outputs.size()) == spec.modes) {
                out.value = std::norm(permanent_ryser(
                    submatrix(network.matrix(), outputs, all_modes_list(spec.modes))));
            } else {
                out.value = fock_correlation(network, all_modes_list(spec.modes), outputs);
            }
            break;
        }
        case Method::kVcp: {
            const EstimateResult est = estimate_correlation(
                network, VcpConfig::all_modes(spec.modes, spec.radius), outputs, spec.l1,
                spec.l2, est_seed, est_workers);
            out.value = est.value;
            out.std_error = est.std_error;
            out.imag = est.imag_value;
            break;
        }
        case Method::kQcp: {
            QcpConfig cfg = QcpConfig::max_order(spec.modes, spec.d);
            cfg.outputs = outputs;
            const EstimateResult est =
                estimate_perm_squared(network, cfg, spec.l1, spec.l2, est_seed, est_workers);
            out.value = est.value;
            out.std_error = est.std_error;
            out.imag = est.imag_value;
            break;
        }
        case Method::kConjecture:
            break;  // handled above
    }
    out.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

ScanRow make_row(const ScanSpec& spec, double phi) {
    ScanRow row;
    row.method = spec.method;
    row.modes = spec.modes;
    row.order = spec.outputs.empty() ? spec.resolved_order()
                                     : static_cast<int>(spec.outputs.size());
    row.d = spec.d;
    row.radius = spec.radius;
    row.phi = phi;
    row.noise_sigma = spec.noise_sigma;
    row.realizations = spec.realizations;
    row.l1 = spec.l1;
    row.l2 = spec.l2;
    row.seed = spec.seed;
    return row;
}

} // namespace

std::vector<int> ScanSpec::resolved_outputs() const {
    if (!outputs.empty()) {
        return outputs;
    }
    return all_modes_list(resolved_order());
}

ScanResult fringe_scan(const ScanSpec& spec) {
    check_spec(spec);
    const std::int64_t points = static_cast<std::int64_t>(spec.phi_grid.size());
    const std::int64_t rels = spec.realizations;
    const std::int64_t jobs = points * rels;

    // Fan the (point, realization) pairs out to the pool; estimators run
    // single-threaded inside unless there is only one job to schedule.
    // Either split yields identical bits, since every work unit derives
    // its own stream and reductions are fixed-order.
    const int outer_workers = (jobs > 1) ? std::max(spec.workers, 1) : 1;
    const int inner_workers = (jobs > 1) ? 1 : std::max(spec.workers, 1);

    std::vector<RunOutcome> outcomes(static_cast<std::size_t>(jobs));
    parallel_for(jobs, outer_workers, [&](std::int64_t job) {
        const auto point = static_cast<std::size_t>(job / rels);
        const int realization = static_cast<int>(job % rels);
        outcomes[static_cast<std::size_t>(job)] =
            run_point(spec, spec.phi_grid[point], realization, inner_workers);
    });

    ScanResult result;
    result.spec = spec;
    result.rows.reserve(static_cast<std::size_t>(points));
    for (std::int64_t point = 0; point < points; ++point) {
        ScanRow row = make_row(spec, spec.phi_grid[static_cast<std::size_t>(point)]);
        const RunOutcome* batch = outcomes.data() + point * rels;
        if (rels == 1) {
            row.q_mean = batch[0].value;
            row.q_stderr = batch[0].std_error;
            row.q_imag = batch[0].imag;
        } else {
            // Realization-averaged row: the reported error is the spread
            // of the per-realization means, sqrt((<Q^2> - <Q>^2) / R).
            PairwiseSum val;
            PairwiseSum imag;
            for (std::int64_t rho = 0; rho < rels; ++rho) {
                val.add(batch[rho].value);
                imag.add(batch[rho].imag);
            }
            const double mean = val.total() / static_cast<double>(rels);
            PairwiseSum sq;
            for (std::int64_t rho = 0; rho < rels; ++rho) {
                const double d = batch[rho].value - mean;
                sq.add(d * d);
            }
            row.q_mean = mean;
            row.q_stderr = std::sqrt(sq.total()) / static_cast<double>(rels);
            row.q_imag = imag.total() / static_cast<double>(rels);
        }
        if (spec.timing) {
            double wall = 0.0;
            for (std::int64_t rho = 0; rho < rels; ++rho) {
                wall += batch[rho].wall_s;
            }
            row.wall_time_s = wall;
        }
        result.rows.push_back(row);
    }
    return result;
}

std::vector<ScanResult> noise_sweep(const ScanSpec& spec, const std::vector<double>& sigmas) {
    if (sigmas.empty()) {
        throw std::invalid_argument("noise_sweep: sigma list must be non-empty");
    }
    std::vector<ScanResult> results;
    results.reserve(sigmas.size());
    for (double sigma : sigmas) {
        ScanSpec level = spec;
        level.noise_sigma = sigma;
        results.push_back(fringe_scan(level));
    }
    return results;
}

ScanResult r_sweep(const ScanSpec& spec, const std::vector<double>& radii) {
    if (spec.method != Method::kVcp) {
        throw std::invalid_argument("r_sweep: the contour radius is a property of the "
                                    "continuous sampler; method must be vcp");
    }
    if (spec.phi_grid.size() != 1) {
        throw std::invalid_argument("r_sweep: expects exactly one phi value");
    }
    if (spec.noise_sigma != 0.0 || spec.realizations != 1) {
        throw std::invalid_argument("r_sweep: runs noiseless single-realization estimates");
    }
    if (radii.empty()) {
        throw std::invalid_argument("r_sweep: radius list must be non-empty");
    }
    for (double r : radii) {
        if (!(r > 0.0) || !std::isfinite(r)) {
            throw std::invalid_argument("r_sweep: radii must be finite and > 0");
        }
    }

    ScanResult result;
    result.spec = spec;
    result.rows.reserve(radii.size());
    // Fixed (phi, seed) across the sweep: every radius sees the same
    // streams, so rows differ only through the radius itself.
    for (double r : radii) {
        ScanSpec point = spec;
        point.radius = r;
        check_spec(point);
        ScanRow row = make_row(point, point.phi_grid[0]);
        const RunOutcome out = run_point(point, point.phi_grid[0], 0, std::max(spec.workers, 1));
        row.q_mean = out.value;
        row.q_stderr = out.std_error;
        row.q_imag = out.imag;
        if (spec.timing) {
            row.wall_time_s = out.wall_s;
        }
        result.rows.push_back(row);
    }
    return result;
}

double shot_noise_baseline(int modes, double phi, std::int64_t l1, std::int64_t l2) {
    if (l1 < 1 || l2 < 1) {
        throw std::invalid_argument("shot_noise_baseline: ensemble sizes must be positive");
    }
    return std::sqrt(q_conjecture(modes, phi) / static_cast<double>(l1 * l2));
}

} // namespace qufti
