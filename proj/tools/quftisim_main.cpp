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

// Command-line front end.
//
// Exit codes:
//   0  success
//   1  validation error (bad flags, bad parameter combination)
//   2  numeric failure or I/O failure
//   3  size-guard refusal (request exceeds an exact-oracle or enumeration limit)

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "quftisim/errors.hpp"
#include "quftisim/estimate.hpp"
#include "quftisim/experiments.hpp"
#include "quftisim/results_io.hpp"
#include "quftisim/rng.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

struct CliOptions {
    int modes = 2;
    int order = 0;  // 0: max order (one detector per mode)
    int d = 2;
    double radius = 0.1;
    double phi = 0.0;
    double phi_min = 0.0;
    double phi_max = 0.0;
    int points = 21;
    std::string method;
    std::int64_t l1 = 200;
    std::int64_t l2 = 10000;
    double noise_sigma = 0.0;
    std::vector<double> sigmas{0.0, 0.05, 0.1, 0.2, 0.4};
    std::vector<double> radii{0.1, 0.3, 0.5, 1.0};
    int realizations = 1;
    std::vector<int> outputs;
    std::string seed_text = std::to_string(qufti::kDefaultSeed);
    int workers = 1;
    std::string out_path;
    std::string format = "csv";
    bool timing = false;
};

std::uint64_t parse_seed(const std::string& text) {
    if (text == "random") {
        std::random_device device;
        const std::uint64_t hi = device();
        const std::uint64_t lo = device();
        return (hi << 32) ^ lo;
    }
    if (text.empty() || text[0] == '-') {
        throw std::invalid_argument("--seed must be a decimal 64-bit integer or 'random'");
    }
    try {
        std::size_t pos = 0;
        const unsigned long long value = std::stoull(text, &pos, 10);
        if (pos != text.size()) {
            throw std::invalid_argument("");
        }
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("--seed must be a decimal 64-bit integer or 'random'");
    }
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 1) {
        throw std::invalid_argument("--points must be at least 1");
    }
    std::vector<double> grid(static_cast<std::size_t>(n));
    if (n == 1) {
        grid[0] = lo;
        return grid;
    }
    for (int i = 0; i < n; ++i) {
        grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    }
    return grid;
}

qufti::ScanSpec build_spec(const CliOptions& o, std::vector<double> grid, qufti::Method method) {
    qufti::ScanSpec spec;
    spec.modes = o.modes;
    spec.phi_grid = std::move(grid);
    spec.method = method;
    spec.order = o.order;
    spec.radius = o.radius;
    spec.d = o.d;
    spec.l1 = o.l1;
    spec.l2 = o.l2;
    spec.noise_sigma = o.noise_sigma;
    spec.realizations = o.realizations;
    spec.seed = parse_seed(o.seed_text);
    spec.outputs = o.outputs;
    spec.workers = qufti::resolve_workers(o.workers);
    spec.timing = o.timing;
    return spec;
}

// Contour-radius default depends on the measured order: wide fringes at max
// order want a tight contour (0.1); lower-order correlations keep their
// sampling error in check with a larger one (0.8).
void apply_radius_default(const CLI::App* sub, CliOptions& o) {
    if (sub->count("--r") > 0) {
        return;
    }
    const int order = o.order > 0 ? o.order : o.modes;
    const int resolved = o.outputs.empty() ? order : static_cast<int>(o.outputs.size());
    o.radius = (resolved >= o.modes) ? 0.1 : 0.8;
}

void emit(const std::vector<qufti::ScanRow>& rows, const CliOptions& o) {
    const qufti::OutputFormat format =
        o.format == "jsonl" ? qufti::OutputFormat::kJsonl : qufti::OutputFormat::kCsv;
    if (o.out_path.empty()) {
        if (format == qufti::OutputFormat::kCsv) {
            qufti::write_csv(rows, std::cout);
        } else {
            qufti::write_jsonl(rows, std::cout);
        }
        std::cout.flush();
        if (!std::cout) {
            throw std::runtime_error("failed while writing results to stdout");
        }
        return;
    }
    qufti::write_results(rows, format, o.out_path);
}

void add_output_flags(CLI::App* sub, CliOptions& o) {
    sub->add_option("-o,--out", o.out_path, "Write results to this file instead of stdout");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();
}

void add_ensemble_flags(CLI::App* sub, CliOptions& o) {
    sub->add_option("--L1", o.l1, "Number of subensembles (the error bar averages their means)")
        ->capture_default_str();
    sub->add_option("--L2", o.l2, "Monte Carlo samples per subensemble")->capture_default_str();
    sub->add_option("--seed", o.seed_text, "Decimal 64-bit master seed, or 'random'")
        ->capture_default_str();
    sub->add_option("--workers", o.workers,
                    "Worker threads; results are byte-identical for any value "
                    "(env QUFTISIM_WORKERS overrides)")
        ->capture_default_str();
    sub->add_flag("--timing", o.timing,
                  "Record wall times in the output (off by default so output "
                  "bytes depend only on the seed)");
}

void add_geometry_flags(CLI::App* sub, CliOptions& o, bool with_order) {
    sub->add_option("--M,--modes", o.modes, "Number of interferometer modes")->required();
    if (with_order) {
        sub->add_option("--N,--order", o.order,
                        "Correlation order (number of output detectors); 0 means one per mode")
            ->capture_default_str();
        sub->add_option("--outputs", o.outputs,
                        "Explicit 0-based output modes (overrides the first-N default)")
            ->delimiter(',');
    }
}

void add_method_flags(CLI::App* sub, CliOptions& o, const std::string& default_method) {
    auto* opt = sub->add_option("--method", o.method, "Estimation method")
                    ->check(CLI::IsMember({"vcp", "qcp", "exact", "conjecture"}));
    if (default_method.empty()) {
        opt->required();
    } else {
        // One CliOptions instance backs every subcommand, so writing the
        // default into o.method here would let the last registration win
        // for all of them; the per-subcommand fallback is applied in
        // dispatch instead, and only displayed here.
        opt->default_str(default_method);
    }
    sub->add_option("--r", o.radius,
                    "Coherent-contour radius for the vcp sampler "
                    "(default 0.1 at max order, 0.8 below)");
    sub->add_option("--d", o.d, "Phase-circle cardinality for the qcp sampler")
        ->capture_default_str();
}

int dispatch(const CLI::App& app, CliOptions& o) {
    const CLI::App* exact = app.get_subcommand("exact");
    const CLI::App* conjecture = app.get_subcommand("conjecture");
    const CLI::App* estimate = app.get_subcommand("estimate");
    const CLI::App* fringe = app.get_subcommand("fringe");
    const CLI::App* noise = app.get_subcommand("noise-sweep");
    const CLI::App* rsweep = app.get_subcommand("r-sweep");

    if (exact->parsed() || conjecture->parsed()) {
        const qufti::Method method =
            exact->parsed() ? qufti::Method::kExact : qufti::Method::kConjecture;
        const qufti::ScanSpec spec = build_spec(o, {o.phi}, method);
        const qufti::ScanResult result = qufti::fringe_scan(spec);
        std::printf("%.17g\n", result.rows.at(0).q_mean);
        if (!o.out_path.empty()) {
            emit(result.rows, o);
        }
        return 0;
    }

    if (estimate->parsed()) {
        apply_radius_default(estimate, o);
        const qufti::ScanSpec spec = build_spec(o, {o.phi}, qufti::method_from_name(o.method));
        emit(qufti::fringe_scan(spec).rows, o);
        return 0;
    }

    if (fringe->parsed() || noise->parsed()) {
        const CLI::App* sub = fringe->parsed() ? fringe : noise;
        apply_radius_default(sub, o);
        if (sub->count("--phi-min") == 0 && sub->count("--phi-max") == 0) {
            o.phi_min = -kPi / o.modes;
            o.phi_max = kPi / o.modes;
        }
        const std::string method_name =
            sub->count("--method") > 0 ? o.method : (fringe->parsed() ? "conjecture" : "qcp");
        std::vector<double> grid = linspace(o.phi_min, o.phi_max, o.points);
        qufti::ScanSpec spec = build_spec(o, std::move(grid), qufti::method_from_name(method_name));
        if (noise->parsed()) {
            if (noise->count("--realizations") == 0) {
                spec.realizations = 20;
            }
            std::vector<qufti::ScanRow> rows;
            for (const qufti::ScanResult& level : qufti::noise_sweep(spec, o.sigmas)) {
                rows.insert(rows.end(), level.rows.begin(), level.rows.end());
            }
            emit(rows, o);
        } else {
            emit(qufti::fringe_scan(spec).rows, o);
        }
        return 0;
    }

    if (rsweep->parsed()) {
        qufti::ScanSpec spec = build_spec(o, {o.phi}, qufti::Method::kVcp);
        emit(qufti::r_sweep(spec, o.radii).rows, o);
        return 0;
    }

    return 1;  // unreachable: require_subcommand(1) guarantees one branch above
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "quftisim: multi-mode interferometer fringe simulator. Computes "
        "M-fold coincidence rates of a Fourier/phase-gradient/inverse-Fourier "
        "network exactly (matrix permanents) or by phase-space Monte Carlo "
        "(continuous 'vcp' and discrete 'qcp' contour samplers)."};
    app.require_subcommand(1);
    CliOptions o;

    CLI::App* exact = app.add_subcommand(
        "exact", "Exact coincidence rate via permanents (small systems only)");
    add_geometry_flags(exact, o, true);
    exact->add_option("--phi", o.phi, "Phase gradient, radians")->capture_default_str();
    exact->add_option("--noise-sigma", o.noise_sigma, "Phase-noise standard deviation, radians")
        ->capture_default_str();
    exact->add_option("--realizations", o.realizations, "Noise draws averaged per point")
        ->capture_default_str();
    exact->add_option("--seed", o.seed_text, "Decimal 64-bit master seed, or 'random'")
        ->capture_default_str();
    exact->add_option("--workers", o.workers, "Worker threads (env QUFTISIM_WORKERS overrides)")
        ->capture_default_str();
    exact->add_flag("--timing", o.timing, "Record wall times in the output");
    add_output_flags(exact, o);

    CLI::App* conjecture = app.add_subcommand(
        "conjecture", "Closed-form noiseless max-order coincidence rate");
    conjecture->add_option("--M,--modes", o.modes, "Number of interferometer modes")->required();
    conjecture->add_option("--phi", o.phi, "Phase gradient, radians")->capture_default_str();
    add_output_flags(conjecture, o);

    CLI::App* estimate = app.add_subcommand(
        "estimate", "Single-point Monte Carlo estimate with subensemble error bar");
    add_geometry_flags(estimate, o, true);
    estimate->add_option("--phi", o.phi, "Phase gradient, radians")->capture_default_str();
    add_method_flags(estimate, o, "");
    estimate->add_option("--noise-sigma", o.noise_sigma,
                         "Phase-noise standard deviation, radians")
        ->capture_default_str();
    estimate->add_option("--realizations", o.realizations, "Noise draws averaged per point")
        ->capture_default_str();
    add_ensemble_flags(estimate, o);
    add_output_flags(estimate, o);

    CLI::App* fringe = app.add_subcommand(
        "fringe", "Scan the coincidence rate over a phase-gradient grid");
    add_geometry_flags(fringe, o, true);
    fringe->add_option("--phi-min", o.phi_min, "Grid start (default -pi/M)");
    fringe->add_option("--phi-max", o.phi_max, "Grid end (default +pi/M)");
    fringe->add_option("--points", o.points, "Grid size")->capture_default_str();
    add_method_flags(fringe, o, "conjecture");
    fringe->add_option("--noise-sigma", o.noise_sigma,
                       "Phase-noise standard deviation, radians")
        ->capture_default_str();
    fringe->add_option("--realizations", o.realizations, "Noise draws averaged per point")
        ->capture_default_str();
    add_ensemble_flags(fringe, o);
    add_output_flags(fringe, o);

    CLI::App* noise = app.add_subcommand(
        "noise-sweep", "Fringe scans repeated across phase-noise levels");
    add_geometry_flags(noise, o, true);
    noise->add_option("--phi-min", o.phi_min, "Grid start (default -pi/M)");
    noise->add_option("--phi-max", o.phi_max, "Grid end (default +pi/M)");
    noise->add_option("--points", o.points, "Grid size")->capture_default_str();
    add_method_flags(noise, o, "qcp");
    noise->add_option("--sigmas", o.sigmas, "Noise levels to sweep, radians")
        ->delimiter(',')
        ->capture_default_str();
    noise->add_option("--realizations", o.realizations,
                      "Noise draws averaged per point (default 20)");
    add_ensemble_flags(noise, o);
    add_output_flags(noise, o);

    CLI::App* rsweep = app.add_subcommand(
        "r-sweep", "Sampling error of the vcp estimator versus contour radius");
    add_geometry_flags(rsweep, o, true);
    rsweep->add_option("--phi", o.phi, "Phase gradient, radians")->capture_default_str();
    rsweep->add_option("--radii", o.radii, "Contour radii to sweep")
        ->delimiter(',')
        ->capture_default_str();
    add_ensemble_flags(rsweep, o);
    add_output_flags(rsweep, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        return dispatch(app, o);
    } catch (const qufti::SizeLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const qufti::NumericError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
