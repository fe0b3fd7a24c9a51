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

// End-to-end acceptance suite. Each criterion prints exactly one
// PASS/FAIL line (opt-in long runs print SKIPPED unless --long is
// given) and the process exits nonzero if any executed criterion
// fails. Criteria that carry a wall-clock budget fail when they
// exceed it, so a pathological slowdown cannot hide behind a green
// numeric check.
//
// The noise-robustness scan and the determinism checks drive the
// installed CLI binary (path injected at build time) so that the
// whole pipeline -- argument parsing, experiment drivers, CSV
// serialization -- is exercised, not just the library.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quftisim/conjecture.hpp"
#include "quftisim/estimate.hpp"
#include "quftisim/experiments.hpp"
#include "quftisim/fock.hpp"
#include "quftisim/permanent.hpp"
#include "quftisim/qcp.hpp"
#include "quftisim/results_io.hpp"
#include "quftisim/rng.hpp"
#include "quftisim/unitary.hpp"
#include "quftisim/vcp.hpp"

#ifndef QUFTISIM_CLI_PATH
#error "QUFTISIM_CLI_PATH must point at the CLI binary"
#endif

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int g_failures = 0;

std::string fmt(double v, const char* spec = "%.4g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string fmt_full(double v) { return fmt(v, "%.17g"); }

void report(const std::string& label, const Outcome& o, double seconds) {
    std::printf("%s: %s (%.1f s)%s%s\n", label.c_str(), o.pass ? "PASS" : "FAIL", seconds,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) {
        ++g_failures;
    }
}

void report_skipped(const std::string& label) {
    std::printf("%s: SKIPPED (enable with --long)\n", label.c_str());
    std::fflush(stdout);
}

template <typename Fn>
void run(const std::string& label, Fn fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("unexpected exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(label, o, secs);
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    }
    return g;
}

// ---------------------------------------------------------------------
// CLI plumbing shared by the noise scan and the determinism checks.

std::string g_tmpdir;

std::string temp_path(const std::string& name) { return g_tmpdir + "/" + name; }

/// Runs the CLI with `args`, returns true on exit status 0.
bool run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + QUFTISIM_CLI_PATH + "\" " + args;
    return std::system(cmd.c_str()) == 0;
}

std::optional<std::string> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<qufti::ScanRow> read_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return qufti::read_csv(in);
}

// The noise scan doubles as the determinism baseline, so its argument
// list (minus the worker count and output path) is built once.
std::string noise_scan_args() {
    const double half = kPi / 20.0;
    std::ostringstream ss;
    ss << "noise-sweep --M 20 --method qcp --points 5 --phi-min " << fmt_full(-half)
       << " --phi-max " << fmt_full(half)
       << " --L1 200 --L2 2500 --realizations 20 --sigmas 0,0.1,0.2,0.4 --seed "
       << qufti::kDefaultSeed;
    return ss.str();
}

const char* kQcpRepeatArgs =
    "estimate --method qcp --M 10 --phi 0.05 --d 2 --L1 200 --L2 10000 --seed 20260814";
const char* kVcpRepeatArgs =
    "estimate --method vcp --M 4 --N 3 --phi 0.2 --r 0.8 --L1 200 --L2 100000 --seed 20260814";

// ---------------------------------------------------------------------
// Criterion bodies.

// 1. The closed-form fringe equals |perm|^2 of the full interferometer
//    across M = 2..10, 50 phase points per mode count. Budget 10 s.
Outcome closed_form_matches_permanent() {
    double worst = 0.0;
    int worst_m = 0;
    double worst_phi = 0.0;
    for (int m = 2; m <= 10; ++m) {
        for (int i = 0; i < 50; ++i) {
            const double phi = 2.0 * kPi / m * i / 49.0;
            const qufti::UnitaryMatrix v =
                qufti::build_qufti(m, qufti::PhaseProfile::noiseless(m, phi));
            const double exact = std::norm(qufti::permanent_ryser(v.matrix()));
            const double closed = qufti::q_conjecture(m, phi);
            const double rel = std::abs(closed - exact) / std::max(exact, 1e-300);
            if (rel > worst) {
                worst = rel;
                worst_m = m;
                worst_phi = phi;
            }
        }
    }
    Outcome o;
    o.pass = worst < 1e-9;
    o.detail = "max relative error " + fmt(worst) + " at M=" + std::to_string(worst_m) +
               ", phi=" + fmt(worst_phi) + " over 450 grid points";
    return o;
}

// 2. Discrete-phase sampling at M=10, phi=0.05, d=2, L1=200, L2=1e4
//    lands within 4 stderr of the Ryser value for >= 18 of 20 seeds.
//    Budget 2 min.
Outcome discrete_sampler_matches_permanent() {
    const qufti::UnitaryMatrix u =
        qufti::build_qufti(10, qufti::PhaseProfile::noiseless(10, 0.05));
    const double exact = std::norm(qufti::permanent_ryser(u.matrix()));
    const qufti::QcpConfig cfg = qufti::QcpConfig::max_order(10, 2);
    int hits = 0;
    double worst_z = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const qufti::EstimateResult r = qufti::estimate_perm_squared(u, cfg, 200, 10000, seed);
        const double z = std::abs(r.value - exact) / r.std_error;
        worst_z = std::max(worst_z, z);
        if (z <= 4.0) {
            ++hits;
        }
    }
    Outcome o;
    o.pass = hits >= 18;
    o.detail = std::to_string(hits) + "/20 seeds within 4 stderr of |perm|^2 = " + fmt(exact) +
               "; worst deviation " + fmt(worst_z) + " stderr";
    return o;
}

// 3. Full enumeration of the discrete phase average reproduces the
//    Ryser permanent to 1e-10 relative on 30 Haar unitaries. Budget 1 min.
Outcome enumeration_reproduces_ryser() {
    double worst = 0.0;
    qufti::RngStream rng(900);
    for (int i = 0; i < 30; ++i) {
        const int m = 2 + i % 9;  // cycles 2..10
        const qufti::UnitaryMatrix u = qufti::random_unitary(m, rng);
        const std::complex<double> perm = qufti::permanent_ryser(u.matrix());
        const std::complex<double> en =
            qufti::enumerate_perm_exact(u, qufti::QcpConfig::max_order(m, 2));
        worst = std::max(worst, std::abs(en - perm) / std::max(std::abs(perm), 1e-30));
    }
    Outcome o;
    o.pass = worst < 1e-10;
    o.detail = "max relative error " + fmt(worst) + " over 30 Haar unitaries, M = 2..10";
    return o;
}

// 4. Continuous sampling of a below-maximum-order correlation (3
//    detectors on a 4-mode network, r=0.8, L1=200, L2=1e5) lands within
//    4 stderr of the exact Fock-space value for >= 18 of 20 seeds.
//    Budget 2 min.
Outcome continuous_sampler_matches_fock() {
    const qufti::UnitaryMatrix u =
        qufti::build_qufti(4, qufti::PhaseProfile::noiseless(4, 0.2));
    const std::vector<int> modes_set{0, 1, 2};
    const double exact = qufti::fock_correlation(u, modes_set, modes_set);
    const qufti::VcpConfig cfg = qufti::VcpConfig::single_photons(4, modes_set, 0.8);
    int hits = 0;
    double worst_z = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const qufti::EstimateResult r =
            qufti::estimate_correlation(u, cfg, modes_set, 200, 100000, seed);
        const double z = std::abs(r.value - exact) / r.std_error;
        worst_z = std::max(worst_z, z);
        if (z <= 4.0) {
            ++hits;
        }
    }
    Outcome o;
    o.pass = hits >= 18;
    o.detail = std::to_string(hits) + "/20 seeds within 4 stderr of <n1 n2 n3> = " + fmt(exact) +
               "; worst deviation " + fmt(worst_z) + " stderr";
    return o;
}

// 5. At M=20 and equal sample budgets the discrete sampler's error bar
//    beats the continuous sampler's (r=0.1) for >= 18 of 20 seeds.
Outcome discrete_beats_continuous_error() {
    const qufti::UnitaryMatrix u =
        qufti::build_qufti(20, qufti::PhaseProfile::noiseless(20, 0.03));
    const qufti::QcpConfig qcfg = qufti::QcpConfig::max_order(20, 2);
    const qufti::VcpConfig vcfg = qufti::VcpConfig::all_modes(20, 0.1);
    std::vector<int> outputs(20);
    for (int k = 0; k < 20; ++k) {
        outputs[static_cast<std::size_t>(k)] = k;
    }
    int hits = 0;
    double qcp_sum = 0.0;
    double vcp_sum = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const qufti::EstimateResult q = qufti::estimate_perm_squared(u, qcfg, 200, 10000, seed);
        const qufti::EstimateResult v =
            qufti::estimate_correlation(u, vcfg, outputs, 200, 10000, seed);
        qcp_sum += q.std_error;
        vcp_sum += v.std_error;
        if (q.std_error < v.std_error) {
            ++hits;
        }
    }
    Outcome o;
    o.pass = hits >= 18;
    o.detail = std::to_string(hits) + "/20 seeds; mean stderr " + fmt(qcp_sum / 20.0) +
               " (discrete) vs " + fmt(vcp_sum / 20.0) + " (continuous, r=0.1)";
    return o;
}

// 6. The continuous sampler's error bar grows strictly with the contour
//    radius over r in {0.1, 0.3, 0.5, 1.0} at fixed seed and budget.
Outcome error_grows_with_radius() {
    qufti::ScanSpec spec;
    spec.modes = 20;
    spec.phi_grid = {0.03};
    spec.method = qufti::Method::kVcp;
    spec.l1 = 200;
    spec.l2 = 10000;
    spec.seed = qufti::kDefaultSeed;
    const qufti::ScanResult res = qufti::r_sweep(spec, {0.1, 0.3, 0.5, 1.0});
    Outcome o;
    o.pass = true;
    std::string vals;
    for (std::size_t i = 0; i < res.rows.size(); ++i) {
        if (i > 0) {
            vals += " < ";
            if (!(res.rows[i].q_stderr > res.rows[i - 1].q_stderr)) {
                o.pass = false;
            }
        }
        vals += fmt(res.rows[i].q_stderr);
    }
    o.detail = "stderr over r in {0.1, 0.3, 0.5, 1.0}: " + vals;
    return o;
}

// 7. Fringe scans at M=20 under growing phase noise (sigma in
//    {0, 0.1, 0.2, 0.4}, 20 noise draws each, via the CLI): the
//    realization-averaged peak never increases with sigma beyond the
//    combined error bars, and the sigma=0.1 fringe still peaks at
//    phi=0. Budget 10 min. The CSV written here at --workers 1 is the
//    baseline for the determinism criterion.
Outcome fringe_degrades_with_noise() {
    const std::string path = temp_path("noise_w1.csv");
    Outcome o;
    if (!run_cli(noise_scan_args() + " --workers 1 -o \"" + path + "\"")) {
        o.detail = "CLI noise-sweep run failed";
        return o;
    }
    const std::vector<qufti::ScanRow> rows = read_rows(path);
    if (rows.size() != 20) {
        o.detail = "expected 20 rows (4 noise levels x 5 points), got " +
                   std::to_string(rows.size());
        return o;
    }

    const std::vector<double> sigmas{0.0, 0.1, 0.2, 0.4};
    std::vector<double> peak(4, 0.0);
    std::vector<double> peak_err(4, 0.0);
    bool sigma01_peaks_at_zero = false;
    std::string detail_peaks;
    for (std::size_t level = 0; level < 4; ++level) {
        const qufti::ScanRow* batch = rows.data() + 5 * level;
        std::size_t argmax = 0;
        for (std::size_t k = 0; k < 5; ++k) {
            if (batch[k].noise_sigma != sigmas[level]) {
                o.detail = "row noise level mismatch in CSV";
                return o;
            }
            if (batch[k].q_mean > batch[argmax].q_mean) {
                argmax = k;
            }
        }
        peak[level] = batch[2].q_mean;  // middle of the symmetric grid: phi = 0
        peak_err[level] = batch[2].q_stderr;
        if (level == 1) {
            sigma01_peaks_at_zero = (argmax == 2) && batch[2].phi == 0.0;
        }
        if (level > 0) {
            detail_peaks += ", ";
        }
        detail_peaks += fmt(peak[level]);
        if (peak_err[level] > 0.0) {
            detail_peaks += "+-" + fmt(peak_err[level]);
        }
    }

    bool monotone = true;
    for (std::size_t level = 1; level < 4; ++level) {
        const double slack =
            std::sqrt(peak_err[level] * peak_err[level] + peak_err[level - 1] * peak_err[level - 1]);
        if (peak[level] > peak[level - 1] + slack) {
            monotone = false;
        }
    }

    o.pass = monotone && sigma01_peaks_at_zero;
    o.detail = "peak Q(0) per sigma {0, 0.1, 0.2, 0.4}: " + detail_peaks +
               (monotone ? "; non-increasing" : "; NOT monotone") +
               (sigma01_peaks_at_zero ? "; sigma=0.1 fringe peaks at phi=0"
                                      : "; sigma=0.1 fringe peaks off zero");
    return o;
}

// Positive-side half width of a normalized fringe sampled on a
// symmetric grid, by linear interpolation of the first 0.5 crossing.
std::optional<double> half_width(const std::vector<double>& phis, const std::vector<double>& qn) {
    const std::size_t center = phis.size() / 2;
    for (std::size_t k = center + 1; k < phis.size(); ++k) {
        if (qn[k] < 0.5) {
            const double t = (0.5 - qn[k - 1]) / (qn[k] - qn[k - 1]);
            return phis[k - 1] + t * (phis[k] - phis[k - 1]);
        }
    }
    return std::nullopt;
}

// 8 (desk scale). Noiseless fringes at M=12 for correlation orders
//    N in {12, 10, 8}: every normalized fringe peaks at phi=0 and the
//    half-widths agree within 50%.
Outcome fringe_width_stable_across_orders() {
    const std::vector<int> orders{12, 10, 8};
    std::vector<double> widths;
    Outcome o;
    std::string detail;
    for (int order : orders) {
        qufti::ScanSpec spec;
        spec.modes = 12;
        spec.order = order;
        spec.method = qufti::Method::kVcp;
        spec.radius = (order == 12) ? 0.1 : 0.8;
        spec.phi_grid = linspace(-0.12, 0.12, 17);
        spec.l1 = 200;
        spec.l2 = 5000;
        spec.seed = qufti::kDefaultSeed;
        const qufti::ScanResult res = qufti::fringe_scan(spec);

        std::size_t argmax = 0;
        for (std::size_t k = 0; k < res.rows.size(); ++k) {
            if (res.rows[k].q_mean > res.rows[argmax].q_mean) {
                argmax = k;
            }
        }
        if (argmax != 8) {
            o.detail = "order " + std::to_string(order) + ": fringe peaks at phi = " +
                       fmt(res.rows[argmax].phi) + ", not 0";
            return o;
        }
        std::vector<double> qn(res.rows.size());
        for (std::size_t k = 0; k < res.rows.size(); ++k) {
            qn[k] = res.rows[k].q_mean / res.rows[8].q_mean;
        }
        const std::optional<double> w = half_width(spec.phi_grid, qn);
        if (!w) {
            o.detail = "order " + std::to_string(order) +
                       ": fringe never falls below half maximum inside the grid";
            return o;
        }
        widths.push_back(*w);
        if (!detail.empty()) {
            detail += ", ";
        }
        detail += "N=" + std::to_string(order) + ": " + fmt(*w);
    }
    const double lo = std::min({widths[0], widths[1], widths[2]});
    const double hi = std::max({widths[0], widths[1], widths[2]});
    const double spread = (hi - lo) / lo;
    o.pass = spread < 0.5;
    o.detail = "all fringes peak at phi=0; half-widths {" + detail + "} rad, spread " +
               fmt(100.0 * spread) + "%";
    return o;
}

// 8 (full scale, opt-in). The M=30, N=25 fringe at L1=200, L2=1e6
//    completes with finite values; there is no tabulated reference at
//    this scale, so only sanity is gated.
Outcome full_scale_fringe_completes() {
    qufti::ScanSpec spec;
    spec.modes = 30;
    spec.order = 25;
    spec.method = qufti::Method::kVcp;
    spec.radius = 0.8;
    spec.phi_grid = linspace(-0.025, 0.025, 5);
    spec.l1 = 200;
    spec.l2 = 1000000;
    spec.seed = qufti::kDefaultSeed;
    const qufti::ScanResult res = qufti::fringe_scan(spec);
    Outcome o;
    o.pass = true;
    std::size_t argmax = 0;
    std::string vals;
    for (std::size_t k = 0; k < res.rows.size(); ++k) {
        if (!std::isfinite(res.rows[k].q_mean) || !std::isfinite(res.rows[k].q_stderr)) {
            o.pass = false;
        }
        if (res.rows[k].q_mean > res.rows[argmax].q_mean) {
            argmax = k;
        }
        if (!vals.empty()) {
            vals += ", ";
        }
        vals += fmt(res.rows[k].q_mean) + "+-" + fmt(res.rows[k].q_stderr);
    }
    o.detail = std::string(o.pass ? "all values finite" : "non-finite value in scan") +
               "; Q over phi in [-0.025, 0.025]: {" + vals + "}; max at phi = " +
               fmt(res.rows[argmax].phi);
    return o;
}

// 9 (opt-in). A 100-mode discrete-sampler run (d=2, L1=200, L2=1e4)
//    stays finite, keeps its error bar within an order of magnitude of
//    the shot-noise baseline, and keeps the imaginary diagnostic within
//    5 of its own stderr. Budget 1 hour.
Outcome hundred_mode_run_converges() {
    const double phi = 0.007;
    const qufti::UnitaryMatrix u =
        qufti::build_qufti(100, qufti::PhaseProfile::noiseless(100, phi));
    const qufti::QcpConfig cfg = qufti::QcpConfig::max_order(100, 2);
    const qufti::EstimateResult r =
        qufti::estimate_perm_squared(u, cfg, 200, 10000, qufti::kDefaultSeed);
    const double baseline = qufti::shot_noise_baseline(100, phi, 200, 10000);
    const bool finite = std::isfinite(r.value) && std::isfinite(r.std_error);
    const bool err_ok = r.std_error < 10.0 * baseline;
    const bool imag_ok = std::abs(r.imag_value) <= 5.0 * r.imag_std_error;
    Outcome o;
    o.pass = finite && err_ok && imag_ok;
    o.detail = "Q = " + fmt(r.value) + " +- " + fmt(r.std_error) + " (shot-noise baseline " +
               fmt(baseline) + ", closed form " + fmt(qufti::q_conjecture(100, phi)) +
               "); imag diagnostic " + fmt(r.imag_value) + " +- " + fmt(r.imag_std_error);
    if (!err_ok) {
        o.detail += "; stderr exceeds 10x baseline";
    }
    if (!imag_ok) {
        o.detail += "; imaginary part exceeds 5 stderr";
    }
    return o;
}

// 10. Reruns of the criterion-2/4/7 workloads through the CLI produce
//     byte-identical CSV at worker counts 1, 2 and 4. The noise scan
//     reuses criterion 7's --workers 1 output as baseline; the two
//     single-point workloads rerun one representative seed each, since
//     every seed is an independent invocation of the same code path.
Outcome reruns_are_byte_identical() {
    struct Job {
        const char* name;
        std::string args;
        std::string baseline;  // produced here unless already on disk
    };
    const std::vector<Job> jobs{
        {"discrete single point", kQcpRepeatArgs, temp_path("qcp_w1.csv")},
        {"continuous single point", kVcpRepeatArgs, temp_path("vcp_w1.csv")},
        {"noise sweep", noise_scan_args(), temp_path("noise_w1.csv")},
    };
    Outcome o;
    int compared = 0;
    for (const Job& job : jobs) {
        if (!slurp(job.baseline)) {
            if (!run_cli(job.args + " --workers 1 -o \"" + job.baseline + "\"")) {
                o.detail = std::string(job.name) + ": baseline CLI run failed";
                return o;
            }
        }
        const std::optional<std::string> base = slurp(job.baseline);
        if (!base || base->empty()) {
            o.detail = std::string(job.name) + ": baseline CSV missing or empty";
            return o;
        }
        for (int workers : {2, 4}) {
            const std::string path =
                temp_path(std::string("rerun_w") + std::to_string(workers) + "_" +
                          std::to_string(compared) + ".csv");
            if (!run_cli(job.args + " --workers " + std::to_string(workers) + " -o \"" + path +
                         "\"")) {
                o.detail = std::string(job.name) + ": CLI rerun failed at " +
                           std::to_string(workers) + " workers";
                return o;
            }
            const std::optional<std::string> again = slurp(path);
            if (!again || *again != *base) {
                o.detail = std::string(job.name) + ": output differs at " +
                           std::to_string(workers) + " workers";
                return o;
            }
            ++compared;
        }
    }
    o.pass = true;
    o.detail = "3 workloads x worker counts {1, 2, 4}: all CSV outputs byte-identical (" +
               std::to_string(compared) + " comparisons)";
    return o;
}

// Wraps a criterion with a wall-clock budget: the numeric checks must
// pass AND the run must finish inside the budget.
template <typename Fn>
void run_budgeted(const std::string& label, double budget_s, Fn fn) {
    run(label, [&]() {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o = fn();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= budget_s) {
            o.pass = false;
            o.detail += "; exceeded " + fmt(budget_s, "%.0f") + " s budget";
        }
        return o;
    });
}

} // namespace

int main(int argc, char** argv) {
    bool long_runs = false;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--long") {
            long_runs = true;
        } else {
            std::fprintf(stderr, "usage: %s [--long]\n", argv[0]);
            return 2;
        }
    }

    // Worker-count determinism is part of what is being tested; do not
    // let an inherited override silently pin the pool size.
    unsetenv("QUFTISIM_WORKERS");

    char tmpl[] = "/tmp/quftisim_acceptance_XXXXXX";
    if (!mkdtemp(tmpl)) {
        std::fprintf(stderr, "cannot create scratch directory\n");
        return 2;
    }
    g_tmpdir = tmpl;

    run_budgeted("criterion 1 [closed-form fringe matches exact permanents]", 10.0,
                 closed_form_matches_permanent);
    run_budgeted("criterion 2 [discrete sampler matches exact permanent]", 120.0,
                 discrete_sampler_matches_permanent);
    run_budgeted("criterion 3 [discrete-phase enumeration reproduces Ryser]", 60.0,
                 enumeration_reproduces_ryser);
    run_budgeted("criterion 4 [continuous sampler matches Fock oracle]", 120.0,
                 continuous_sampler_matches_fock);
    run("criterion 5 [discrete sampler has the smaller error bar]",
        discrete_beats_continuous_error);
    run("criterion 6 [continuous-sampler error grows with radius]", error_grows_with_radius);
    run_budgeted("criterion 7 [fringe degrades monotonically with phase noise]", 600.0,
                 fringe_degrades_with_noise);
    run("criterion 8 [fringe width stable across correlation orders, desk scale]",
        fringe_width_stable_across_orders);
    if (long_runs) {
        run("criterion 8 [full-scale fringe completes, M=30 N=25]", full_scale_fringe_completes);
        run_budgeted("criterion 9 [100-mode run stays finite and converges]", 3600.0,
                     hundred_mode_run_converges);
    } else {
        report_skipped("criterion 8 [full-scale fringe completes, M=30 N=25]");
        report_skipped("criterion 9 [100-mode run stays finite and converges]");
    }
    run("criterion 10 [reruns are byte-identical at any worker count]",
        reruns_are_byte_identical);

    if (g_failures > 0) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all executed criteria passed\n");
    return 0;
}
