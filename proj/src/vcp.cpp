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

#include "quftisim/vcp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "quftisim/errors.hpp"

namespace qufti {

namespace {

// Below this concentration the von Mises density differs from uniform by
// less than ~2e-6 in relative terms — far beyond any Monte Carlo
// resolution — while the Best-Fisher setup constants start to suffer
// catastrophic cancellation. Fall back to a plain uniform angle.
constexpr double kUniformKappaCutoff = 1e-6;

// exp() overflows above ~709.78; refuse run constants near that edge.
constexpr double kMaxLogScale = 690.0;

struct CosSign {
    double cos_theta;
    double sign;  // +1 or -1, the sign of theta
};

// Unit vector with uniform angle, drawn without trigonometry: a point
// uniform in the disk has a uniform angle, and squaring the point (angle
// doubling) keeps the angle uniform while landing exactly on the circle.
void unit_phase(RngStream& rng, double* c, double* s) {
    for (;;) {
        const double x = 2.0 * rng.uniform01() - 1.0;
        const double y = 2.0 * rng.uniform01() - 1.0;
        const double xx = x * x;
        const double yy = y * y;
        const double q = xx + yy;
        if (q > 0.0 && q <= 1.0) {
            const double inv = 1.0 / q;
            *c = (xx - yy) * inv;
            *s = 2.0 * x * y * inv;
            return;
        }
    }
}

// Cosine of a uniform angle (the Best-Fisher proposal variable), same
// rejection trick with the sine term skipped.
double uniform_cos(RngStream& rng) {
    for (;;) {
        const double x = 2.0 * rng.uniform01() - 1.0;
        const double y = 2.0 * rng.uniform01() - 1.0;
        const double xx = x * x;
        const double yy = y * y;
        const double q = xx + yy;
        if (q > 0.0 && q <= 1.0) {
            return (xx - yy) / q;
        }
    }
}

// Rejection-envelope constants of the Best-Fisher von Mises sampler;
// they depend only on kappa, so estimators hoist them out of the sample
// loop. bound == 0 marks the small-kappa uniform fallback.
struct VonMisesEnvelope {
    double kappa = 0.0;
    double bound = 0.0;
};

VonMisesEnvelope make_envelope(double kappa) {
    if (kappa < kUniformKappaCutoff) {
        return {kappa, 0.0};
    }
    const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
    const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
    return {kappa, (1.0 + rho * rho) / (2.0 * rho)};
}

// Best-Fisher rejection sampler for von Mises(0, kappa), returning
// cos(theta) and the sign of theta so that hot paths can derive the
// half-angle factors without an acos.
CosSign sample_von_mises_cos(const VonMisesEnvelope& env, RngStream& rng) {
    if (env.bound == 0.0) {
        const double theta = rng.uniform_angle();
        return {std::cos(theta), theta < 0.0 ? -1.0 : 1.0};
    }
    for (;;) {
        const double z = uniform_cos(rng);
        const double f = (1.0 + env.bound * z) / (env.bound + z);
        const double c = env.kappa * (env.bound - f);
        const double u2 = rng.uniform01();
        if (c * (2.0 - c) - u2 > 0.0 || std::log(c / u2) + 1.0 - c >= 0.0) {
            const double sign = (rng.uniform01() >= 0.5) ? 1.0 : -1.0;
            return {std::clamp(f, -1.0, 1.0), sign};
        }
    }
}

void check_config(const VcpConfig& cfg) {
    if (!(cfg.radius > 0.0) || !std::isfinite(cfg.radius)) {
        throw std::invalid_argument("VcpConfig: radius must be finite and > 0");
    }
    if (cfg.occupancy.empty()) {
        throw std::invalid_argument("VcpConfig: occupancy must be non-empty");
    }
    for (int n : cfg.occupancy) {
        if (n != 0 && n != 1) {
            throw std::invalid_argument("VcpConfig: occupancy entries must be 0 or 1");
        }
    }
}

void sincos_pair(double x, double* s, double* c) {
#if defined(__GLIBC__)
    ::sincos(x, s, c);
#else
    *s = std::sin(x);
    *c = std::cos(x);
#endif
}

} // namespace

VcpConfig VcpConfig::single_photons(int modes, const std::vector<int>& inputs, double radius) {
    if (modes < 1) {
        throw std::invalid_argument("VcpConfig: mode count must be at least 1");
    }
    VcpConfig cfg;
    cfg.radius = radius;
    cfg.occupancy.assign(static_cast<std::size_t>(modes), 0);
    for (int k : inputs) {
        if (k < 0 || k >= modes) {
            throw std::invalid_argument("VcpConfig: input mode index out of range");
        }
        if (cfg.occupancy[static_cast<std::size_t>(k)] != 0) {
            throw std::invalid_argument("VcpConfig: input modes must be distinct");
        }
        cfg.occupancy[static_cast<std::size_t>(k)] = 1;
    }
    check_config(cfg);
    return cfg;
}

VcpConfig VcpConfig::all_modes(int modes, double radius) {
    if (modes < 1) {
        throw std::invalid_argument("VcpConfig: mode count must be at least 1");
    }
    VcpConfig cfg;
    cfg.radius = radius;
    cfg.occupancy.assign(static_cast<std::size_t>(modes), 1);
    check_config(cfg);
    return cfg;
}

std::complex<double> VcpSample::weight() const {
    return std::polar(std::exp(weight_log_mag), weight_phase);
}

std::complex<double> mode_weight(double radius, int photons, double theta) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw std::invalid_argument("mode_weight: radius must be finite and > 0");
    }
    if (photons == 0) {
        return {1.0, 0.0};
    }
    if (photons != 1) {
        throw std::invalid_argument("mode_weight: photon count must be 0 or 1");
    }
    const double kappa = radius * radius;
    return std::polar(std::cyl_bessel_i(0.0, kappa) / kappa, kappa * std::sin(theta) - theta);
}

double sample_von_mises(double kappa, RngStream& rng) {
    if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
        throw std::invalid_argument("sample_von_mises: kappa must be finite and >= 0");
    }
    const CosSign cs = sample_von_mises_cos(make_envelope(kappa), rng);
    return cs.sign * std::acos(cs.cos_theta);
}

VcpSample draw_sample(const VcpConfig& cfg, RngStream& rng) {
    check_config(cfg);
    const int m = cfg.modes();
    const double r = cfg.radius;
    const double kappa = r * r;
    const VonMisesEnvelope env = make_envelope(kappa);
    const double log_mode_mag = std::log(std::cyl_bessel_i(0.0, kappa)) - 2.0 * std::log(r);

    VcpSample s;
    s.phi.assign(static_cast<std::size_t>(m), 0.0);
    s.theta.assign(static_cast<std::size_t>(m), 0.0);
    s.alpha = Eigen::VectorXcd::Zero(m);
    s.beta = Eigen::VectorXcd::Zero(m);
    for (int k = 0; k < m; ++k) {
        if (cfg.occupancy[static_cast<std::size_t>(k)] == 0) {
            continue;
        }
        // Draw order (phase first, then the von Mises angle) is part of
        // the stream contract shared with estimate_correlation.
        double cp;
        double sp;
        unit_phase(rng, &cp, &sp);
        const double phi = std::atan2(sp, cp);
        const CosSign cs = sample_von_mises_cos(env, rng);
        const double theta = cs.sign * std::acos(cs.cos_theta);
        s.phi[static_cast<std::size_t>(k)] = phi;
        s.theta[static_cast<std::size_t>(k)] = theta;
        s.alpha(k) = std::polar(r, phi + 0.5 * theta);
        // beta is the conjugate-line coordinate: it propagates through
        // conj(U), so its stored phase carries the opposite sign.
        s.beta(k) = std::polar(r, -(phi - 0.5 * theta));
        s.weight_log_mag += log_mode_mag;
        s.weight_phase += kappa * std::sin(theta) - theta;
    }
    return s;
}

EstimateResult estimate_correlation(const UnitaryMatrix& u,
                                    const VcpConfig& cfg,
                                    const std::vector<int>& outputs,
                                    std::int64_t l1,
                                    std::int64_t l2,
                                    std::uint64_t seed,
                                    int workers) {
    check_config(cfg);
    if (cfg.modes() != u.modes()) {
        throw std::invalid_argument("estimate_correlation: config covers " +
                                    std::to_string(cfg.modes()) + " modes, network has " +
                                    std::to_string(u.modes()));
    }
    if (outputs.empty()) {
        throw std::invalid_argument("estimate_correlation: output mode set must be non-empty");
    }
    {
        std::vector<int> sorted = outputs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("estimate_correlation: output modes must be distinct");
        }
        if (sorted.front() < 0 || sorted.back() >= u.modes()) {
            throw std::invalid_argument("estimate_correlation: output mode index out of range");
        }
    }
    if (l1 < 2 || l2 < 1) {
        throw std::invalid_argument("estimate_correlation: need l1 >= 2 and l2 >= 1");
    }

    const auto start = std::chrono::steady_clock::now();

    std::vector<int> occupied;
    for (int k = 0; k < cfg.modes(); ++k) {
        if (cfg.occupancy[static_cast<std::size_t>(k)] == 1) {
            occupied.push_back(k);
        }
    }
    const std::size_t n_in = occupied.size();
    const std::size_t n_out = outputs.size();
    const double r = cfg.radius;
    const double kappa = r * r;

    // Every per-mode weight has the same magnitude I0(r^2)/r^2, and every
    // output moment contributes a constant r^2; folding them into one
    // per-run scale keeps the per-sample arithmetic O(1) in magnitude.
    const double log_scale =
        static_cast<double>(n_in) * (std::log(std::cyl_bessel_i(0.0, kappa)) - 2.0 * std::log(r)) +
        2.0 * static_cast<double>(n_out) * std::log(r);
    // Row sums are Cauchy-Schwarz bounded by sqrt(n_in), so the moment
    // product stays below n_in^n_out; require scale * bound to fit.
    const double log_value_bound =
        log_scale + (n_in > 0
                         ? static_cast<double>(n_out) * std::log(static_cast<double>(n_in))
                         : 0.0);
    if (std::abs(log_scale) > kMaxLogScale || log_value_bound > kMaxLogScale) {
        throw NumericError("estimate_correlation: folded weight scale exp(" +
                           std::to_string(log_scale) + ") cannot be represented in double "
                           "precision for this mode count and radius");
    }
    const double scale = std::exp(log_scale);

    // Gathered sub-matrix, rows = outputs, columns = occupied inputs,
    // split into real/imaginary planes (row-major) for the dot products.
    std::vector<double> ure(n_out * n_in);
    std::vector<double> uim(n_out * n_in);
    for (std::size_t k = 0; k < n_out; ++k) {
        for (std::size_t j = 0; j < n_in; ++j) {
            const std::complex<double> e = u.entry(outputs[k], occupied[j]);
            ure[k * n_in + j] = e.real();
            uim[k * n_in + j] = e.imag();
        }
    }

    const VonMisesEnvelope env = make_envelope(kappa);
    std::vector<std::complex<double>> means(static_cast<std::size_t>(l1));
    auto run_subensemble = [&](std::int64_t i) {
        RngStream rng(derive_seed(seed, {kTagSubensemble, static_cast<std::uint64_t>(i)}));
        PairwiseSum acc_re;
        PairwiseSum acc_im;
        std::vector<double> a_re(n_in), a_im(n_in), b_re(n_in), b_im(n_in);
        for (std::int64_t s = 0; s < l2; ++s) {
            double sin_sum = 0.0;    // sum_k sin(theta_k)
            double wp_re = 1.0;      // prod_k exp(-i theta_k)
            double wp_im = 0.0;
            for (std::size_t j = 0; j < n_in; ++j) {
                double cp;
                double sp;
                unit_phase(rng, &cp, &sp);  // e^{i phi}
                const CosSign cs = sample_von_mises_cos(env, rng);
                const double ct = cs.cos_theta;
                const double ch = std::sqrt(0.5 * (1.0 + ct));        // cos(theta/2)
                const double sh = cs.sign * std::sqrt(0.5 * (1.0 - ct));  // sin(theta/2)
                const double st = 2.0 * sh * ch;                      // sin(theta)
                // a = e^{i(phi + theta/2)}, b = e^{i(phi - theta/2)}; the
                // output moment is r^2 (U a)_k conj((U b)_k) with the r^2
                // already folded into `scale`.
                a_re[j] = cp * ch - sp * sh;
                a_im[j] = sp * ch + cp * sh;
                b_re[j] = cp * ch + sp * sh;
                b_im[j] = sp * ch - cp * sh;
                sin_sum += st;
                const double nre = wp_re * ct + wp_im * st;  // *= (ct - i st)
                const double nim = wp_im * ct - wp_re * st;
                wp_re = nre;
                wp_im = nim;
            }
            double mp_re = 1.0;
            double mp_im = 0.0;
            for (std::size_t k = 0; k < n_out; ++k) {
                const double* row_re = ure.data() + k * n_in;
                const double* row_im = uim.data() + k * n_in;
                double s1_re = 0.0, s1_im = 0.0, s2_re = 0.0, s2_im = 0.0;
                for (std::size_t j = 0; j < n_in; ++j) {
                    s1_re += row_re[j] * a_re[j] - row_im[j] * a_im[j];
                    s1_im += row_re[j] * a_im[j] + row_im[j] * a_re[j];
                    s2_re += row_re[j] * b_re[j] - row_im[j] * b_im[j];
                    s2_im += row_re[j] * b_im[j] + row_im[j] * b_re[j];
                }
                // *= s1 * conj(s2)
                const double t_re = s1_re * s2_re + s1_im * s2_im;
                const double t_im = s1_im * s2_re - s1_re * s2_im;
                const double pre = mp_re * t_re - mp_im * t_im;
                const double pim = mp_re * t_im + mp_im * t_re;
                mp_re = pre;
                mp_im = pim;
            }
            // Weight phase exp(i (kappa sin_sum - sum theta)); the angle
            // sum enters through the already-accumulated product wp.
            double es;
            double ec;
            sincos_pair(kappa * sin_sum, &es, &ec);
            const double w_re = ec * wp_re - es * wp_im;
            const double w_im = ec * wp_im + es * wp_re;
            acc_re.add(scale * (w_re * mp_re - w_im * mp_im));
            acc_im.add(scale * (w_re * mp_im + w_im * mp_re));
        }
        const double inv = 1.0 / static_cast<double>(l2);
        means[static_cast<std::size_t>(i)] =
            std::complex<double>(acc_re.total() * inv, acc_im.total() * inv);
    };
    parallel_for(l1, workers, run_subensemble);

    EstimateResult result = reduce_subensembles(means, l2);
    result.method = Method::kVcp;
    result.seed = seed;
    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace qufti
