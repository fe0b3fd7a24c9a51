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

#include "quftisim/qcp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "quftisim/errors.hpp"

namespace qufti {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_mode_set(const UnitaryMatrix& u, const std::vector<int>& set, const char* which) {
    std::vector<int> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument(std::string("QcpConfig: ") + which +
                                    " modes must be distinct");
    }
    if (sorted.front() < 0 || sorted.back() >= u.modes()) {
        throw std::invalid_argument(std::string("QcpConfig: ") + which +
                                    " mode index out of range");
    }
}

void check_config(const UnitaryMatrix& u, const QcpConfig& cfg) {
    if (cfg.d < 2) {
        throw std::invalid_argument("QcpConfig: phase-circle cardinality d must be >= 2");
    }
    if (cfg.inputs.empty()) {
        throw std::invalid_argument("QcpConfig: input mode set must be non-empty");
    }
    if (cfg.inputs.size() != cfg.outputs.size()) {
        throw std::invalid_argument(
            "QcpConfig: the discrete sampler only handles maximum-order correlations "
            "(|outputs| = |inputs|); got " + std::to_string(cfg.outputs.size()) +
            " outputs for " + std::to_string(cfg.inputs.size()) + " inputs");
    }
    check_mode_set(u, cfg.inputs, "input");
    check_mode_set(u, cfg.outputs, "output");
}

// d-th roots of unity z^0 .. z^(d-1).
std::vector<std::complex<double>> root_table(int d) {
    std::vector<std::complex<double>> t(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        t[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * kPi * k / d);
    }
    return t;
}

// The sub-matrix gathered into real/imaginary planes, rows = outputs
// (row-major), columns = inputs.
struct GatheredMatrix {
    std::size_t n;
    std::vector<double> re;
    std::vector<double> im;

    GatheredMatrix(const UnitaryMatrix& u, const QcpConfig& cfg)
        : n(cfg.inputs.size()), re(n * n), im(n * n) {
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                const std::complex<double> e = u.entry(cfg.outputs[k], cfg.inputs[j]);
                re[k * n + j] = e.real();
                im[k * n + j] = e.imag();
            }
        }
    }
};

// p(q) for one phase vector expressed as the complex values v_j = z^{q_j}
// and their prefix prod_i z^{-q_i} (the conjugate of prod v_j, since
// |v_j| = 1).
std::complex<double> eval_p(const GatheredMatrix& g,
                            const double* v_re,
                            const double* v_im) {
    const std::size_t n = g.n;
    double prefix_re = 1.0;
    double prefix_im = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double pre = prefix_re * v_re[j] - prefix_im * v_im[j];
        const double pim = prefix_re * v_im[j] + prefix_im * v_re[j];
        prefix_re = pre;
        prefix_im = pim;
    }
    // prod_i z^{-q_i} = conj(prod_j v_j)
    double p_re = prefix_re;
    double p_im = -prefix_im;
    for (std::size_t k = 0; k < n; ++k) {
        const double* row_re = g.re.data() + k * n;
        const double* row_im = g.im.data() + k * n;
        double s_re = 0.0;
        double s_im = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            s_re += row_re[j] * v_re[j] - row_im[j] * v_im[j];
            s_im += row_re[j] * v_im[j] + row_im[j] * v_re[j];
        }
        const double t_re = p_re * s_re - p_im * s_im;
        const double t_im = p_re * s_im + p_im * s_re;
        p_re = t_re;
        p_im = t_im;
    }
    return {p_re, p_im};
}

// Fast path for d = 2: z^q is +-1, so a draw is a sign vector; the prefix
// reduces to the parity of the drawn bits. Signs come packed from the
// stream 64 bits at a time.
std::complex<double> sample_p_binary(const GatheredMatrix& g, RngStream& rng,
                                     std::vector<double>& signs) {
    const std::size_t n = g.n;
    std::uint64_t word = 0;
    int bits_left = 0;
    int parity = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (bits_left == 0) {
            word = rng.next_u64();
            bits_left = 64;
        }
        const int bit = static_cast<int>(word & 1);
        word >>= 1;
        --bits_left;
        parity ^= bit;
        signs[j] = bit ? -1.0 : 1.0;
    }
    double p_re = parity ? -1.0 : 1.0;
    double p_im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double* row_re = g.re.data() + k * n;
        const double* row_im = g.im.data() + k * n;
        double s_re = 0.0;
        double s_im = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            s_re += row_re[j] * signs[j];
            s_im += row_im[j] * signs[j];
        }
        const double t_re = p_re * s_re - p_im * s_im;
        const double t_im = p_re * s_im + p_im * s_re;
        p_re = t_re;
        p_im = t_im;
    }
    return {p_re, p_im};
}

// General-d draw: each q_j is an unbiased integer below d mapped through
// the root table.
std::complex<double> sample_p_general(const GatheredMatrix& g,
                                      const std::vector<std::complex<double>>& roots,
                                      RngStream& rng,
                                      std::vector<double>& v_re,
                                      std::vector<double>& v_im) {
    const std::size_t n = g.n;
    const auto d = static_cast<std::uint32_t>(roots.size());
    for (std::size_t j = 0; j < n; ++j) {
        const std::complex<double> z = roots[rng.below(d)];
        v_re[j] = z.real();
        v_im[j] = z.imag();
    }
    return eval_p(g, v_re.data(), v_im.data());
}

// Mean of `l` draws from one stream.
std::complex<double> batch_mean(const GatheredMatrix& g, int d,
                                const std::vector<std::complex<double>>& roots,
                                std::int64_t l, RngStream& rng) {
    PairwiseSum acc_re;
    PairwiseSum acc_im;
    std::vector<double> buf_re(g.n);
    std::vector<double> buf_im(g.n);
    if (d == 2) {
        for (std::int64_t s = 0; s < l; ++s) {
            const std::complex<double> p = sample_p_binary(g, rng, buf_re);
            acc_re.add(p.real());
            acc_im.add(p.imag());
        }
    } else {
        for (std::int64_t s = 0; s < l; ++s) {
            const std::complex<double> p = sample_p_general(g, roots, rng, buf_re, buf_im);
            acc_re.add(p.real());
            acc_im.add(p.imag());
        }
    }
    const double inv = 1.0 / static_cast<double>(l);
    return {acc_re.total() * inv, acc_im.total() * inv};
}

} // namespace

QcpConfig QcpConfig::max_order(int modes, int d) {
    if (modes < 1) {
        throw std::invalid_argument("QcpConfig: mode count must be at least 1");
    }
    if (d < 2) {
        throw std::invalid_argument("QcpConfig: qudit dimension must be at least 2");
    }
    QcpConfig cfg;
    cfg.d = d;
    cfg.inputs.resize(static_cast<std::size_t>(modes));
    std::iota(cfg.inputs.begin(), cfg.inputs.end(), 0);
    cfg.outputs = cfg.inputs;
    return cfg;
}

std::complex<double> sample_p(const UnitaryMatrix& u,
                              const QcpConfig& cfg,
                              const std::vector<int>& q) {
    check_config(u, cfg);
    if (q.size() != cfg.inputs.size()) {
        throw std::invalid_argument("sample_p: phase vector length must equal |inputs|");
    }
    for (int qi : q) {
        if (qi < 0 || qi >= cfg.d) {
            throw std::invalid_argument("sample_p: phase index " + std::to_string(qi) +
                                        " outside {0.." + std::to_string(cfg.d - 1) + "}");
        }
    }
    const GatheredMatrix g(u, cfg);
    const auto roots = root_table(cfg.d);
    std::vector<double> v_re(g.n);
    std::vector<double> v_im(g.n);
    for (std::size_t j = 0; j < g.n; ++j) {
        const std::complex<double> z = roots[static_cast<std::size_t>(q[j])];
        v_re[j] = z.real();
        v_im[j] = z.imag();
    }
    return eval_p(g, v_re.data(), v_im.data());
}

PermanentEstimate estimate_permanent(const UnitaryMatrix& u,
                                     const QcpConfig& cfg,
                                     std::int64_t l,
                                     std::uint64_t seed) {
    check_config(u, cfg);
    if (l < 1) {
        throw std::invalid_argument("estimate_permanent: need at least one sample");
    }
    const GatheredMatrix g(u, cfg);
    const auto roots = root_table(cfg.d);
    RngStream rng(derive_seed(seed, {kTagEstimator}));

    PairwiseSum acc_re;
    PairwiseSum acc_im;
    PairwiseSum acc_sq;
    std::vector<double> buf_re(g.n);
    std::vector<double> buf_im(g.n);
    for (std::int64_t s = 0; s < l; ++s) {
        const std::complex<double> p =
            (cfg.d == 2) ? sample_p_binary(g, rng, buf_re)
                         : sample_p_general(g, roots, rng, buf_re, buf_im);
        acc_re.add(p.real());
        acc_im.add(p.imag());
        acc_sq.add(std::norm(p));
    }
    const double inv = 1.0 / static_cast<double>(l);
    PermanentEstimate est;
    est.value = std::complex<double>(acc_re.total() * inv, acc_im.total() * inv);
    // Total scatter of both quadratures around the mean, per sample-mean.
    const double var = std::max(0.0, acc_sq.total() * inv - std::norm(est.value));
    est.std_error = std::sqrt(var * inv);
    est.samples = l;
    return est;
}

EstimateResult estimate_perm_squared(const UnitaryMatrix& u,
                                     const QcpConfig& cfg,
                                     std::int64_t l1,
                                     std::int64_t l2,
                                     std::uint64_t seed,
                                     int workers) {
    check_config(u, cfg);
    if (l1 < 2 || l2 < 1) {
        throw std::invalid_argument("estimate_perm_squared: need l1 >= 2 and l2 >= 1");
    }
    const auto start = std::chrono::steady_clock::now();
    const GatheredMatrix g(u, cfg);
    const auto roots = root_table(cfg.d);

    std::vector<std::complex<double>> means(static_cast<std::size_t>(l1));
    parallel_for(l1, workers, [&](std::int64_t i) {
        // Two independent stream segments per subensemble: one batch
        // estimates the permanent, the other its conjugate.
        RngStream rng_q(
            derive_seed(seed, {kTagSubensemble, static_cast<std::uint64_t>(i), 0}));
        RngStream rng_qt(
            derive_seed(seed, {kTagSubensemble, static_cast<std::uint64_t>(i), 1}));
        const std::complex<double> p_mean = batch_mean(g, cfg.d, roots, l2, rng_q);
        const std::complex<double> pt_mean = batch_mean(g, cfg.d, roots, l2, rng_qt);
        means[static_cast<std::size_t>(i)] = p_mean * std::conj(pt_mean);
    });

    EstimateResult result = reduce_subensembles(means, l2);
    result.method = Method::kQcp;
    result.seed = seed;
    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::complex<double> enumerate_perm_exact(const UnitaryMatrix& u, const QcpConfig& cfg) {
    check_config(u, cfg);
    const std::size_t n = cfg.inputs.size();
    // d^n with the guard applied during accumulation.
    std::uint64_t draws = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (draws > kMaxEnumerationDraws / static_cast<std::uint64_t>(cfg.d)) {
            throw SizeLimitError("enumerate_perm_exact: d^N exceeds the limit of " +
                                 std::to_string(kMaxEnumerationDraws) + " phase vectors");
        }
        draws *= static_cast<std::uint64_t>(cfg.d);
    }

    const GatheredMatrix g(u, cfg);
    const auto roots = root_table(cfg.d);
    std::vector<int> q(n, 0);
    std::vector<double> v_re(n, 1.0);
    std::vector<double> v_im(n, 0.0);
    PairwiseSum acc_re;
    PairwiseSum acc_im;
    for (;;) {
        const std::complex<double> p = eval_p(g, v_re.data(), v_im.data());
        acc_re.add(p.real());
        acc_im.add(p.imag());
        // Odometer increment of q with the root table applied in place.
        std::size_t j = 0;
        while (j < n) {
            q[j] += 1;
            if (q[j] < cfg.d) {
                v_re[j] = roots[static_cast<std::size_t>(q[j])].real();
                v_im[j] = roots[static_cast<std::size_t>(q[j])].imag();
                break;
            }
            q[j] = 0;
            v_re[j] = 1.0;
            v_im[j] = 0.0;
            ++j;
        }
        if (j == n) {
            break;
        }
    }
    const double inv = 1.0 / static_cast<double>(draws);
    return {acc_re.total() * inv, acc_im.total() * inv};
}

} // namespace qufti
