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

#include "quftisim/estimate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace qufti {

std::string method_name(Method m) {
    switch (m) {
        case Method::kVcp:
            return "vcp";
        case Method::kQcp:
            return "qcp";
        case Method::kExact:
            return "exact";
        case Method::kConjecture:
            return "conjecture";
    }
    throw std::invalid_argument("method_name: unknown method tag");
}

Method method_from_name(const std::string& name) {
    if (name == "vcp") {
        return Method::kVcp;
    }
    if (name == "qcp") {
        return Method::kQcp;
    }
    if (name == "exact") {
        return Method::kExact;
    }
    if (name == "conjecture") {
        return Method::kConjecture;
    }
    throw std::invalid_argument("method_from_name: unknown method '" + name + "'");
}

void PairwiseSum::add(double x) {
    // Carry chain of a binary counter: each set bit of count_ marks a
    // pending partial sum; merge them bottom-up until a free level is hit.
    std::uint64_t c = count_;
    std::size_t k = 0;
    while (c & 1) {
        x += level_[k];
        c >>= 1;
        ++k;
    }
    if (k == level_.size()) {
        level_.push_back(x);
    } else {
        level_[k] = x;
    }
    ++count_;
}

double PairwiseSum::total() const {
    double s = 0.0;
    std::uint64_t c = count_;
    for (std::size_t k = 0; k < level_.size(); ++k, c >>= 1) {
        if (c & 1) {
            s += level_[k];
        }
    }
    return s;
}

EstimateResult reduce_subensembles(const std::vector<std::complex<double>>& means,
                                   std::int64_t samples_per_sub) {
    if (means.empty()) {
        throw std::invalid_argument("reduce_subensembles: need at least one subensemble");
    }
    const double l1 = static_cast<double>(means.size());

    PairwiseSum re_sum;
    PairwiseSum im_sum;
    for (const auto& m : means) {
        re_sum.add(m.real());
        im_sum.add(m.imag());
    }
    const double re_mean = re_sum.total() / l1;
    const double im_mean = im_sum.total() / l1;

    // sqrt((<Q^2> - <Q>^2) / L1) evaluated in the shifted two-pass form,
    // which avoids the cancellation of the raw-moment difference.
    PairwiseSum re_sq;
    PairwiseSum im_sq;
    for (const auto& m : means) {
        const double dr = m.real() - re_mean;
        const double di = m.imag() - im_mean;
        re_sq.add(dr * dr);
        im_sq.add(di * di);
    }

    EstimateResult r;
    r.value = re_mean;
    r.imag_value = im_mean;
    r.std_error = std::sqrt(re_sq.total()) / l1;
    r.imag_std_error = std::sqrt(im_sq.total()) / l1;
    r.subensembles = static_cast<std::int64_t>(means.size());
    r.samples_per_sub = samples_per_sub;
    return r;
}

void parallel_for(std::int64_t jobs, int workers, const std::function<void(std::int64_t)>& job) {
    if (jobs <= 0) {
        return;
    }
    const int pool_size =
        static_cast<int>(std::min<std::int64_t>(std::max(workers, 1), jobs));
    if (pool_size <= 1) {
        for (std::int64_t i = 0; i < jobs; ++i) {
            job(i);
        }
        return;
    }

    std::atomic<std::int64_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto drain = [&]() {
        for (;;) {
            const std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= jobs) {
                return;
            }
            try {
                job(i);
            } catch (...) {
                {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) {
                        first_error = std::current_exception();
                    }
                }
                next.store(jobs, std::memory_order_relaxed);  // stop handing out work
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(pool_size));
    for (int t = 0; t < pool_size; ++t) {
        pool.emplace_back(drain);
    }
    for (auto& t : pool) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

int resolve_workers(int requested) {
    if (const char* env = std::getenv("QUFTISIM_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<int>(v);
        }
    }
    return std::max(requested, 1);
}

} // namespace qufti
