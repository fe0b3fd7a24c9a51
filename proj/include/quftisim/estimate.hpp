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

#ifndef QUFTISIM_ESTIMATE_HPP
#define QUFTISIM_ESTIMATE_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qufti {

/// How a count rate was obtained.
enum class Method {
    kVcp,         // continuous von Mises phase-space sampler
    kQcp,         // discrete qudit phase sampler
    kExact,       // permanent / Fock-space oracle
    kConjecture,  // closed-form product fringe
};

std::string method_name(Method m);
Method method_from_name(const std::string& name);

/// Monte Carlo estimate of a count rate with subensemble statistics: the
/// sample set is split into `subensembles` (L1) batches of
/// `samples_per_sub` (L2) draws, the value is the mean of the batch means,
/// and std_error = sqrt((<Q^2> - <Q>^2) / L1) over the batch means. The
/// imaginary part of the estimator (zero in expectation) rides along as a
/// convergence diagnostic with its own standard error.
struct EstimateResult {
    Method method = Method::kExact;
    double value = 0.0;
    double std_error = 0.0;
    double imag_value = 0.0;
    double imag_std_error = 0.0;
    std::int64_t subensembles = 0;    // L1
    std::int64_t samples_per_sub = 0; // L2
    std::uint64_t seed = 0;
    double wall_time_s = 0.0;
};

/// Pairwise (cascaded) summation accumulator. Adding N terms performs a
/// fixed tree-shaped reduction determined only by N and the input order,
/// so totals are bit-reproducible and rounding error grows O(log N)
/// rather than O(N).
class PairwiseSum {
  public:
    void add(double x);
    double total() const;

  private:
    // level_[k] holds a pending partial sum of 2^k inputs; occupancy
    // follows the bits of count_ like a binary counter.
    std::vector<double> level_;
    std::uint64_t count_ = 0;
};

/// Folds per-subensemble means into an EstimateResult: pairwise-summed
/// grand means, then two-pass spread in the subensemble-error convention
/// above. Requires means.size() >= 1; a single subensemble reports zero
/// standard error. The caller fills method/seed/wall_time_s.
EstimateResult reduce_subensembles(const std::vector<std::complex<double>>& means,
                                   std::int64_t samples_per_sub);

/// Runs job(i) for i = 0..jobs-1 on `workers` threads. Jobs are pulled
/// from a shared index counter, so any state keyed on the job index
/// (derived RNG seeds, output slots) is independent of the worker count
/// and of scheduling. workers <= 1 runs inline. The first exception thrown
/// by a job is rethrown on the caller after all threads join.
void parallel_for(std::int64_t jobs, int workers, const std::function<void(std::int64_t)>& job);

/// Effective worker count: QUFTISIM_WORKERS when set to a positive
/// integer, otherwise `requested`; floored at 1.
int resolve_workers(int requested);

} // namespace qufti

#endif
