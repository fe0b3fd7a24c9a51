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

#ifndef QUFTISIM_CONJECTURE_HPP
#define QUFTISIM_CONJECTURE_HPP

namespace qufti {

/// Closed-form product for |perm V|^2 of the noiseless phase-gradient
/// interferometer with all M input and output modes occupied:
///
///   Q(M, phi) = prod_{j=1}^{M-1} [2 j (M - j) cos(M phi) + M^2 - 2 j M + 2 j^2] / M^2.
///
/// Every factor is non-negative for all real phi (it equals
/// [(M - 2j)^2 + 2 j (M - j) (1 + cos(M phi))] / M^2), so Q lies in
/// [0, 1]. For M = 2 the product reduces to cos^2(phi). Throws
/// std::invalid_argument for modes < 2.
double q_conjecture(int modes, double phi);

} // namespace qufti

#endif
