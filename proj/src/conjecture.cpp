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

#include "quftisim/conjecture.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qufti {

double q_conjecture(int modes, double phi) {
    if (modes < 2) {
        throw std::invalid_argument("q_conjecture: needs at least 2 modes, got " +
                                    std::to_string(modes));
    }
    const double m = static_cast<double>(modes);
    const double c = std::cos(m * phi);
    double q = 1.0;
    for (int j = 1; j < modes; ++j) {
        const double jd = static_cast<double>(j);
        const double factor = (2.0 * jd * (m - jd) * c + m * m - 2.0 * jd * m + 2.0 * jd * jd) /
                              (m * m);
        // The factor is >= 0 identically; clamp the sub-ulp negative
        // roundings that appear where it vanishes (even M, j = M/2,
        // cos(M phi) = -1).
        q *= std::max(factor, 0.0);
    }
    return q;
}

} // namespace qufti
