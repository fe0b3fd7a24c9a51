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

#include "quftisim/permanent.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "quftisim/errors.hpp"

namespace qufti {

namespace {

int checked_size(const Eigen::MatrixXcd& m, int limit, const char* oracle) {
    if (m.rows() < 1 || m.rows() != m.cols()) {
        throw std::invalid_argument(std::string(oracle) +
                                    ": matrix must be square and non-empty");
    }
    if (m.rows() > limit) {
        throw SizeLimitError(std::string(oracle) + ": matrix size " + std::to_string(m.rows()) +
                             " exceeds the limit of " + std::to_string(limit));
    }
    return static_cast<int>(m.rows());
}

} // namespace

std::complex<double> permanent_ryser(const Eigen::MatrixXcd& m) {
    const int n = checked_size(m, kMaxRyserSize, "permanent_ryser");

    // Ryser: perm(A) = (-1)^n sum_{S != {}} (-1)^|S| prod_i sum_{j in S} A_ij.
    // Subsets are visited in Gray-code order so each step updates the row
    // sums with a single column.
    std::vector<std::complex<double>> row_sums(static_cast<std::size_t>(n),
                                               std::complex<double>(0.0, 0.0));
    std::complex<double> inner(0.0, 0.0);
    const std::uint64_t subsets = 1ULL << n;
    for (std::uint64_t s = 1; s < subsets; ++s) {
        const int col = std::countr_zero(s);  // the bit that flips at step s
        const std::uint64_t gray = s ^ (s >> 1);
        if (gray & (1ULL << col)) {
            for (int i = 0; i < n; ++i) {
                row_sums[static_cast<std::size_t>(i)] += m(i, col);
            }
        } else {
            for (int i = 0; i < n; ++i) {
                row_sums[static_cast<std::size_t>(i)] -= m(i, col);
            }
        }
        std::complex<double> prod = row_sums[0];
        for (int i = 1; i < n; ++i) {
            prod *= row_sums[static_cast<std::size_t>(i)];
        }
        if (std::popcount(gray) & 1) {
            inner -= prod;
        } else {
            inner += prod;
        }
    }
    return (n & 1) ? -inner : inner;
}

std::complex<double> permanent_by_definition(const Eigen::MatrixXcd& m) {
    const int n = checked_size(m, kMaxDefinitionSize, "permanent_by_definition");

    std::vector<int> cols(static_cast<std::size_t>(n));
    std::iota(cols.begin(), cols.end(), 0);
    std::complex<double> total(0.0, 0.0);
    do {
        std::complex<double> prod(1.0, 0.0);
        for (int i = 0; i < n; ++i) {
            prod *= m(i, cols[static_cast<std::size_t>(i)]);
        }
        total += prod;
    } while (std::next_permutation(cols.begin(), cols.end()));
    return total;
}

Eigen::MatrixXcd submatrix(const Eigen::MatrixXcd& m,
                           const std::vector<int>& rows,
                           const std::vector<int>& cols) {
    for (int r : rows) {
        if (r < 0 || r >= m.rows()) {
            throw std::invalid_argument("submatrix: row index " + std::to_string(r) +
                                        " out of range");
        }
    }
    for (int c : cols) {
        if (c < 0 || c >= m.cols()) {
            throw std::invalid_argument("submatrix: column index " + std::to_string(c) +
                                        " out of range");
        }
    }
    Eigen::MatrixXcd out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m(rows[i], cols[j]);
        }
    }
    return out;
}

} // namespace qufti
