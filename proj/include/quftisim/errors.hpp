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

#ifndef QUFTISIM_ERRORS_HPP
#define QUFTISIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qufti {

/// Thrown when a requested computation exceeds a hard cost guard
/// (exponential-cost oracles, full enumerations). Never downgraded to a
/// silent approximation.
class SizeLimitError : public std::runtime_error {
  public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a computation produced a non-finite intermediate or result.
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qufti

#endif
