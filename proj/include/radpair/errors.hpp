// Copyright 2026 The radpair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace radpair {

// Bad user input: malformed config, violated scenario bounds, shape mismatch.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An integrator or diagnostic invariant failed at runtime.
class NumericalError : public std::runtime_error {
public:
    NumericalError(double time, const std::string& what)
        : std::runtime_error(what), time_(time) {}

    double time() const noexcept { return time_; }

private:
    double time_;
};

// A conditional ensemble became empty.
class EnsembleError : public std::runtime_error {
public:
    EnsembleError(double time, const std::string& what)
        : std::runtime_error(what), time_(time) {}

    double time() const noexcept { return time_; }

private:
    double time_;
};

} // namespace radpair
