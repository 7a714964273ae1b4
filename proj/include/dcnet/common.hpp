// Copyright 2026 The dcnet Authors
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

#ifndef DCNET_COMMON_HPP
#define DCNET_COMMON_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dcnet {

/// Thrown for any argument outside an operation's domain.
class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

enum class WarningKind {
    HgpAboveThreshold,
    SurfaceAboveThreshold,
    StageRateLarge,
    Infeasible,
    ApproximationExceedsOne,
};

inline const char *to_string(WarningKind kind) {
    switch (kind) {
        case WarningKind::HgpAboveThreshold:
            return "hgp_above_threshold";
        case WarningKind::SurfaceAboveThreshold:
            return "surface_above_threshold";
        case WarningKind::StageRateLarge:
            return "stage_rate_large";
        case WarningKind::Infeasible:
            return "infeasible";
        case WarningKind::ApproximationExceedsOne:
            return "approximation_exceeds_one";
    }
    return "unknown";
}

struct Warning {
    WarningKind kind;
    std::string message;

    bool operator==(const Warning &) const = default;
};

using Warnings = std::vector<Warning>;

/// Adds `w` unless an identical warning is already present. Keeps first-seen order.
inline void add_warning(Warnings &out, Warning w) {
    for (const auto &existing : out) {
        if (existing == w) {
            return;
        }
    }
    out.push_back(std::move(w));
}

namespace detail {

inline void require(bool condition, const std::string &message) {
    if (!condition) {
        throw InvalidInput(message);
    }
}

inline void require_finite(double value, const char *name) {
    require(std::isfinite(value), std::string(name) + " must be finite");
}

inline void require_positive(double value, const char *name) {
    require_finite(value, name);
    require(value > 0, std::string(name) + " must be > 0");
}

inline void require_non_negative(double value, const char *name) {
    require_finite(value, name);
    require(value >= 0, std::string(name) + " must be >= 0");
}

inline void require_probability_open(double value, const char *name) {
    require_finite(value, name);
    require(value > 0 && value < 1, std::string(name) + " must lie in (0, 1)");
}

}  // namespace detail

}  // namespace dcnet

#endif  // DCNET_COMMON_HPP
