/*
   Copyright 2026 the curveclass authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace curveclass {

/// Base class of all library errors. `kind()` is a stable machine-readable tag
/// used by the CLI error objects.
class Error : public std::runtime_error {
   public:
    Error(std::string kind, const std::string& message) : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

   private:
    std::string kind_;
};

/// Malformed input: unparsable numbers, bad JSON, out-of-range flags.
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& m) : Error("InvalidInput", m) {}
};

/// A (d, delta, kappa) combination violating 2*delta <= kappa <= 3*delta or
/// the genus range, or negative invariants.
struct NotAdmissible : Error {
    explicit NotAdmissible(const std::string& m) : Error("NotAdmissible", m) {}
};

/// Parametrized curve whose derivative wedge vanishes identically (image
/// contained in a hyperplane, or repeated coordinates).
struct DegenerateCurve : Error {
    explicit DegenerateCurve(const std::string& m) : Error("DegenerateCurve", m) {}
};

/// Grassmannian frame that is not the associated curve of anything.
struct NotIntegrable : Error {
    explicit NotIntegrable(const std::string& m) : Error("NotIntegrable", m) {}
};

/// Plane parametrization that is not birational onto its image.
struct ImproperParametrization : Error {
    explicit ImproperParametrization(const std::string& m) : Error("ImproperParametrization", m) {}
};

/// A state the library's own invariants forbid (negative ramification index,
/// failed exact division). Signals invalid input that slipped past validation
/// or an internal bug; the CLI maps this to exit code 3.
struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& m) : Error("InternalInconsistency", m) {}
};

}  // namespace curveclass
