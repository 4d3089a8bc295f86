// Copyright 2026 The VCP Authors.
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

#ifndef VCP_ERRORS_HPP
#define VCP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vcp {

/// Base class for all errors raised by the simulator.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Liquid bookkeeping.
class InsufficientVolume : public Error { using Error::Error; };
class WellOverflow : public Error { using Error::Error; };
class EmptySolution : public Error { using Error::Error; };
class BadAddress : public Error { using Error::Error; };

// Encoding.
class PlateTooSmall : public Error { using Error::Error; };
class AnalyteCollision : public Error { using Error::Error; };

// Classifier.
class LengthMismatch : public Error { using Error::Error; };

// Compiler / budget.
class BudgetExceeded : public Error { using Error::Error; };
class InfeasiblePool : public Error { using Error::Error; };
class PlanMismatch : public Error { using Error::Error; };

// HPLC.
class WindowOutOfRange : public Error { using Error::Error; };
class DegenerateSeries : public Error { using Error::Error; };
class MissingCalibration : public Error { using Error::Error; };

// Readout.
class KeyMismatch : public Error { using Error::Error; };

// File ingestion.
class BadMagic : public Error { using Error::Error; };
class TruncatedFile : public Error { using Error::Error; };
class MissingFixtures : public Error { using Error::Error; };

// Configuration / CLI.
class ConfigError : public Error { using Error::Error; };
class IoError : public Error { using Error::Error; };

}  // namespace vcp

#endif  // VCP_ERRORS_HPP
