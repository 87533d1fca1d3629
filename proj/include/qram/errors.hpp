// Copyright 2026 The qramsim Authors
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

namespace qram {

/// Base class for every rejection raised by the library.
class QramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input amplitudes do not have unit norm, or a gate broke normalization.
class NormalizationError : public QramError {
 public:
  using QramError::QramError;
};

/// Register shapes (n, d, memory mode, memory length) do not line up.
class ShapeError : public QramError {
 public:
  using QramError::QramError;
};

/// A protocol precondition on the state's configurations is violated.
class ProtocolError : public QramError {
 public:
  using QramError::QramError;
};

}  // namespace qram
