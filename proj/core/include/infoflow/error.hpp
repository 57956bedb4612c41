// SPDX-License-Identifier: Apache-2.0
//
// infoflow: information flows in LTI feedback loops over Gaussian channels
// Copyright (C) 2026 The infoflow authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace infoflow {

/// Raised when an operation's precondition fails or a computation degenerates.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A FeedbackLoop (or one of its parts) violates its invariants.
class InvalidLoop : public Error {
 public:
  using Error::Error;
};

}  // namespace infoflow
