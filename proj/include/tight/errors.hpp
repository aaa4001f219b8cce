// Copyright 2026 The tightdesign Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace tight {

/// Argument outside an operation's mathematical domain (zero denominator,
/// valuation of zero, odd r, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A design candidate outside the nontriviality window.
class WindowError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A request exceeding the configured memory or range budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No prime gap of the requested size exists below the search limit.
class NotFoundBelowLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed checkpoint / certificate / CLI input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tight
