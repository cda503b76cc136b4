// Copyright 2026 The kfold Authors
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

#ifndef KFOLD_ERRORS_HPP
#define KFOLD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kfold {

// Validation failures (bad parameters, out-of-range indices, overflow)
// are reported as std::invalid_argument with a message naming the
// violated constraint.

// An instance exceeds a hard size cap of the exact search.
class too_large_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed external input (DIMACS text, JSON documents).
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kfold

#endif  // KFOLD_ERRORS_HPP
