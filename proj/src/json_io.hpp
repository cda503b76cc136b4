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

#ifndef KFOLD_JSON_IO_HPP
#define KFOLD_JSON_IO_HPP

#include <string>

#include "bounds.hpp"
#include "coloring.hpp"
#include "criticality.hpp"

namespace kfold {

// Serialized forms are stable: fixed key order, 0-based vertex labels,
// lossless round trips for coloring documents.

std::string coloring_document_to_json(const ColoringDocument& doc);

/// Throws kfold::parse_error on malformed text or schema violations.
ColoringDocument coloring_document_from_json(const std::string& text);

std::string verify_report_to_json(const VerifyReport& report);
std::string criticality_report_to_json(const CriticalityReport& report);
std::string bounds_report_to_json(const BoundsReport& report);

}  // namespace kfold

#endif  // KFOLD_JSON_IO_HPP
