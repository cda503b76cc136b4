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

#include "json_io.hpp"

#include <json.hpp>

#include "errors.hpp"

namespace kfold {

namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

std::string coloring_document_to_json(const ColoringDocument& doc) {
  ordered_json j;
  j["family"] = family_name(doc.params.family);
  j["n"] = doc.params.n;
  j["p"] = doc.params.p;
  j["k"] = doc.k;
  j["x"] = doc.coloring.color_count;
  j["classes"] = doc.coloring.classes;
  return j.dump();
}

ColoringDocument coloring_document_from_json(const std::string& text) {
  try {
    ordered_json j = ordered_json::parse(text);
    ColoringDocument doc;
    doc.params.family = family_from_name(j.at("family").get<std::string>());
    doc.params.n = j.at("n").get<std::int64_t>();
    doc.params.p = j.at("p").get<std::int64_t>();
    doc.k = j.at("k").get<std::int64_t>();
    doc.coloring.color_count = j.at("x").get<std::int64_t>();
    doc.coloring.classes =
        j.at("classes").get<std::vector<std::vector<std::int64_t>>>();
    doc.params.validate();
    if (doc.k < 1) {
      throw parse_error("coloring document: k must be >= 1");
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("coloring document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("coloring document: ") + e.what());
  }
}

std::string verify_report_to_json(const VerifyReport& report) {
  ordered_json j;
  j["valid"] = report.valid;
  j["multiplicity_ok"] = report.multiplicity_ok;
  j["stability_ok"] = report.stability_ok;
  j["x"] = report.color_count;
  j["min_multiplicity"] = report.min_multiplicity;
  j["first_deficient_vertex"] = report.first_deficient_vertex;
  j["first_unstable_color"] = report.first_unstable_color;
  return j.dump();
}

std::string criticality_report_to_json(const CriticalityReport& report) {
  ordered_json j;
  j["family"] = family_name(report.params.family);
  j["n"] = report.params.n;
  j["p"] = report.params.p;
  j["k"] = report.k;
  j["chi_k"] = report.chi_k;
  j["chi_k_minus_v"] = report.chi_k_minus_v;
  j["critical"] = report.critical;
  j["witness"] = report.witness_text();
  j["gap_bounds"] = {report.gap_bounds.lo, report.gap_bounds.hi};
  return j.dump();
}

std::string bounds_report_to_json(const BoundsReport& report) {
  ordered_json j;
  j["k_omega"] = report.k_omega;
  j["chi_k"] = report.chi_k;
  j["k_chi"] = report.k_chi;
  j["frac_chi"] = {{"num", report.frac_num}, {"den", report.frac_den}};
  j["lex_lower"] = report.lex_lower;
  j["tight"] = {{"omega", report.tight_omega},
                {"chi", report.tight_chi},
                {"frac", report.tight_frac}};
  return j.dump();
}

}  // namespace kfold
