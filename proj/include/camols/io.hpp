/*
   Copyright 2026 The camols Authors

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

#ifndef CAMOLS_IO_HPP
#define CAMOLS_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "camols/ca.hpp"
#include "camols/designs.hpp"
#include "camols/gf.hpp"
#include "camols/poly.hpp"
#include "camols/sss.hpp"

namespace camols::io {

using nlohmann::json;

// All readers throw Error(Errc::Parse) on malformed documents.

json field_to_json(const FieldSpec& field);
FieldSpec field_from_json(const json& j);

/// [c0, c1, ..., cd] as element indices, constant term first.
json poly_to_json(const Polynomial& f);
Polynomial poly_from_json(const FieldSpec& field, const json& j);

json rule_to_json(const LocalRule& rule);
LocalRule rule_from_json(const json& j);

/// "wolfram:<number>:r<radius>" (binary rules) or "linear:<q>:<c0,c1,...>".
LocalRule parse_rule(std::string_view text);

json square_to_json(const LatinSquare& square);
LatinSquare square_from_json(const json& j);
/// One row per line, entries separated by single spaces.
std::string square_to_text(const LatinSquare& square);
LatinSquare square_from_text(std::string_view text);
/// JSON when the document starts with '{', text grid otherwise.
LatinSquare read_square(std::string_view document);

json oa_to_json(const OrthogonalArray& oa);
OrthogonalArray oa_from_json(const json& j);

json census_to_json(const Census& census);

json descriptor_to_json(const SchemeDescriptor& d);
SchemeDescriptor descriptor_from_json(const json& j);
/// Lowercase hex SHA-256 of the canonical descriptor document.
std::string descriptor_hash(const SchemeDescriptor& d);

json share_to_json(const Share& s, const SchemeDescriptor& d);
/// Throws HashMismatch when the share was issued under another descriptor.
Share share_from_json(const json& j, const SchemeDescriptor& d);

/// Parses a document, mapping syntax errors to Error(Errc::Parse).
json parse(std::string_view document);

}  // namespace camols::io

#endif
