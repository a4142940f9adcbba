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

#include "camols/error.hpp"

namespace camols {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::ElementOutOfRange: return "ElementOutOfRange";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::BothZero: return "BothZero";
        case Errc::DegreeTooSmall: return "DegreeTooSmall";
        case Errc::NonlinearRule: return "NonlinearRule";
        case Errc::DimensionUnderflow: return "DimensionUnderflow";
        case Errc::NotSquare: return "NotSquare";
        case Errc::Singular: return "Singular";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::EvenWindow: return "EvenWindow";
        case Errc::NumberOutOfRange: return "NumberOutOfRange";
        case Errc::ConfigTooShort: return "ConfigTooShort";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::TableTooLarge: return "TableTooLarge";
        case Errc::InvalidAutomaton: return "InvalidAutomaton";
        case Errc::NotBipermutive: return "NotBipermutive";
        case Errc::BadBlockLength: return "BadBlockLength";
        case Errc::OrderTooLarge: return "OrderTooLarge";
        case Errc::OrderMismatch: return "OrderMismatch";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::NotLatin: return "NotLatin";
        case Errc::TooFewSquares: return "TooFewSquares";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::NotMols: return "NotMols";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::SearchTooLarge: return "SearchTooLarge";
        case Errc::ZeroConstant: return "ZeroConstant";
        case Errc::NotEnoughPolynomials: return "NotEnoughPolynomials";
        case Errc::BadParameters: return "BadParameters";
        case Errc::SamePlayer: return "SamePlayer";
        case Errc::NoMatchingRow: return "NoMatchingRow";
        case Errc::SecretOutOfRange: return "SecretOutOfRange";
        case Errc::AmbiguousRow: return "AmbiguousRow";
        case Errc::NoRow: return "NoRow";
        case Errc::DuplicatePositions: return "DuplicatePositions";
        case Errc::AuditTooLarge: return "AuditTooLarge";
        case Errc::Parse: return "Parse";
        case Errc::HashMismatch: return "HashMismatch";
    }
    return "Unknown";
}

}  // namespace camols
